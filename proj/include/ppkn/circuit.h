#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ppkn {

/// Index of a line (wire). Line 0 is the topmost line as drawn.
struct LineId {
    std::uint32_t index = 0;

    constexpr LineId() = default;
    constexpr explicit LineId(std::uint32_t i) : index(i) {
    }

    auto operator<=>(const LineId &) const = default;
};

enum class GateKind : std::uint8_t { Not, Cnot, Toffoli };

const char *gate_kind_name(GateKind kind);

/// Number of controls a gate of the given kind carries.
constexpr std::size_t control_count(GateKind kind) {
    switch (kind) {
        case GateKind::Not:
            return 0;
        case GateKind::Cnot:
            return 1;
        case GateKind::Toffoli:
            return 2;
    }
    return 0;
}

/// One NCT gate: the target is flipped iff every control is 1.
///
/// Controls are stored sorted ascending, so two Toffolis that list the same
/// controls in different order compare equal. Construction rejects repeated
/// lines and control counts that disagree with the kind.
class Gate {
   public:
    static Gate x(LineId target);
    static Gate cnot(LineId control, LineId target);
    static Gate toffoli(LineId control1, LineId control2, LineId target);
    static Gate make(GateKind kind, std::span<const LineId> controls, LineId target);

    GateKind kind() const {
        return kind_;
    }
    LineId target() const {
        return target_;
    }
    std::span<const LineId> controls() const {
        return {controls_.data(), size_};
    }

    /// Controls plus target.
    std::vector<LineId> support() const;
    bool touches(LineId line) const;
    /// Largest line index used by this gate.
    std::uint32_t max_line() const;

    bool operator==(const Gate &) const = default;

   private:
    Gate(GateKind kind, std::span<const LineId> controls, LineId target);

    GateKind kind_ = GateKind::Not;
    std::uint8_t size_ = 0;
    std::array<LineId, 2> controls_{};
    LineId target_{};
};

std::string to_string(const Gate &gate);

/// Declared role of a line at the circuit input, plus an optional output label.
struct LineRole {
    enum class Kind : std::uint8_t { Input, Ancilla };

    Kind kind = Kind::Input;
    /// Input name. Empty for ancillas and for anonymous inputs.
    std::string name;
    std::optional<std::string> output_label;

    static LineRole input(std::string name, std::optional<std::string> output_label = std::nullopt);
    /// Ancillas always start at constant 0.
    static LineRole ancilla(std::optional<std::string> output_label = std::nullopt);

    bool is_ancilla() const {
        return kind == Kind::Ancilla;
    }

    bool operator==(const LineRole &) const = default;
};

/// An ordered NCT gate list over a fixed number of lines.
///
/// Gates apply left to right in program order. Every gate index is checked
/// against the width on insertion, so a Circuit value is always structurally valid.
class Circuit {
   public:
    Circuit(std::size_t width, std::vector<LineRole> roles);

    std::size_t width() const {
        return roles_.size();
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    const std::vector<LineRole> &roles() const {
        return roles_;
    }
    const LineRole &role(LineId line) const;

    /// Appends `gate` at the end of program order. Throws StructuralError if it
    /// references a line outside the circuit.
    Circuit &append(const Gate &gate);
    Circuit &set_output_label(LineId line, std::string label);

    /// Reversed gate list. Every NCT gate is self-inverse.
    Circuit inverse() const;

    /// Copy with the gate at `index` removed (mutation testing).
    Circuit without_gate(std::size_t index) const;

    bool operator==(const Circuit &) const = default;

   private:
    std::vector<LineRole> roles_;
    std::vector<Gate> gates_;
};

/// Value-returning builder helpers.
Circuit new_circuit(std::size_t width, std::vector<LineRole> roles);
Circuit append_gate(Circuit circuit, const Gate &gate);
inline Circuit inverse(const Circuit &circuit) {
    return circuit.inverse();
}

}  // namespace ppkn
