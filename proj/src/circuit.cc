#include "ppkn/circuit.h"

#include <algorithm>
#include <sstream>

#include "ppkn/errors.h"

namespace ppkn {

const char *gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::Not:
            return "not";
        case GateKind::Cnot:
            return "cnot";
        case GateKind::Toffoli:
            return "toffoli";
    }
    return "?";
}

Gate::Gate(GateKind kind, std::span<const LineId> controls, LineId target) : kind_(kind), target_(target) {
    if (controls.size() != control_count(kind)) {
        std::ostringstream msg;
        msg << gate_kind_name(kind) << " takes " << control_count(kind) << " control(s), got " << controls.size();
        throw StructuralError(msg.str());
    }
    size_ = static_cast<std::uint8_t>(controls.size());
    std::copy(controls.begin(), controls.end(), controls_.begin());
    std::sort(controls_.begin(), controls_.begin() + size_);
    for (std::size_t k = 0; k < size_; k++) {
        if (controls_[k] == target_ || (k > 0 && controls_[k] == controls_[k - 1])) {
            throw StructuralError("gate uses line " + std::to_string(controls_[k].index) + " more than once");
        }
    }
}

Gate Gate::x(LineId target) {
    return Gate(GateKind::Not, {}, target);
}

Gate Gate::cnot(LineId control, LineId target) {
    LineId c[1]{control};
    return Gate(GateKind::Cnot, c, target);
}

Gate Gate::toffoli(LineId control1, LineId control2, LineId target) {
    LineId c[2]{control1, control2};
    return Gate(GateKind::Toffoli, c, target);
}

Gate Gate::make(GateKind kind, std::span<const LineId> controls, LineId target) {
    return Gate(kind, controls, target);
}

std::vector<LineId> Gate::support() const {
    std::vector<LineId> result(controls().begin(), controls().end());
    result.push_back(target_);
    return result;
}

bool Gate::touches(LineId line) const {
    if (line == target_) {
        return true;
    }
    auto cs = controls();
    return std::find(cs.begin(), cs.end(), line) != cs.end();
}

std::uint32_t Gate::max_line() const {
    std::uint32_t m = target_.index;
    for (auto c : controls()) {
        m = std::max(m, c.index);
    }
    return m;
}

std::string to_string(const Gate &gate) {
    std::ostringstream out;
    out << gate_kind_name(gate.kind());
    for (auto c : gate.controls()) {
        out << ' ' << c.index;
    }
    out << ' ' << gate.target().index;
    return out.str();
}

LineRole LineRole::input(std::string name, std::optional<std::string> output_label) {
    return LineRole{Kind::Input, std::move(name), std::move(output_label)};
}

LineRole LineRole::ancilla(std::optional<std::string> output_label) {
    return LineRole{Kind::Ancilla, {}, std::move(output_label)};
}

Circuit::Circuit(std::size_t width, std::vector<LineRole> roles) : roles_(std::move(roles)) {
    if (width == 0) {
        throw StructuralError("circuit width must be at least 1");
    }
    if (roles_.size() != width) {
        throw StructuralError(
            "circuit width " + std::to_string(width) + " does not match " + std::to_string(roles_.size()) +
            " line roles");
    }
}

const LineRole &Circuit::role(LineId line) const {
    if (line.index >= roles_.size()) {
        throw StructuralError("line " + std::to_string(line.index) + " out of range");
    }
    return roles_[line.index];
}

Circuit &Circuit::append(const Gate &gate) {
    if (gate.max_line() >= width()) {
        throw StructuralError(
            "gate '" + to_string(gate) + "' references a line outside a " + std::to_string(width()) +
            "-line circuit");
    }
    gates_.push_back(gate);
    return *this;
}

Circuit &Circuit::set_output_label(LineId line, std::string label) {
    if (line.index >= roles_.size()) {
        throw StructuralError("line " + std::to_string(line.index) + " out of range");
    }
    roles_[line.index].output_label = std::move(label);
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit result = *this;
    std::reverse(result.gates_.begin(), result.gates_.end());
    return result;
}

Circuit Circuit::without_gate(std::size_t index) const {
    if (index >= gates_.size()) {
        throw UsageError("gate index " + std::to_string(index) + " out of range");
    }
    Circuit result = *this;
    result.gates_.erase(result.gates_.begin() + static_cast<std::ptrdiff_t>(index));
    return result;
}

Circuit new_circuit(std::size_t width, std::vector<LineRole> roles) {
    return Circuit(width, std::move(roles));
}

Circuit append_gate(Circuit circuit, const Gate &gate) {
    circuit.append(gate);
    return circuit;
}

}  // namespace ppkn
