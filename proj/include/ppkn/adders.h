#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ppkn/circuit.h"

namespace ppkn {

/// Line roles of a single input-preserving full adder. Sum replaces Cin on
/// the carry-in line and Cout lands on the ancilla.
struct FullAdderSpec {
    LineId cin;
    LineId a;
    LineId b;
    LineId ancilla;

    LineId sum_line() const {
        return cin;
    }
    LineId cout_line() const {
        return ancilla;
    }

    bool operator==(const FullAdderSpec &) const = default;
};

/// Role-to-line map of an n-bit ripple-carry adder built from cascaded full adders.
struct AdderLayout {
    std::size_t n_bits = 0;
    LineId cin_line;
    std::vector<LineId> a_lines;
    std::vector<LineId> b_lines;
    std::vector<LineId> ancilla_lines;
    /// sum_lines[0] is cin_line, sum_lines[i] is ancilla_lines[i-1].
    std::vector<LineId> sum_lines;
    LineId cout_line;

    /// Cin, A0, B0, anc0, A1, B1, anc1, ... (3n + 1 lines).
    static AdderLayout canonical(std::size_t n_bits);

    std::size_t line_count() const {
        return 3 * n_bits + 1;
    }

    /// Throws StructuralError unless the layout is internally consistent and fits `width`.
    void validate(std::size_t width) const;

    bool operator==(const AdderLayout &) const = default;
};

struct FullAdderCircuit {
    Circuit circuit;
    FullAdderSpec spec;
};

struct RippleCarryAdder {
    Circuit circuit;
    AdderLayout layout;
};

/// Appends one PPKN block: (cin, a, b, 0) -> (sum, a, b, cout) with one Toffoli and five CNOTs.
void append_ppkn_block(Circuit &circuit, LineId cin, LineId a, LineId b, LineId ancilla);

/// The 4-line PPKN adder on lines (Cin, A, B, 0).
FullAdderCircuit build_ppkn();

/// A 5-gate, 2-Toffoli HNG-style adder on lines (A, B, Cin, 0), used as the baseline.
FullAdderCircuit build_hng_reference();

/// n cascaded PPKN blocks; block i takes its carry-in from block i-1's ancilla.
RippleCarryAdder build_rca(std::size_t n_bits);

struct AddResult {
    std::uint64_t sum = 0;
    bool cout = false;

    bool operator==(const AddResult &) const = default;
};

/// (a + b + cin) mod 2^n and the carry out of bit n-1. Supports 1 <= n <= 64.
AddResult oracle_add(std::uint64_t a, std::uint64_t b, bool cin, std::size_t n_bits);

/// One mismatching input vector with what the circuit produced.
struct Counterexample {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    bool cin = false;
    AddResult expected;
    AddResult observed;
    std::uint64_t observed_a = 0;
    std::uint64_t observed_b = 0;

    bool operator==(const Counterexample &) const = default;
};

struct VerificationReport {
    std::string subject;
    std::size_t cases_checked = 0;
    std::size_t failures = 0;
    /// Failing rows in input order; capped at kMaxCounterexamples.
    std::vector<Counterexample> counterexamples;
    /// Reversibility of the whole map, when it was checked.
    std::optional<bool> bijective;

    static constexpr std::size_t kMaxCounterexamples = 64;

    bool passed() const {
        return failures == 0 && bijective.value_or(true);
    }
};

/// Checks all 8 (Cin, A, B) rows with the ancilla at 0, plus 16-state bijectivity.
VerificationReport verify_full_adder(const Circuit &circuit, const FullAdderSpec &spec);

struct Exhaustive {};
struct Randomized {
    std::size_t trials = 10000;
    std::uint64_t seed = 0;
};
using VerifyMode = std::variant<Exhaustive, Randomized>;

inline constexpr std::size_t kMaxExhaustiveAdderBits = 8;

/// Compares the adder against oracle_add and checks that every A/B line is
/// unchanged. Exhaustive mode covers all 2^(2n+1) inputs and is limited to
/// n <= kMaxExhaustiveAdderBits; randomized mode draws `trials` seeded vectors.
VerificationReport verify_rca(const Circuit &circuit, const AdderLayout &layout, const VerifyMode &mode);

void print_verification(std::ostream &out, const VerificationReport &report);
/// Header plus one row per counterexample: a,b,cin,expected_sum,expected_cout,sum,cout,a_out,b_out.
void print_verification_csv(std::ostream &out, const VerificationReport &report);

}  // namespace ppkn
