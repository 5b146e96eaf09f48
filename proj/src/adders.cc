#include "ppkn/adders.h"

#include <algorithm>
#include <ostream>
#include <random>
#include <set>

#include "ppkn/errors.h"
#include "ppkn/simulator.h"

namespace ppkn {

namespace {

LineId line(std::size_t k) {
    return LineId(static_cast<std::uint32_t>(k));
}

std::uint64_t low_mask(std::size_t n_bits) {
    return n_bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_bits) - 1;
}

void record_failure(VerificationReport &report, const Counterexample &row) {
    report.failures++;
    if (report.counterexamples.size() < VerificationReport::kMaxCounterexamples) {
        report.counterexamples.push_back(row);
    }
}

struct RcaVector {
    std::uint64_t a;
    std::uint64_t b;
    bool cin;
};

// Runs up to one batch of vectors through the adder and records mismatches.
void check_rca_batch(
    const Circuit &circuit,
    const AdderLayout &layout,
    const std::vector<RcaVector> &vectors,
    VerificationReport &report) {
    BatchState batch(circuit.width());
    for (std::size_t lane = 0; lane < vectors.size(); lane++) {
        const auto &v = vectors[lane];
        batch.set(layout.cin_line.index, lane, v.cin);
        for (std::size_t i = 0; i < layout.n_bits; i++) {
            batch.set(layout.a_lines[i].index, lane, (v.a >> i) & 1);
            batch.set(layout.b_lines[i].index, lane, (v.b >> i) & 1);
        }
    }
    batch = simulate_batch(circuit, std::move(batch));
    for (std::size_t lane = 0; lane < vectors.size(); lane++) {
        const auto &v = vectors[lane];
        Counterexample row;
        row.a = v.a;
        row.b = v.b;
        row.cin = v.cin;
        row.expected = oracle_add(v.a, v.b, v.cin, layout.n_bits);
        for (std::size_t i = 0; i < layout.n_bits; i++) {
            row.observed.sum |= static_cast<std::uint64_t>(batch.get(layout.sum_lines[i].index, lane)) << i;
            row.observed_a |= static_cast<std::uint64_t>(batch.get(layout.a_lines[i].index, lane)) << i;
            row.observed_b |= static_cast<std::uint64_t>(batch.get(layout.b_lines[i].index, lane)) << i;
        }
        row.observed.cout = batch.get(layout.cout_line.index, lane);
        report.cases_checked++;
        if (row.observed != row.expected || row.observed_a != v.a || row.observed_b != v.b) {
            record_failure(report, row);
        }
    }
}

}  // namespace

AdderLayout AdderLayout::canonical(std::size_t n_bits) {
    if (n_bits == 0) {
        throw UsageError("adder needs at least one bit");
    }
    AdderLayout layout;
    layout.n_bits = n_bits;
    layout.cin_line = line(0);
    for (std::size_t i = 0; i < n_bits; i++) {
        layout.a_lines.push_back(line(3 * i + 1));
        layout.b_lines.push_back(line(3 * i + 2));
        layout.ancilla_lines.push_back(line(3 * i + 3));
        layout.sum_lines.push_back(i == 0 ? layout.cin_line : layout.ancilla_lines[i - 1]);
    }
    layout.cout_line = layout.ancilla_lines.back();
    return layout;
}

void AdderLayout::validate(std::size_t width) const {
    if (n_bits == 0) {
        throw StructuralError("adder layout has zero bits");
    }
    if (a_lines.size() != n_bits || b_lines.size() != n_bits || ancilla_lines.size() != n_bits ||
        sum_lines.size() != n_bits) {
        throw StructuralError("adder layout line lists do not have n_bits entries");
    }
    if (width != line_count()) {
        throw StructuralError(
            "a " + std::to_string(n_bits) + "-bit adder needs " + std::to_string(line_count()) +
            " lines, circuit has " + std::to_string(width));
    }
    std::set<LineId> seen{cin_line};
    for (const auto *group : {&a_lines, &b_lines, &ancilla_lines}) {
        for (auto l : *group) {
            if (l.index >= width || !seen.insert(l).second) {
                throw StructuralError("adder layout lines must be distinct and in range");
            }
        }
    }
    if (cin_line.index >= width) {
        throw StructuralError("adder layout carry-in out of range");
    }
    for (std::size_t i = 0; i < n_bits; i++) {
        if (sum_lines[i] != (i == 0 ? cin_line : ancilla_lines[i - 1])) {
            throw StructuralError("sum line " + std::to_string(i) + " is not the incoming carry line");
        }
    }
    if (cout_line != ancilla_lines.back()) {
        throw StructuralError("carry-out must be the last ancilla");
    }
}

void append_ppkn_block(Circuit &circuit, LineId cin, LineId a, LineId b, LineId ancilla) {
    circuit.append(Gate::cnot(b, cin));
    circuit.append(Gate::cnot(b, a));
    circuit.append(Gate::toffoli(cin, a, ancilla));
    circuit.append(Gate::cnot(b, a));
    circuit.append(Gate::cnot(b, ancilla));
    circuit.append(Gate::cnot(a, cin));
}

FullAdderCircuit build_ppkn() {
    Circuit circuit(
        4, {LineRole::input("Cin", "Sum"), LineRole::input("A", "A"), LineRole::input("B", "B"),
            LineRole::ancilla("Cout")});
    FullAdderSpec spec{line(0), line(1), line(2), line(3)};
    append_ppkn_block(circuit, spec.cin, spec.a, spec.b, spec.ancilla);
    return {std::move(circuit), spec};
}

FullAdderCircuit build_hng_reference() {
    Circuit circuit(
        4, {LineRole::input("A", "A"), LineRole::input("B", "B"), LineRole::input("Cin", "Sum"),
            LineRole::ancilla("Cout")});
    FullAdderSpec spec{line(2), line(0), line(1), line(3)};
    circuit.append(Gate::toffoli(line(0), line(1), line(3)));  // anc = AB
    circuit.append(Gate::cnot(line(0), line(1)));              // B -> A^B
    circuit.append(Gate::toffoli(line(1), line(2), line(3)));  // anc ^= (A^B)Cin
    circuit.append(Gate::cnot(line(1), line(2)));              // Cin -> Sum
    circuit.append(Gate::cnot(line(0), line(1)));              // restore B
    return {std::move(circuit), spec};
}

RippleCarryAdder build_rca(std::size_t n_bits) {
    auto layout = AdderLayout::canonical(n_bits);
    std::vector<LineRole> roles(layout.line_count());
    roles[layout.cin_line.index] = LineRole::input("Cin", "Sum0");
    for (std::size_t i = 0; i < n_bits; i++) {
        const auto idx = std::to_string(i);
        roles[layout.a_lines[i].index] = LineRole::input("A" + idx, "A" + idx);
        roles[layout.b_lines[i].index] = LineRole::input("B" + idx, "B" + idx);
        roles[layout.ancilla_lines[i].index] =
            LineRole::ancilla(i + 1 == n_bits ? std::string("Cout") : "Sum" + std::to_string(i + 1));
    }
    Circuit circuit(layout.line_count(), std::move(roles));
    for (std::size_t i = 0; i < n_bits; i++) {
        append_ppkn_block(circuit, layout.sum_lines[i], layout.a_lines[i], layout.b_lines[i], layout.ancilla_lines[i]);
    }
    return {std::move(circuit), std::move(layout)};
}

AddResult oracle_add(std::uint64_t a, std::uint64_t b, bool cin, std::size_t n_bits) {
    if (n_bits == 0 || n_bits > 64) {
        throw UsageError("oracle_add supports 1 to 64 bits, got " + std::to_string(n_bits));
    }
    const std::uint64_t mask = low_mask(n_bits);
    if ((a & ~mask) != 0 || (b & ~mask) != 0) {
        throw UsageError("operand does not fit in " + std::to_string(n_bits) + " bits");
    }
    const unsigned __int128 total = static_cast<unsigned __int128>(a) + b + (cin ? 1 : 0);
    return {static_cast<std::uint64_t>(total) & mask, static_cast<bool>((total >> n_bits) & 1)};
}

VerificationReport verify_full_adder(const Circuit &circuit, const FullAdderSpec &spec) {
    if (circuit.width() != 4) {
        throw StructuralError("full adder verification needs a 4-line circuit, got " + std::to_string(circuit.width()));
    }
    const std::set<LineId> distinct{spec.cin, spec.a, spec.b, spec.ancilla};
    if (distinct.size() != 4 || distinct.rbegin()->index >= 4) {
        throw StructuralError("full adder spec must name four distinct lines of the circuit");
    }
    if (!circuit.role(spec.ancilla).is_ancilla()) {
        throw StructuralError("full adder carry-out line must be a constant-0 ancilla");
    }

    VerificationReport report;
    report.subject = "full adder";
    for (unsigned row = 0; row < 8; row++) {
        const bool cin = row & 4;
        const bool a = row & 2;
        const bool b = row & 1;
        BitState in(4, false);
        in[spec.cin.index] = cin;
        in[spec.a.index] = a;
        in[spec.b.index] = b;
        const BitState out = simulate(circuit, in);

        Counterexample ce;
        ce.a = a;
        ce.b = b;
        ce.cin = cin;
        ce.expected = oracle_add(a, b, cin, 1);
        ce.observed = {static_cast<std::uint64_t>(out[spec.sum_line().index]), out[spec.cout_line().index]};
        ce.observed_a = out[spec.a.index];
        ce.observed_b = out[spec.b.index];
        report.cases_checked++;
        if (ce.observed != ce.expected || ce.observed_a != ce.a || ce.observed_b != ce.b) {
            record_failure(report, ce);
        }
    }
    report.bijective = is_bijection(permutation_of(circuit));
    return report;
}

VerificationReport verify_rca(const Circuit &circuit, const AdderLayout &layout, const VerifyMode &mode) {
    layout.validate(circuit.width());
    if (layout.n_bits > 64) {
        throw CapacityError("adder verification supports at most 64 bits");
    }
    for (auto l : layout.ancilla_lines) {
        if (!circuit.role(l).is_ancilla()) {
            throw StructuralError("adder line " + std::to_string(l.index) + " must be a constant-0 ancilla");
        }
    }

    VerificationReport report;
    report.subject = std::to_string(layout.n_bits) + "-bit ripple-carry adder";
    const std::uint64_t mask = low_mask(layout.n_bits);
    std::vector<RcaVector> pending;
    pending.reserve(BatchState::lane_count());
    auto push = [&](const RcaVector &v) {
        pending.push_back(v);
        if (pending.size() == BatchState::lane_count()) {
            check_rca_batch(circuit, layout, pending, report);
            pending.clear();
        }
    };

    if (std::holds_alternative<Exhaustive>(mode)) {
        if (layout.n_bits > kMaxExhaustiveAdderBits) {
            throw CapacityError(
                "exhaustive adder verification is limited to " + std::to_string(kMaxExhaustiveAdderBits) +
                " bits, requested " + std::to_string(layout.n_bits));
        }
        const std::size_t n = layout.n_bits;
        const std::uint64_t total = std::uint64_t{1} << (2 * n + 1);
        for (std::uint64_t x = 0; x < total; x++) {
            push({x & mask, (x >> n) & mask, static_cast<bool>(x >> (2 * n))});
        }
    } else {
        const auto &r = std::get<Randomized>(mode);
        std::mt19937_64 rng(r.seed);
        for (std::size_t k = 0; k < r.trials; k++) {
            const std::uint64_t a = rng() & mask;
            const std::uint64_t b = rng() & mask;
            const bool cin = rng() & 1;
            push({a, b, cin});
        }
    }
    if (!pending.empty()) {
        check_rca_batch(circuit, layout, pending, report);
    }
    return report;
}

void print_verification(std::ostream &out, const VerificationReport &report) {
    out << report.subject << ": " << (report.passed() ? "PASS" : "FAIL") << " ("
        << (report.cases_checked - report.failures) << '/' << report.cases_checked << " cases)\n";
    if (report.bijective) {
        out << "bijective: " << (*report.bijective ? "yes" : "no") << '\n';
    }
    if (report.failures == 0) {
        return;
    }
    out << "counterexamples";
    if (report.failures > report.counterexamples.size()) {
        out << " (first " << report.counterexamples.size() << " of " << report.failures << ")";
    }
    out << ":\n";
    for (const auto &c : report.counterexamples) {
        out << "  a=" << c.a << " b=" << c.b << " cin=" << c.cin << "  expected sum=" << c.expected.sum
            << " cout=" << c.expected.cout << "  got sum=" << c.observed.sum << " cout=" << c.observed.cout
            << " a=" << c.observed_a << " b=" << c.observed_b << '\n';
    }
}

void print_verification_csv(std::ostream &out, const VerificationReport &report) {
    out << "a,b,cin,expected_sum,expected_cout,sum,cout,a_out,b_out\n";
    for (const auto &c : report.counterexamples) {
        out << c.a << ',' << c.b << ',' << c.cin << ',' << c.expected.sum << ',' << c.expected.cout << ','
            << c.observed.sum << ',' << c.observed.cout << ',' << c.observed_a << ',' << c.observed_b << '\n';
    }
}

}  // namespace ppkn
