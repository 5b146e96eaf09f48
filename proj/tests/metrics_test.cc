#include "ppkn/metrics.h"

#include <cmath>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "ppkn/adders.h"
#include "ppkn/errors.h"
#include "ppkn/simulator.h"
#include "test_support.h"

using namespace ppkn;

namespace {
LineId L(std::uint32_t k) {
    return LineId(k);
}

Circuit lines(std::size_t width) {
    return Circuit(width, std::vector<LineRole>(width, LineRole::input("")));
}
}  // namespace

TEST(metrics, quantum_cost) {
    ASSERT_EQ(quantum_cost(build_ppkn().circuit), 10u);
    ASSERT_EQ(quantum_cost(lines(3)), 0u);
    ASSERT_EQ(quantum_cost(build_hng_reference().circuit), 13u);

    CostModel custom{1, 1, 4};
    ASSERT_EQ(quantum_cost(build_ppkn().circuit, custom), 9u);
}

TEST(metrics, conflict_rule) {
    // Shared control is fine.
    ASSERT_FALSE(gates_conflict(Gate::cnot(L(2), L(0)), Gate::cnot(L(2), L(1))));
    // Target read by the other gate.
    ASSERT_TRUE(gates_conflict(Gate::cnot(L(2), L(0)), Gate::toffoli(L(0), L(1), L(3))));
    // Same target, even though XOR writes commute.
    ASSERT_TRUE(gates_conflict(Gate::cnot(L(1), L(0)), Gate::cnot(L(2), L(0))));
    ASSERT_FALSE(gates_conflict(Gate::x(L(0)), Gate::x(L(1))));
}

TEST(metrics, ppkn_depth_and_schedule) {
    const auto d = logical_depth(build_ppkn().circuit);
    ASSERT_EQ(d.depth, 4u);
    const Schedule expected{{{0, 1}, {2}, {3, 4}, {5}}};
    ASSERT_EQ(d.schedule, expected);
}

TEST(metrics, hng_reference_depth) {
    const auto d = logical_depth(build_hng_reference().circuit);
    ASSERT_EQ(d.depth, 5u);
    const Schedule expected{{{0}, {1}, {2}, {3}, {4}}};
    ASSERT_EQ(d.schedule, expected);
}

TEST(metrics, empty_and_single_gate) {
    const auto empty = analyze(lines(4));
    ASSERT_EQ(empty.logical_depth, 0u);
    ASSERT_TRUE(empty.schedule.timesteps.empty());
    ASSERT_EQ(empty.quantum_cost, 0u);

    auto one = lines(3);
    one.append(Gate::toffoli(L(0), L(1), L(2)));
    const auto r = analyze(one);
    ASSERT_EQ(r.gate_count, 1u);
    ASSERT_EQ(r.quantum_cost, 5u);
    ASSERT_EQ(r.logical_depth, 1u);
}

TEST(metrics, analyze_ppkn_and_rca) {
    const auto p = analyze(build_ppkn().circuit);
    ASSERT_EQ(p.gate_count, 6u);
    ASSERT_EQ(p.toffoli_count, 1u);
    ASSERT_EQ(p.cnot_count, 5u);
    ASSERT_EQ(p.not_count, 0u);
    ASSERT_EQ(p.quantum_cost, 10u);
    ASSERT_EQ(p.logical_depth, 4u);

    const auto r = analyze(build_rca(3).circuit);
    ASSERT_EQ(r.gate_count, 18u);
    ASSERT_EQ(r.toffoli_count, 3u);
    ASSERT_EQ(r.cnot_count, 15u);
    ASSERT_EQ(r.quantum_cost, 30u);
}

TEST(metrics, not_gates_are_counted) {
    auto c = lines(2);
    c.append(Gate::x(L(0)));
    c.append(Gate::x(L(1)));
    c.append(Gate::cnot(L(0), L(1)));
    const auto r = analyze(c);
    ASSERT_EQ(r.not_count, 2u);
    ASSERT_EQ(r.quantum_cost, 3u);
    ASSERT_EQ(r.logical_depth, 2u);
}

TEST(metrics, report_invariants_property) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; trial++) {
        const auto c = test_support::random_circuit(rng, 1, 10, 100);
        const auto r = analyze(c);
        ASSERT_EQ(r.gate_count, r.not_count + r.cnot_count + r.toffoli_count);
        ASSERT_EQ(r.quantum_cost, r.not_count + r.cnot_count + 5 * r.toffoli_count);
        ASSERT_EQ(r.logical_depth, r.schedule.timesteps.size());
        ASSERT_EQ(r.logical_depth, test_support::brute_force_depth(c));
        ASSERT_EQ(analyze(c), r);
        if (!c.gates().empty()) {
            ASSERT_GE(r.logical_depth, 1u);
        }

        // Every gate once; no conflicting pair shares a step; conflicting pairs keep program order.
        std::vector<std::size_t> step_of(c.gates().size(), SIZE_MAX);
        for (std::size_t s = 0; s < r.schedule.timesteps.size(); s++) {
            ASSERT_FALSE(r.schedule.timesteps[s].empty());
            for (auto g : r.schedule.timesteps[s]) {
                ASSERT_EQ(step_of[g], SIZE_MAX);
                step_of[g] = s;
            }
        }
        for (std::size_t g = 0; g < c.gates().size(); g++) {
            ASSERT_NE(step_of[g], SIZE_MAX);
            for (std::size_t h = 0; h < g; h++) {
                if (gates_conflict(c.gates()[h], c.gates()[g])) {
                    ASSERT_LT(step_of[h], step_of[g]);
                }
            }
        }
    }
}

TEST(metrics, depth_bounded_below_by_same_target_chain) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 200; trial++) {
        const auto c = test_support::random_circuit(rng, 1, 10, 100);
        std::vector<std::size_t> per_target(c.width(), 0);
        for (const auto &g : c.gates()) {
            per_target[g.target().index]++;
        }
        const std::size_t chain = c.gates().empty() ? 0 : *std::max_element(per_target.begin(), per_target.end());
        ASSERT_GE(logical_depth(c).depth, chain);
    }
}

TEST(metrics, schedule_execution_matches_sequential) {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 200; trial++) {
        const auto c = test_support::random_circuit(rng, 1, 10, 100);
        auto schedule = logical_depth(c).schedule;
        for (int k = 0; k < 100; k++) {
            const auto in = test_support::random_state(rng, c.width());
            BitState state = in;
            for (auto &step : schedule.timesteps) {
                std::shuffle(step.begin(), step.end(), rng);
                for (auto g : step) {
                    apply_gate_in_place(state, c.gates()[g]);
                }
            }
            ASSERT_EQ(state, simulate(c, in));
        }
    }
}

TEST(metrics, compare_reproduces_published_ppkn_column) {
    const std::vector<ComputedRow> computed{{"PPKN", analyze(build_ppkn().circuit), "PPKN"}};
    const auto literature = published_full_adder_rows();
    const auto table = compare_report(computed, literature);
    ASSERT_TRUE(table.discrepancies.empty());
    ASSERT_EQ(table.rows.size(), 4u);
    const auto &row = table.rows[0];
    ASSERT_EQ(row.provenance, Provenance::Computed);
    ASSERT_EQ(row.gate_count, 6u);
    ASSERT_EQ(row.toffoli_count, 1u);
    ASSERT_EQ(row.quantum_cost, 10u);
    ASSERT_EQ(row.logical_depth, 4u);
    ASSERT_TRUE(row.flags.empty());
    ASSERT_EQ(table.rows[2].name, "TSG");
    ASSERT_EQ(table.rows[2].quantum_cost, 14u);
    ASSERT_EQ(table.rows[2].logical_depth, 6u);
    ASSERT_EQ(table.rows[2].provenance, Provenance::Literature);
}

TEST(metrics, compare_flags_hng_quantum_cost) {
    const std::vector<ComputedRow> computed{
        {"PPKN", analyze(build_ppkn().circuit), "PPKN"},
        {"HNG (reference)", analyze(build_hng_reference().circuit), "HNG"},
    };
    const auto literature = published_full_adder_rows();
    const auto table = compare_report(computed, literature, ReductionClaim{"HNG", "PPKN"});
    ASSERT_EQ(table.discrepancies.size(), 1u);
    const auto &d = table.discrepancies[0];
    ASSERT_EQ(d.computed_row, "HNG (reference)");
    ASSERT_EQ(d.literature_row, "HNG");
    ASSERT_EQ(d.metric, "qc");
    ASSERT_EQ(d.computed, 13u);
    ASSERT_EQ(d.published, 12u);
    ASSERT_EQ(table.rows[1].flags, (std::vector<std::string>{"qc 13!=12"}));

    ASSERT_TRUE(table.reduction.has_value());
    ASSERT_NEAR(table.reduction->ratio(), 2.0 / 12.0, 1e-12);
    ASSERT_EQ(std::lround(table.reduction->ratio() * 100), 17);

    std::ostringstream text;
    print_table(text, table);
    ASSERT_NE(text.str().find("MISMATCH: qc 13!=12"), std::string::npos);
    ASSERT_NE(text.str().find("(12 - 10) / 12 = 16.7%"), std::string::npos);

    std::ostringstream csv;
    print_table_csv(csv, table);
    ASSERT_NE(csv.str().find("HNG (reference),computed,5,2,3,0,13,5,qc 13!=12\n"), std::string::npos);
    ASSERT_NE(csv.str().find("HNG,literature,5,2,-,-,12,5,\n"), std::string::npos);
}

TEST(metrics, compare_errors) {
    const auto literature = published_full_adder_rows();
    ASSERT_THROW(compare_report({}, literature), UsageError);
    const std::vector<ComputedRow> bad{{"x", analyze(build_ppkn().circuit), "nope"}};
    ASSERT_THROW(compare_report(bad, literature), UsageError);
    const std::vector<ComputedRow> ok{{"x", analyze(build_ppkn().circuit), std::nullopt}};
    ASSERT_THROW(compare_report(ok, literature, ReductionClaim{"HNG", "nope"}), UsageError);
}

TEST(metrics, print_report_lists_timesteps) {
    const auto c = build_ppkn().circuit;
    std::ostringstream out;
    print_report(out, c, analyze(c));
    const std::string text = out.str();
    ASSERT_NE(text.find("quantum cost:  10"), std::string::npos);
    ASSERT_NE(text.find("logical depth: 4"), std::string::npos);
    ASSERT_NE(text.find("T1: G1 cnot 2 0 | G2 cnot 2 1\n"), std::string::npos);
    ASSERT_NE(text.find("T3: G4 cnot 2 1 | G5 cnot 2 3\n"), std::string::npos);
    ASSERT_NE(text.find("T4: G6 cnot 1 0\n"), std::string::npos);
}
