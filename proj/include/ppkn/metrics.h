#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ppkn/circuit.h"

namespace ppkn {

/// Per-gate quantum cost. The defaults (NOT 1, CNOT 1, Toffoli 5) are the
/// only weights under which one Toffoli plus five CNOTs cost 10.
struct CostModel {
    std::uint64_t not_cost = 1;
    std::uint64_t cnot_cost = 1;
    std::uint64_t toffoli_cost = 5;

    std::uint64_t cost_of(GateKind kind) const;
    bool operator==(const CostModel &) const = default;
};

/// Timesteps of gate indices (0-based, into the circuit's gate list).
struct Schedule {
    std::vector<std::vector<std::size_t>> timesteps;

    bool operator==(const Schedule &) const = default;
};

struct DepthResult {
    std::size_t depth = 0;
    Schedule schedule;
};

struct MetricsReport {
    std::size_t gate_count = 0;
    std::size_t not_count = 0;
    std::size_t cnot_count = 0;
    std::size_t toffoli_count = 0;
    std::uint64_t quantum_cost = 0;
    std::size_t logical_depth = 0;
    Schedule schedule;

    bool operator==(const MetricsReport &) const = default;
};

/// Two gates may share a timestep only if neither one's target is touched by
/// the other. Shared controls are fine.
bool gates_conflict(const Gate &a, const Gate &b);

std::uint64_t quantum_cost(const Circuit &circuit, const CostModel &model = {});

/// ASAP schedule under gates_conflict: each gate lands one step after the
/// latest earlier gate it conflicts with.
DepthResult logical_depth(const Circuit &circuit);

MetricsReport analyze(const Circuit &circuit, const CostModel &model = {});

void print_report(std::ostream &out, const Circuit &circuit, const MetricsReport &report);

// ---------------------------------------------------------------------------
// Comparison tables

enum class Provenance : std::uint8_t { Computed, Literature };

const char *provenance_name(Provenance p);

/// Metrics as published elsewhere. CNOT/NOT counts are often not reported.
struct LiteratureRow {
    std::string name;
    bool inputs_preserved = true;
    std::size_t gate_count = 0;
    std::size_t toffoli_count = 0;
    std::optional<std::size_t> cnot_count;
    std::optional<std::size_t> not_count;
    std::uint64_t quantum_cost = 0;
    std::size_t logical_depth = 0;
};

/// A measured circuit. `counterpart` names a LiteratureRow to check against.
struct ComputedRow {
    std::string name;
    MetricsReport report;
    std::optional<std::string> counterpart;
};

struct ComparisonRow {
    std::string name;
    Provenance provenance = Provenance::Computed;
    std::size_t gate_count = 0;
    std::size_t toffoli_count = 0;
    std::optional<std::size_t> cnot_count;
    std::optional<std::size_t> not_count;
    std::uint64_t quantum_cost = 0;
    std::size_t logical_depth = 0;
    /// One entry per metric that disagrees with the counterpart, e.g. "qc 13!=12".
    std::vector<std::string> flags;
};

struct Discrepancy {
    std::string computed_row;
    std::string literature_row;
    std::string metric;
    std::uint64_t computed = 0;
    std::uint64_t published = 0;
};

struct QcReduction {
    std::string baseline;
    std::string candidate;
    std::uint64_t baseline_qc = 0;
    std::uint64_t candidate_qc = 0;

    /// (baseline - candidate) / baseline, as a fraction.
    double ratio() const;
};

struct ComparisonTable {
    std::vector<ComparisonRow> rows;
    std::vector<Discrepancy> discrepancies;
    std::optional<QcReduction> reduction;
};

/// Names two literature rows whose published quantum costs define the headline reduction.
struct ReductionClaim {
    std::string baseline;
    std::string candidate;
};

/// Builds a table with the computed rows first, then the literature rows.
/// Mismatches between a computed row and its named counterpart are recorded
/// in both the row flags and `discrepancies`. Throws UsageError if `computed`
/// is empty or a counterpart/claim names an unknown literature row.
ComparisonTable compare_report(
    std::span<const ComputedRow> computed,
    std::span<const LiteratureRow> literature,
    const std::optional<ReductionClaim> &claim = std::nullopt);

/// Full-adder figures as published: PPKN, HNG and TSG.
std::vector<LiteratureRow> published_full_adder_rows();

void print_table(std::ostream &out, const ComparisonTable &table);
/// Header plus one row per entry: name,provenance,gates,toffoli,cnot,not,qc,depth,flags.
void print_table_csv(std::ostream &out, const ComparisonTable &table);
void print_report_csv(std::ostream &out, const std::string &name, const MetricsReport &report);

}  // namespace ppkn
