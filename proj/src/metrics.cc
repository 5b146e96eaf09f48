#include "ppkn/metrics.h"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ppkn/errors.h"

namespace ppkn {

std::uint64_t CostModel::cost_of(GateKind kind) const {
    switch (kind) {
        case GateKind::Not:
            return not_cost;
        case GateKind::Cnot:
            return cnot_cost;
        case GateKind::Toffoli:
            return toffoli_cost;
    }
    return 0;
}

bool gates_conflict(const Gate &a, const Gate &b) {
    return b.touches(a.target()) || a.touches(b.target());
}

std::uint64_t quantum_cost(const Circuit &circuit, const CostModel &model) {
    std::uint64_t total = 0;
    for (const auto &gate : circuit.gates()) {
        total += model.cost_of(gate.kind());
    }
    return total;
}

DepthResult logical_depth(const Circuit &circuit) {
    // Per line: latest step of a gate targeting it, and latest step of any gate touching it.
    std::vector<std::size_t> last_write(circuit.width(), 0);
    std::vector<std::size_t> last_touch(circuit.width(), 0);
    DepthResult result;
    const auto &gates = circuit.gates();
    for (std::size_t g = 0; g < gates.size(); g++) {
        const Gate &gate = gates[g];
        const auto t = gate.target().index;
        std::size_t ready = last_touch[t];
        for (auto c : gate.controls()) {
            ready = std::max(ready, last_write[c.index]);
        }
        const std::size_t step = ready + 1;
        last_write[t] = step;
        last_touch[t] = step;
        for (auto c : gate.controls()) {
            last_touch[c.index] = std::max(last_touch[c.index], step);
        }
        if (result.schedule.timesteps.size() < step) {
            result.schedule.timesteps.resize(step);
        }
        result.schedule.timesteps[step - 1].push_back(g);
        result.depth = std::max(result.depth, step);
    }
    return result;
}

MetricsReport analyze(const Circuit &circuit, const CostModel &model) {
    MetricsReport report;
    for (const auto &gate : circuit.gates()) {
        switch (gate.kind()) {
            case GateKind::Not:
                report.not_count++;
                break;
            case GateKind::Cnot:
                report.cnot_count++;
                break;
            case GateKind::Toffoli:
                report.toffoli_count++;
                break;
        }
    }
    report.gate_count = circuit.gates().size();
    report.quantum_cost = quantum_cost(circuit, model);
    auto depth = logical_depth(circuit);
    report.logical_depth = depth.depth;
    report.schedule = std::move(depth.schedule);
    return report;
}

void print_report(std::ostream &out, const Circuit &circuit, const MetricsReport &report) {
    out << "lines:         " << circuit.width() << '\n';
    out << "gates:         " << report.gate_count << " (not " << report.not_count << ", cnot " << report.cnot_count
        << ", toffoli " << report.toffoli_count << ")\n";
    out << "quantum cost:  " << report.quantum_cost << '\n';
    out << "logical depth: " << report.logical_depth << '\n';
    out << "schedule:\n";
    for (std::size_t s = 0; s < report.schedule.timesteps.size(); s++) {
        out << "  T" << (s + 1) << ':';
        bool first = true;
        for (auto g : report.schedule.timesteps[s]) {
            out << (first ? " " : " | ") << 'G' << (g + 1) << ' ' << to_string(circuit.gates()[g]);
            first = false;
        }
        out << '\n';
    }
}

const char *provenance_name(Provenance p) {
    return p == Provenance::Computed ? "computed" : "literature";
}

double QcReduction::ratio() const {
    if (baseline_qc == 0) {
        return 0.0;
    }
    return (static_cast<double>(baseline_qc) - static_cast<double>(candidate_qc)) / static_cast<double>(baseline_qc);
}

namespace {

const LiteratureRow *find_row(std::span<const LiteratureRow> rows, const std::string &name) {
    for (const auto &row : rows) {
        if (row.name == name) {
            return &row;
        }
    }
    return nullptr;
}

void check_metric(
    ComparisonTable &table,
    ComparisonRow &row,
    const LiteratureRow &lit,
    const char *metric,
    std::uint64_t computed,
    std::uint64_t published) {
    if (computed == published) {
        return;
    }
    row.flags.push_back(std::string(metric) + ' ' + std::to_string(computed) + "!=" + std::to_string(published));
    table.discrepancies.push_back({row.name, lit.name, metric, computed, published});
}

std::string optional_count(const std::optional<std::size_t> &v) {
    return v ? std::to_string(*v) : "-";
}

std::string join(const std::vector<std::string> &parts, const char *sep) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); k++) {
        if (k) {
            out += sep;
        }
        out += parts[k];
    }
    return out;
}

}  // namespace

ComparisonTable compare_report(
    std::span<const ComputedRow> computed,
    std::span<const LiteratureRow> literature,
    const std::optional<ReductionClaim> &claim) {
    if (computed.empty()) {
        throw UsageError("comparison needs at least one computed row");
    }
    ComparisonTable table;
    for (const auto &entry : computed) {
        const auto &r = entry.report;
        ComparisonRow row{
            entry.name, Provenance::Computed, r.gate_count, r.toffoli_count,
            r.cnot_count, r.not_count, r.quantum_cost, r.logical_depth, {}};
        if (entry.counterpart) {
            const LiteratureRow *lit = find_row(literature, *entry.counterpart);
            if (lit == nullptr) {
                throw UsageError("unknown literature row '" + *entry.counterpart + "'");
            }
            check_metric(table, row, *lit, "gates", r.gate_count, lit->gate_count);
            check_metric(table, row, *lit, "toffoli", r.toffoli_count, lit->toffoli_count);
            if (lit->cnot_count) {
                check_metric(table, row, *lit, "cnot", r.cnot_count, *lit->cnot_count);
            }
            if (lit->not_count) {
                check_metric(table, row, *lit, "not", r.not_count, *lit->not_count);
            }
            check_metric(table, row, *lit, "qc", r.quantum_cost, lit->quantum_cost);
            check_metric(table, row, *lit, "depth", r.logical_depth, lit->logical_depth);
        }
        table.rows.push_back(std::move(row));
    }
    for (const auto &lit : literature) {
        table.rows.push_back(ComparisonRow{
            lit.name, Provenance::Literature, lit.gate_count, lit.toffoli_count,
            lit.cnot_count, lit.not_count, lit.quantum_cost, lit.logical_depth, {}});
    }
    if (claim) {
        const LiteratureRow *base = find_row(literature, claim->baseline);
        const LiteratureRow *cand = find_row(literature, claim->candidate);
        if (base == nullptr || cand == nullptr) {
            throw UsageError("reduction claim names an unknown literature row");
        }
        table.reduction = QcReduction{base->name, cand->name, base->quantum_cost, cand->quantum_cost};
    }
    return table;
}

std::vector<LiteratureRow> published_full_adder_rows() {
    return {
        LiteratureRow{"HNG", true, 5, 2, std::nullopt, std::nullopt, 12, 5},
        LiteratureRow{"TSG", true, 6, 2, std::nullopt, std::nullopt, 14, 6},
        LiteratureRow{"PPKN", true, 6, 1, 5, 0, 10, 4},
    };
}

void print_table(std::ostream &out, const ComparisonTable &table) {
    std::size_t name_width = 4;
    for (const auto &row : table.rows) {
        name_width = std::max(name_width, row.name.size());
    }
    auto cell = [&](const std::string &s, int w) { out << std::setw(w) << s; };
    out << std::left << std::setw(static_cast<int>(name_width)) << "name" << std::right;
    out << "  provenance  gates  toffoli  cnot  not   qc  depth  flags\n";
    for (const auto &row : table.rows) {
        out << std::left << std::setw(static_cast<int>(name_width)) << row.name << "  " << std::setw(10)
            << provenance_name(row.provenance) << std::right;
        cell(std::to_string(row.gate_count), 7);
        cell(std::to_string(row.toffoli_count), 9);
        cell(optional_count(row.cnot_count), 6);
        cell(optional_count(row.not_count), 5);
        cell(std::to_string(row.quantum_cost), 5);
        cell(std::to_string(row.logical_depth), 7);
        if (!row.flags.empty()) {
            out << "  MISMATCH: " << join(row.flags, ", ");
        }
        out << '\n';
    }
    out << std::left;
    if (!table.discrepancies.empty()) {
        out << "\ndiscrepancies (computed vs published):\n";
        for (const auto &d : table.discrepancies) {
            out << "  " << d.computed_row << " vs " << d.literature_row << ": " << d.metric << " computed "
                << d.computed << ", published " << d.published << '\n';
        }
    }
    if (table.reduction) {
        const auto &r = *table.reduction;
        std::ostringstream pct;
        pct << std::fixed << std::setprecision(1) << r.ratio() * 100.0;
        out << "\nquantum cost reduction " << r.candidate << " vs " << r.baseline << " (published): (" << r.baseline_qc
            << " - " << r.candidate_qc << ") / " << r.baseline_qc << " = " << pct.str() << "%\n";
    }
}

void print_table_csv(std::ostream &out, const ComparisonTable &table) {
    out << "name,provenance,gates,toffoli,cnot,not,qc,depth,flags\n";
    for (const auto &row : table.rows) {
        out << row.name << ',' << provenance_name(row.provenance) << ',' << row.gate_count << ',' << row.toffoli_count
            << ',' << optional_count(row.cnot_count) << ',' << optional_count(row.not_count) << ','
            << row.quantum_cost << ',' << row.logical_depth << ',' << join(row.flags, ";") << '\n';
    }
}

void print_report_csv(std::ostream &out, const std::string &name, const MetricsReport &report) {
    out << "name,provenance,gates,toffoli,cnot,not,qc,depth\n";
    out << name << ",computed," << report.gate_count << ',' << report.toffoli_count << ',' << report.cnot_count << ','
        << report.not_count << ',' << report.quantum_cost << ',' << report.logical_depth << '\n';
}

}  // namespace ppkn
