#include "ppkn/cli.h"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "ppkn/adders.h"
#include "ppkn/errors.h"
#include "ppkn/metrics.h"
#include "ppkn/netlist.h"
#include "ppkn/qasm.h"
#include "ppkn/simulator.h"

namespace ppkn::cli {

namespace {

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FileParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_source(const std::string &path, std::istream &in) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw IoFailure("cannot open '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

NetlistDocument load(const std::string &path, std::istream &in) {
    const std::string text = read_source(path, in);
    try {
        return parse_netlist(text);
    } catch (const ParseError &e) {
        throw FileParseError((path == "-" ? std::string("<stdin>") : path) + ":" + std::to_string(e.line()) + ": " +
                             e.detail());
    }
}

void write_output(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) {
        throw IoFailure("cannot write '" + path + "'");
    }
}

int cmd_build(const std::string &kind, std::size_t bits, bool bits_given, const std::string &output, std::ostream &out) {
    NetlistDocument doc{Circuit(1, {LineRole::input("")}), std::nullopt, std::nullopt};
    if (kind == "rca") {
        if (!bits_given) {
            throw UsageError("'build rca' requires --bits N");
        }
        auto rca = build_rca(bits);
        doc = {std::move(rca.circuit), std::move(rca.layout), std::nullopt};
    } else {
        if (bits_given) {
            throw UsageError("--bits only applies to 'build rca'");
        }
        auto fa = kind == "ppkn" ? build_ppkn() : build_hng_reference();
        doc = {std::move(fa.circuit), std::nullopt, fa.spec};
    }
    write_output(output, serialize_netlist(doc), out);
    return kOk;
}

int cmd_simulate(const NetlistDocument &doc, const std::string &bits, std::ostream &out) {
    const Circuit &circuit = doc.circuit;
    if (bits.size() != circuit.width()) {
        throw UsageError(
            "--input needs " + std::to_string(circuit.width()) + " bits, got " + std::to_string(bits.size()));
    }
    // Character k of the bit string drives line k.
    BitState input(circuit.width());
    for (std::size_t k = 0; k < bits.size(); k++) {
        if (bits[k] != '0' && bits[k] != '1') {
            throw UsageError("--input must contain only 0 and 1");
        }
        input[k] = bits[k] == '1';
    }
    const BitState output = simulate(circuit, input);
    out << "output: ";
    for (bool b : output) {
        out << (b ? '1' : '0');
    }
    out << '\n';
    for (std::size_t k = 0; k < circuit.width(); k++) {
        const auto &label = circuit.roles()[k].output_label;
        if (label) {
            out << *label << " = " << output[k] << '\n';
        }
    }
    return kOk;
}

int cmd_verify(const NetlistDocument &doc, std::optional<std::size_t> trials, std::uint64_t seed, bool csv,
               std::ostream &out) {
    VerificationReport report;
    if (doc.full_adder) {
        report = verify_full_adder(doc.circuit, *doc.full_adder);
    } else if (doc.adder) {
        VerifyMode mode = Exhaustive{};
        if (trials || doc.adder->n_bits > kMaxExhaustiveAdderBits) {
            mode = Randomized{trials.value_or(10000), seed};
        }
        report = verify_rca(doc.circuit, *doc.adder, mode);
    } else {
        throw UsageError("netlist declares no 'layout'; nothing to verify against");
    }
    if (csv) {
        print_verification_csv(out, report);
    } else {
        print_verification(out, report);
    }
    return report.passed() ? kOk : kVerificationFailed;
}

int cmd_metrics(const NetlistDocument &doc, const std::string &name, bool csv, std::ostream &out) {
    const auto report = analyze(doc.circuit);
    if (csv) {
        print_report_csv(out, name, report);
    } else {
        print_report(out, doc.circuit, report);
    }
    return kOk;
}

int cmd_compare(bool csv, std::ostream &out) {
    const std::vector<ComputedRow> computed{
        {"PPKN", analyze(build_ppkn().circuit), "PPKN"},
        {"HNG (reference)", analyze(build_hng_reference().circuit), "HNG"},
        {"RCA-3 (PPKN)", analyze(build_rca(3).circuit), std::nullopt},
    };
    const auto literature = published_full_adder_rows();
    const auto table = compare_report(computed, literature, ReductionClaim{"HNG", "PPKN"});
    if (csv) {
        print_table_csv(out, table);
    } else {
        print_table(out, table);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Reversible adder construction, verification and metrics", "ppkn"};
    app.require_subcommand(1);

    std::string kind;
    std::size_t bits = 0;
    std::string output;
    auto *build = app.add_subcommand("build", "Emit a netlist for a built-in circuit");
    build->add_option("kind", kind, "ppkn | hng | rca")->required()->check(CLI::IsMember({"ppkn", "hng", "rca"}));
    auto *bits_opt = build->add_option("--bits", bits, "Adder width for rca")->check(CLI::Range(1, 4096));
    build->add_option("-o,--output", output, "Output file ('-' for stdout)");

    std::string file;
    std::string input_bits;
    auto *simulate_cmd = app.add_subcommand("simulate", "Run one basis state through a netlist");
    simulate_cmd->add_option("file", file, "Netlist file ('-' for stdin)")->required();
    simulate_cmd->add_option("--input", input_bits, "One bit per line, line 0 first")->required();

    std::optional<std::size_t> trials;
    std::uint64_t seed = 1;
    bool csv = false;
    auto *verify_cmd = app.add_subcommand("verify", "Check an adder netlist against integer addition");
    verify_cmd->add_option("file", file, "Netlist file ('-' for stdin)")->required();
    verify_cmd->add_option("--trials", trials, "Random vectors instead of exhaustive enumeration");
    verify_cmd->add_option("--seed", seed, "Seed for random vectors");
    verify_cmd->add_flag("--csv", csv, "Counterexamples as comma-separated rows");

    auto *metrics_cmd = app.add_subcommand("metrics", "Gate counts, quantum cost and logical depth");
    metrics_cmd->add_option("file", file, "Netlist file ('-' for stdin)")->required();
    metrics_cmd->add_flag("--csv", csv, "Comma-separated output");

    auto *compare_cmd = app.add_subcommand("compare", "Computed vs published full-adder metrics");
    compare_cmd->add_flag("--csv", csv, "Comma-separated output");

    std::string format = "qasm";
    auto *export_cmd = app.add_subcommand("export", "Export a netlist to another format");
    export_cmd->add_option("file", file, "Netlist file ('-' for stdin)")->required();
    export_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"qasm"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        err << app.help();
        return kUsage;
    }

    try {
        if (build->parsed()) {
            return cmd_build(kind, bits, bits_opt->count() > 0, output, out);
        }
        if (compare_cmd->parsed()) {
            return cmd_compare(csv, out);
        }
        const NetlistDocument doc = load(file, in);
        if (simulate_cmd->parsed()) {
            return cmd_simulate(doc, input_bits, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(doc, trials, seed, csv, out);
        }
        if (metrics_cmd->parsed()) {
            return cmd_metrics(doc, file == "-" ? "stdin" : file, csv, out);
        }
        out << export_qasm(doc.circuit);
        return kOk;
    } catch (const FileParseError &e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const IoFailure &e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << '\n';
        return kCapacity;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        err << app.help();
        return kUsage;
    }
}

}  // namespace ppkn::cli
