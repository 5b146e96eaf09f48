#include "ppkn/netlist.h"

#include <charconv>
#include <sstream>
#include <vector>

#include "ppkn/errors.h"

namespace ppkn {

namespace {

constexpr std::size_t kMaxWidth = 1u << 20;

std::vector<std::string_view> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    std::vector<std::string_view> tokens;
    std::size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) {
            k++;
        }
        std::size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') {
            k++;
        }
        if (k > start) {
            tokens.push_back(line.substr(start, k - start));
        }
    }
    return tokens;
}

bool is_name_token(std::string_view name) {
    if (name.empty()) {
        return false;
    }
    for (char ch : name) {
        if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' || ch == '#') {
            return false;
        }
    }
    return true;
}

class Parser {
   public:
    NetlistDocument run(std::string_view text) {
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find('\n', start);
            if (end == std::string_view::npos) {
                end = text.size();
            }
            line_no_++;
            statement(tokenize(text.substr(start, end - start)));
            start = end + 1;
        }
        if (!circuit_) {
            throw ParseError(line_no_ == 0 ? 1 : line_no_, "missing 'lines <w>' header");
        }
        Circuit circuit(roles_.size(), roles_);
        for (const auto &gate : circuit_->gates()) {
            circuit.append(gate);
        }
        return NetlistDocument{std::move(circuit), std::move(adder_), full_adder_};
    }

   private:
    [[noreturn]] void fail(const std::string &message) const {
        throw ParseError(line_no_, message);
    }

    std::size_t number(std::string_view token, const char *what) const {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            fail(std::string("expected ") + what + ", got '" + std::string(token) + "'");
        }
        return value;
    }

    LineId index(std::string_view token) const {
        std::size_t value = number(token, "a line index");
        if (value >= roles_.size()) {
            fail("line index " + std::to_string(value) + " out of range for " + std::to_string(roles_.size()) +
                 " lines");
        }
        return LineId(static_cast<std::uint32_t>(value));
    }

    void arity(const std::vector<std::string_view> &tokens, std::size_t lo, std::size_t hi) const {
        if (tokens.size() < lo || tokens.size() > hi) {
            fail("'" + std::string(tokens[0]) + "' takes " +
                 (lo == hi ? std::to_string(lo - 1) : std::to_string(lo - 1) + " to " + std::to_string(hi - 1)) +
                 " argument(s)");
        }
    }

    void require_header(std::string_view keyword) const {
        if (!circuit_) {
            fail("'" + std::string(keyword) + "' before 'lines <w>' header");
        }
    }

    void declare_role(LineId line, LineRole role) {
        if (declared_[line.index]) {
            fail("role of line " + std::to_string(line.index) + " declared twice");
        }
        declared_[line.index] = true;
        role.output_label = roles_[line.index].output_label;
        roles_[line.index] = std::move(role);
    }

    void statement(const std::vector<std::string_view> &tokens) {
        if (tokens.empty()) {
            return;
        }
        const std::string_view kw = tokens[0];
        if (kw == "lines") {
            arity(tokens, 2, 2);
            if (circuit_) {
                fail("duplicate 'lines' header");
            }
            const std::size_t width = number(tokens[1], "a line count");
            if (width == 0 || width > kMaxWidth) {
                fail("line count must be between 1 and " + std::to_string(kMaxWidth));
            }
            roles_.assign(width, LineRole::input(""));
            declared_.assign(width, false);
            labelled_.assign(width, false);
            circuit_.emplace(width, roles_);
            return;
        }
        require_header(kw);
        if (kw == "input") {
            arity(tokens, 3, 3);
            declare_role(index(tokens[1]), LineRole::input(std::string(tokens[2])));
        } else if (kw == "ancilla") {
            arity(tokens, 2, 3);
            const LineId line = index(tokens[1]);
            if (tokens.size() == 3 && number(tokens[2], "an initial value") != 0) {
                fail("ancilla lines must start at 0");
            }
            declare_role(line, LineRole::ancilla());
        } else if (kw == "output") {
            arity(tokens, 3, 3);
            const LineId line = index(tokens[1]);
            if (labelled_[line.index]) {
                fail("output label of line " + std::to_string(line.index) + " declared twice");
            }
            labelled_[line.index] = true;
            roles_[line.index].output_label = std::string(tokens[2]);
        } else if (kw == "not" || kw == "cnot" || kw == "toffoli") {
            const GateKind kind = kw == "not" ? GateKind::Not : kw == "cnot" ? GateKind::Cnot : GateKind::Toffoli;
            const std::size_t n = control_count(kind) + 2;
            arity(tokens, n, n);
            std::vector<LineId> lines;
            for (std::size_t k = 1; k < tokens.size(); k++) {
                lines.push_back(index(tokens[k]));
            }
            const LineId target = lines.back();
            lines.pop_back();
            try {
                circuit_->append(Gate::make(kind, lines, target));
            } catch (const StructuralError &e) {
                fail(e.what());
            }
        } else if (kw == "layout") {
            if (tokens.size() < 2) {
                fail("'layout' needs a kind");
            }
            if (adder_ || full_adder_) {
                fail("duplicate layout declaration");
            }
            if (tokens[1] == "adder") {
                arity(tokens, 3, 3);
                const std::size_t n = number(tokens[2], "a bit count");
                if (n == 0 || 3 * n + 1 != roles_.size()) {
                    fail("'layout adder " + std::to_string(n) + "' needs " + std::to_string(3 * n + 1) +
                         " lines, header declares " + std::to_string(roles_.size()));
                }
                adder_ = AdderLayout::canonical(n);
            } else if (tokens[1] == "fulladder") {
                arity(tokens, 6, 6);
                FullAdderSpec spec{index(tokens[2]), index(tokens[3]), index(tokens[4]), index(tokens[5])};
                if (spec.cin == spec.a || spec.cin == spec.b || spec.cin == spec.ancilla || spec.a == spec.b ||
                    spec.a == spec.ancilla || spec.b == spec.ancilla) {
                    fail("full adder layout lines must be distinct");
                }
                full_adder_ = spec;
            } else {
                fail("unknown layout kind '" + std::string(tokens[1]) + "'");
            }
        } else {
            fail("unknown keyword '" + std::string(kw) + "'");
        }
    }

    std::size_t line_no_ = 0;
    std::vector<LineRole> roles_;
    std::vector<bool> declared_;
    std::vector<bool> labelled_;
    // Collects gates; roles are rebuilt at the end because declarations may follow gates.
    std::optional<Circuit> circuit_;
    std::optional<AdderLayout> adder_;
    std::optional<FullAdderSpec> full_adder_;
};

void check_token(const std::string &value, const char *what, std::size_t line) {
    if (!is_name_token(value)) {
        throw UsageError(
            std::string(what) + " of line " + std::to_string(line) + " ('" + value +
            "') cannot be written as a netlist token");
    }
}

}  // namespace

NetlistDocument parse_netlist(std::string_view text) {
    return Parser().run(text);
}

std::string serialize_netlist(const NetlistDocument &document) {
    const Circuit &circuit = document.circuit;
    std::ostringstream out;
    out << "lines " << circuit.width() << '\n';
    const auto &roles = circuit.roles();
    for (std::size_t k = 0; k < roles.size(); k++) {
        if (roles[k].is_ancilla()) {
            out << "ancilla " << k << '\n';
        } else if (!roles[k].name.empty()) {
            check_token(roles[k].name, "input name", k);
            out << "input " << k << ' ' << roles[k].name << '\n';
        }
    }
    for (std::size_t k = 0; k < roles.size(); k++) {
        if (roles[k].output_label) {
            check_token(*roles[k].output_label, "output label", k);
            out << "output " << k << ' ' << *roles[k].output_label << '\n';
        }
    }
    if (document.adder) {
        out << "layout adder " << document.adder->n_bits << '\n';
    }
    if (document.full_adder) {
        const auto &s = *document.full_adder;
        out << "layout fulladder " << s.cin.index << ' ' << s.a.index << ' ' << s.b.index << ' ' << s.ancilla.index
            << '\n';
    }
    for (const auto &gate : circuit.gates()) {
        out << to_string(gate) << '\n';
    }
    return out.str();
}

std::string serialize_netlist(const Circuit &circuit) {
    return serialize_netlist(NetlistDocument{circuit, std::nullopt, std::nullopt});
}

}  // namespace ppkn
