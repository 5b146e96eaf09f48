#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ppkn/adders.h"
#include "ppkn/circuit.h"

namespace ppkn {

/// A parsed netlist: the circuit plus whichever adder layout it declares.
///
/// Text format, one statement per line, '#' to end of line is a comment:
///
///     lines <w>                        width; must come first
///     input <idx> <name>               named input line
///     ancilla <idx> [0]                constant-0 helper line
///     output <idx> <label>             output label
///     not <t> | cnot <c> <t> | toffoli <c1> <c2> <t>
///     layout adder <n>                 canonical n-bit ripple-carry layout
///     layout fulladder <cin> <a> <b> <ancilla>
///
/// Lines without a role declaration are anonymous inputs.
struct NetlistDocument {
    Circuit circuit;
    std::optional<AdderLayout> adder;
    std::optional<FullAdderSpec> full_adder;

    bool operator==(const NetlistDocument &) const = default;
};

/// Throws ParseError carrying the 1-based line of the offending statement.
NetlistDocument parse_netlist(std::string_view text);

/// Canonical text: header, role declarations by ascending line, output labels,
/// layout, then gates in program order. Byte-identical for equal inputs.
std::string serialize_netlist(const NetlistDocument &document);
std::string serialize_netlist(const Circuit &circuit);

}  // namespace ppkn
