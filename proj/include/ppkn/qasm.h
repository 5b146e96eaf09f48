#pragma once

#include <string>

#include "ppkn/circuit.h"

namespace ppkn {

/// OpenQASM 3 text with a single register `q` of the circuit's width.
/// NOT, CNOT and Toffoli map to x, cx and ccx, in program order.
std::string export_qasm(const Circuit &circuit);

}  // namespace ppkn
