#include "ppkn/qasm.h"

#include <sstream>

namespace ppkn {

std::string export_qasm(const Circuit &circuit) {
    std::ostringstream out;
    out << "OPENQASM 3.0;\n";
    out << "include \"stdgates.inc\";\n";
    out << "qubit[" << circuit.width() << "] q;\n";
    for (const auto &gate : circuit.gates()) {
        switch (gate.kind()) {
            case GateKind::Not:
                out << "x";
                break;
            case GateKind::Cnot:
                out << "cx";
                break;
            case GateKind::Toffoli:
                out << "ccx";
                break;
        }
        const char *sep = " ";
        for (auto c : gate.controls()) {
            out << sep << "q[" << c.index << "]";
            sep = ", ";
        }
        out << sep << "q[" << gate.target().index << "];\n";
    }
    return out.str();
}

}  // namespace ppkn
