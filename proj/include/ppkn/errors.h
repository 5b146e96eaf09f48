#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ppkn {

/// A circuit, gate, or state violates a structural invariant (bad index, width mismatch, ...).
struct StructuralError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Caller supplied an argument outside the operation's domain.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds a configured size limit (exhaustive enumeration caps).
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Netlist text could not be parsed. `line()` is the 1-based source line.
class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line), detail_(message) {
    }

    std::size_t line() const {
        return line_;
    }
    const std::string &detail() const {
        return detail_;
    }

   private:
    std::size_t line_;
    std::string detail_;
};

}  // namespace ppkn
