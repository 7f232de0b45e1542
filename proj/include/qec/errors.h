#pragma once

#include <stdexcept>
#include <string>

namespace qec {

/// Operands disagree on qubit count / column count, or an index is out of range.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Caller supplied an argument outside an operation's domain (bad name, bad partition, ...).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input (Pauli rows, code files, circuits, scripts).
struct ParseError : UsageError {
    using UsageError::UsageError;
};

/// The input does not have the algebraic structure an operation needs.
struct StructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Generator rows are linearly dependent over GF(2).
struct IndependenceError : StructureError {
    using StructureError::StructureError;
};

/// A size guard was exceeded (state-vector qubits, search enumeration size).
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qec
