#pragma once

#include <string_view>

#include "qmetrics/core.hpp"

namespace qmetrics::qiskit {

/// Parses the restricted Qiskit-Python dialect into the program model.
/// Supported statement forms: `name = expr`, expression statements,
/// `for name in range(INT):`, `if expr:`, `def name(params):`, `print(expr)`.
/// Grammar: docs/grammars.md.
///
/// Throws UnsupportedSyntaxError for constructs outside the dialect and
/// IndentationError for inconsistent block structure.
QProgram parse_qiskit_dialect(std::string_view source,
                              const GateSet& gates = GateSet::qiskit_default());

}  // namespace qmetrics::qiskit
