#pragma once

#include <string_view>
#include <vector>

#include "qmetrics/core.hpp"
#include "qmetrics/qasm_lexer.hpp"

namespace qmetrics::qasm {

/// Parses a lexed OpenQASM 2.0 token stream into the dialect-independent
/// program model. `source` is the original text, used only for line
/// counting. Grammar: docs/grammars.md.
///
/// Throws ParseError, DuplicateRegisterError, UnknownGateError.
QProgram parse_qasm(const std::vector<Token>& tokens, std::string_view source);

/// Convenience: lex + parse.
QProgram parse_qasm_source(std::string_view source);

}  // namespace qmetrics::qasm
