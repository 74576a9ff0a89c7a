#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qmetrics/source_text.hpp"

namespace qmetrics::qasm {

enum class TokenKind { keyword, identifier, integer, real, symbol, arrow, string };

std::string_view to_string(TokenKind k);

struct Token {
    TokenKind kind = TokenKind::identifier;
    std::string text;
    SourceSpan span;

    bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
    bool is_symbol(std::string_view t) const { return is(TokenKind::symbol, t); }
    bool is_keyword(std::string_view t) const { return is(TokenKind::keyword, t); }

    friend bool operator==(const Token&, const Token&) = default;
};

/// Full token stream for an OpenQASM 2.0 source. `//` comments and
/// whitespace are consumed. Throws LexError on characters outside the
/// grammar.
std::vector<Token> lex_qasm(std::string_view source);

}  // namespace qmetrics::qasm
