#include "qmetrics/qasm_lexer.hpp"

#include <array>
#include <cctype>

#include "qmetrics/errors.hpp"

namespace qmetrics::qasm {

std::string_view to_string(TokenKind k) {
    switch (k) {
        case TokenKind::keyword: return "keyword";
        case TokenKind::identifier: return "identifier";
        case TokenKind::integer: return "integer";
        case TokenKind::real: return "real";
        case TokenKind::symbol: return "symbol";
        case TokenKind::arrow: return "arrow";
        case TokenKind::string: return "string";
    }
    return "?";
}

namespace {

constexpr std::array<std::string_view, 13> kKeywords = {
    "OPENQASM", "include", "qreg", "creg",    "gate", "opaque", "measure",
    "reset",    "barrier", "if",   "pi",      "U",    "CX",
};

bool is_keyword(std::string_view word) {
    for (auto k : kKeywords) {
        if (k == word) return true;
    }
    return false;
}

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Scanner {
public:
    explicit Scanner(std::string_view source) : src_(source) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (!at_end()) {
            char c = peek();
            if (c == '\n') {
                advance();
                ++line_;
                column_ = 0;
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r') {
                advance();
                continue;
            }
            if (c == '/' && peek(1) == '/') {
                while (!at_end() && peek() != '\n') advance();
                continue;
            }
            tokens.push_back(scan_token());
        }
        return tokens;
    }

private:
    bool at_end() const { return pos_ >= src_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }
    char advance() {
        ++column_;
        return src_[pos_++];
    }
    SourceSpan here() const { return {line_, column_}; }

    Token scan_token() {
        SourceSpan span = here();
        char c = peek();

        if (is_ident_start(c)) {
            std::string word;
            while (!at_end() && is_ident_char(peek())) word += advance();
            return {is_keyword(word) ? TokenKind::keyword : TokenKind::identifier,
                    std::move(word), span};
        }

        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
            std::string num;
            bool real = false;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) num += advance();
            if (peek() == '.') {
                real = true;
                num += advance();
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
                    num += advance();
            }
            if (peek() == 'e' || peek() == 'E') {
                real = true;
                num += advance();
                if (peek() == '+' || peek() == '-') num += advance();
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
                    num += advance();
            }
            return {real ? TokenKind::real : TokenKind::integer, std::move(num), span};
        }

        if (c == '"') {
            advance();
            std::string text;
            while (!at_end() && peek() != '"' && peek() != '\n') text += advance();
            if (peek() != '"') throw LexError(here(), at_end() ? '\0' : '\n');
            advance();
            return {TokenKind::string, std::move(text), span};
        }

        if (c == '-' && peek(1) == '>') {
            advance();
            advance();
            return {TokenKind::arrow, "->", span};
        }

        if (c == '=' && peek(1) == '=') {
            advance();
            advance();
            return {TokenKind::symbol, "==", span};
        }

        constexpr std::string_view singles = "{}()[];,+-*/^";
        if (singles.find(c) != std::string_view::npos) {
            advance();
            return {TokenKind::symbol, std::string(1, c), span};
        }

        throw LexError(span, c);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 0;
};

}  // namespace

std::vector<Token> lex_qasm(std::string_view source) { return Scanner(source).run(); }

}  // namespace qmetrics::qasm
