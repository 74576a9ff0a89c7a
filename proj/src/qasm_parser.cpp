#include "qmetrics/qasm_parser.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "qmetrics/errors.hpp"

namespace qmetrics::qasm {

namespace {

// argument = ID ('[' INT ']')?
struct Argument {
    std::string base;
    SourceSpan span;
};

class Parser {
public:
    Parser(const std::vector<Token>& tokens, std::string_view source)
        : tokens_(tokens), source_(source) {}

    QProgram run() {
        prog_.source_dialect = Dialect::openqasm2;
        prog_.source_lines_total = count_source_lines(source_, "//");
        prog_.modules.push_back({"main", {}, 0});
        // The standard-library gates are always appliable; `include` is
        // recognized syntactically but never read (the analyzer is hermetic).
        builtins_ = {"u", "cx"};
        for (const auto& g : GateSet::qelib1().names()) builtins_.insert(g);

        while (!at_end()) parse_top_level();

        finalize_lengths();
        return std::move(prog_);
    }

private:
    bool at_end() const { return pos_ >= tokens_.size(); }

    const Token& peek(std::size_t ahead = 0) const {
        static const Token eof{TokenKind::symbol, "", {0, 0}};
        return pos_ + ahead < tokens_.size() ? tokens_[pos_ + ahead] : eof;
    }

    const Token& advance() {
        if (at_end()) throw ParseError(last_span(), "more input", "end of input");
        return tokens_[pos_++];
    }

    SourceSpan last_span() const {
        return tokens_.empty() ? SourceSpan{1, 0} : tokens_.back().span;
    }

    static std::string describe(const Token& t) { return "'" + t.text + "'"; }

    std::string describe_here() const {
        return at_end() ? "end of input" : describe(peek());
    }

    const Token& expect_symbol(std::string_view text) {
        if (at_end() || !peek().is_symbol(text))
            throw ParseError(at_end() ? last_span() : peek().span, "'" + std::string(text) + "'",
                             describe_here());
        return tokens_[pos_++];
    }

    const Token& expect(TokenKind kind, std::string_view what) {
        if (at_end() || peek().kind != kind)
            throw ParseError(at_end() ? last_span() : peek().span, what, describe_here());
        return tokens_[pos_++];
    }

    void push_op(std::string text) {
        prog_.halstead_tokens.push_back({HalsteadRole::op, std::move(text)});
    }
    void push_operand(std::string text) {
        prog_.halstead_tokens.push_back({HalsteadRole::operand, std::move(text)});
    }

    int emit(QStatement stmt, int module_index) {
        sort_unique(stmt.registers_read);
        sort_unique(stmt.registers_written);
        int index = static_cast<int>(prog_.statements.size());
        prog_.statements.push_back(std::move(stmt));
        prog_.modules[module_index].statement_indices.push_back(index);
        return index;
    }

    // ---- grammar ----

    void parse_top_level() {
        const Token& t = peek();
        if (t.is_keyword("OPENQASM")) {
            parse_version_header();
        } else if (t.is_keyword("include")) {
            parse_include();
        } else if (t.is_keyword("qreg") || t.is_keyword("creg")) {
            parse_register_decl();
        } else if (t.is_keyword("gate")) {
            parse_gate_decl();
        } else if (t.is_keyword("opaque")) {
            parse_opaque_decl();
        } else {
            parse_qop(/*module_index=*/0, /*in_gate_body=*/false);
        }
    }

    void parse_version_header() {
        push_op(advance().text);  // OPENQASM
        if (peek().kind != TokenKind::real && peek().kind != TokenKind::integer)
            throw ParseError(peek().span, "version number", describe_here());
        push_operand(advance().text);
        expect_symbol(";");
    }

    void parse_include() {
        push_op(advance().text);
        const Token& file = expect(TokenKind::string, "include file name");
        push_operand(file.text);
        expect_symbol(";");
    }

    void parse_register_decl() {
        const Token& kw = advance();
        const Token& name = expect(TokenKind::identifier, "register name");
        expect_symbol("[");
        const Token& width = expect(TokenKind::integer, "register width");
        expect_symbol("]");
        expect_symbol(";");

        if (std::any_of(prog_.registers.begin(), prog_.registers.end(),
                        [&](const RegisterDecl& r) { return r.name == name.text; }))
            throw DuplicateRegisterError(name.span, name.text);
        int w = std::stoi(width.text);
        if (w < 1) throw ParseError(width.span, "register width >= 1", width.text);

        prog_.registers.push_back(
            {name.text, kw.text == "qreg" ? RegisterKind::quantum : RegisterKind::classical, w});
        push_op(kw.text);
        push_operand(name.text);
        push_operand(width.text);

        emit({kw.span, StatementKind::classical, "", {}, {}, {}, -1}, 0);
    }

    void parse_gate_decl() {
        const Token& kw = advance();
        const Token& name = expect(TokenKind::identifier, "gate name");
        // user gates may shadow the standard library, but not each other
        if (user_gates_.count(to_lower(name.text)) > 0)
            throw ParseError(name.span, "new gate name", "'" + name.text + "' (already defined)");
        push_op(kw.text);
        push_operand(name.text);

        if (peek().is_symbol("(")) {
            advance();
            parse_id_list(/*allow_empty=*/true);
            expect_symbol(")");
        }
        parse_id_list(/*allow_empty=*/false);
        expect_symbol("{");

        int module_index = static_cast<int>(prog_.modules.size());
        prog_.modules.push_back({name.text, {}, 0});
        while (!at_end() && !peek().is_symbol("}")) parse_qop(module_index, /*in_gate_body=*/true);
        expect_symbol("}");

        user_gates_.emplace(to_lower(name.text), name.text);
    }

    void parse_opaque_decl() {
        const Token& kw = advance();
        const Token& name = expect(TokenKind::identifier, "gate name");
        push_op(kw.text);
        push_operand(name.text);
        if (peek().is_symbol("(")) {
            advance();
            parse_id_list(/*allow_empty=*/true);
            expect_symbol(")");
        }
        parse_id_list(/*allow_empty=*/false);
        expect_symbol(";");
        builtins_.insert(to_lower(name.text));
        emit({kw.span, StatementKind::classical, "", {}, {}, {}, -1}, 0);
    }

    void parse_id_list(bool allow_empty) {
        if (allow_empty && peek().is_symbol(")")) return;
        push_operand(expect(TokenKind::identifier, "identifier").text);
        while (peek().is_symbol(",")) {
            advance();
            push_operand(expect(TokenKind::identifier, "identifier").text);
        }
    }

    // qop = gate application | measure | reset | barrier | if. Gate bodies
    // only allow applications and barrier.
    void parse_qop(int module_index, bool in_gate_body) {
        const Token& t = peek();
        if (t.is_keyword("measure")) {
            if (in_gate_body)
                throw ParseError(t.span, "gate operation", describe(t));
            parse_measure(module_index);
        } else if (t.is_keyword("reset")) {
            if (in_gate_body)
                throw ParseError(t.span, "gate operation", describe(t));
            parse_reset(module_index);
        } else if (t.is_keyword("barrier")) {
            parse_barrier(module_index);
        } else if (t.is_keyword("if")) {
            if (in_gate_body)
                throw ParseError(t.span, "gate operation", describe(t));
            parse_branch(module_index);
        } else if (t.kind == TokenKind::identifier || t.is_keyword("U") || t.is_keyword("CX")) {
            parse_gate_application(module_index);
        } else {
            throw ParseError(t.span, "statement", describe_here());
        }
    }

    void parse_measure(int module_index) {
        const Token& kw = advance();
        push_op(kw.text);
        Argument src = parse_argument();
        if (at_end() || peek().kind != TokenKind::arrow)
            throw ParseError(at_end() ? last_span() : peek().span, "'->'", describe_here());
        push_op(advance().text);
        Argument dst = parse_argument();
        expect_symbol(";");

        emit({kw.span, StatementKind::measurement, "", {src.base}, {dst.base}, {}, -1},
             module_index);
    }

    void parse_reset(int module_index) {
        const Token& kw = advance();
        push_op(kw.text);
        parse_argument();
        expect_symbol(";");
        emit({kw.span, StatementKind::classical, "", {}, {}, {}, -1}, module_index);
    }

    void parse_barrier(int module_index) {
        const Token& kw = advance();
        push_op(kw.text);
        parse_argument();
        while (peek().is_symbol(",")) {
            advance();
            parse_argument();
        }
        expect_symbol(";");
        emit({kw.span, StatementKind::classical, "", {}, {}, {}, -1}, module_index);
    }

    void parse_branch(int module_index) {
        const Token& kw = advance();
        push_op(kw.text);
        expect_symbol("(");
        const Token& reg = expect(TokenKind::identifier, "classical register");
        push_operand(reg.text);
        expect_symbol("==");
        push_op("==");
        const Token& value = expect(TokenKind::integer, "integer");
        push_operand(value.text);
        expect_symbol(")");

        int header =
            emit({kw.span, StatementKind::branch_header, "", {reg.text}, {}, {}, -1}, module_index);

        const Token& guarded = peek();
        if (!(guarded.kind == TokenKind::identifier || guarded.is_keyword("U") ||
              guarded.is_keyword("CX") || guarded.is_keyword("measure") ||
              guarded.is_keyword("reset")))
            throw ParseError(guarded.span, "quantum operation", describe_here());
        parse_qop(module_index, /*in_gate_body=*/false);
        prog_.statements[header].body_end = static_cast<int>(prog_.statements.size()) - 1;
    }

    void parse_gate_application(int module_index) {
        const Token& name = advance();
        std::string gate = to_lower(name.text);
        if (!is_appliable(gate))
            throw UnknownGateError(name.span, name.text);
        push_op(name.text);

        if (peek().is_symbol("(")) {
            advance();
            if (!peek().is_symbol(")")) {
                parse_param_expr();
                while (peek().is_symbol(",")) {
                    advance();
                    parse_param_expr();
                }
            }
            expect_symbol(")");
        }

        std::vector<Argument> args;
        args.push_back(parse_argument());
        while (peek().is_symbol(",")) {
            advance();
            args.push_back(parse_argument());
        }
        expect_symbol(";");

        QStatement stmt{name.span, StatementKind::gate_application, gate, {}, {}, {}, -1};
        for (const auto& a : args) stmt.registers_written.push_back(a.base);
        int controls = std::min<int>(GateSet::qelib1().control_count(gate),
                                     static_cast<int>(args.size()) - 1);
        for (int i = 0; i < controls; ++i) stmt.registers_read.push_back(args[i].base);
        if (auto it = user_gates_.find(gate); it != user_gates_.end())
            stmt.callees.push_back(it->second);  // the module's declared name
        emit(std::move(stmt), module_index);
    }

    Argument parse_argument() {
        const Token& base = expect(TokenKind::identifier, "register or parameter name");
        push_operand(base.text);
        if (peek().is_symbol("[")) {
            advance();
            const Token& index = expect(TokenKind::integer, "index");
            push_operand(index.text);
            expect_symbol("]");
        }
        return {base.text, base.span};
    }

    // Gate parameters are recorded for the token census but never evaluated.
    // expr = term (('+'|'-') term)*
    void parse_param_expr() {
        parse_param_term();
        while (peek().is_symbol("+") || peek().is_symbol("-")) {
            push_op(advance().text);
            parse_param_term();
        }
    }

    void parse_param_term() {
        parse_param_factor();
        while (peek().is_symbol("*") || peek().is_symbol("/") || peek().is_symbol("^")) {
            push_op(advance().text);
            parse_param_factor();
        }
    }

    void parse_param_factor() {
        const Token& t = peek();
        if (t.is_symbol("-")) {  // unary minus
            push_op(advance().text);
            parse_param_factor();
            return;
        }
        if (t.is_symbol("(")) {
            advance();
            parse_param_expr();
            expect_symbol(")");
            return;
        }
        if (t.kind == TokenKind::integer || t.kind == TokenKind::real || t.is_keyword("pi")) {
            push_operand(advance().text);
            return;
        }
        if (t.kind == TokenKind::identifier) {
            if (peek(1).is_symbol("(")) {  // unary function call, e.g. sin(x)
                push_op(advance().text);
                advance();
                parse_param_expr();
                expect_symbol(")");
                return;
            }
            push_operand(advance().text);
            return;
        }
        throw ParseError(t.span, "parameter expression", describe_here());
    }

    bool is_appliable(const std::string& lower_name) const {
        return builtins_.count(lower_name) > 0 || user_gates_.count(lower_name) > 0;
    }

    void finalize_lengths() {
        for (auto& m : prog_.modules) {
            std::set<int> lines;
            for (int idx : m.statement_indices) lines.insert(prog_.statements[idx].span.line);
            m.length_loc = static_cast<int>(lines.size());
        }
    }

    const std::vector<Token>& tokens_;
    std::string_view source_;
    std::size_t pos_ = 0;
    QProgram prog_;
    std::set<std::string> builtins_;  // appliable non-module gates, lower case
    std::map<std::string, std::string> user_gates_;  // lower name -> declared module name
};

}  // namespace

QProgram parse_qasm(const std::vector<Token>& tokens, std::string_view source) {
    return Parser(tokens, source).run();
}

QProgram parse_qasm_source(std::string_view source) {
    return parse_qasm(lex_qasm(source), source);
}

}  // namespace qmetrics::qasm
