#include "qmetrics/qiskit_parser.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "qmetrics/errors.hpp"

namespace qmetrics::qiskit {

namespace {

// ---------------------------------------------------------------------------
// Line tokens
// ---------------------------------------------------------------------------

enum class TokKind { ident, integer, real, string, symbol };

struct Tok {
    TokKind kind = TokKind::ident;
    std::string text;
    int column = 0;
};

const std::set<std::string>& rejected_keywords() {
    static const std::set<std::string> kw = {
        "while",  "class",  "import", "from",   "return", "elif",   "else",
        "try",    "except", "finally", "with",  "lambda", "yield",  "pass",
        "break",  "continue", "global", "nonlocal", "assert", "del", "raise",
        "async",  "await",  "match",  "is",     "not",    "and",    "or",
    };
    return kw;
}

// Strips a trailing '#' comment, respecting string quotes.
std::string_view strip_comment(std::string_view line) {
    char quote = '\0';
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quote != '\0') {
            if (c == quote) quote = '\0';
        } else if (c == '\'' || c == '"') {
            quote = c;
        } else if (c == '#') {
            return line.substr(0, i);
        }
    }
    return line;
}

std::string_view rstrip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<Tok> tokenize_line(std::string_view line, int line_no, int start) {
    std::vector<Tok> out;
    std::size_t i = start;
    while (i < line.size()) {
        char c = line[i];
        int col = static_cast<int>(i);
        if (c == ' ') {
            ++i;
            continue;
        }
        if (c == '\t')
            throw UnsupportedSyntaxError({line_no, col}, "tab character");
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
                ++j;
            out.push_back({TokKind::ident, std::string(line.substr(i, j - i)), col});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            bool real = false;
            while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
            if (j < line.size() && line[j] == '.') {
                real = true;
                ++j;
                while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
            }
            out.push_back({real ? TokKind::real : TokKind::integer,
                           std::string(line.substr(i, j - i)), col});
            i = j;
            continue;
        }
        if (c == '\'' || c == '"') {
            std::size_t j = i + 1;
            while (j < line.size() && line[j] != c) ++j;
            if (j == line.size())
                throw UnsupportedSyntaxError({line_no, col}, "unterminated string literal");
            out.push_back({TokKind::string, std::string(line.substr(i + 1, j - i - 1)), col});
            i = j + 1;
            continue;
        }
        if (c == '=' && i + 1 < line.size() && line[i + 1] == '=') {
            out.push_back({TokKind::symbol, "==", col});
            i += 2;
            continue;
        }
        constexpr std::string_view singles = "=+-*/()[],:.";
        if (singles.find(c) != std::string_view::npos) {
            out.push_back({TokKind::symbol, std::string(1, c), col});
            ++i;
            continue;
        }
        throw UnsupportedSyntaxError({line_no, col}, std::string("character '") + c + "'");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

struct Expr {
    enum class Kind { name, integer, real, string, binop, call, attribute, subscript };

    Kind kind = Kind::name;
    std::string text;  // name / literal text / operator symbol / attribute name
    std::vector<std::unique_ptr<Expr>> children;
    int column = 0;

    bool is_name(std::string_view n) const { return kind == Kind::name && text == n; }
};

using ExprPtr = std::unique_ptr<Expr>;

ExprPtr make_expr(Expr::Kind kind, std::string text, int column) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->text = std::move(text);
    e->column = column;
    return e;
}

struct LineStmt {
    enum class Form { assignment, expression, print_call, for_range, if_block, funcdef };

    Form form = Form::expression;
    int line = 1;
    int indent = 0;
    std::string name;                 // assignment target / loop variable / def name
    std::vector<std::string> params;  // def formals
    ExprPtr value;                    // rhs / expression / condition
    std::string range_bound;          // for_range literal
};

class LineParser {
public:
    LineParser(std::vector<Tok> toks, int line) : toks_(std::move(toks)), line_(line) {}

    LineStmt parse(int indent) {
        LineStmt stmt;
        stmt.line = line_;
        stmt.indent = indent;

        const Tok& first = peek();
        if (first.kind == TokKind::ident && rejected_keywords().count(first.text))
            throw UnsupportedSyntaxError(span(first), "'" + first.text + "' statement");

        if (first.kind == TokKind::ident && first.text == "def") {
            parse_def(stmt);
        } else if (first.kind == TokKind::ident && first.text == "for") {
            parse_for(stmt);
        } else if (first.kind == TokKind::ident && first.text == "if") {
            parse_if(stmt);
        } else {
            ExprPtr expr = parse_expression();
            if (!at_end() && peek().text == "=" && peek().kind == TokKind::symbol) {
                if (expr->kind != Expr::Kind::name)
                    throw UnsupportedSyntaxError(span(peek()), "assignment target");
                advance();
                stmt.form = LineStmt::Form::assignment;
                stmt.name = expr->text;
                stmt.value = parse_expression();
            } else {
                stmt.form = LineStmt::Form::expression;
                if (expr->kind == Expr::Kind::call && !expr->children.empty() &&
                    expr->children[0]->is_name("print"))
                    stmt.form = LineStmt::Form::print_call;
                stmt.value = std::move(expr);
            }
            expect_end();
        }
        return stmt;
    }

private:
    SourceSpan span(const Tok& t) const { return {line_, t.column}; }

    bool at_end() const { return pos_ >= toks_.size(); }

    const Tok& peek(std::size_t ahead = 0) const {
        static const Tok eol{TokKind::symbol, "", 0};
        return pos_ + ahead < toks_.size() ? toks_[pos_ + ahead] : eol;
    }

    const Tok& advance() {
        if (at_end())
            throw UnsupportedSyntaxError({line_, last_column()}, "unexpected end of line");
        return toks_[pos_++];
    }

    int last_column() const { return toks_.empty() ? 0 : toks_.back().column; }

    bool check_symbol(std::string_view text) const {
        return !at_end() && peek().kind == TokKind::symbol && peek().text == text;
    }

    void expect_symbol(std::string_view text, std::string_view what) {
        if (!check_symbol(text))
            throw UnsupportedSyntaxError({line_, at_end() ? last_column() : peek().column},
                                         std::string(what));
        ++pos_;
    }

    std::string expect_name(std::string_view what) {
        if (at_end() || peek().kind != TokKind::ident)
            throw UnsupportedSyntaxError({line_, at_end() ? last_column() : peek().column},
                                         std::string(what));
        return advance().text;
    }

    void expect_end() {
        if (!at_end())
            throw UnsupportedSyntaxError(span(peek()), "trailing '" + peek().text + "'");
    }

    void parse_def(LineStmt& stmt) {
        advance();  // def
        stmt.form = LineStmt::Form::funcdef;
        stmt.name = expect_name("function name");
        expect_symbol("(", "'(' after function name");
        if (!check_symbol(")")) {
            stmt.params.push_back(expect_name("parameter name"));
            while (check_symbol(",")) {
                ++pos_;
                stmt.params.push_back(expect_name("parameter name"));
            }
        }
        expect_symbol(")", "')' closing parameter list");
        expect_symbol(":", "':' ending def header");
        expect_end();
    }

    // Exactly: for NAME in range ( INT ) :
    void parse_for(LineStmt& stmt) {
        advance();  // for
        stmt.form = LineStmt::Form::for_range;
        stmt.name = expect_name("loop variable");
        if (expect_name("'in'") != "in")
            throw UnsupportedSyntaxError({line_, toks_[pos_ - 1].column}, "'in'");
        if (expect_name("'range'") != "range")
            throw UnsupportedSyntaxError({line_, toks_[pos_ - 1].column},
                                         "loop must iterate over range(INT)");
        expect_symbol("(", "'(' after range");
        if (at_end() || peek().kind != TokKind::integer)
            throw UnsupportedSyntaxError({line_, at_end() ? last_column() : peek().column},
                                         "integer range bound");
        stmt.range_bound = advance().text;
        expect_symbol(")", "')' closing range");
        expect_symbol(":", "':' ending for header");
        expect_end();
    }

    void parse_if(LineStmt& stmt) {
        advance();  // if
        stmt.form = LineStmt::Form::if_block;
        stmt.value = parse_expression();
        expect_symbol(":", "':' ending if header");
        expect_end();
    }

    // expression := additive ('==' additive)?
    ExprPtr parse_expression() {
        ExprPtr lhs = parse_additive();
        if (check_symbol("==")) {
            int col = peek().column;
            ++pos_;
            auto cmp = make_expr(Expr::Kind::binop, "==", col);
            cmp->children.push_back(std::move(lhs));
            cmp->children.push_back(parse_additive());
            return cmp;
        }
        return lhs;
    }

    ExprPtr parse_additive() {
        ExprPtr lhs = parse_term();
        while (check_symbol("+") || check_symbol("-")) {
            auto op = make_expr(Expr::Kind::binop, peek().text, peek().column);
            ++pos_;
            op->children.push_back(std::move(lhs));
            op->children.push_back(parse_term());
            lhs = std::move(op);
        }
        return lhs;
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_postfix();
        while (check_symbol("*") || check_symbol("/")) {
            auto op = make_expr(Expr::Kind::binop, peek().text, peek().column);
            ++pos_;
            op->children.push_back(std::move(lhs));
            op->children.push_back(parse_postfix());
            lhs = std::move(op);
        }
        return lhs;
    }

    ExprPtr parse_postfix() {
        ExprPtr e = parse_atom();
        while (!at_end()) {
            if (check_symbol(".")) {
                int col = peek().column;
                ++pos_;
                std::string attr = expect_name("attribute name");
                auto node = make_expr(Expr::Kind::attribute, std::move(attr), col);
                node->children.push_back(std::move(e));
                e = std::move(node);
            } else if (check_symbol("(")) {
                int col = peek().column;
                ++pos_;
                auto call = make_expr(Expr::Kind::call, "", col);
                call->children.push_back(std::move(e));
                if (!check_symbol(")")) {
                    call->children.push_back(parse_expression());
                    while (check_symbol(",")) {
                        ++pos_;
                        call->children.push_back(parse_expression());
                    }
                }
                expect_symbol(")", "')' closing call");
                e = std::move(call);
            } else if (check_symbol("[")) {
                int col = peek().column;
                ++pos_;
                auto sub = make_expr(Expr::Kind::subscript, "", col);
                sub->children.push_back(std::move(e));
                sub->children.push_back(parse_expression());
                expect_symbol("]", "']' closing subscript");
                e = std::move(sub);
            } else {
                break;
            }
        }
        return e;
    }

    ExprPtr parse_atom() {
        if (at_end())
            throw UnsupportedSyntaxError({line_, last_column()}, "expression");
        const Tok& t = peek();
        switch (t.kind) {
            case TokKind::ident:
                if (rejected_keywords().count(t.text))
                    throw UnsupportedSyntaxError(span(t), "'" + t.text + "' expression");
                ++pos_;
                return make_expr(Expr::Kind::name, t.text, t.column);
            case TokKind::integer:
                ++pos_;
                return make_expr(Expr::Kind::integer, t.text, t.column);
            case TokKind::real:
                ++pos_;
                return make_expr(Expr::Kind::real, t.text, t.column);
            case TokKind::string:
                ++pos_;
                return make_expr(Expr::Kind::string, t.text, t.column);
            case TokKind::symbol:
                if (t.text == "(") {
                    ++pos_;
                    ExprPtr inner = parse_expression();
                    expect_symbol(")", "')' closing group");
                    return inner;
                }
                break;
        }
        throw UnsupportedSyntaxError(span(t), "unexpected '" + t.text + "'");
    }

    std::vector<Tok> toks_;
    int line_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Program assembly: block structure, dataflow, classification
// ---------------------------------------------------------------------------

enum class Binding { plain, circuit, reg };

class ProgramBuilder {
public:
    ProgramBuilder(const GateSet& gates) : gates_(gates) {}

    QProgram run(std::string_view source) {
        prog_.source_dialect = Dialect::qiskit_dialect;
        prog_.source_lines_total = count_source_lines(source, "#");
        prog_.modules.push_back({"main", {}, 0});

        std::vector<LineStmt> stmts = parse_lines(source);
        for (const auto& s : stmts) {
            if (s.form == LineStmt::Form::funcdef) def_names_.insert(s.name);
        }
        assemble(stmts);
        finalize_lengths();
        return std::move(prog_);
    }

private:
    std::vector<LineStmt> parse_lines(std::string_view source) {
        std::vector<LineStmt> stmts;
        int line_no = 0;
        for (auto raw : split_lines(source)) {
            ++line_no;
            std::string_view body = rstrip(strip_comment(raw));
            if (!is_counted_line(body, "#")) continue;

            int indent = 0;
            while (indent < static_cast<int>(body.size()) && body[indent] == ' ') ++indent;
            if (indent < static_cast<int>(body.size()) && body[indent] == '\t')
                throw IndentationError({line_no, indent}, "tab in indentation");

            std::vector<Tok> toks = tokenize_line(body, line_no, indent);
            stmts.push_back(LineParser(std::move(toks), line_no).parse(indent));
        }
        return stmts;
    }

    struct Block {
        int indent = 0;       // body indentation level
        int header = -1;      // global index of the loop/if header, -1 for def or top
        int module = 0;
    };

    void assemble(const std::vector<LineStmt>& stmts) {
        std::vector<Block> blocks{{0, -1, 0}};
        bool pending = false;   // a header awaits its first body statement
        int pending_header = -1;
        int pending_module = 0;
        int pending_indent = 0;
        int pending_line = 0;

        for (const auto& s : stmts) {
            if (pending) {
                if (s.indent <= pending_indent)
                    throw IndentationError({s.line, s.indent}, "expected an indented block");
                check_unit(s.indent, s.line);
                blocks.push_back({s.indent, pending_header, pending_module});
                pending = false;
            } else {
                while (s.indent < blocks.back().indent) close_block(blocks);
                if (s.indent != blocks.back().indent)
                    throw IndentationError({s.line, s.indent},
                                           "unindent does not match any outer level");
            }

            const Block& ctx = blocks.back();
            switch (s.form) {
                case LineStmt::Form::funcdef: {
                    if (ctx.module != 0 || s.indent != 0)
                        throw UnsupportedSyntaxError({s.line, s.indent},
                                                     "nested function definition");
                    if (prog_.find_module(s.name) != nullptr)
                        throw UnsupportedSyntaxError({s.line, s.indent},
                                                     "duplicate definition of '" + s.name + "'");
                    push_op("def");
                    push_operand(s.name);
                    for (const auto& p : s.params) push_operand(p);
                    int module_index = static_cast<int>(prog_.modules.size());
                    prog_.modules.push_back({s.name, {}, 0});
                    pending = true;
                    pending_header = -1;
                    pending_module = module_index;
                    pending_indent = s.indent;
                    pending_line = s.line;
                    break;
                }
                case LineStmt::Form::for_range: {
                    push_op("for");
                    push_operand(s.name);
                    push_op("in");
                    push_op("range");
                    push_operand(s.range_bound);
                    int idx = emit(s, StatementKind::loop_header, ctx.module);
                    env_[s.name] = Binding::plain;
                    pending = true;
                    pending_header = idx;
                    pending_module = ctx.module;
                    pending_indent = s.indent;
                    pending_line = s.line;
                    break;
                }
                case LineStmt::Form::if_block: {
                    push_op("if");
                    emit_expr_tokens(*s.value);
                    QStatement stmt = base_statement(s, StatementKind::branch_header);
                    collect_condition_reads(*s.value, stmt.registers_read);
                    int idx = emit_statement(std::move(stmt), ctx.module);
                    pending = true;
                    pending_header = idx;
                    pending_module = ctx.module;
                    pending_indent = s.indent;
                    pending_line = s.line;
                    break;
                }
                case LineStmt::Form::assignment:
                    process_assignment(s, ctx.module);
                    break;
                case LineStmt::Form::expression:
                case LineStmt::Form::print_call:
                    emit_expr_tokens(*s.value);
                    emit_call_statement(s, ctx.module);
                    break;
            }
        }

        if (pending)
            throw IndentationError({pending_line + 1, 0}, "expected an indented block");
        while (blocks.size() > 1) close_block(blocks);
    }

    void close_block(std::vector<Block>& blocks) {
        const Block done = blocks.back();
        blocks.pop_back();
        if (done.header >= 0)
            prog_.statements[done.header].body_end =
                static_cast<int>(prog_.statements.size()) - 1;
    }

    void check_unit(int indent, int line) {
        if (indent == 0) return;
        if (indent_unit_ == 0) indent_unit_ = indent;
        if (indent % indent_unit_ != 0)
            throw IndentationError({line, indent}, "indentation is not a multiple of the unit");
    }

    // ---- statement processing ----

    QStatement base_statement(const LineStmt& s, StatementKind kind) const {
        QStatement stmt;
        stmt.span = {s.line, s.indent};
        stmt.kind = kind;
        return stmt;
    }

    int emit(const LineStmt& s, StatementKind kind, int module_index) {
        return emit_statement(base_statement(s, kind), module_index);
    }

    int emit_statement(QStatement stmt, int module_index) {
        sort_unique(stmt.registers_read);
        sort_unique(stmt.registers_written);
        int index = static_cast<int>(prog_.statements.size());
        prog_.statements.push_back(std::move(stmt));
        prog_.modules[module_index].statement_indices.push_back(index);
        return index;
    }

    void process_assignment(const LineStmt& s, int module_index) {
        push_operand(s.name);
        push_op("=");
        emit_expr_tokens(*s.value);
        apply_binding(s.name, *s.value);
        emit_call_statement(s, module_index);
    }

    // Updates register declarations and circuit-valued names.
    void apply_binding(const std::string& target, const Expr& rhs) {
        if (rhs.kind == Expr::Kind::name) {
            auto it = env_.find(rhs.text);
            env_[target] = it != env_.end() && it->second == Binding::circuit ? Binding::circuit
                                                                              : Binding::plain;
            return;
        }
        if (rhs.kind == Expr::Kind::call && rhs.children[0]->kind == Expr::Kind::name) {
            const std::string& ctor = rhs.children[0]->text;
            if (ctor == "QuantumRegister" || ctor == "ClassicalRegister") {
                const Expr* width = first_integer_argument(rhs);
                if (width != nullptr) {
                    declare_register(target,
                                     ctor == "QuantumRegister" ? RegisterKind::quantum
                                                               : RegisterKind::classical,
                                     std::stoi(width->text));
                    env_[target] = Binding::reg;
                    return;
                }
            } else if (ctor == "QuantumCircuit") {
                std::vector<const Expr*> ints;
                for (std::size_t i = 1; i < rhs.children.size(); ++i) {
                    if (rhs.children[i]->kind == Expr::Kind::integer)
                        ints.push_back(rhs.children[i].get());
                }
                if (!ints.empty()) declare_register("_q", RegisterKind::quantum,
                                                    std::stoi(ints[0]->text));
                if (ints.size() > 1) declare_register("_c", RegisterKind::classical,
                                                      std::stoi(ints[1]->text));
                env_[target] = Binding::circuit;
                return;
            }
        }
        env_[target] = Binding::plain;
    }

    const Expr* first_integer_argument(const Expr& call) const {
        for (std::size_t i = 1; i < call.children.size(); ++i) {
            if (call.children[i]->kind == Expr::Kind::integer) return call.children[i].get();
        }
        return nullptr;
    }

    void declare_register(const std::string& name, RegisterKind kind, int width) {
        if (width < 1) return;
        for (auto& r : prog_.registers) {
            if (r.name == name) {  // re-declaration shadows
                r.kind = kind;
                r.width = width;
                return;
            }
        }
        prog_.registers.push_back({name, kind, width});
    }

    // Classifies an assignment/expression statement by its primary
    // expression and records register references and call sites.
    void emit_call_statement(const LineStmt& s, int module_index) {
        QStatement stmt = base_statement(s, StatementKind::classical);
        collect_callees(*s.value, stmt.callees);

        const Expr& e = *s.value;
        if (e.kind == Expr::Kind::call && e.children[0]->kind == Expr::Kind::attribute) {
            const Expr& callee = *e.children[0];
            const Expr& receiver = *callee.children[0];
            bool circuit_recv = receiver.kind == Expr::Kind::name &&
                                env_.count(receiver.text) > 0 &&
                                env_.at(receiver.text) == Binding::circuit;
            StatementKind kind =
                classify_statement(Dialect::qiskit_dialect, callee.text, circuit_recv, gates_);
            stmt.kind = kind;
            if (kind == StatementKind::gate_application) {
                stmt.gate_name = to_lower(callee.text);
                collect_gate_refs(e, stmt);
            } else if (kind == StatementKind::measurement) {
                collect_measure_refs(e, callee.text, stmt);
            }
        }
        emit_statement(std::move(stmt), module_index);
    }

    // Qubit-like argument: a subscript of a name, or a bare name that is a
    // declared register.
    std::vector<std::string> qubit_like_arguments(const Expr& call) const {
        std::vector<std::string> bases;
        for (std::size_t i = 1; i < call.children.size(); ++i) {
            const Expr& arg = *call.children[i];
            if (arg.kind == Expr::Kind::subscript &&
                arg.children[0]->kind == Expr::Kind::name) {
                bases.push_back(arg.children[0]->text);
            } else if (arg.kind == Expr::Kind::name && is_declared_register(arg.text)) {
                bases.push_back(arg.text);
            }
        }
        return bases;
    }

    void collect_gate_refs(const Expr& call, QStatement& stmt) const {
        std::vector<std::string> bases = qubit_like_arguments(call);
        int controls = gates_.control_count(stmt.gate_name);
        controls = std::min<int>(controls, static_cast<int>(bases.size()) - 1);
        for (int i = 0; i < controls; ++i) stmt.registers_read.push_back(bases[i]);
        for (auto& b : bases) stmt.registers_written.push_back(std::move(b));
    }

    void collect_measure_refs(const Expr& call, std::string_view method, QStatement& stmt) const {
        if (method == "measure_all") {
            for (const auto& r : prog_.registers) {
                (r.kind == RegisterKind::quantum ? stmt.registers_read : stmt.registers_written)
                    .push_back(r.name);
            }
            return;
        }
        std::vector<std::string> bases = qubit_like_arguments(call);
        for (std::size_t i = 0; i < bases.size(); ++i) {
            (i == 0 ? stmt.registers_read : stmt.registers_written)
                .push_back(std::move(bases[i]));
        }
    }

    // Condition operands: subscript bases always, bare names only when they
    // are declared registers.
    void collect_condition_reads(const Expr& e, std::vector<std::string>& reads) const {
        if (e.kind == Expr::Kind::subscript && e.children[0]->kind == Expr::Kind::name) {
            reads.push_back(e.children[0]->text);
            collect_condition_reads(*e.children[1], reads);
            return;
        }
        if (e.kind == Expr::Kind::name && is_declared_register(e.text)) {
            reads.push_back(e.text);
            return;
        }
        for (const auto& child : e.children) collect_condition_reads(*child, reads);
    }

    void collect_callees(const Expr& e, std::vector<std::string>& callees) const {
        if (e.kind == Expr::Kind::call && e.children[0]->kind == Expr::Kind::name &&
            def_names_.count(e.children[0]->text)) {
            callees.push_back(e.children[0]->text);
        }
        for (const auto& child : e.children) collect_callees(*child, callees);
    }

    bool is_declared_register(const std::string& name) const {
        for (const auto& r : prog_.registers) {
            if (r.name == name) return true;
        }
        return false;
    }

    // ---- token census ----

    void push_op(std::string text) {
        prog_.halstead_tokens.push_back({HalsteadRole::op, std::move(text)});
    }
    void push_operand(std::string text) {
        prog_.halstead_tokens.push_back({HalsteadRole::operand, std::move(text)});
    }

    void emit_expr_tokens(const Expr& e) {
        switch (e.kind) {
            case Expr::Kind::name:
            case Expr::Kind::integer:
            case Expr::Kind::real:
            case Expr::Kind::string:
                push_operand(e.text);
                return;
            case Expr::Kind::binop:
                emit_expr_tokens(*e.children[0]);
                push_op(e.text);
                emit_expr_tokens(*e.children[1]);
                return;
            case Expr::Kind::attribute:
                emit_expr_tokens(*e.children[0]);
                push_operand(e.text);
                return;
            case Expr::Kind::subscript:
                emit_expr_tokens(*e.children[0]);
                emit_expr_tokens(*e.children[1]);
                return;
            case Expr::Kind::call: {
                const Expr& callee = *e.children[0];
                if (callee.kind == Expr::Kind::name) {
                    push_op(callee.text);
                } else if (callee.kind == Expr::Kind::attribute) {
                    emit_expr_tokens(*callee.children[0]);
                    push_op(callee.text);
                } else {
                    emit_expr_tokens(callee);
                }
                for (std::size_t i = 1; i < e.children.size(); ++i)
                    emit_expr_tokens(*e.children[i]);
                return;
            }
        }
    }

    void finalize_lengths() {
        for (auto& m : prog_.modules) {
            std::set<int> lines;
            for (int idx : m.statement_indices) lines.insert(prog_.statements[idx].span.line);
            m.length_loc = static_cast<int>(lines.size());
        }
    }

    const GateSet& gates_;
    QProgram prog_;
    std::map<std::string, Binding> env_;
    std::set<std::string> def_names_;
    int indent_unit_ = 0;
};

}  // namespace

QProgram parse_qiskit_dialect(std::string_view source, const GateSet& gates) {
    return ProgramBuilder(gates).run(source);
}

}  // namespace qmetrics::qiskit
