#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmetrics/source_text.hpp"

namespace qmetrics {

enum class Dialect { openqasm2, qiskit_dialect };

std::string_view to_string(Dialect d);

enum class StatementKind {
    classical,
    gate_application,
    measurement,
    loop_header,
    branch_header,
};

std::string_view to_string(StatementKind k);

enum class RegisterKind { quantum, classical };

struct RegisterDecl {
    std::string name;
    RegisterKind kind = RegisterKind::quantum;
    int width = 1;

    friend bool operator==(const RegisterDecl&, const RegisterDecl&) = default;
};

/// Operator/operand census token. Punctuation never reaches this level;
/// the classification rules live with the frontends and are listed in
/// docs/metrics.md.
enum class HalsteadRole { op, operand };

struct HalsteadToken {
    HalsteadRole role = HalsteadRole::operand;
    std::string text;

    friend bool operator==(const HalsteadToken&, const HalsteadToken&) = default;
};

/// One executable statement. Register reference sets hold the names as
/// written in the source (subscript bases, bare register arguments); they
/// are kept sorted and unique.
struct QStatement {
    SourceSpan span;
    StatementKind kind = StatementKind::classical;
    std::string gate_name;                      // set iff kind == gate_application
    std::vector<std::string> registers_read;
    std::vector<std::string> registers_written;
    std::vector<std::string> callees;           // user-module call sites, source order
    int body_end = -1;                          // headers: global index of last body statement

    /// First user-module call site on this statement, if any.
    std::optional<std::string_view> callee() const;

    friend bool operator==(const QStatement&, const QStatement&) = default;
};

/// A user-defined subroutine (OpenQASM `gate` body, dialect `def` body) or
/// the synthetic "main" covering top-level statements. Indices are
/// ascending; main's list may have gaps where other module bodies sit.
struct QModule {
    std::string name;
    std::vector<int> statement_indices;
    int length_loc = 0;  // distinct counted source lines holding these statements

    bool empty() const { return statement_indices.empty(); }

    friend bool operator==(const QModule&, const QModule&) = default;
};

/// Dialect-independent program model produced by both frontends.
struct QProgram {
    Dialect source_dialect = Dialect::openqasm2;
    int source_lines_total = 0;              // counted lines of the whole input
    std::vector<QStatement> statements;      // ordered by (line, column)
    std::vector<RegisterDecl> registers;
    std::vector<QModule> modules;            // modules[0] is the synthetic "main"
    std::vector<HalsteadToken> halstead_tokens;  // declarations + statements, source order

    const QModule& main_module() const { return modules.front(); }
    const QModule* find_module(std::string_view name) const;

    /// Checks the structural invariants (module partition, statement order,
    /// kind/field coupling). Returns a description of the first violation,
    /// or nullopt when consistent. Used by tests.
    std::optional<std::string> check_invariants() const;
};

/// Configured gate vocabulary, lower-case names.
class GateSet {
public:
    GateSet() = default;
    explicit GateSet(std::vector<std::string> names);

    /// Default method-name set for the Qiskit dialect.
    static const GateSet& qiskit_default();
    /// Standard-library gates preloaded by `include "qelib1.inc"`.
    static const GateSet& qelib1();

    bool contains(std::string_view name) const;

    /// Control-qubit count for set members by leading-c prefix:
    /// ccx -> 2, cx/ch/cswap -> 1, anything else (or non-member) -> 0.
    int control_count(std::string_view name) const;

    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;  // sorted, unique
};

bool is_measurement_name(std::string_view name, Dialect dialect);

/// Kind of a call-form statement. Loop/branch headers and declarations are
/// classified syntactically by the frontends; this is the shared kernel for
/// everything call-shaped. Unknown callables are classical.
///
/// openqasm2: `callable` is the applied gate or `measure`; `circuit_receiver`
/// is ignored. qiskit_dialect: gate/measure method calls require a
/// circuit-valued receiver.
StatementKind classify_statement(Dialect dialect, std::string_view callable,
                                 bool circuit_receiver, const GateSet& gates);

std::string to_lower(std::string_view s);
void sort_unique(std::vector<std::string>& v);

}  // namespace qmetrics
