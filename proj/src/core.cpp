#include "qmetrics/core.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace qmetrics {

std::string_view to_string(Dialect d) {
    switch (d) {
        case Dialect::openqasm2: return "openqasm2";
        case Dialect::qiskit_dialect: return "qiskit_dialect";
    }
    return "?";
}

std::string_view to_string(StatementKind k) {
    switch (k) {
        case StatementKind::classical: return "classical";
        case StatementKind::gate_application: return "gate_application";
        case StatementKind::measurement: return "measurement";
        case StatementKind::loop_header: return "loop_header";
        case StatementKind::branch_header: return "branch_header";
    }
    return "?";
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

void sort_unique(std::vector<std::string>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::optional<std::string_view> QStatement::callee() const {
    if (callees.empty()) return std::nullopt;
    return std::string_view(callees.front());
}

const QModule* QProgram::find_module(std::string_view name) const {
    for (const auto& m : modules) {
        if (m.name == name) return &m;
    }
    return nullptr;
}

std::optional<std::string> QProgram::check_invariants() const {
    if (modules.empty() || modules.front().name != "main")
        return "modules[0] must be the synthetic main module";

    std::vector<int> owner(statements.size(), -1);
    for (std::size_t m = 0; m < modules.size(); ++m) {
        int prev = -1;
        for (int idx : modules[m].statement_indices) {
            if (idx < 0 || idx >= static_cast<int>(statements.size()))
                return "module '" + modules[m].name + "' references statement out of range";
            if (idx <= prev) return "module '" + modules[m].name + "' indices not ascending";
            if (owner[idx] != -1) return "statement owned by two modules";
            owner[idx] = static_cast<int>(m);
            prev = idx;
        }
    }
    for (std::size_t i = 0; i < owner.size(); ++i) {
        if (owner[i] == -1) {
            std::ostringstream msg;
            msg << "statement " << i << " belongs to no module";
            return msg.str();
        }
    }

    for (std::size_t i = 1; i < statements.size(); ++i) {
        if (statements[i].span <= statements[i - 1].span)
            return "statements not ordered by (line, column)";
    }

    for (const auto& s : statements) {
        bool is_gate = s.kind == StatementKind::gate_application;
        if (is_gate != !s.gate_name.empty())
            return "gate_name must be set exactly for gate applications";
        bool is_header =
            s.kind == StatementKind::loop_header || s.kind == StatementKind::branch_header;
        if (is_header && s.body_end < 0) return "header statement lacks a body range";
    }
    return std::nullopt;
}

GateSet::GateSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (auto& n : names_) n = to_lower(n);
    sort_unique(names_);
}

const GateSet& GateSet::qiskit_default() {
    static const GateSet set{std::vector<std::string>{
        "x",  "y",  "z",  "h",   "s",   "t",   "sdg", "tdg", "rx",
        "ry", "rz", "p",  "u",   "u1",  "u2",  "u3",  "cx",  "cy",
        "cz", "cp", "crx", "cry", "crz", "ch",  "ccx", "swap", "cswap"}};
    return set;
}

const GateSet& GateSet::qelib1() {
    static const GateSet set{std::vector<std::string>{
        "u3",   "u2",   "u1",  "cx",  "id",   "u0",   "u",    "p",    "x",
        "y",    "z",    "h",   "s",   "sdg",  "t",    "tdg",  "rx",   "ry",
        "rz",   "sx",   "sxdg", "cz",  "cy",   "swap", "ch",   "ccx",  "cswap",
        "crx",  "cry",  "crz", "cu1", "cp",   "cu3",  "csx",  "cu",   "rxx",
        "rzz",  "rccx", "rc3x", "c3x", "c3sqrtx", "c4x"}};
    return set;
}

bool GateSet::contains(std::string_view name) const {
    return std::binary_search(names_.begin(), names_.end(), name,
                              [](std::string_view a, std::string_view b) { return a < b; });
}

int GateSet::control_count(std::string_view name) const {
    if (!contains(name)) return 0;
    int c = 0;
    for (char ch : name) {
        if (ch != 'c' || c == 2) break;
        ++c;
    }
    // A bare run of c's that is the whole name ("cc") is not a control prefix.
    if (c == static_cast<int>(name.size())) return 0;
    return c;
}

bool is_measurement_name(std::string_view name, Dialect dialect) {
    if (dialect == Dialect::openqasm2) return name == "measure";
    return name == "measure" || name == "measure_all";
}

StatementKind classify_statement(Dialect dialect, std::string_view callable,
                                 bool circuit_receiver, const GateSet& gates) {
    std::string name = to_lower(callable);
    if (dialect == Dialect::openqasm2) {
        if (is_measurement_name(name, dialect)) return StatementKind::measurement;
        return StatementKind::gate_application;
    }
    if (!circuit_receiver) return StatementKind::classical;
    if (is_measurement_name(name, dialect)) return StatementKind::measurement;
    if (gates.contains(name)) return StatementKind::gate_application;
    return StatementKind::classical;
}

}  // namespace qmetrics
