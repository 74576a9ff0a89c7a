#include "qmetrics/code_metrics.hpp"

#include <cmath>
#include <set>

namespace qmetrics {

namespace {

double xlog2(int n) { return n > 0 ? n * std::log2(static_cast<double>(n)) : 0.0; }

}  // namespace

LocMetrics compute_loc_metrics(const QProgram& p) {
    LocMetrics m;
    m.phi1 = p.source_lines_total;

    // A line with both a gate application and a measurement counts once,
    // as a gate line; each counted line feeds at most one of phi2/phi3.
    std::set<int> gate_lines;
    std::set<int> measure_lines;
    std::set<std::string> gate_names;
    for (const auto& s : p.statements) {
        if (s.kind == StatementKind::gate_application) {
            gate_lines.insert(s.span.line);
            gate_names.insert(s.gate_name);
        } else if (s.kind == StatementKind::measurement) {
            measure_lines.insert(s.span.line);
        }
    }
    for (int line : gate_lines) measure_lines.erase(line);

    m.phi2 = static_cast<int>(gate_lines.size());
    m.phi3 = static_cast<int>(measure_lines.size());
    m.phi4 = m.phi2 + m.phi3;
    for (const auto& r : p.registers) {
        if (r.kind == RegisterKind::quantum) m.phi5 += r.width;
    }
    m.phi6 = static_cast<int>(gate_names.size());
    return m;
}

int TokenCensus::total_operators() const {
    int n = 0;
    for (const auto& [text, count] : operators) n += count;
    return n;
}

int TokenCensus::total_operands() const {
    int n = 0;
    for (const auto& [text, count] : operands) n += count;
    return n;
}

TokenCensus tokenize_halstead(const QProgram& p) {
    TokenCensus census;
    for (const auto& t : p.halstead_tokens) {
        auto& bucket = t.role == HalsteadRole::op ? census.operators : census.operands;
        ++bucket[t.text];
    }
    return census;
}

HalsteadMetrics compute_halstead(const QProgram& p) {
    TokenCensus census = tokenize_halstead(p);
    HalsteadMetrics h;
    h.eta1 = static_cast<int>(census.operators.size());
    h.eta2 = static_cast<int>(census.operands.size());
    h.m1 = census.total_operators();
    h.m2 = census.total_operands();
    h.length = h.m1 + h.m2;
    h.vocabulary = h.eta1 + h.eta2;
    h.estimated_length = xlog2(h.eta1) + xlog2(h.eta2);
    h.volume = h.vocabulary > 0 ? h.length * std::log2(static_cast<double>(h.vocabulary)) : 0.0;
    h.difficulty = h.eta2 > 0 ? (h.eta1 / 2.0) * (static_cast<double>(h.m2) / h.eta2) : 0.0;
    h.effort = h.difficulty * h.volume;
    h.degenerate = h.length == 0 || h.eta2 == 0;
    return h;
}

std::vector<ModuleFlow> compute_information_flow(const QProgram& p) {
    std::vector<ModuleFlow> flows;
    flows.reserve(p.modules.size());

    // statement index -> owning module
    std::vector<int> owner(p.statements.size(), 0);
    for (std::size_t m = 0; m < p.modules.size(); ++m) {
        for (int idx : p.modules[m].statement_indices) owner[idx] = static_cast<int>(m);
    }

    for (std::size_t m = 0; m < p.modules.size(); ++m) {
        const QModule& mod = p.modules[m];
        ModuleFlow flow;
        flow.module = mod.name;
        flow.length = mod.length_loc;

        int calls_in = 0;
        for (std::size_t i = 0; i < p.statements.size(); ++i) {
            if (owner[i] == static_cast<int>(m)) continue;
            for (const auto& callee : p.statements[i].callees) {
                if (callee == mod.name) ++calls_in;
            }
        }

        int calls_out = 0;
        std::set<std::string> reads;
        std::set<std::string> writes;
        for (int idx : mod.statement_indices) {
            const QStatement& s = p.statements[idx];
            for (const auto& callee : s.callees) {
                if (callee != mod.name) ++calls_out;
            }
            reads.insert(s.registers_read.begin(), s.registers_read.end());
            writes.insert(s.registers_written.begin(), s.registers_written.end());
        }

        flow.fan_in = calls_in + static_cast<int>(reads.size());
        flow.fan_out = calls_out + static_cast<int>(writes.size());
        std::int64_t product = static_cast<std::int64_t>(flow.fan_in) * flow.fan_out;
        flow.if_value = flow.length * product * product;
        flows.push_back(std::move(flow));
    }
    return flows;
}

}  // namespace qmetrics
