#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qmetrics/core.hpp"

namespace qmetrics {

/// Line-of-code size metrics.
struct LocMetrics {
    int phi1 = 0;  // counted lines
    int phi2 = 0;  // lines holding a gate application
    int phi3 = 0;  // lines holding a measurement (and no gate application)
    int phi4 = 0;  // phi2 + phi3
    int phi5 = 0;  // declared qubits (sum of quantum register widths)
    int phi6 = 0;  // distinct gate names applied

    friend bool operator==(const LocMetrics&, const LocMetrics&) = default;
};

LocMetrics compute_loc_metrics(const QProgram& p);

/// Operator/operand multisets, keyed by token text.
struct TokenCensus {
    std::map<std::string, int> operators;
    std::map<std::string, int> operands;

    int total_operators() const;
    int total_operands() const;
};

TokenCensus tokenize_halstead(const QProgram& p);

struct HalsteadMetrics {
    int eta1 = 0;  // unique operators
    int eta2 = 0;  // unique operands
    int m1 = 0;    // operator occurrences
    int m2 = 0;    // operand occurrences
    int length = 0;      // m1 + m2
    int vocabulary = 0;  // eta1 + eta2
    double estimated_length = 0.0;  // eta1*log2(eta1) + eta2*log2(eta2), 0*log2(0) := 0
    double volume = 0.0;            // length * log2(vocabulary)
    double difficulty = 0.0;        // (eta1/2) * (m2/eta2), 0 when eta2 == 0
    double effort = 0.0;            // difficulty * volume
    bool degenerate = false;        // empty census or eta2 == 0
};

HalsteadMetrics compute_halstead(const QProgram& p);

/// Per-module fan-in/fan-out record. fan_in counts call sites in other
/// modules invoking this one plus distinct registers read here; fan_out
/// counts call sites here invoking other modules plus distinct registers
/// written here.
struct ModuleFlow {
    std::string module;
    int length = 0;
    int fan_in = 0;
    int fan_out = 0;
    std::int64_t if_value = 0;  // length * (fan_in * fan_out)^2

    friend bool operator==(const ModuleFlow&, const ModuleFlow&) = default;
};

std::vector<ModuleFlow> compute_information_flow(const QProgram& p);

}  // namespace qmetrics
