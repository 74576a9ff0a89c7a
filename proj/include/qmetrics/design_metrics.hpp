#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qmetrics {

enum class DesignFormat { arch, patterns, quml };

std::string_view to_string(DesignFormat f);

struct ArchComponent {
    std::string name;
    bool quantum = false;
};

struct ArchConnector {
    std::string from;
    std::string to;
};

/// Parsed architecture-spec document. Connectors are undirected for
/// classification purposes.
struct ArchitectureSpec {
    int source_lines = 0;
    std::vector<ArchComponent> components;
    std::vector<ArchConnector> connectors;

    const ArchComponent* find_component(std::string_view name) const;
};

struct PatternEntry {
    std::string type_name;
    bool quantum = false;
    std::vector<std::string> instances;
};

struct PatternRecord {
    std::vector<PatternEntry> patterns;
};

struct QumlMember {
    std::string name;
    bool quantum = false;
};

struct QumlElement {
    std::string name;
    std::string kind;  // "variable" | "operation"
    bool quantum = false;
};

struct QumlClass {
    std::string name;
    bool quantum = false;
    std::vector<QumlMember> attributes;
    std::vector<QumlMember> methods;
    std::vector<QumlMember> interfaces;
    std::vector<QumlElement> elements;
};

struct QumlModel {
    std::vector<QumlClass> classes;
};

using DesignModel = std::variant<ArchitectureSpec, PatternRecord, QumlModel>;

/// Parses and validates a design document of the given format.
/// Schemas: docs/formats.md. Throws SchemaError / UnknownComponentError.
DesignModel parse_design_document(const std::string& path, DesignFormat format);

ArchitectureSpec parse_arch_text(std::string_view text);
PatternRecord parse_patterns_text(std::string_view text);
QumlModel parse_quml_text(std::string_view text);

/// Architectural size metrics.
struct GammaMetrics {
    int gamma1 = 0;  // counted lines of the document
    int gamma2 = 0;  // components + connectors
    int gamma3 = 0;  // quantum components
    int gamma4 = 0;  // connectors between two quantum components
    int gamma5 = 0;  // connectors between a quantum and a classical component
    int gamma6 = 0;  // gamma3 + gamma4 + gamma5

    friend bool operator==(const GammaMetrics&, const GammaMetrics&) = default;
};

GammaMetrics compute_gamma(const ArchitectureSpec& s);

/// Detailed-design (pattern) size metrics.
struct DeltaMetrics {
    int delta1 = 0;  // pattern types
    int delta3 = 0;  // quantum pattern types
    std::map<std::string, int> delta2;  // type -> instance count
    std::map<std::string, int> delta4;  // quantum types only

    friend bool operator==(const DeltaMetrics&, const DeltaMetrics&) = default;
};

DeltaMetrics compute_delta(const PatternRecord& d);

/// Model specification size metrics.
struct ThetaMetrics {
    int theta1 = 0;  // quantum classes
    int theta2 = 0;  // quantum elements
    int theta3 = 0;  // quantum interfaces
    int theta4 = 0;  // quantum attributes
    int theta5 = 0;  // quantum methods

    friend bool operator==(const ThetaMetrics&, const ThetaMetrics&) = default;
};

ThetaMetrics compute_theta(const QumlModel& m);

}  // namespace qmetrics
