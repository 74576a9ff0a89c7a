#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmetrics/cfg.hpp"
#include "qmetrics/code_metrics.hpp"
#include "qmetrics/core.hpp"
#include "qmetrics/design_metrics.hpp"

namespace qmetrics {

struct AnalysisOptions {
    GateSet gate_set = GateSet::qiskit_default();
    CfgMode cfg_mode = CfgMode::loop_fallthrough;
    bool emit_cfg_dot = false;
    std::optional<Dialect> dialect_override;
    std::optional<DesignFormat> design_format_override;
};

struct CodeMetricsRecord {
    LocMetrics loc;
    HalsteadMetrics halstead;
    std::optional<int> cyclomatic;  // absent when the top-level flow is empty
    int cfg_nodes = 0;
    int cfg_edges = 0;
    std::vector<ModuleFlow> information_flow;
    std::string cfg_dot;  // set when requested and the graph is non-empty
};

struct DesignMetricsRecord {
    std::optional<GammaMetrics> gamma;
    std::optional<DeltaMetrics> delta;
    std::optional<ThetaMetrics> theta;
};

/// Per-input analysis result. Holds code metrics or design metrics, never
/// both. Error strings carry "path:line:column: message".
struct FileRecord {
    std::string path;
    std::string kind;               // "code" | "design"
    std::string dialect_or_format;  // openqasm2 | qiskit_dialect | arch | patterns | quml
    std::vector<std::string> errors;
    std::optional<CodeMetricsRecord> code;
    std::optional<DesignMetricsRecord> design;
};

/// Per-metric sums and means over the analyzed records; a pure fold.
struct Aggregate {
    int files = 0;
    int code_files = 0;
    int design_files = 0;
    int files_with_errors = 0;
    std::map<std::string, double> sums;
    std::map<std::string, double> means;
};

Aggregate aggregate_records(const std::vector<FileRecord>& records);

struct MetricsReport {
    std::string tool_version;
    AnalysisOptions options;
    std::vector<FileRecord> records;  // sorted by path

    bool has_errors() const;
};

/// Analyzes in-memory code; `path_label` only names the record.
FileRecord analyze_code_text(std::string_view source, Dialect dialect,
                             const AnalysisOptions& options, std::string path_label);

/// Analyzes one file; kind and dialect/format come from the extension
/// unless overridden in the options. Never throws: problems land in the
/// record's error list.
FileRecord analyze_file(const std::string& path, const AnalysisOptions& options);

/// Analyzes files and directories. Directories are scanned for known
/// extensions, one level deep unless `recursive`. Records are sorted by
/// path.
MetricsReport analyze_paths(const std::vector<std::string>& paths, bool recursive,
                            const AnalysisOptions& options);

/// Stable-key-ordered JSON document; byte-identical across runs for
/// identical inputs and options.
nlohmann::ordered_json report_to_json(const MetricsReport& report);

std::string report_to_text(const MetricsReport& report);

}  // namespace qmetrics
