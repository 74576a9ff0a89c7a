#include "qmetrics/report.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "qmetrics/errors.hpp"
#include "qmetrics/qasm_parser.hpp"
#include "qmetrics/qiskit_parser.hpp"
#include "qmetrics/source_text.hpp"
#include "qmetrics/version.hpp"

namespace qmetrics {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::string format_error(std::string_view path, SourceSpan span, std::string_view message) {
    std::ostringstream out;
    out << path << ":" << span.line << ":" << span.column << ": " << message;
    return out.str();
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::optional<DesignFormat> design_format_from_path(std::string_view path) {
    if (ends_with(path, ".arch.json")) return DesignFormat::arch;
    if (ends_with(path, ".patterns.json")) return DesignFormat::patterns;
    if (ends_with(path, ".quml.json")) return DesignFormat::quml;
    return std::nullopt;
}

std::optional<Dialect> dialect_from_path(std::string_view path) {
    if (ends_with(path, ".qasm")) return Dialect::openqasm2;
    if (ends_with(path, ".py")) return Dialect::qiskit_dialect;
    return std::nullopt;
}

bool known_input(std::string_view path) {
    return dialect_from_path(path).has_value() || design_format_from_path(path).has_value();
}

CodeMetricsRecord compute_code_record(const QProgram& program, const AnalysisOptions& options) {
    CodeMetricsRecord rec;
    rec.loc = compute_loc_metrics(program);
    rec.halstead = compute_halstead(program);
    rec.information_flow = compute_information_flow(program);

    Qcfg g = build_qcfg(program, options.cfg_mode);
    rec.cfg_nodes = g.node_count;
    rec.cfg_edges = g.edge_count();
    if (g.node_count > 0) {
        rec.cyclomatic = cyclomatic(g);
        if (options.emit_cfg_dot) rec.cfg_dot = to_dot(g);
    }
    return rec;
}

FileRecord analyze_design_text(std::string_view text, DesignFormat format,
                               const AnalysisOptions&, std::string path_label) {
    FileRecord rec;
    rec.path = std::move(path_label);
    rec.kind = "design";
    rec.dialect_or_format = to_string(format);
    try {
        DesignMetricsRecord design;
        switch (format) {
            case DesignFormat::arch:
                design.gamma = compute_gamma(parse_arch_text(text));
                break;
            case DesignFormat::patterns:
                design.delta = compute_delta(parse_patterns_text(text));
                break;
            case DesignFormat::quml:
                design.theta = compute_theta(parse_quml_text(text));
                break;
        }
        rec.design = std::move(design);
    } catch (const std::exception& e) {
        rec.errors.push_back(format_error(rec.path, {0, 0}, e.what()));
    }
    return rec;
}

}  // namespace

FileRecord analyze_code_text(std::string_view source, Dialect dialect,
                             const AnalysisOptions& options, std::string path_label) {
    FileRecord rec;
    rec.path = std::move(path_label);
    rec.kind = "code";
    rec.dialect_or_format = to_string(dialect);
    try {
        QProgram program = dialect == Dialect::openqasm2
                               ? qasm::parse_qasm_source(source)
                               : qiskit::parse_qiskit_dialect(source, options.gate_set);
        rec.code = compute_code_record(program, options);
    } catch (const AnalysisError& e) {
        rec.errors.push_back(format_error(rec.path, e.span(), e.what()));
    } catch (const std::exception& e) {
        rec.errors.push_back(format_error(rec.path, {0, 0}, e.what()));
    }
    return rec;
}

FileRecord analyze_file(const std::string& path, const AnalysisOptions& options) {
    std::string text;
    try {
        text = read_text_file(path);
    } catch (const std::exception& e) {
        FileRecord rec;
        rec.path = path;
        rec.kind = "unknown";
        rec.dialect_or_format = "unknown";
        rec.errors.push_back(format_error(path, {0, 0}, e.what()));
        return rec;
    }

    if (options.dialect_override) {
        return analyze_code_text(text, *options.dialect_override, options, path);
    }
    if (options.design_format_override) {
        return analyze_design_text(text, *options.design_format_override, options, path);
    }
    if (auto format = design_format_from_path(path)) {
        return analyze_design_text(text, *format, options, path);
    }
    if (auto dialect = dialect_from_path(path)) {
        return analyze_code_text(text, *dialect, options, path);
    }

    FileRecord rec;
    rec.path = path;
    rec.kind = "unknown";
    rec.dialect_or_format = "unknown";
    rec.errors.push_back(format_error(
        path, {0, 0},
        "unrecognized input type (expected .qasm, .py, .arch.json, .patterns.json, .quml.json)"));
    return rec;
}

MetricsReport analyze_paths(const std::vector<std::string>& paths, bool recursive,
                            const AnalysisOptions& options) {
    std::vector<std::string> files;
    std::vector<std::string> unscannable;
    for (const auto& p : paths) {
        std::error_code ec;
        if (fs::is_directory(p, ec)) {
            auto collect = [&](auto iterator) {
                for (const auto& entry : iterator) {
                    std::error_code entry_ec;
                    if (entry.is_regular_file(entry_ec) && known_input(entry.path().string()))
                        files.push_back(entry.path().string());
                }
            };
            if (recursive) {
                collect(fs::recursive_directory_iterator(p, ec));
            } else {
                collect(fs::directory_iterator(p, ec));
            }
            if (ec) unscannable.push_back(p);
        } else {
            files.push_back(p);
        }
    }
    std::sort(files.begin(), files.end());

    MetricsReport report;
    report.tool_version = std::string(tool_version);
    report.options = options;
    for (const auto& f : files) report.records.push_back(analyze_file(f, options));
    for (const auto& dir : unscannable) {
        FileRecord rec;
        rec.path = dir;
        rec.kind = "unknown";
        rec.dialect_or_format = "unknown";
        rec.errors.push_back(format_error(dir, {0, 0}, "cannot scan directory"));
        report.records.push_back(std::move(rec));
    }
    return report;
}

bool MetricsReport::has_errors() const {
    return std::any_of(records.begin(), records.end(),
                       [](const FileRecord& r) { return !r.errors.empty(); });
}

// ---------------------------------------------------------------------------
// Aggregation
// ---------------------------------------------------------------------------

namespace {

void add_metric(Aggregate& agg, std::map<std::string, int>& counts, const std::string& key,
                double value) {
    agg.sums[key] += value;
    ++counts[key];
}

}  // namespace

Aggregate aggregate_records(const std::vector<FileRecord>& records) {
    Aggregate agg;
    std::map<std::string, int> counts;
    agg.files = static_cast<int>(records.size());

    for (const auto& rec : records) {
        if (!rec.errors.empty()) ++agg.files_with_errors;
        if (rec.code) {
            ++agg.code_files;
            const CodeMetricsRecord& c = *rec.code;
            add_metric(agg, counts, "phi1", c.loc.phi1);
            add_metric(agg, counts, "phi2", c.loc.phi2);
            add_metric(agg, counts, "phi3", c.loc.phi3);
            add_metric(agg, counts, "phi4", c.loc.phi4);
            add_metric(agg, counts, "phi5", c.loc.phi5);
            add_metric(agg, counts, "phi6", c.loc.phi6);
            add_metric(agg, counts, "m1", c.halstead.m1);
            add_metric(agg, counts, "m2", c.halstead.m2);
            add_metric(agg, counts, "eta1", c.halstead.eta1);
            add_metric(agg, counts, "eta2", c.halstead.eta2);
            add_metric(agg, counts, "length", c.halstead.length);
            add_metric(agg, counts, "vocabulary", c.halstead.vocabulary);
            add_metric(agg, counts, "estimated_length", c.halstead.estimated_length);
            add_metric(agg, counts, "volume", c.halstead.volume);
            add_metric(agg, counts, "difficulty", c.halstead.difficulty);
            add_metric(agg, counts, "effort", c.halstead.effort);
            if (c.cyclomatic) add_metric(agg, counts, "cyclomatic", *c.cyclomatic);
            double if_total = 0;
            for (const auto& flow : c.information_flow)
                if_total += static_cast<double>(flow.if_value);
            add_metric(agg, counts, "if_total", if_total);
        }
        if (rec.design) {
            ++agg.design_files;
            const DesignMetricsRecord& d = *rec.design;
            if (d.gamma) {
                add_metric(agg, counts, "gamma1", d.gamma->gamma1);
                add_metric(agg, counts, "gamma2", d.gamma->gamma2);
                add_metric(agg, counts, "gamma3", d.gamma->gamma3);
                add_metric(agg, counts, "gamma4", d.gamma->gamma4);
                add_metric(agg, counts, "gamma5", d.gamma->gamma5);
                add_metric(agg, counts, "gamma6", d.gamma->gamma6);
            }
            if (d.delta) {
                add_metric(agg, counts, "delta1", d.delta->delta1);
                add_metric(agg, counts, "delta3", d.delta->delta3);
            }
            if (d.theta) {
                add_metric(agg, counts, "theta1", d.theta->theta1);
                add_metric(agg, counts, "theta2", d.theta->theta2);
                add_metric(agg, counts, "theta3", d.theta->theta3);
                add_metric(agg, counts, "theta4", d.theta->theta4);
                add_metric(agg, counts, "theta5", d.theta->theta5);
            }
        }
    }
    for (const auto& [key, sum] : agg.sums) agg.means[key] = sum / counts[key];
    return agg;
}

// ---------------------------------------------------------------------------
// JSON rendering
// ---------------------------------------------------------------------------

namespace {

ordered_json loc_to_json(const LocMetrics& m) {
    return {{"phi1", m.phi1}, {"phi2", m.phi2}, {"phi3", m.phi3},
            {"phi4", m.phi4}, {"phi5", m.phi5}, {"phi6", m.phi6}};
}

ordered_json halstead_to_json(const HalsteadMetrics& h) {
    return {{"eta1", h.eta1},
            {"eta2", h.eta2},
            {"m1", h.m1},
            {"m2", h.m2},
            {"length", h.length},
            {"vocabulary", h.vocabulary},
            {"estimated_length", h.estimated_length},
            {"volume", h.volume},
            {"difficulty", h.difficulty},
            {"effort", h.effort},
            {"degenerate", h.degenerate}};
}

ordered_json record_to_json(const FileRecord& rec, CfgMode mode) {
    ordered_json j;
    j["path"] = rec.path;
    j["kind"] = rec.kind;
    if (rec.kind == "design") {
        j["format"] = rec.dialect_or_format;
    } else {
        j["dialect"] = rec.dialect_or_format;
    }
    j["errors"] = rec.errors;

    if (rec.code) {
        const CodeMetricsRecord& c = *rec.code;
        j["loc"] = loc_to_json(c.loc);
        j["halstead"] = halstead_to_json(c.halstead);
        if (c.cyclomatic) {
            j["cyclomatic"] = *c.cyclomatic;
            j["cfg"] = {{"nodes", c.cfg_nodes},
                        {"edges", c.cfg_edges},
                        {"mode", std::string(to_string(mode))}};
        }
        ordered_json flows = ordered_json::array();
        for (const auto& f : c.information_flow) {
            flows.push_back({{"module", f.module},
                             {"length", f.length},
                             {"fan_in", f.fan_in},
                             {"fan_out", f.fan_out},
                             {"if_value", f.if_value}});
        }
        j["information_flow"] = std::move(flows);
        if (!c.cfg_dot.empty()) j["cfg_dot"] = c.cfg_dot;
    }

    if (rec.design) {
        const DesignMetricsRecord& d = *rec.design;
        if (d.gamma) {
            j["gamma"] = {{"gamma1", d.gamma->gamma1}, {"gamma2", d.gamma->gamma2},
                          {"gamma3", d.gamma->gamma3}, {"gamma4", d.gamma->gamma4},
                          {"gamma5", d.gamma->gamma5}, {"gamma6", d.gamma->gamma6}};
        }
        if (d.delta) {
            j["delta"] = {{"delta1", d.delta->delta1},
                          {"delta2", d.delta->delta2},
                          {"delta3", d.delta->delta3},
                          {"delta4", d.delta->delta4}};
        }
        if (d.theta) {
            j["theta"] = {{"theta1", d.theta->theta1}, {"theta2", d.theta->theta2},
                          {"theta3", d.theta->theta3}, {"theta4", d.theta->theta4},
                          {"theta5", d.theta->theta5}};
        }
    }
    return j;
}

}  // namespace

ordered_json report_to_json(const MetricsReport& report) {
    ordered_json j;
    j["schema_version"] = report_schema_version;
    j["tool"] = {{"name", "qmetrics"}, {"version", report.tool_version}};
    j["config"] = {{"gate_set", report.options.gate_set.names()},
                   {"cfg_mode", std::string(to_string(report.options.cfg_mode))},
                   {"emit_cfg_dot", report.options.emit_cfg_dot}};

    ordered_json inputs = ordered_json::array();
    for (const auto& rec : report.records)
        inputs.push_back(record_to_json(rec, report.options.cfg_mode));
    j["inputs"] = std::move(inputs);

    Aggregate agg = aggregate_records(report.records);
    ordered_json ja;
    ja["files"] = agg.files;
    ja["code_files"] = agg.code_files;
    ja["design_files"] = agg.design_files;
    ja["files_with_errors"] = agg.files_with_errors;
    ja["sums"] = agg.sums;
    ja["means"] = agg.means;
    j["aggregate"] = std::move(ja);
    return j;
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

namespace {

void print_metric(std::ostream& out, std::string_view name, std::string_view symbol,
                  const std::string& value) {
    out << "  " << name;
    for (std::size_t i = name.size(); i < 28; ++i) out << ' ';
    out << symbol;
    // symbols hold multi-byte glyphs; pad by display width
    std::size_t display = 0;
    for (char ch : symbol) {
        if ((ch & 0xC0) != 0x80) ++display;
    }
    for (std::size_t i = display; i < 8; ++i) out << ' ';
    out << "= " << value << "\n";
}

std::string fmt(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

std::string fmt_map(const std::map<std::string, int>& m) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [key, value] : m) {
        if (!first) out << ", ";
        out << key << ": " << value;
        first = false;
    }
    out << "}";
    return out.str();
}

}  // namespace

std::string report_to_text(const MetricsReport& report) {
    std::ostringstream out;
    out << "qmetrics " << report.tool_version << " (cfg mode: "
        << to_string(report.options.cfg_mode) << ")\n";

    for (const auto& rec : report.records) {
        out << "\n== " << rec.path << " [" << rec.kind << ", " << rec.dialect_or_format
            << "] ==\n";
        for (const auto& e : rec.errors) out << "  error: " << e << "\n";

        if (rec.code) {
            const CodeMetricsRecord& c = *rec.code;
            print_metric(out, "lines of code", "φ1", std::to_string(c.loc.phi1));
            print_metric(out, "gate-operation lines", "φ2", std::to_string(c.loc.phi2));
            print_metric(out, "measurement lines", "φ3", std::to_string(c.loc.phi3));
            print_metric(out, "quantum-related lines", "φ4", std::to_string(c.loc.phi4));
            print_metric(out, "qubits declared", "φ5", std::to_string(c.loc.phi5));
            print_metric(out, "unique gates", "φ6", std::to_string(c.loc.phi6));
            print_metric(out, "unique operators", "η1", std::to_string(c.halstead.eta1));
            print_metric(out, "unique operands", "η2", std::to_string(c.halstead.eta2));
            print_metric(out, "operator occurrences", "M1", std::to_string(c.halstead.m1));
            print_metric(out, "operand occurrences", "M2", std::to_string(c.halstead.m2));
            print_metric(out, "program length", "M", std::to_string(c.halstead.length));
            print_metric(out, "vocabulary", "η", std::to_string(c.halstead.vocabulary));
            print_metric(out, "estimated length", "M_E", fmt(c.halstead.estimated_length));
            print_metric(out, "volume", "V_Q", fmt(c.halstead.volume));
            print_metric(out, "difficulty", "D_Q", fmt(c.halstead.difficulty));
            print_metric(out, "effort", "E_Q", fmt(c.halstead.effort));
            if (c.halstead.degenerate) out << "  (degenerate token census)\n";
            if (c.cyclomatic) {
                print_metric(out, "cyclomatic complexity", "V(G_Q)",
                             std::to_string(*c.cyclomatic) + "  (nodes " +
                                 std::to_string(c.cfg_nodes) + ", edges " +
                                 std::to_string(c.cfg_edges) + ")");
            } else {
                out << "  cyclomatic complexity       V(G_Q)  = (absent: empty graph)\n";
            }
            out << "  information flow            IF\n";
            for (const auto& f : c.information_flow) {
                out << "    " << f.module << ": length=" << f.length << " fan_in=" << f.fan_in
                    << " fan_out=" << f.fan_out << " IF=" << f.if_value << "\n";
            }
            if (!c.cfg_dot.empty()) out << c.cfg_dot;
        }

        if (rec.design) {
            const DesignMetricsRecord& d = *rec.design;
            if (d.gamma) {
                print_metric(out, "specification lines", "γ1", std::to_string(d.gamma->gamma1));
                print_metric(out, "components + connectors", "γ2",
                             std::to_string(d.gamma->gamma2));
                print_metric(out, "quantum components", "γ3", std::to_string(d.gamma->gamma3));
                print_metric(out, "quantum-quantum connectors", "γ4",
                             std::to_string(d.gamma->gamma4));
                print_metric(out, "quantum-classical connectors", "γ5",
                             std::to_string(d.gamma->gamma5));
                print_metric(out, "quantum total", "γ6", std::to_string(d.gamma->gamma6));
            }
            if (d.delta) {
                print_metric(out, "pattern types", "δ1", std::to_string(d.delta->delta1));
                print_metric(out, "realizations per type", "δ2", fmt_map(d.delta->delta2));
                print_metric(out, "quantum pattern types", "δ3",
                             std::to_string(d.delta->delta3));
                print_metric(out, "quantum realizations", "δ4", fmt_map(d.delta->delta4));
            }
            if (d.theta) {
                print_metric(out, "quantum classes", "θ1", std::to_string(d.theta->theta1));
                print_metric(out, "quantum elements", "θ2", std::to_string(d.theta->theta2));
                print_metric(out, "quantum interfaces", "θ3", std::to_string(d.theta->theta3));
                print_metric(out, "quantum attributes", "θ4", std::to_string(d.theta->theta4));
                print_metric(out, "quantum methods", "θ5", std::to_string(d.theta->theta5));
            }
        }
    }

    Aggregate agg = aggregate_records(report.records);
    if (agg.files > 1) {
        out << "\n== aggregate (" << agg.files << " files, " << agg.code_files << " code, "
            << agg.design_files << " design, " << agg.files_with_errors << " with errors) ==\n";
        for (const auto& [key, sum] : agg.sums) {
            out << "  " << key << ": sum=" << fmt(sum) << " mean=" << fmt(agg.means.at(key))
                << "\n";
        }
    }
    return out.str();
}

}  // namespace qmetrics
