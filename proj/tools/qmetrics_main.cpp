#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qmetrics/report.hpp"
#include "qmetrics/source_text.hpp"
#include "qmetrics/version.hpp"

namespace {

int run_analyze(const std::vector<std::string>& paths, bool recursive,
                const std::string& dialect, const std::string& design_format,
                const std::string& format, const std::string& gate_set_file,
                bool classical_cfg, const std::string& emit_cfg, const std::string& out_path) {
    qmetrics::AnalysisOptions options;
    if (classical_cfg) options.cfg_mode = qmetrics::CfgMode::classical;
    options.emit_cfg_dot = emit_cfg == "dot";

    if (!dialect.empty()) {
        options.dialect_override = dialect == "qasm" ? qmetrics::Dialect::openqasm2
                                                     : qmetrics::Dialect::qiskit_dialect;
    }
    if (!design_format.empty()) {
        if (design_format == "arch") options.design_format_override = qmetrics::DesignFormat::arch;
        if (design_format == "patterns")
            options.design_format_override = qmetrics::DesignFormat::patterns;
        if (design_format == "quml") options.design_format_override = qmetrics::DesignFormat::quml;
    }

    if (!gate_set_file.empty()) {
        try {
            auto doc = nlohmann::json::parse(qmetrics::read_text_file(gate_set_file));
            if (!doc.is_array()) throw std::runtime_error("expected a JSON array of gate names");
            options.gate_set = qmetrics::GateSet(doc.get<std::vector<std::string>>());
        } catch (const std::exception& e) {
            std::cerr << "qmetrics: bad gate-set file '" << gate_set_file << "': " << e.what()
                      << "\n";
            return 2;
        }
    }

    qmetrics::MetricsReport report = qmetrics::analyze_paths(paths, recursive, options);
    std::string rendered = format == "text"
                               ? qmetrics::report_to_text(report)
                               : qmetrics::report_to_json(report).dump(2) + "\n";

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "qmetrics: cannot write '" << out_path << "'\n";
            return 2;
        }
        out << rendered;
    } else {
        std::cout << rendered;
    }
    return report.has_errors() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qmetrics: size and structure metrics for quantum software"};
    app.set_version_flag("--version", std::string(qmetrics::tool_version));
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "analyze source files and design documents");
    std::vector<std::string> paths;
    bool recursive = false;
    std::string dialect;
    std::string design_format;
    std::string format = "json";
    std::string gate_set_file;
    bool classical_cfg = false;
    std::string emit_cfg;
    std::string out_path;

    analyze->add_option("paths", paths, "files or directories")->required();
    analyze->add_flag("--recursive", recursive, "descend into directories");
    analyze->add_option("--dialect", dialect, "force code dialect")
        ->check(CLI::IsMember({"qasm", "qiskit"}));
    analyze->add_option("--design-format", design_format, "force design document format")
        ->check(CLI::IsMember({"arch", "patterns", "quml"}));
    analyze->add_option("--format", format, "report format (default json)")
        ->check(CLI::IsMember({"json", "text"}));
    analyze->add_option("--gate-set", gate_set_file,
                        "JSON array of gate names replacing the default dialect gate set");
    analyze->add_flag("--classical-cfg", classical_cfg,
                      "build CFGs without loop fallthrough edges");
    analyze->add_option("--emit-cfg", emit_cfg, "emit the top-level CFG (only: dot)")
        ->check(CLI::IsMember({"dot"}));
    analyze->add_option("--out", out_path, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!dialect.empty() && !design_format.empty()) {
        std::cerr << "qmetrics: --dialect and --design-format are mutually exclusive\n";
        return 2;
    }

    try {
        return run_analyze(paths, recursive, dialect, design_format, format, gate_set_file,
                           classical_cfg, emit_cfg, out_path);
    } catch (const std::exception& e) {
        std::cerr << "qmetrics: " << e.what() << "\n";
        return 2;
    }
}
