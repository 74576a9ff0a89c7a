// Acceptance suite: runs every release criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "halstead_oracle.hpp"
#include "qmetrics/cfg.hpp"
#include "qmetrics/code_metrics.hpp"
#include "qmetrics/design_metrics.hpp"
#include "qmetrics/qasm_parser.hpp"
#include "qmetrics/qiskit_parser.hpp"
#include "qmetrics/report.hpp"
#include "qmetrics/source_text.hpp"

using namespace qmetrics;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = QMETRICS_FIXTURES_DIR;

struct Checker {
    int failures = 0;

    void criterion(int number, const std::string& title, const std::function<void()>& body) {
        try {
            body();
            std::cout << "PASS  criterion " << number << ": " << title << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL  criterion " << number << ": " << title << " -- " << e.what()
                      << "\n";
        }
    }
};

void require(bool condition, const std::string& message) {
    if (!condition) throw std::runtime_error(message);
}

template <typename T>
void require_eq(const T& got, const T& want, const std::string& what) {
    if (!(got == want)) {
        std::ostringstream msg;
        msg << what << ": got " << got << ", want " << want;
        throw std::runtime_error(msg.str());
    }
}

std::vector<std::string> corpus() {
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(kFixtures + "/code"))
        names.push_back(entry.path().string());
    std::sort(names.begin(), names.end());
    return names;
}

bool is_python(const std::string& path) {
    return path.size() > 3 && path.substr(path.size() - 3) == ".py";
}

QProgram parse_path(const std::string& path) {
    std::string source = read_text_file(path);
    return is_python(path) ? qiskit::parse_qiskit_dialect(source)
                           : qasm::parse_qasm_source(source);
}

double rel_err(double got, double want) {
    if (want == 0.0) return std::abs(got);
    return std::abs(got - want) / std::abs(want);
}

// -------------------------------------------------------------------------

void criterion1_loc() {
    auto start = std::chrono::steady_clock::now();
    QProgram p = qiskit::parse_qiskit_dialect(read_text_file(kFixtures + "/code/example.py"));
    LocMetrics m = compute_loc_metrics(p);
    auto elapsed = std::chrono::steady_clock::now() - start;

    require_eq(m.phi1, 16, "phi1");
    require_eq(m.phi2, 6, "phi2");
    require_eq(m.phi3, 1, "phi3");
    require_eq(m.phi4, 7, "phi4");
    require_eq(m.phi5, 2, "phi5");
    require_eq(m.phi6, 3, "phi6");
    require(elapsed < std::chrono::seconds(1), "analysis exceeded one second");
}

void criterion2_cyclomatic() {
    QProgram p = qiskit::parse_qiskit_dialect(read_text_file(kFixtures + "/code/example.py"));

    Qcfg g = build_qcfg(p);
    require_eq(g.node_count, 16, "node count");
    require_eq(g.edge_count(), 17, "edge count");
    require_eq(cyclomatic(g), 3, "V(G) default mode");

    Qcfg classical = build_qcfg(p, CfgMode::classical);
    require_eq(classical.edge_count(), 16, "classical edge count");
    require_eq(cyclomatic(classical), 2, "V(G) classical mode");

    // the report must flag the mode
    AnalysisOptions options;
    options.cfg_mode = CfgMode::classical;
    MetricsReport report = analyze_paths({kFixtures + "/code/example.py"}, false, options);
    auto j = report_to_json(report);
    require(j["config"]["cfg_mode"] == "classical", "report does not flag the cfg mode");
    require(j["inputs"][0]["cfg"]["mode"] == "classical", "record does not flag the cfg mode");
}

void criterion3_halstead_identities() {
    int programs = 0;
    bool saw_qasm = false;
    bool saw_python = false;
    for (const auto& path : corpus()) {
        QProgram p = parse_path(path);
        ++programs;
        (is_python(path) ? saw_python : saw_qasm) = true;

        HalsteadMetrics h = compute_halstead(p);
        require_eq(h.length, h.m1 + h.m2, path + ": M = M1 + M2");
        require_eq(h.vocabulary, h.eta1 + h.eta2, path + ": eta = eta1 + eta2");
        require(h.effort == h.difficulty * h.volume, path + ": E = D * V not exact");

        auto xlog2 = [](int n) { return n > 0 ? n * std::log2(double(n)) : 0.0; };
        double me = xlog2(h.eta1) + xlog2(h.eta2);
        double v = h.vocabulary > 0 ? (h.m1 + h.m2) * std::log2(double(h.vocabulary)) : 0.0;
        double d = h.eta2 > 0 ? (h.eta1 / 2.0) * (double(h.m2) / h.eta2) : 0.0;
        double e = d * v;
        require(rel_err(h.estimated_length, me) <= 1e-12, path + ": M_E recomputation");
        require(rel_err(h.volume, v) <= 1e-12, path + ": V_Q recomputation");
        require(rel_err(h.difficulty, d) <= 1e-12, path + ": D_Q recomputation");
        require(rel_err(h.effort, e) <= 1e-12, path + ": E_Q recomputation");
    }
    require(programs >= 15, "corpus holds fewer than 15 programs");
    require(saw_qasm && saw_python, "corpus must cover both dialects");
}

void criterion4_oracle_equivalence() {
    for (const auto& path : corpus()) {
        std::string source = read_text_file(path);
        require(count_source_lines(source, is_python(path) ? "#" : "//") <= 30,
                path + ": fixture exceeds 30 lines");
        Dialect dialect = is_python(path) ? Dialect::qiskit_dialect : Dialect::openqasm2;
        oracle::Census expected = oracle::halstead_census(source, dialect);
        HalsteadMetrics h = compute_halstead(parse_path(path));
        require_eq(h.eta1, expected.eta1(), path + ": eta1");
        require_eq(h.eta2, expected.eta2(), path + ": eta2");
        require_eq(h.m1, expected.m1(), path + ": M1");
        require_eq(h.m2, expected.m2(), path + ": M2");
    }
}

void criterion5_property_suite() {
    int cases = 0;

    gen::DialectProgramGen free_form(900913);
    for (int i = 0; i < 600; ++i) {
        gen::ProgramSpec spec = free_form.random_program(36);
        QProgram p = qiskit::parse_qiskit_dialect(spec.source);
        require(p.statements.size() <= 40, "generated program too large");

        LocMetrics loc = compute_loc_metrics(p);
        require_eq(loc.phi4, loc.phi2 + loc.phi3, "phi4 identity");
        require(loc.phi2 + loc.phi3 <= loc.phi1, "phi2+phi3 <= phi1");
        require(loc.phi6 <= loc.phi2, "phi6 <= phi2");

        for (const auto& flow : compute_information_flow(p)) {
            std::int64_t product = std::int64_t(flow.fan_in) * flow.fan_out;
            require(flow.if_value == flow.length * product * product, "IF identity");
        }
        ++cases;
    }

    gen::DialectProgramGen composer(457);
    for (int round = 0; round < 150; ++round) {
        std::string prelude = composer.prelude();
        std::vector<gen::DialectProgramGen::ConstructBlock> constructs;
        int n = 1 + int(composer.rng()() % 5);
        for (int i = 0; i < n; ++i) constructs.push_back(composer.random_construct());

        int prev_default = 0;
        int prev_classical = 0;
        for (int k = 0; k <= n; ++k) {
            std::string source = prelude;
            for (int i = 0; i < k; ++i) source += constructs[i].text;
            source += "print(flag)\n";
            QProgram p = qiskit::parse_qiskit_dialect(source);
            int v_default = cyclomatic(build_qcfg(p));
            int v_classical = cyclomatic(build_qcfg(p, CfgMode::classical));
            if (k == 0) {
                require_eq(v_default, 1, "straight-line cyclomatic");
                require_eq(v_classical, 1, "straight-line cyclomatic (classical)");
            } else {
                int expected = constructs[k - 1].is_loop ? 2 : 1;
                require_eq(v_default - prev_default, expected, "default-mode construct delta");
                require_eq(v_classical - prev_classical, 1, "classical-mode construct delta");
            }
            prev_default = v_default;
            prev_classical = v_classical;
            ++cases;
        }
    }

    require(cases >= 1000, "fewer than 1000 generated cases");
}

void criterion6_design_metrics() {
    GammaMetrics g =
        compute_gamma(parse_arch_text(read_text_file(kFixtures + "/design/example.arch.json")));
    require(g == GammaMetrics{11, 5, 2, 1, 1, 4}, "arch fixture golden values");

    DeltaMetrics d = compute_delta(
        parse_patterns_text(read_text_file(kFixtures + "/design/example.patterns.json")));
    require(d.delta1 == 2 && d.delta3 == 1, "patterns fixture golden values");
    require(d.delta2 ==
                std::map<std::string, int>{{"Uniform-Superposition", 2}, {"Facade", 1}},
            "patterns fixture delta2");
    require(d.delta4 == std::map<std::string, int>{{"Uniform-Superposition", 2}},
            "patterns fixture delta4");

    ThetaMetrics t =
        compute_theta(parse_quml_text(read_text_file(kFixtures + "/design/example.quml.json")));
    require(t == ThetaMetrics{1, 3, 1, 2, 1}, "quml fixture golden values");

    gen::DesignDocGen generator(31124);
    for (int i = 0; i < 200; ++i) {
        GammaMetrics rg = compute_gamma(parse_arch_text(generator.arch_doc()));
        require_eq(rg.gamma6, rg.gamma3 + rg.gamma4 + rg.gamma5, "gamma6 identity");
        DeltaMetrics rd = compute_delta(parse_patterns_text(generator.patterns_doc()));
        require(rd.delta3 <= rd.delta1, "delta3 <= delta1");
    }
}

void criterion7_determinism() {
    AnalysisOptions options;
    std::string a = report_to_json(analyze_paths({kFixtures}, true, options)).dump(2);
    std::string b = report_to_json(analyze_paths({kFixtures}, true, options)).dump(2);
    require(a == b, "reports differ between runs");
    require(a.find("\"phi1\"") != std::string::npos, "report looks empty");
}

}  // namespace

int main() {
    Checker checker;
    checker.criterion(1, "16-line example LOC values, exact, under one second",
                      criterion1_loc);
    checker.criterion(2, "16-line example cyclomatic complexity in both CFG modes",
                      criterion2_cyclomatic);
    checker.criterion(3, "Halstead identities exact over the corpus, reals to 1e-12",
                      criterion3_halstead_identities);
    checker.criterion(4, "token census equals the brute-force oracle on every fixture",
                      criterion4_oracle_equivalence);
    checker.criterion(5, "property suite over 1000+ generated programs",
                      criterion5_property_suite);
    checker.criterion(6, "design metrics: fixture golden values and randomized identities",
                      criterion6_design_metrics);
    checker.criterion(7, "byte-identical JSON reports across runs", criterion7_determinism);

    if (checker.failures == 0) {
        std::cout << "all acceptance criteria pass\n";
        return 0;
    }
    std::cout << checker.failures << " criterion(s) failing\n";
    return 1;
}
