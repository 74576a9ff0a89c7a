#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gen {

/// A generated dialect program plus the construct counts knowingly put in.
struct ProgramSpec {
    std::string source;
    int loops = 0;
    int branches = 0;
};

class DialectProgramGen {
public:
    explicit DialectProgramGen(std::uint32_t seed) : rng_(seed) {}

    /// Free-form program: gates, measures, classical lines, loops and
    /// branches nested up to depth 2. One statement per line, at most
    /// `max_statements` statements.
    ProgramSpec random_program(int max_statements) {
        ProgramSpec spec;
        std::ostringstream out;
        emit_prelude(out);
        budget_ = max_statements - 4;  // prelude + trailing print
        while (budget_ > 0) emit_item(out, spec, 0, /*allow_blocks=*/true);
        out << "print(c)\n";
        spec.source = out.str();
        return spec;
    }

    /// One top-level loop/branch construct with a straight-line body, as
    /// text. Sequencing these keeps the per-construct cyclomatic deltas
    /// exact.
    struct ConstructBlock {
        bool is_loop = false;
        std::string text;
    };

    ConstructBlock random_construct() {
        ConstructBlock c;
        c.is_loop = chance(2);
        std::ostringstream out;
        if (c.is_loop) {
            out << "for i in range(" << pick(2, 5) << "):\n";
        } else {
            out << "if flag == " << pick(0, 3) << ":\n";
        }
        int body = pick(1, 3);
        for (int b = 0; b < body; ++b) out << "    " << plain_line();
        c.text = out.str();
        return c;
    }

    std::string prelude() {
        std::ostringstream out;
        emit_prelude(out);
        return out.str();
    }

    /// Branch-only program with at most `max_statements` statements
    /// (acyclic CFG, single sink).
    std::string branch_only(int max_statements) {
        std::ostringstream out;
        int remaining = max_statements - 1;  // trailing print
        while (remaining > 0) {
            if (remaining >= 3 && chance(2)) {
                out << "if flag == " << pick(0, 2) << ":\n";
                out << "    v" << pick(0, 4) << " = " << pick(0, 9) << "\n";
                remaining -= 2;
            } else {
                out << "v" << pick(0, 4) << " = " << pick(0, 9) << "\n";
                remaining -= 1;
            }
        }
        out << "print(v0)\n";
        return out.str();
    }

    std::string plain_line() {
        switch (pick(0, 4)) {
            case 0: return gate1_line();
            case 1: return gate2_line();
            case 2: return measure_line();
            case 3: return assign_line();
            default: return "print(c)\n";
        }
    }

    std::mt19937& rng() { return rng_; }

private:
    void emit_prelude(std::ostringstream& out) {
        out << "q = QuantumRegister(" << pick(1, 5) << ")\n";
        out << "c = ClassicalRegister(" << pick(1, 5) << ")\n";
        out << "circuit = QuantumCircuit(q, c)\n";
        out << "flag = " << pick(0, 3) << "\n";
    }

    void emit_item(std::ostringstream& out, ProgramSpec& spec, int depth, bool allow_blocks) {
        std::string indent(4 * static_cast<std::size_t>(depth), ' ');
        bool blocks_ok = allow_blocks && depth < 2 && budget_ >= 2;
        int choice = pick(0, blocks_ok ? 6 : 4);
        switch (choice) {
            case 0: out << indent << gate1_line(); --budget_; break;
            case 1: out << indent << gate2_line(); --budget_; break;
            case 2: out << indent << measure_line(); --budget_; break;
            case 3: out << indent << assign_line(); --budget_; break;
            case 4: out << indent << "print(flag)\n"; --budget_; break;
            case 5: {
                out << indent << "for i" << depth << " in range(" << pick(1, 4) << "):\n";
                ++spec.loops;
                --budget_;
                emit_block(out, spec, depth + 1);
                break;
            }
            default: {
                out << indent << "if flag == " << pick(0, 3) << ":\n";
                ++spec.branches;
                --budget_;
                emit_block(out, spec, depth + 1);
                break;
            }
        }
    }

    void emit_block(std::ostringstream& out, ProgramSpec& spec, int depth) {
        int body = std::min(pick(1, 3), budget_ > 0 ? budget_ : 1);
        for (int i = 0; i < body; ++i) emit_item(out, spec, depth, budget_ >= 2);
    }

    std::string gate1_line() {
        static const char* gates[] = {"h", "x", "y", "z", "s", "t"};
        std::ostringstream line;
        line << "circuit." << gates[pick(0, 5)] << "(q[" << pick(0, 4) << "])\n";
        return line.str();
    }

    std::string gate2_line() {
        static const char* gates[] = {"cx", "cz", "swap"};
        std::ostringstream line;
        line << "circuit." << gates[pick(0, 2)] << "(q[" << pick(0, 4) << "], q[" << pick(0, 4)
             << "])\n";
        return line.str();
    }

    std::string measure_line() {
        std::ostringstream line;
        line << "circuit.measure(q[" << pick(0, 4) << "], c[" << pick(0, 4) << "])\n";
        return line.str();
    }

    std::string assign_line() {
        std::ostringstream line;
        line << "v" << pick(0, 4) << " = " << pick(0, 9) << " + " << pick(0, 9) << "\n";
        return line.str();
    }

    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool chance(int one_in) { return pick(1, one_in) == 1; }

    std::mt19937 rng_;
    int budget_ = 0;
};

// ---------------------------------------------------------------------------
// Random design documents (always schema-valid)
// ---------------------------------------------------------------------------

class DesignDocGen {
public:
    explicit DesignDocGen(std::uint32_t seed) : rng_(seed) {}

    std::string arch_doc() {
        nlohmann::json doc;
        doc["components"] = nlohmann::json::array();
        int n = pick(0, 8);
        for (int i = 0; i < n; ++i) {
            doc["components"].push_back(
                {{"name", "comp" + std::to_string(i)},
                 {"kind", chance(2) ? "quantum" : "classical"}});
        }
        doc["connectors"] = nlohmann::json::array();
        if (n > 0) {
            int m = pick(0, 10);
            for (int i = 0; i < m; ++i) {
                doc["connectors"].push_back(
                    {{"from", "comp" + std::to_string(pick(0, n - 1))},
                     {"to", "comp" + std::to_string(pick(0, n - 1))}});
            }
        }
        return doc.dump(2);
    }

    std::string patterns_doc() {
        nlohmann::json doc;
        doc["patterns"] = nlohmann::json::array();
        int n = pick(0, 6);
        for (int i = 0; i < n; ++i) {
            nlohmann::json instances = nlohmann::json::array();
            int k = pick(1, 4);
            for (int j = 0; j < k; ++j)
                instances.push_back("inst" + std::to_string(i) + "_" + std::to_string(j));
            doc["patterns"].push_back({{"type", "pattern" + std::to_string(i)},
                                       {"quantum", chance(2)},
                                       {"instances", instances}});
        }
        return doc.dump(2);
    }

    std::string quml_doc() {
        nlohmann::json doc;
        doc["classes"] = nlohmann::json::array();
        int n = pick(0, 5);
        for (int i = 0; i < n; ++i) {
            nlohmann::json cls;
            cls["name"] = "Class" + std::to_string(i);
            cls["quantum"] = chance(2);
            for (const char* field : {"attributes", "methods", "interfaces"}) {
                nlohmann::json arr = nlohmann::json::array();
                int k = pick(0, 3);
                for (int j = 0; j < k; ++j)
                    arr.push_back({{"name", std::string(field) + std::to_string(j)},
                                   {"quantum", chance(2)}});
                cls[field] = arr;
            }
            nlohmann::json elements = nlohmann::json::array();
            int k = pick(0, 3);
            for (int j = 0; j < k; ++j)
                elements.push_back({{"name", "element" + std::to_string(j)},
                                    {"kind", chance(2) ? "variable" : "operation"},
                                    {"quantum", chance(2)}});
            cls["elements"] = elements;
            doc["classes"].push_back(cls);
        }
        return doc.dump(2);
    }

private:
    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool chance(int one_in) { return pick(1, one_in) == 1; }

    std::mt19937 rng_;
};

}  // namespace gen
