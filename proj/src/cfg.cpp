#include "qmetrics/cfg.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "qmetrics/errors.hpp"

namespace qmetrics {

std::string_view to_string(CfgMode m) {
    switch (m) {
        case CfgMode::loop_fallthrough: return "loop-fallthrough";
        case CfgMode::classical: return "classical";
    }
    return "?";
}

namespace {

class Builder {
public:
    Builder(const QProgram& program, const QModule& scope, CfgMode mode)
        : program_(program), mode_(mode), scope_(scope.statement_indices) {}

    Qcfg run() {
        Qcfg g;
        g.mode = mode_;
        g.node_count = static_cast<int>(scope_.size());
        for (int idx : scope_) {
            g.node_spans.push_back(program_.statements[idx].span);
            g.node_kinds.push_back(program_.statements[idx].kind);
        }
        if (!scope_.empty()) process_block(0, static_cast<int>(scope_.size()) - 1);
        g.edges.assign(edges_.begin(), edges_.end());
        return g;
    }

private:
    const QStatement& stmt_at(int pos) const { return program_.statements[scope_[pos]]; }

    bool is_header(int pos) const {
        StatementKind k = stmt_at(pos).kind;
        return k == StatementKind::loop_header || k == StatementKind::branch_header;
    }

    // Scope-local position of a header's last body statement.
    int body_end_pos(int header_pos) const {
        int global_end = stmt_at(header_pos).body_end;
        auto it = std::lower_bound(scope_.begin(), scope_.end(), global_end);
        if (it == scope_.end() || *it != global_end || global_end <= scope_[header_pos])
            throw EmptyBodyError(stmt_at(header_pos).span);
        return static_cast<int>(it - scope_.begin());
    }

    void add_edge(int from, int to) {
        assert(from != to);
        edges_.insert({from, to});
    }

    void connect(const std::vector<int>& froms, int to) {
        for (int f : froms) add_edge(f, to);
    }

    // Wires one block [lo, hi] and returns its exit nodes: the nodes control
    // leaves from when the block completes.
    std::vector<int> process_block(int lo, int hi) {
        std::vector<int> prev_exits;
        int pos = lo;
        bool first = true;
        while (pos <= hi) {
            int head = pos;
            std::vector<int> exits;
            if (is_header(head)) {
                int end = body_end_pos(head);
                add_edge(head, head + 1);  // body entry
                std::vector<int> body_terminals = process_block(head + 1, end);
                if (stmt_at(head).kind == StatementKind::loop_header) {
                    connect(body_terminals, head);  // back edges
                    exits.push_back(head);          // loop exit
                    if (mode_ == CfgMode::loop_fallthrough) {
                        // final-iteration fallthrough
                        exits.insert(exits.end(), body_terminals.begin(), body_terminals.end());
                    }
                } else {
                    exits.push_back(head);  // branch not taken
                    exits.insert(exits.end(), body_terminals.begin(), body_terminals.end());
                }
                pos = end + 1;
            } else {
                exits.push_back(head);
                pos = head + 1;
            }
            if (!first) connect(prev_exits, head);
            first = false;
            prev_exits = std::move(exits);
        }
        return prev_exits;
    }

    const QProgram& program_;
    CfgMode mode_;
    const std::vector<int>& scope_;
    std::set<std::pair<int, int>> edges_;
};

}  // namespace

Qcfg build_qcfg(const QProgram& program, const QModule& scope, CfgMode mode) {
    return Builder(program, scope, mode).run();
}

Qcfg build_qcfg(const QProgram& program, CfgMode mode) {
    return build_qcfg(program, program.main_module(), mode);
}

int cyclomatic(const Qcfg& g) {
    if (g.node_count == 0) throw EmptyGraphError();
    return g.edge_count() - g.node_count + 2;
}

std::string to_dot(const Qcfg& g, std::string_view graph_name) {
    std::ostringstream out;
    out << "digraph " << graph_name << " {\n";
    out << "  node [shape=box];\n";
    for (int i = 0; i < g.node_count; ++i) {
        out << "  n" << i << " [label=\"" << g.node_spans[i].line << ": "
            << to_string(g.node_kinds[i]) << "\"];\n";
    }
    for (const auto& [from, to] : g.edges) {
        out << "  n" << from << " -> n" << to << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace qmetrics
