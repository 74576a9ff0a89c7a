#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmetrics/core.hpp"

namespace qmetrics {

/// Edge construction mode. The default adds, for every loop, a
/// final-iteration fallthrough edge from each loop-body terminal to the
/// loop's successor; `classical` is the textbook construction without it.
enum class CfgMode { loop_fallthrough, classical };

std::string_view to_string(CfgMode m);

/// Control-flow graph over the statements of one scope. Node ids are
/// scope-local positions (0-based, program order); there are no synthetic
/// entry/exit nodes.
struct Qcfg {
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;  // sorted, no duplicates, no self-loops
    std::vector<SourceSpan> node_spans;
    std::vector<StatementKind> node_kinds;
    CfgMode mode = CfgMode::loop_fallthrough;

    int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Builds the CFG of one module's statements. Edge rules:
///  (a) consecutive statements in a block are connected;
///  (b) loop header L with body B: L->first(B), terminals(B)->L,
///      L->succ(L), and (default mode) terminals(B)->succ(L);
///  (c) branch header C with body B: C->first(B), C->succ(C),
///      terminals(B)->succ(C);
///  (d) terminals of a block are its exit points, computed recursively
///      through trailing headers.
/// A trailing loop/branch with no successor simply omits the dangling
/// exit/fallthrough edges. Throws EmptyBodyError if a header has no body.
Qcfg build_qcfg(const QProgram& program, const QModule& scope,
                CfgMode mode = CfgMode::loop_fallthrough);

/// CFG of the program's top-level flow (the synthetic main module).
Qcfg build_qcfg(const QProgram& program, CfgMode mode = CfgMode::loop_fallthrough);

/// edge_count - node_count + 2. Throws EmptyGraphError when node_count == 0.
int cyclomatic(const Qcfg& g);

/// Graphviz text, one node per statement labeled "<line>: <kind>".
std::string to_dot(const Qcfg& g, std::string_view graph_name = "qcfg");

}  // namespace qmetrics
