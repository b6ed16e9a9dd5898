#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polymatch/graph.hpp"
#include "polymatch/homotopy.hpp"

namespace polymatch {

// Expression over independence-complex homotopy types: leaves are residual
// graphs or closed values; inner nodes are wedge, join and suspension.
struct HomotopyExpr {
    enum class Node { GraphLeaf, Closed, Wedge, Join, Suspend };

    Node node = Node::Closed;
    Graph graph;                 // GraphLeaf
    HomotopyType closed;         // Closed
    int suspend_k = 0;           // Suspend
    std::vector<std::shared_ptr<const HomotopyExpr>> children;

    static std::shared_ptr<const HomotopyExpr> leaf(Graph g);
    static std::shared_ptr<const HomotopyExpr> value(HomotopyType t);
    static std::shared_ptr<const HomotopyExpr>
    wedge_node(std::vector<std::shared_ptr<const HomotopyExpr>> kids);
    static std::shared_ptr<const HomotopyExpr>
    join_node(std::vector<std::shared_ptr<const HomotopyExpr>> kids);
    static std::shared_ptr<const HomotopyExpr>
    suspend_node(int k, std::shared_ptr<const HomotopyExpr> kid);
};

// A residual graph leaf that is not a disjoint union of paths and cycles.
struct unresolved_leaf : std::runtime_error {
    Graph leaf;
    explicit unresolved_leaf(Graph g)
        : std::runtime_error("unresolved residual graph leaf"), leaf(std::move(g)) {}
};

// Closes an expression: graph leaves must split into path/cycle components
// (evaluated by the Kozlov table and joined); throws unresolved_leaf
// otherwise.
HomotopyType evaluate(const HomotopyExpr& e);

enum class Rule {
    ComponentSplit,
    KozlovLeaf,
    Fold,
    StringDelete,
    LinkContractibleDelete,
    SimplicialSplit,
};

std::string rule_name(Rule r);

struct ReductionStep {
    Rule rule;
    std::vector<VertexLabel> vertices; // removed vertices, or the split pivot
    uint64_t before_hash = 0;
    uint64_t after_hash = 0;
};

// -- individual rewrites ------------------------------------------------------

// Fold: if N(w) is contained in N(v), deleting v preserves the homotopy type
// of the independence complex. Returns the reduced graph or nothing.
std::optional<Graph> try_fold(const Graph& g, int v, int w);

// A pendant induced path (p_1 = v, ..., p_k) whose non-v vertices have no
// neighbors outside the path. Only lengths k = 3j + 2 qualify.
struct StringAtVertex {
    std::vector<int> path; // path[0] == v
    int j = 0;             // path length == 3j + 2
};
std::optional<StringAtVertex> find_string(const Graph& g, int v);

// With a (3j+2)-string at v whose first path vertex is w, deleting
// U = N(v) minus {w} preserves the homotopy type. Not applicable when no
// qualifying string exists or U is empty (vacuous rewrite).
std::optional<Graph> string_delete(const Graph& g, int v);

// Sound, incomplete contractibility certificate: some connected component
// is a path on 3j+1 vertices (an isolated vertex is the j = 0 case).
bool certify_contractible(const Graph& g);

// If the certificate accepts g minus N[v], deleting v preserves the
// homotopy type (the link of v is contractible).
std::optional<Graph> link_contractible_delete(const Graph& g, int v);

// If N(v) induces a complete graph, the complex splits as the wedge over
// w in N(v) of the suspension of the complex of g minus N[w].
std::optional<std::shared_ptr<const HomotopyExpr>> simplicial_split(const Graph& g, int v);

// -- orchestration -----------------------------------------------------------

using Strategy = std::vector<Rule>;
Strategy default_strategy();

struct ReductionResult {
    std::shared_ptr<const HomotopyExpr> expr;
    std::vector<ReductionStep> trace;
};

// Applies rules in priority order, lowest vertex index first, until no rule
// fires; deterministic given the strategy and vertex order.
ReductionResult reduce(const Graph& g, const Strategy& strategy = default_strategy());

} // namespace polymatch
