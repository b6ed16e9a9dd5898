#include "polymatch/reductions.hpp"

#include <algorithm>

namespace polymatch {

std::shared_ptr<const HomotopyExpr> HomotopyExpr::leaf(Graph g) {
    auto e = std::make_shared<HomotopyExpr>();
    e->node = Node::GraphLeaf;
    e->graph = std::move(g);
    return e;
}

std::shared_ptr<const HomotopyExpr> HomotopyExpr::value(HomotopyType t) {
    auto e = std::make_shared<HomotopyExpr>();
    e->node = Node::Closed;
    e->closed = std::move(t);
    return e;
}

std::shared_ptr<const HomotopyExpr>
HomotopyExpr::wedge_node(std::vector<std::shared_ptr<const HomotopyExpr>> kids) {
    auto e = std::make_shared<HomotopyExpr>();
    e->node = Node::Wedge;
    e->children = std::move(kids);
    return e;
}

std::shared_ptr<const HomotopyExpr>
HomotopyExpr::join_node(std::vector<std::shared_ptr<const HomotopyExpr>> kids) {
    auto e = std::make_shared<HomotopyExpr>();
    e->node = Node::Join;
    e->children = std::move(kids);
    return e;
}

std::shared_ptr<const HomotopyExpr>
HomotopyExpr::suspend_node(int k, std::shared_ptr<const HomotopyExpr> kid) {
    auto e = std::make_shared<HomotopyExpr>();
    e->node = Node::Suspend;
    e->suspend_k = k;
    e->children.push_back(std::move(kid));
    return e;
}

namespace {

// Homotopy type of a disjoint union of paths and cycles via the Kozlov
// table; nullopt if some component is neither.
std::optional<HomotopyType> closed_type_of_graph(const Graph& g) {
    HomotopyType acc = HomotopyType::empty(); // join identity
    for (const Graph& comp : connected_components(g)) {
        if (is_path_graph(comp))
            acc = join(acc, kozlov(CurveFamily::Path, comp.vertex_count()));
        else if (is_cycle_graph(comp))
            acc = join(acc, kozlov(CurveFamily::Cycle, comp.vertex_count()));
        else
            return std::nullopt;
    }
    return acc;
}

} // namespace

HomotopyType evaluate(const HomotopyExpr& e) {
    switch (e.node) {
        case HomotopyExpr::Node::Closed: return e.closed;
        case HomotopyExpr::Node::GraphLeaf: {
            auto t = closed_type_of_graph(e.graph);
            if (!t) throw unresolved_leaf(e.graph);
            return *t;
        }
        case HomotopyExpr::Node::Wedge: {
            std::vector<HomotopyType> kids;
            kids.reserve(e.children.size());
            for (const auto& k : e.children) kids.push_back(evaluate(*k));
            return wedge(kids);
        }
        case HomotopyExpr::Node::Join: {
            HomotopyType acc = HomotopyType::empty();
            for (const auto& k : e.children) acc = join(acc, evaluate(*k));
            return acc;
        }
        case HomotopyExpr::Node::Suspend: return suspend(evaluate(*e.children.front()), e.suspend_k);
    }
    throw std::logic_error("evaluate: bad node");
}

std::string rule_name(Rule r) {
    switch (r) {
        case Rule::ComponentSplit: return "COMPONENT_SPLIT";
        case Rule::KozlovLeaf: return "KOZLOV_LEAF";
        case Rule::Fold: return "FOLD";
        case Rule::StringDelete: return "STRING_DELETE";
        case Rule::LinkContractibleDelete: return "LINK_CONTRACTIBLE_DELETE";
        case Rule::SimplicialSplit: return "SIMPLICIAL_SPLIT";
    }
    return "?";
}

std::optional<Graph> try_fold(const Graph& g, int v, int w) {
    if (v == w) throw std::invalid_argument("try_fold: vertices must be distinct");
    const auto& nw = g.neighbors(w);
    const auto& nv = g.neighbors(v);
    if (!std::includes(nv.begin(), nv.end(), nw.begin(), nw.end())) return std::nullopt;
    return delete_vertex(g, v);
}

std::optional<StringAtVertex> find_string(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("find_string: vertex out of range");
    for (int u : g.neighbors(v)) {
        // walk the pendant path v, u, ...; interior vertices need degree 2
        // and the tip degree 1, with no step back into the path
        std::vector<int> path{v, u};
        std::vector<char> on_path(g.vertex_count(), 0);
        on_path[v] = on_path[u] = 1;
        int prev = v, cur = u;
        bool ok = false;
        while (true) {
            int deg = g.degree(cur);
            if (deg == 1) {
                ok = true;
                break;
            }
            if (deg != 2) break;
            int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            if (on_path[next]) break; // cycle or chord
            path.push_back(next);
            on_path[next] = 1;
            prev = cur;
            cur = next;
        }
        if (!ok) continue;
        int k = static_cast<int>(path.size());
        if (k % 3 == 2) return StringAtVertex{std::move(path), (k - 2) / 3};
    }
    return std::nullopt;
}

std::optional<Graph> string_delete(const Graph& g, int v) {
    auto s = find_string(g, v);
    if (!s) return std::nullopt;
    int w = s->path[1];
    std::vector<int> u;
    for (int x : g.neighbors(v))
        if (x != w) u.push_back(x);
    if (u.empty()) return std::nullopt; // vacuous rewrite
    return delete_vertices(g, u);
}

bool certify_contractible(const Graph& g) {
    for (const auto& vs : component_vertex_sets(g)) {
        if (static_cast<int>(vs.size()) % 3 != 1) continue;
        Graph comp = induced_subgraph(g, vs);
        if (is_path_graph(comp)) return true;
    }
    return false;
}

std::optional<Graph> link_contractible_delete(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("link_contractible_delete: vertex out of range");
    if (!certify_contractible(delete_closed_neighborhood(g, v))) return std::nullopt;
    return delete_vertex(g, v);
}

namespace {

bool is_simplicial(const Graph& g, int v) {
    const auto& nv = g.neighbors(v);
    for (size_t x = 0; x < nv.size(); ++x)
        for (size_t y = x + 1; y < nv.size(); ++y)
            if (!g.has_edge(nv[x], nv[y])) return false;
    return true;
}

} // namespace

std::optional<std::shared_ptr<const HomotopyExpr>> simplicial_split(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("simplicial_split: vertex out of range");
    if (!is_simplicial(g, v)) return std::nullopt;
    std::vector<std::shared_ptr<const HomotopyExpr>> kids;
    for (int w : g.neighbors(v))
        kids.push_back(HomotopyExpr::suspend_node(1, HomotopyExpr::leaf(delete_closed_neighborhood(g, w))));
    if (kids.empty()) return HomotopyExpr::value(HomotopyType::point()); // isolated v
    if (kids.size() == 1) return kids.front();
    return HomotopyExpr::wedge_node(std::move(kids));
}

Strategy default_strategy() {
    return {Rule::ComponentSplit, Rule::KozlovLeaf,   Rule::Fold,
            Rule::StringDelete,   Rule::LinkContractibleDelete, Rule::SimplicialSplit};
}

namespace {

uint64_t hash_mix(uint64_t h, uint64_t x) {
    for (int b = 0; b < 8; ++b) {
        h ^= (x >> (8 * b)) & 0xff;
        h *= 1099511628211ull;
    }
    return h;
}

uint64_t hash_of_graphs(const std::vector<Graph>& gs) {
    uint64_t h = 1469598103934665603ull;
    for (const Graph& g : gs) h = hash_mix(h, g.digest());
    return h;
}

uint64_t hash_of_string(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

struct Reducer {
    const Strategy& strategy;
    std::vector<ReductionStep>& trace;

    std::shared_ptr<const HomotopyExpr> run(const Graph& g) {
        if (g.vertex_count() == 0) return HomotopyExpr::value(HomotopyType::empty());
        for (Rule r : strategy) {
            auto out = apply_rule(g, r);
            if (out) return out;
        }
        return HomotopyExpr::leaf(g);
    }

    std::shared_ptr<const HomotopyExpr> apply_rule(const Graph& g, Rule r) {
        switch (r) {
            case Rule::ComponentSplit: {
                auto comps = connected_components(g);
                if (comps.size() < 2) return nullptr;
                trace.push_back({r, {}, g.digest(), hash_of_graphs(comps)});
                std::vector<std::shared_ptr<const HomotopyExpr>> kids;
                kids.reserve(comps.size());
                for (const Graph& c : comps) kids.push_back(run(c));
                return HomotopyExpr::join_node(std::move(kids));
            }
            case Rule::KozlovLeaf: {
                std::optional<HomotopyType> t;
                if (is_path_graph(g))
                    t = kozlov(CurveFamily::Path, g.vertex_count());
                else if (is_cycle_graph(g))
                    t = kozlov(CurveFamily::Cycle, g.vertex_count());
                if (!t) return nullptr;
                trace.push_back({r, {}, g.digest(), hash_of_string(t->to_string())});
                return HomotopyExpr::value(*t);
            }
            case Rule::Fold: {
                for (int v = 0; v < g.vertex_count(); ++v)
                    for (int w = 0; w < g.vertex_count(); ++w) {
                        if (w == v) continue;
                        auto out = try_fold(g, v, w);
                        if (!out) continue;
                        trace.push_back({r, {g.label(v), g.label(w)}, g.digest(), out->digest()});
                        return run(*out);
                    }
                return nullptr;
            }
            case Rule::StringDelete: {
                for (int v = 0; v < g.vertex_count(); ++v) {
                    auto out = string_delete(g, v);
                    if (!out) continue;
                    trace.push_back({r, {g.label(v)}, g.digest(), out->digest()});
                    return run(*out);
                }
                return nullptr;
            }
            case Rule::LinkContractibleDelete: {
                for (int v = 0; v < g.vertex_count(); ++v) {
                    auto out = link_contractible_delete(g, v);
                    if (!out) continue;
                    trace.push_back({r, {g.label(v)}, g.digest(), out->digest()});
                    return run(*out);
                }
                return nullptr;
            }
            case Rule::SimplicialSplit: {
                for (int v = 0; v < g.vertex_count(); ++v) {
                    if (!is_simplicial(g, v)) continue;
                    std::vector<Graph> parts;
                    for (int w : g.neighbors(v)) parts.push_back(delete_closed_neighborhood(g, w));
                    trace.push_back({r, {g.label(v)}, g.digest(), hash_of_graphs(parts)});
                    std::vector<std::shared_ptr<const HomotopyExpr>> kids;
                    kids.reserve(parts.size());
                    for (const Graph& p : parts) kids.push_back(HomotopyExpr::suspend_node(1, run(p)));
                    if (kids.empty()) return HomotopyExpr::value(HomotopyType::point());
                    if (kids.size() == 1) return kids.front();
                    return HomotopyExpr::wedge_node(std::move(kids));
                }
                return nullptr;
            }
        }
        return nullptr;
    }
};

} // namespace

ReductionResult reduce(const Graph& g, const Strategy& strategy) {
    ReductionResult res;
    Reducer red{strategy, res.trace};
    res.expr = red.run(g);
    return res;
}

} // namespace polymatch
