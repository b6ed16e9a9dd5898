#include "polymatch/json_io.hpp"

#include <cinttypes>
#include <cstdio>

namespace polymatch {

namespace {

std::string hash_hex(uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

Json label_to_json(const VertexLabel& l) {
    Json j;
    switch (l.kind) {
        case VertexLabel::Kind::A:
            j["kind"] = "a";
            j["i"] = l.i;
            break;
        case VertexLabel::Kind::B:
        case VertexLabel::Kind::C:
            j["kind"] = l.kind == VertexLabel::Kind::B ? "b" : "c";
            j["i"] = l.i;
            j["j"] = l.j;
            break;
        case VertexLabel::Kind::Opaque:
            j["kind"] = "opaque";
            j["id"] = l.i;
            break;
    }
    return j;
}

VertexLabel label_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw std::invalid_argument("graph JSON: bad vertex label");
    std::string kind = j["kind"].get<std::string>();
    auto geti = [&](const char* key) {
        if (!j.contains(key) || !j[key].is_number_integer())
            throw std::invalid_argument("graph JSON: bad vertex label field");
        return j[key].get<int>();
    };
    if (kind == "a") return VertexLabel::a(geti("i"));
    if (kind == "b") return VertexLabel::b(geti("i"), geti("j"));
    if (kind == "c") return VertexLabel::c(geti("i"), geti("j"));
    if (kind == "opaque") return VertexLabel::opaque(geti("id"));
    throw std::invalid_argument("graph JSON: unknown label kind");
}

} // namespace

Json graph_to_json(const Graph& g) {
    Json j;
    j["vertices"] = Json::array();
    for (int v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(label_to_json(g.label(v)));
    j["edges"] = Json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back(Json::array({u, v}));
    return j;
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array() ||
        !j.contains("edges") || !j["edges"].is_array())
        throw std::invalid_argument("graph JSON: expected {\"vertices\": [...], \"edges\": [...]}");
    std::vector<VertexLabel> labels;
    for (const Json& l : j["vertices"]) labels.push_back(label_from_json(l));
    Graph g(std::move(labels));
    for (const Json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw std::invalid_argument("graph JSON: bad edge");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

Json complex_to_json(const SimplicialComplex& k) {
    Json j;
    j["vertex_count"] = k.vertex_count;
    j["faces"] = Json::array();
    for (const auto& fd : k.faces_by_dim)
        for (const auto& face : fd) j["faces"].push_back(face);
    return j;
}

Json homology_to_json(const HomologyProfile& h, int top_dim) {
    Json j;
    Json betti;
    for (int d = -1; d <= top_dim; ++d) betti[std::to_string(d)] = h.betti_at(d);
    for (auto [d, b] : h.betti)
        if (d > top_dim) betti[std::to_string(d)] = b;
    j["betti"] = std::move(betti);
    Json tor = Json::object();
    for (const auto& [d, factors] : h.torsion) tor[std::to_string(d)] = factors;
    j["torsion"] = std::move(tor);
    j["euler"] = h.reduced_euler();
    return j;
}

Json homotopy_type_to_json(const HomotopyType& t) {
    Json j;
    switch (t.kind) {
        case HomotopyType::Kind::Point:
            j["type"] = "point";
            j["spheres"] = Json::object();
            break;
        case HomotopyType::Kind::Empty:
            j["type"] = "empty";
            j["spheres"] = Json::object();
            break;
        case HomotopyType::Kind::Wedge: {
            j["type"] = "wedge";
            Json s = Json::object();
            for (auto [d, c] : t.spheres) s[std::to_string(d)] = c;
            j["spheres"] = std::move(s);
            break;
        }
    }
    return j;
}

Json connectivity_to_json(const Connectivity& c) {
    if (c.infinite) return Json("inf");
    return Json(c.value);
}

Json trace_to_json(const std::vector<ReductionStep>& steps) {
    Json out = Json::array();
    for (const ReductionStep& s : steps) {
        Json j;
        j["rule"] = rule_name(s.rule);
        Json vs = Json::array();
        for (const VertexLabel& l : s.vertices) vs.push_back(l.to_string());
        j["vertices"] = std::move(vs);
        j["before_hash"] = hash_hex(s.before_hash);
        j["after_hash"] = hash_hex(s.after_hash);
        out.push_back(std::move(j));
    }
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace polymatch
