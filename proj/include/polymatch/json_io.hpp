#pragma once

#include <json.hpp>

#include "polymatch/complex.hpp"
#include "polymatch/graph.hpp"
#include "polymatch/homology.hpp"
#include "polymatch/homotopy.hpp"
#include "polymatch/reductions.hpp"

namespace polymatch {

// All emitters use ordered_json with fixed insertion order so repeated runs
// are byte-identical.
using Json = nlohmann::ordered_json;

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j); // throws std::invalid_argument on bad shape

// {"vertex_count": N, "faces": [[...], ...]} sorted by (dimension, lex).
Json complex_to_json(const SimplicialComplex& k);

// {"betti": {"-1": 0, ...}, "torsion": {"d": [factors]}, "euler": chi}.
// Betti entries run from -1 through top_dim inclusive, zeros included.
Json homology_to_json(const HomologyProfile& h, int top_dim);

Json homotopy_type_to_json(const HomotopyType& t); // {"type": ..., "spheres": {...}}
Json connectivity_to_json(const Connectivity& c);  // int or "inf"

Json trace_to_json(const std::vector<ReductionStep>& steps);

std::string dump(const Json& j); // 2-space indent, trailing newline

} // namespace polymatch
