#ifndef UNIMOD_IO_HPP
#define UNIMOD_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "unimod/families.hpp"
#include "unimod/graph.hpp"
#include "unimod/limits.hpp"
#include "unimod/measures.hpp"
#include "unimod/quotient.hpp"
#include "unimod/rational.hpp"

namespace unimod {

using Json = nlohmann::json;

// Graph: {"delta": int, "vertices": int, "edges": [[u,v], ...]}, 0-based ids,
// each edge listed once with u < v.
Json graph_to_json(const Graph& X);
Graph graph_from_json(const Json& j);

// Family spec: {"family": "T_ball", "n": 5, ...}; cayley additionally takes
// "table" (row-major) and "gens".
Json family_spec_to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const Json& j);

// A host is either a graph object or a family spec (distinguished by the
// presence of "family").  Returns the graph plus the family's root, if any.
Generated host_from_json(const Json& j);

// Measure: {"host": <graph or family spec>, "mass": [{"class_rep_vertex": int,
// "num": int, "den": int}, ...]}; each class named once via a representative.
Json measure_to_json(const SustainedMeasure& m, const Json& host);
SustainedMeasure measure_from_json(const Json& j);

// Quotient: {"orbits": [...], "edges": [{"a","b","m_ab","m_ba"}, ...],
// "ray_tail": {"m_fwd": int, "m_bwd": int} | null}.  With a ray tail, orbits
// are the prefix in order and edges join consecutive prefix positions.
struct QuotientInput {
    std::optional<LabeledQuotient> finite;
    std::optional<RayQuotient> ray;
};

Json quotient_to_json(const LabeledQuotient& Q);
Json quotient_to_json(const RayQuotient& Q);
QuotientInput quotient_from_json(const Json& j);

// Distribution: {"radius": r, "freq": [{"key": hex, "num": .., "den": ..}]},
// sorted by canonical key bytes; keys are hex-encoded.
Json distribution_to_json(const BallDistribution& d);
BallDistribution distribution_from_json(const Json& j);

std::string hex_encode(const std::string& bytes);
std::string hex_decode(const std::string& hex);

// Rational <-> {"num": .., "den": ..}; values are JSON integers when they fit
// in 64 bits and decimal strings otherwise.
void rat_to_json_fields(const Rational& q, Json& obj);
Rational rat_from_json_fields(const Json& obj);

Json load_json_file(const std::string& path);

}  // namespace unimod

#endif
