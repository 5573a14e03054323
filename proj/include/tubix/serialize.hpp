#ifndef TUBIX_SERIALIZE_HPP
#define TUBIX_SERIALIZE_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "tubix/graph.hpp"
#include "tubix/realization.hpp"
#include "tubix/tubings.hpp"
#include "tubix/verify.hpp"

namespace tubix {

using Json = nlohmann::ordered_json;

// {"n": .., "edges": [[a,b], ...], "names": [...]}, names only when present.
Json graph_to_json(const Graph& g);
std::string dump_graph(const Graph& g);

Json tube_to_json(const Tube& t);
// [[0],[0,1]]: inner arrays ascending, outer in canonical tube order.
Json tubing_to_json(const Tubing& u);
// Inverse of tubing_to_json; checks every element is a tube of g.
Tubing tubing_from_json(const Graph& g, const Json& doc);

// Exact decimal strings, "p/q" for non-integers.
Json point_to_json(const Point& p);

Json vertices_to_json(const WeightScheme& s, int n, const std::vector<RealizedVertex>& vertices);
Json hrep_to_json(const WeightScheme& s, const HRep& h);
Json check_to_json(const CheckResult& c);
Json report_to_json(const VerificationReport& r);
Json weight_condition_to_json(const WeightConditionReport& r);

}  // namespace tubix

#endif
