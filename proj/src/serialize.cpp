#include "tubix/serialize.hpp"

namespace tubix {

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.n();
  j["edges"] = Json::array();
  for (auto [a, b] : g.edges()) j["edges"].push_back(Json::array({a, b}));
  if (!g.names().empty()) j["names"] = g.names();
  return j;
}

std::string dump_graph(const Graph& g) { return graph_to_json(g).dump(); }

Json tube_to_json(const Tube& t) { return Json(t.nodes().members()); }

Json tubing_to_json(const Tubing& u) {
  Json j = Json::array();
  for (const Tube& t : u) j.push_back(tube_to_json(t));
  return j;
}

Tubing tubing_from_json(const Graph& g, const Json& doc) {
  if (!doc.is_array()) throw TubingError("tubing must be an array of node arrays");
  std::vector<Tube> tubes;
  for (const auto& arr : doc) {
    if (!arr.is_array()) throw TubingError("tubing must be an array of node arrays");
    NodeSet s;
    for (const auto& v : arr) {
      if (!v.is_number_integer()) throw TubingError("tube members must be integers");
      auto x = v.get<std::int64_t>();
      if (x < 0 || x >= g.n()) throw TubingError("tube member out of range");
      s.insert(static_cast<int>(x));
    }
    tubes.push_back(make_tube(g, s));
  }
  return Tubing(std::move(tubes));
}

Json point_to_json(const Point& p) {
  Json j = Json::array();
  for (const Rational& q : p) j.push_back(to_exact_string(q));
  return j;
}

Json vertices_to_json(const WeightScheme& s, int n, const std::vector<RealizedVertex>& vertices) {
  Json j;
  j["scheme"] = s.name();
  j["n"] = n;
  j["total"] = n == 1 ? std::string("0") : to_exact_string(s.weight(n));
  j["vertices"] = Json::array();
  for (const auto& v : vertices)
    j["vertices"].push_back(Json{{"tubing", tubing_to_json(v.tubing)}, {"point", point_to_json(v.point)}});
  return j;
}

Json hrep_to_json(const WeightScheme& s, const HRep& h) {
  Json j;
  j["scheme"] = s.name();
  j["n"] = h.n;
  std::vector<int> all;
  for (int i = 0; i < h.n; ++i) all.push_back(i);
  j["equality"] = Json{{"support", all}, {"rhs", to_exact_string(h.total)}};
  j["halfspaces"] = Json::array();
  for (const auto& hs : h.halfspaces)
    j["halfspaces"].push_back(Json{{"tube", tube_to_json(hs.tube)}, {"rhs", to_exact_string(hs.rhs)}});
  return j;
}

Json check_to_json(const CheckResult& c) {
  Json j{{"name", c.name}, {"status", std::string(to_string(c.status))}};
  if (c.witness) j["witness"] = *c.witness;
  return j;
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["graph"] = r.graph;
  j["scheme"] = r.scheme;
  j["checks"] = Json::array();
  for (const auto& c : r.checks) j["checks"].push_back(check_to_json(c));
  j["verdict"] = r.passed() ? "pass" : "fail";
  return j;
}

Json weight_condition_to_json(const WeightConditionReport& r) {
  Json j;
  j["scheme"] = r.scheme;
  j["entries"] = Json::array();
  for (const auto& e : r.entries)
    j["entries"].push_back(Json{{"k", e.k},
                                {"w_k", to_exact_string(e.weight)},
                                {"twice_w_k_minus_1", to_exact_string(e.twice_previous)},
                                {"holds", e.holds}});
  j["pass"] = r.pass;
  if (r.first_failure) j["first_failure"] = *r.first_failure;
  return j;
}

}  // namespace tubix
