#include "tubix/realization.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace tubix {

WeightScheme::WeightScheme(std::string name, std::vector<BigInt> weights)
    : name_(std::move(name)), weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("weight scheme needs at least one weight");
  for (const BigInt& w : weights_)
    if (w < 0) throw std::invalid_argument("weights must be non-negative");
}

const BigInt& WeightScheme::weight(int k) const {
  if (k < 1 || k > max_size())
    throw std::out_of_range("weight requested for size " + std::to_string(k) + " outside [1, " +
                            std::to_string(max_size()) + "]");
  return weights_[k - 1];
}

WeightScheme scheme_power3(int n) {
  if (n < 2) throw std::invalid_argument("power3 scheme needs n >= 2");
  std::vector<BigInt> w{BigInt(0)};
  for (int k = 2; k <= n; ++k) w.push_back(pow_int(3, static_cast<unsigned>(k - 2)));
  return WeightScheme("power3", std::move(w));
}

WeightScheme scheme_loday(int n) {
  if (n < 2) throw std::invalid_argument("loday scheme needs n >= 2");
  std::vector<BigInt> w;
  for (int k = 1; k <= n; ++k) w.push_back(BigInt(k) * (k + 1) / 2);
  return WeightScheme("loday", std::move(w));
}

WeightScheme scheme_custom(const std::string& json_text, int n) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed weight file: ") + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("weight file must hold a JSON array");
  if (static_cast<int>(doc.size()) != n)
    throw std::invalid_argument("weight file lists " + std::to_string(doc.size()) + " weights, graph has " +
                                std::to_string(n) + " nodes");
  std::vector<BigInt> w;
  for (const auto& e : doc) {
    if (!e.is_string()) throw std::invalid_argument("weights must be decimal strings");
    w.push_back(parse_bigint(e.get<std::string>()));
  }
  return WeightScheme("custom", std::move(w));
}

std::optional<Tube> smallest_containing_tube(const Tubing& u, int v) {
  // Tubes are in canonical order, so the first hit has the least size.
  for (const Tube& t : u)
    if (t.contains(v)) return t;
  return std::nullopt;
}

Point compute_coordinates(const Graph& g, const Tubing& u, const WeightScheme& s) {
  const int n = g.n();
  if (n == 1) return Point{Rational(0)};
  if (s.max_size() < n) throw std::invalid_argument("weight scheme is shorter than the graph");

  std::vector<BigInt> f(n);
  NodeSet determined;
  // Canonical order is by increasing size; equal-size tubes of a tubing are
  // disjoint, so their order does not matter.
  for (const Tube& t : u) {
    NodeSet open = t.nodes() - determined;
    if (open.size() != 1)
      throw SolverError("tube of size " + std::to_string(t.size()) + " leaves " + std::to_string(open.size()) +
                        " undetermined nodes");
    BigInt known = 0;
    for (int x : (t.nodes() & determined).members()) known += f[x];
    int owner = open.lowest();
    f[owner] = s.weight(t.size()) - known;
    determined.insert(owner);
  }
  NodeSet root = g.all_nodes() - determined;
  if (root.size() != 1)
    throw SolverError(std::to_string(root.size()) + " nodes lie outside every tube; expected exactly one");
  BigInt known = 0;
  for (int x : determined.members()) known += f[x];
  f[root.lowest()] = s.weight(n) - known;

  Point p;
  p.reserve(n);
  for (auto& x : f) p.emplace_back(x);
  return p;
}

std::vector<RealizedVertex> realize(const TubeCatalog& cat, const WeightScheme& s) {
  const Graph& g = cat.graph();
  if (g.n() == 1) return {RealizedVertex{Tubing{}, Point{Rational(0)}}};
  std::vector<RealizedVertex> out;
  for (Tubing& u : enumerate_maximal_tubings(cat)) {
    Point p = compute_coordinates(g, u, s);
    out.push_back(RealizedVertex{std::move(u), std::move(p)});
  }
  if (s.name() == "power3") {
    std::set<Point> seen;
    for (const auto& v : out)
      if (!seen.insert(v.point).second) throw SolverError("two maximal tubings realize the same point");
  }
  return out;
}

std::vector<RealizedVertex> realize(const Graph& g, const WeightScheme& s) { return realize(TubeCatalog(g), s); }

HRep build_hrep(const TubeCatalog& cat, const WeightScheme& s) {
  const int n = cat.graph().n();
  if (s.max_size() < n) throw std::invalid_argument("weight scheme is shorter than the graph");
  HRep h;
  h.n = n;
  h.total = s.weight(n);
  h.halfspaces.reserve(cat.size());
  for (const Tube& t : cat.tubes()) h.halfspaces.push_back(HalfSpace{t, s.weight(t.size())});
  return h;
}

HRep build_hrep(const Graph& g, const WeightScheme& s) { return build_hrep(TubeCatalog(g), s); }

WeightConditionReport check_weight_condition(const WeightScheme& s, int n) {
  if (n < 3) throw std::invalid_argument("weight condition needs n >= 3");
  if (n > s.max_size()) throw std::invalid_argument("weight scheme is shorter than n");
  WeightConditionReport r;
  r.scheme = s.name();
  for (int k = 3; k <= n; ++k) {
    WeightConditionEntry e{k, s.weight(k), 2 * s.weight(k - 1), false};
    e.holds = e.weight > e.twice_previous;
    if (!e.holds && !r.first_failure) r.first_failure = k;
    r.pass = r.pass && e.holds;
    r.entries.push_back(std::move(e));
  }
  return r;
}

}  // namespace tubix
