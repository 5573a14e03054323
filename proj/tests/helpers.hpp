#ifndef TUBIX_TESTS_HELPERS_HPP
#define TUBIX_TESTS_HELPERS_HPP

#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tubix/graph.hpp"
#include "tubix/realization.hpp"
#include "tubix/tubings.hpp"

namespace testing {

inline oracle::SimpleGraph simple(const tubix::Graph& g) { return {g.n(), g.edges()}; }

inline oracle::Set to_set(tubix::NodeSet s) {
  auto m = s.members();
  return {m.begin(), m.end()};
}

inline std::vector<oracle::Set> to_sets(const tubix::Tubing& u) {
  std::vector<oracle::Set> out;
  for (const auto& t : u) out.push_back(to_set(t.nodes()));
  return out;
}

inline tubix::Tubing tubing(std::initializer_list<std::initializer_list<int>> tubes) {
  std::vector<tubix::Tube> ts;
  for (auto t : tubes) ts.emplace_back(tubix::NodeSet::of(t));
  return tubix::Tubing(std::move(ts));
}

inline tubix::Point point(std::initializer_list<long> xs) {
  tubix::Point p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

inline std::set<tubix::Point> point_set(const std::vector<tubix::RealizedVertex>& vs) {
  std::set<tubix::Point> out;
  for (const auto& v : vs) out.insert(v.point);
  return out;
}

inline tubix::Graph path(int n) { return tubix::generate_family(tubix::Family::Path, n); }
inline tubix::Graph cycle(int n) { return tubix::generate_family(tubix::Family::Cycle, n); }
inline tubix::Graph complete(int n) { return tubix::generate_family(tubix::Family::Complete, n); }
inline tubix::Graph empty(int n) { return tubix::generate_family(tubix::Family::Empty, n); }
inline tubix::Graph star(int n) { return tubix::generate_family(tubix::Family::Star, n); }

}  // namespace testing

#endif
