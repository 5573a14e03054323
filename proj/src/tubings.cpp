#include "tubix/tubings.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tubix {

namespace {

// Subset enumeration is over all 2^n masks.
constexpr int kTubeEnumerationLimit = 30;

}  // namespace

bool is_tube(const Graph& g, NodeSet s) {
  return !s.empty() && s.size() < g.n() && s.subset_of(g.all_nodes()) && is_connected_subset(g, s);
}

Tube make_tube(const Graph& g, NodeSet s) {
  if (!is_tube(g, s)) throw TubingError("node set is not a tube of the graph");
  return Tube(s);
}

Tubing::Tubing(std::vector<Tube> tubes) : tubes_(std::move(tubes)) {
  std::sort(tubes_.begin(), tubes_.end());
  if (std::adjacent_find(tubes_.begin(), tubes_.end()) != tubes_.end())
    throw TubingError("tubing lists the same tube twice");
}

bool Tubing::contains(const Tube& t) const { return std::binary_search(tubes_.begin(), tubes_.end(), t); }

bool Tubing::includes(const Tubing& sub) const {
  return std::includes(tubes_.begin(), tubes_.end(), sub.tubes_.begin(), sub.tubes_.end());
}

std::string_view to_string(PairClass c) {
  switch (c) {
    case PairClass::Nested: return "nested";
    case PairClass::Intersecting: return "intersecting";
    case PairClass::Adjacent: return "adjacent";
    case PairClass::Far: return "far";
  }
  return "?";
}

PairClass classify_pair(const Graph& g, const Tube& u1, const Tube& u2) {
  if (u1 == u2) throw TubingError("cannot classify a tube against itself");
  NodeSet a = u1.nodes();
  NodeSet b = u2.nodes();
  if (a.subset_of(b) || b.subset_of(a)) return PairClass::Nested;
  if (a.intersects(b)) return PairClass::Intersecting;
  return is_connected_subset(g, a | b) ? PairClass::Adjacent : PairClass::Far;
}

bool are_compatible(const Graph& g, const Tube& u1, const Tube& u2) {
  PairClass c = classify_pair(g, u1, u2);
  return c == PairClass::Nested || c == PairClass::Far;
}

bool is_valid_tubing(const Graph& g, const std::vector<Tube>& tubes) {
  for (const Tube& t : tubes)
    if (!is_tube(g, t.nodes())) throw TubingError("tubing element is not a tube of the graph");
  for (std::size_t i = 0; i < tubes.size(); ++i)
    for (std::size_t j = i + 1; j < tubes.size(); ++j) {
      if (tubes[i] == tubes[j]) return false;
      if (!are_compatible(g, tubes[i], tubes[j])) return false;
    }
  auto comps = components(g);
  if (comps.size() >= 2) {
    bool all_present = std::all_of(comps.begin(), comps.end(), [&](NodeSet c) {
      return std::any_of(tubes.begin(), tubes.end(), [&](const Tube& t) { return t.nodes() == c; });
    });
    if (all_present) return false;
  }
  return true;
}

std::vector<Tube> enumerate_tubes(const Graph& g) {
  if (g.n() > kTubeEnumerationLimit)
    throw TubingError("tube enumeration supports at most " + std::to_string(kTubeEnumerationLimit) + " nodes");
  std::vector<NodeSet> sets;
  const std::uint64_t full = g.all_nodes().bits();
  for (std::uint64_t m = 1; m < full; ++m) {
    NodeSet s(m);
    if (is_connected_subset(g, s)) sets.push_back(s);
  }
  std::sort(sets.begin(), sets.end(), canonical_less);
  std::vector<Tube> out;
  out.reserve(sets.size());
  for (NodeSet s : sets) out.emplace_back(s);
  return out;
}

TubeCatalog::TubeCatalog(const Graph& g) : graph_(g), tubes_(enumerate_tubes(g)) {
  const std::size_t m = tubes_.size();
  compat_.assign(m, boost::dynamic_bitset<>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (are_compatible(graph_, tubes_[i], tubes_[j])) {
        compat_[i][j] = true;
        compat_[j][i] = true;
      }
  component_mask_.resize(m);
  auto comps = components(graph_);
  if (comps.size() >= 2) {
    component_count_ = comps.size();
    for (NodeSet c : comps) component_mask_[index_of(Tube(c))] = true;
  }
}

std::optional<std::size_t> TubeCatalog::index_of(NodeSet s) const {
  auto it = std::lower_bound(tubes_.begin(), tubes_.end(), Tube(s));
  if (it == tubes_.end() || it->nodes() != s) return std::nullopt;
  return static_cast<std::size_t>(it - tubes_.begin());
}

std::size_t TubeCatalog::index_of(const Tube& t) const {
  auto idx = index_of(t.nodes());
  if (!idx) throw TubingError("node set is not a tube of the graph");
  return *idx;
}

Tubing TubeCatalog::tubing_of(const std::vector<std::size_t>& indices) const {
  std::vector<Tube> ts;
  ts.reserve(indices.size());
  for (std::size_t i : indices) ts.push_back(tubes_[i]);
  return Tubing(std::move(ts));
}

std::vector<std::size_t> TubeCatalog::indices_of(const Tubing& u) const {
  std::vector<std::size_t> out;
  out.reserve(u.size());
  for (const Tube& t : u) out.push_back(index_of(t));
  return out;
}

namespace {

// Depth-first walk over valid tubings with at most max_size tubes, in
// increasing index order (which is canonical tubing order). The visitor sees
// the chosen indices and the tubes still compatible with all of them.
void walk_tubings(const TubeCatalog& cat, std::size_t max_size,
                  const std::function<void(const std::vector<std::size_t>&)>& visit) {
  const std::size_t m = cat.size();
  std::vector<std::size_t> chosen;
  std::function<void(const boost::dynamic_bitset<>&, std::size_t, std::size_t)> rec =
      [&](const boost::dynamic_bitset<>& candidates, std::size_t from, std::size_t components_used) {
        visit(chosen);
        if (chosen.size() == max_size) return;
        for (std::size_t j = (from == 0 ? candidates.find_first() : candidates.find_next(from - 1));
             j != boost::dynamic_bitset<>::npos; j = candidates.find_next(j)) {
          std::size_t used = components_used + (cat.component_tubes()[j] ? 1 : 0);
          if (cat.component_count() >= 2 && used == cat.component_count()) continue;
          chosen.push_back(j);
          rec(candidates & cat.compatible_with(j), j + 1, used);
          chosen.pop_back();
        }
      };
  boost::dynamic_bitset<> all(m);
  all.set();
  rec(all, 0, 0);
}

bool admits_extension(const TubeCatalog& cat, const std::vector<std::size_t>& chosen) {
  boost::dynamic_bitset<> cand(cat.size());
  cand.set();
  std::size_t used = 0;
  for (std::size_t i : chosen) {
    cand &= cat.compatible_with(i);
    if (cat.component_tubes()[i]) ++used;
  }
  for (std::size_t j = cand.find_first(); j != boost::dynamic_bitset<>::npos; j = cand.find_next(j)) {
    std::size_t u = used + (cat.component_tubes()[j] ? 1 : 0);
    if (cat.component_count() < 2 || u < cat.component_count()) return true;
  }
  return false;
}

}  // namespace

std::vector<Tubing> enumerate_tubings(const TubeCatalog& cat, std::optional<int> k) {
  const int n = cat.graph().n();
  if (k && (*k < 0 || *k > n - 1))
    throw TubingError("k must lie in [0, " + std::to_string(n - 1) + "]");
  std::vector<Tubing> out;
  std::size_t limit = k ? static_cast<std::size_t>(*k) : static_cast<std::size_t>(n - 1);
  walk_tubings(cat, limit, [&](const std::vector<std::size_t>& chosen) {
    if (!k || chosen.size() == static_cast<std::size_t>(*k)) out.push_back(cat.tubing_of(chosen));
  });
  if (!k) std::sort(out.begin(), out.end(), [](const Tubing& a, const Tubing& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<Tubing> enumerate_tubings(const Graph& g, std::optional<int> k) {
  return enumerate_tubings(TubeCatalog(g), k);
}

std::vector<Tubing> enumerate_maximal_tubings(const TubeCatalog& cat) {
  const int n = cat.graph().n();
  if (n < 2) throw TubingError("maximal tubings need at least 2 nodes");
  std::vector<Tubing> out;
  const auto target = static_cast<std::size_t>(n - 1);
  walk_tubings(cat, target, [&](const std::vector<std::size_t>& chosen) {
    if (chosen.size() != target) return;
    if (admits_extension(cat, chosen)) throw std::logic_error("an (n-1)-tubing admits a compatible extension");
    out.push_back(cat.tubing_of(chosen));
  });
  return out;
}

std::vector<Tubing> enumerate_maximal_tubings(const Graph& g) { return enumerate_maximal_tubings(TubeCatalog(g)); }

std::vector<Tubing> flip_neighbors(const TubeCatalog& cat, const Tubing& u) {
  const Graph& g = cat.graph();
  if (static_cast<int>(u.size()) != g.n() - 1 || !is_valid_tubing(g, u.tubes()))
    throw TubingError("flip_neighbors expects a maximal tubing");
  std::vector<std::size_t> idx = cat.indices_of(u);
  std::vector<Tubing> out;
  for (std::size_t r = 0; r < idx.size(); ++r) {
    boost::dynamic_bitset<> cand(cat.size());
    cand.set();
    std::size_t used = 0;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i == r) continue;
      rest.push_back(idx[i]);
      cand &= cat.compatible_with(idx[i]);
      if (cat.component_tubes()[idx[i]]) ++used;
    }
    cand[idx[r]] = false;
    for (std::size_t j = cand.find_first(); j != boost::dynamic_bitset<>::npos; j = cand.find_next(j)) {
      std::size_t c = used + (cat.component_tubes()[j] ? 1 : 0);
      if (cat.component_count() >= 2 && c == cat.component_count()) continue;
      auto next = rest;
      next.push_back(j);
      out.push_back(cat.tubing_of(next));
    }
  }
  return out;
}

std::vector<Tubing> flip_neighbors(const Graph& g, const Tubing& u) { return flip_neighbors(TubeCatalog(g), u); }

std::vector<std::uint64_t> f_vector(const TubeCatalog& cat) {
  const int n = cat.graph().n();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(std::max(n - 1, 0)), 0);
  walk_tubings(cat, counts.size(), [&](const std::vector<std::size_t>& chosen) {
    if (!chosen.empty()) ++counts[chosen.size() - 1];
  });
  return counts;
}

std::vector<std::uint64_t> f_vector(const Graph& g) { return f_vector(TubeCatalog(g)); }

}  // namespace tubix
