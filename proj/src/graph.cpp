#include "tubix/graph.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace tubix {

std::vector<int> NodeSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

bool canonical_less(NodeSet a, NodeSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Same cardinality: the first differing member decides, and the set owning
  // the smaller one at that position is lexicographically smaller.
  std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  int first = std::countr_zero(diff);
  return a.contains(first);
}

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> names)
    : n_(n), edges_(std::move(edges)), names_(std::move(names)) {
  if (n_ < 1) throw GraphError("graph must have at least one node");
  if (n_ > kMaxNodes) throw GraphError("graph has " + std::to_string(n_) + " nodes; at most 64 are supported");
  if (!names_.empty() && static_cast<int>(names_.size()) != n_)
    throw GraphError("names has " + std::to_string(names_.size()) + " entries, expected " + std::to_string(n_));
  adjacency_.assign(n_, NodeSet{});
  for (auto [a, b] : edges_) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
      throw GraphError("edge [" + std::to_string(a) + "," + std::to_string(b) + "] has an endpoint out of range");
    if (a == b) throw GraphError("self-loop at node " + std::to_string(a));
    if (adjacency_[a].contains(b))
      throw GraphError("duplicate edge [" + std::to_string(a) + "," + std::to_string(b) + "]");
    adjacency_[a].insert(b);
    adjacency_[b].insert(a);
  }
}

Graph parse_graph(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw GraphError(std::string("malformed graph JSON: ") + e.what());
  }
  if (!doc.is_object()) throw GraphError("graph JSON must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "n" && key != "edges" && key != "names") throw GraphError("unknown graph field '" + key + "'");
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw GraphError("graph JSON needs an integer \"n\"");
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw GraphError("graph JSON needs an \"edges\" array");

  auto n64 = doc["n"].get<std::int64_t>();
  if (n64 < 1 || n64 > kMaxNodes) throw GraphError("\"n\" must be between 1 and 64");
  std::vector<Graph::Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw GraphError("each edge must be a 2-element integer array");
    auto a = e[0].get<std::int64_t>();
    auto b = e[1].get<std::int64_t>();
    if (a < 0 || a >= n64 || b < 0 || b >= n64)
      throw GraphError("edge [" + std::to_string(a) + "," + std::to_string(b) + "] has an endpoint out of range");
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  std::vector<std::string> names;
  if (doc.contains("names")) {
    if (!doc["names"].is_array()) throw GraphError("\"names\" must be an array of strings");
    for (const auto& s : doc["names"]) {
      if (!s.is_string()) throw GraphError("\"names\" must be an array of strings");
      names.push_back(s.get<std::string>());
    }
  }
  return Graph(static_cast<int>(n64), std::move(edges), std::move(names));
}

std::optional<Family> family_from_string(std::string_view name) {
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "complete") return Family::Complete;
  if (name == "star") return Family::Star;
  if (name == "empty") return Family::Empty;
  return std::nullopt;
}

std::string_view to_string(Family kind) {
  switch (kind) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::Star: return "star";
    case Family::Empty: return "empty";
  }
  return "?";
}

Graph generate_family(Family kind, int n) {
  if (n < 1) throw GraphError("family size must be at least 1");
  if (kind == Family::Cycle && n < 3) throw GraphError("a cycle needs at least 3 nodes");
  std::vector<Graph::Edge> edges;
  switch (kind) {
    case Family::Path:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::Cycle:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 1, 0);
      break;
    case Family::Complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      break;
    case Family::Star:
      for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
      break;
    case Family::Empty:
      break;
  }
  return Graph(n, std::move(edges));
}

bool is_connected_subset(const Graph& g, NodeSet s) {
  if (s.empty()) return false;
  NodeSet reached = NodeSet::single(s.lowest());
  NodeSet frontier = reached;
  while (!frontier.empty()) {
    NodeSet next;
    for (int v : frontier.members()) next |= g.neighbors(v);
    next = (next & s) - reached;
    reached |= next;
    frontier = next;
  }
  return reached == s;
}

std::vector<NodeSet> components(const Graph& g) {
  std::vector<NodeSet> out;
  NodeSet unseen = g.all_nodes();
  while (!unseen.empty()) {
    NodeSet comp = NodeSet::single(unseen.lowest());
    NodeSet frontier = comp;
    while (!frontier.empty()) {
      NodeSet next;
      for (int v : frontier.members()) next |= g.neighbors(v);
      next = next - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    unseen = unseen - comp;
  }
  return out;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  std::vector<Graph::Edge> edges;
  int p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++p)
      if ((mask >> p) & 1U) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw GraphError("permutation has wrong length");
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < g.n(); ++i)
    if (sorted[i] != i) throw GraphError("not a permutation");
  std::vector<Graph::Edge> edges;
  for (auto [a, b] : g.edges()) edges.emplace_back(perm[a], perm[b]);
  std::vector<std::string> names;
  if (!g.names().empty()) {
    names.resize(g.n());
    for (int i = 0; i < g.n(); ++i) names[perm[i]] = g.names()[i];
  }
  return Graph(g.n(), std::move(edges), std::move(names));
}

}  // namespace tubix
