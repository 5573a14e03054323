#ifndef TUBIX_GRAPH_HPP
#define TUBIX_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tubix {

// Hard ceiling imposed by the 64-bit node mask.
inline constexpr int kMaxNodes = 64;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Subset of [0, n) stored as a single 64-bit mask.
class NodeSet {
 public:
  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint64_t bits) : bits_(bits) {}

  static NodeSet of(std::initializer_list<int> nodes) {
    NodeSet s;
    for (int v : nodes) s.insert(v);
    return s;
  }
  static constexpr NodeSet full(int n) {
    return NodeSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr NodeSet single(int v) { return NodeSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  // Least member; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr bool subset_of(NodeSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(NodeSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr NodeSet operator|(NodeSet o) const { return NodeSet(bits_ | o.bits_); }
  constexpr NodeSet operator&(NodeSet o) const { return NodeSet(bits_ & o.bits_); }
  constexpr NodeSet operator-(NodeSet o) const { return NodeSet(bits_ & ~o.bits_); }
  constexpr NodeSet& operator|=(NodeSet o) { bits_ |= o.bits_; return *this; }
  constexpr NodeSet& operator&=(NodeSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const NodeSet&) const = default;

  std::vector<int> members() const;

 private:
  std::uint64_t bits_ = 0;
};

// Canonical order on node sets: by size, then lexicographically by the
// ascending member list.
bool canonical_less(NodeSet a, NodeSet b);

class Graph {
 public:
  using Edge = std::pair<int, int>;

  // Validates: 1 <= n <= 64, endpoints in range, no self-loops, no duplicate
  // edges (in either orientation). Edges are stored as given.
  Graph(int n, std::vector<Edge> edges, std::vector<std::string> names = {});

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& names() const { return names_; }
  NodeSet neighbors(int v) const { return adjacency_[v]; }
  bool adjacent(int u, int v) const { return adjacency_[u].contains(v); }
  NodeSet all_nodes() const { return NodeSet::full(n_); }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_ && names_ == other.names_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::string> names_;
  std::vector<NodeSet> adjacency_;
};

// Reads the graph JSON format: {"n": int, "edges": [[a,b],...], "names": [...]?}.
// Node order is the input order. Throws GraphError.
Graph parse_graph(std::string_view text);

enum class Family { Path, Cycle, Complete, Star, Empty };

std::optional<Family> family_from_string(std::string_view name);
std::string_view to_string(Family kind);

// Throws GraphError for n < 1 or a cycle with n < 3.
Graph generate_family(Family kind, int n);

// Nonempty and induces a connected subgraph. The empty set is not connected.
bool is_connected_subset(const Graph& g, NodeSet s);

// Maximal connected node sets, sorted by least element.
std::vector<NodeSet> components(const Graph& g);

// All 2^C(n,2) simple graphs on n labeled nodes. Graph number `mask` has edge
// {i,j} iff bit p is set, where p indexes the pairs (0,1),(0,2),...,(n-2,n-1).
Graph graph_from_edge_mask(int n, std::uint64_t mask);

// Relabels node i as perm[i]. perm must be a permutation of [0, n).
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace tubix

#endif
