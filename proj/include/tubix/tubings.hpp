#ifndef TUBIX_TUBINGS_HPP
#define TUBIX_TUBINGS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "tubix/graph.hpp"

namespace tubix {

class TubingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A nonempty proper node set inducing a connected subgraph. Construction
// through make_tube() checks this; the raw constructor trusts the caller.
class Tube {
 public:
  constexpr explicit Tube(NodeSet nodes) : nodes_(nodes) {}

  constexpr NodeSet nodes() const { return nodes_; }
  constexpr int size() const { return nodes_.size(); }
  constexpr bool contains(int v) const { return nodes_.contains(v); }

  constexpr bool operator==(const Tube&) const = default;
  friend bool operator<(const Tube& a, const Tube& b) { return canonical_less(a.nodes_, b.nodes_); }

 private:
  NodeSet nodes_;
};

bool is_tube(const Graph& g, NodeSet s);

// Throws TubingError when s is not a tube of g.
Tube make_tube(const Graph& g, NodeSet s);

// A set of tubes held in canonical tube order. Tubings compare
// lexicographically over that order.
class Tubing {
 public:
  Tubing() = default;
  // Sorts; throws TubingError on a repeated tube.
  explicit Tubing(std::vector<Tube> tubes);

  const std::vector<Tube>& tubes() const { return tubes_; }
  std::size_t size() const { return tubes_.size(); }
  bool empty() const { return tubes_.empty(); }
  auto begin() const { return tubes_.begin(); }
  auto end() const { return tubes_.end(); }
  const Tube& operator[](std::size_t i) const { return tubes_[i]; }

  bool contains(const Tube& t) const;
  bool includes(const Tubing& sub) const;

  bool operator==(const Tubing&) const = default;
  friend bool operator<(const Tubing& a, const Tubing& b) { return a.tubes_ < b.tubes_; }

 private:
  std::vector<Tube> tubes_;
};

enum class PairClass { Nested, Intersecting, Adjacent, Far };

std::string_view to_string(PairClass c);

// Adjacent means disjoint with a union that induces a connected subgraph,
// including the case where the union is every node of g.
// Throws TubingError when u1 == u2.
PairClass classify_pair(const Graph& g, const Tube& u1, const Tube& u2);

bool are_compatible(const Graph& g, const Tube& u1, const Tube& u2);

// Pairwise compatible, and on a disconnected graph not containing every
// component tube at once. Throws TubingError if an element is not a tube.
bool is_valid_tubing(const Graph& g, const std::vector<Tube>& tubes);

// Sorted by (size, lexicographic members).
std::vector<Tube> enumerate_tubes(const Graph& g);

// Default limit on n for the exponential enumeration entry points.
inline constexpr int kDefaultMaxNodes = 12;

// Tubes of a graph together with their pairwise compatibility, indexed in
// canonical order. Shared by the enumeration and verification routines.
class TubeCatalog {
 public:
  explicit TubeCatalog(const Graph& g);

  const Graph& graph() const { return graph_; }
  const std::vector<Tube>& tubes() const { return tubes_; }
  std::size_t size() const { return tubes_.size(); }
  std::optional<std::size_t> index_of(NodeSet s) const;
  std::size_t index_of(const Tube& t) const;
  bool compatible(std::size_t a, std::size_t b) const { return compat_[a][b]; }
  const boost::dynamic_bitset<>& compatible_with(std::size_t a) const { return compat_[a]; }
  // Tubes equal to a whole connected component; empty for connected graphs.
  const boost::dynamic_bitset<>& component_tubes() const { return component_mask_; }
  std::size_t component_count() const { return component_count_; }

  Tubing tubing_of(const std::vector<std::size_t>& indices) const;
  std::vector<std::size_t> indices_of(const Tubing& u) const;

 private:
  Graph graph_;
  std::vector<Tube> tubes_;
  std::vector<boost::dynamic_bitset<>> compat_;
  boost::dynamic_bitset<> component_mask_;
  std::size_t component_count_ = 0;
};

// All valid tubings, or those with exactly k tubes. Canonical order.
// Throws TubingError when k is outside [0, n-1].
std::vector<Tubing> enumerate_tubings(const Graph& g, std::optional<int> k = std::nullopt);
std::vector<Tubing> enumerate_tubings(const TubeCatalog& cat, std::optional<int> k = std::nullopt);

// The (n-1)-tubings. Throws TubingError for n < 2; throws std::logic_error if
// an (n-1)-tubing could be extended, which would contradict the tube bound.
std::vector<Tubing> enumerate_maximal_tubings(const Graph& g);
std::vector<Tubing> enumerate_maximal_tubings(const TubeCatalog& cat);

// Maximal tubings obtained by exchanging one tube of u. Neighbors are listed
// in the canonical order of the tube that was removed.
// Throws TubingError when u is not a maximal tubing of g.
std::vector<Tubing> flip_neighbors(const Graph& g, const Tubing& u);
std::vector<Tubing> flip_neighbors(const TubeCatalog& cat, const Tubing& u);

// [#1-tubings, ..., #(n-1)-tubings]. Empty for n = 1.
std::vector<std::uint64_t> f_vector(const Graph& g);
std::vector<std::uint64_t> f_vector(const TubeCatalog& cat);

}  // namespace tubix

#endif
