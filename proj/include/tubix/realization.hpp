#ifndef TUBIX_REALIZATION_HPP
#define TUBIX_REALIZATION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tubix/exact.hpp"
#include "tubix/graph.hpp"
#include "tubix/tubings.hpp"

namespace tubix {

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Truncation depth w(k) for tubes of size k, defined for 1 <= k <= n.
class WeightScheme {
 public:
  // weights[k-1] = w(k). Throws std::invalid_argument on an empty list or a
  // negative weight.
  WeightScheme(std::string name, std::vector<BigInt> weights);

  const std::string& name() const { return name_; }
  int max_size() const { return static_cast<int>(weights_.size()); }
  // Throws std::out_of_range outside [1, max_size()].
  const BigInt& weight(int k) const;
  const BigInt& total() const { return weights_.back(); }
  const std::vector<BigInt>& weights() const { return weights_; }

 private:
  std::string name_;
  std::vector<BigInt> weights_;
};

// w(1) = 0, w(k) = 3^(k-2). Throws std::invalid_argument for n < 2.
WeightScheme scheme_power3(int n);

// w(k) = C(k+1, 2) for every k, so singleton tubes sit at depth 1 and the
// recursion reproduces Loday's coordinates. Throws std::invalid_argument for n < 2.
WeightScheme scheme_loday(int n);

// JSON array of n decimal strings w(1)..w(n). Throws std::invalid_argument.
WeightScheme scheme_custom(const std::string& json_text, int n);

// The smallest tube of u containing v, or nullopt when v lies in no tube
// (the full node set acts as a virtual root). Tubes containing v form a
// chain, so the minimum is unique.
std::optional<Tube> smallest_containing_tube(const Tubing& u, int v);

// Coordinates of the vertex labelled by the maximal tubing u. Each tube of
// size k pins the sum over its nodes to w(k); the one node outside every tube
// takes whatever makes the total w(n). Throws SolverError when the system is
// not triangular, which means u is not a maximal tubing.
Point compute_coordinates(const Graph& g, const Tubing& u, const WeightScheme& s);

struct RealizedVertex {
  Tubing tubing;
  Point point;
};

// One vertex per maximal tubing, in canonical tubing order. A single-node
// graph realizes as the point (0). Under power3 duplicates raise SolverError.
std::vector<RealizedVertex> realize(const Graph& g, const WeightScheme& s);
std::vector<RealizedVertex> realize(const TubeCatalog& cat, const WeightScheme& s);

// support . x >= rhs, with support the tube's node set.
struct HalfSpace {
  Tube tube;
  BigInt rhs;

  NodeSet support() const { return tube.nodes(); }
};

// sum(x) = total, plus one halfspace per tube in canonical order.
struct HRep {
  int n = 0;
  BigInt total;
  std::vector<HalfSpace> halfspaces;
};

HRep build_hrep(const Graph& g, const WeightScheme& s);
HRep build_hrep(const TubeCatalog& cat, const WeightScheme& s);

struct WeightConditionEntry {
  int k;
  BigInt weight;           // w(k)
  BigInt twice_previous;   // 2 w(k-1)
  bool holds;              // w(k) > 2 w(k-1)
};

struct WeightConditionReport {
  std::string scheme;
  std::vector<WeightConditionEntry> entries;  // k = 3..n
  bool pass = true;
  std::optional<int> first_failure;
};

// Sufficient condition for the truncations not to cut too deep. A failure
// does not by itself mean the realization is wrong. Throws
// std::invalid_argument for n < 3 or n beyond the scheme.
WeightConditionReport check_weight_condition(const WeightScheme& s, int n);

}  // namespace tubix

#endif
