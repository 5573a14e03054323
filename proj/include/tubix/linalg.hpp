#ifndef TUBIX_LINALG_HPP
#define TUBIX_LINALG_HPP

#include <optional>
#include <vector>

#include "tubix/exact.hpp"
#include "tubix/graph.hpp"

namespace tubix {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Rank by fraction-free (Bareiss) elimination. Rows are scaled to integers
// first; all rows must have the same length.
std::size_t exact_rank(const RationalMatrix& rows);

// Rank of the points lifted to (p, 1): the affine dimension plus one, or 0
// for an empty set.
std::size_t affine_rank(const std::vector<Point>& points);

// sum_{i in support} x_i = rhs.
struct AffineEquation {
  NodeSet support;
  Rational rhs;
};

struct AffineSolution {
  enum class Kind { Unique, Underdetermined, Inconsistent };
  Kind kind;
  Point point;  // set only for Unique
};

// Classifies the system in n unknowns and returns the solution when unique.
AffineSolution solve_affine(int n, const std::vector<AffineEquation>& equations);

// Gauss-Jordan elimination fed one 0/1 equation at a time. Copyable, so a
// search can keep one state per depth and backtrack by discarding it.
class IncrementalSystem {
 public:
  enum class Outcome { Added, Redundant, Inconsistent };

  explicit IncrementalSystem(int n);

  Outcome add(NodeSet support, const Rational& rhs);
  int rank() const { return rank_; }
  // Valid once rank() == n.
  Point solution() const;

 private:
  int n_;
  int rank_ = 0;
  // Storage for n rows of n coefficients + rhs is allocated up front so that
  // copying a state into another reuses its buffers.
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
  std::vector<Rational> scratch_;
};

}  // namespace tubix

#endif
