#include "tubix/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tubix {

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix clear_denominators(const RationalMatrix& rows) {
  IntMatrix out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<BigInt> r;
    r.reserve(row.size());
    bool integral = std::all_of(row.begin(), row.end(), [](const Rational& q) { return denominator(q) == 1; });
    if (integral) {
      for (const Rational& q : row) r.push_back(numerator(q));
    } else {
      BigInt scale = 1;
      for (const Rational& q : row) scale = boost::multiprecision::lcm(scale, BigInt(denominator(q)));
      for (const Rational& q : row) r.push_back(numerator(q) * (scale / denominator(q)));
    }
    out.push_back(std::move(r));
  }
  return out;
}

// In-place Bareiss elimination to row echelon form over the first `cols`
// columns; any further columns are carried along. Returns the pivot columns.
std::vector<std::size_t> bareiss(IntMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  BigInt prev = 1;
  std::size_t r = 0;
  const std::size_t width = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < width; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t exact_rank(const RationalMatrix& rows) {
  if (rows.empty()) return 0;
  const std::size_t width = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != width) throw std::invalid_argument("ragged matrix");
  IntMatrix m = clear_denominators(rows);
  return bareiss(m, width).size();
}

std::size_t affine_rank(const std::vector<Point>& points) {
  RationalMatrix rows;
  rows.reserve(points.size());
  for (const Point& p : points) {
    auto r = p;
    r.emplace_back(1);
    rows.push_back(std::move(r));
  }
  return exact_rank(rows);
}

AffineSolution solve_affine(int n, const std::vector<AffineEquation>& equations) {
  RationalMatrix rows;
  rows.reserve(equations.size());
  for (const auto& eq : equations) {
    std::vector<Rational> r(static_cast<std::size_t>(n) + 1);
    for (int v : eq.support.members()) {
      if (v >= n) throw std::invalid_argument("equation mentions a variable beyond n");
      r[v] = 1;
    }
    r[n] = eq.rhs;
    rows.push_back(std::move(r));
  }
  IntMatrix m = clear_denominators(rows);
  auto pivots = bareiss(m, static_cast<std::size_t>(n));
  for (std::size_t i = pivots.size(); i < m.size(); ++i)
    if (m[i][n] != 0) return {AffineSolution::Kind::Inconsistent, {}};
  if (static_cast<int>(pivots.size()) < n) return {AffineSolution::Kind::Underdetermined, {}};

  // Full rank: the echelon form is upper triangular with pivots on the diagonal.
  Point x(n);
  for (int c = n - 1; c >= 0; --c) {
    Rational acc(m[c][n]);
    for (int j = c + 1; j < n; ++j) acc -= Rational(m[c][j]) * x[j];
    x[c] = acc / Rational(m[c][c]);
  }
  return {AffineSolution::Kind::Unique, std::move(x)};
}

IncrementalSystem::IncrementalSystem(int n)
    : n_(n),
      rows_(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n) + 1)),
      pivots_(static_cast<std::size_t>(n), -1),
      scratch_(static_cast<std::size_t>(n) + 1) {}

IncrementalSystem::Outcome IncrementalSystem::add(NodeSet support, const Rational& rhs) {
  auto& v = scratch_;
  for (int j = 0; j < n_; ++j) v[j] = support.contains(j) ? 1 : 0;
  v[n_] = rhs;
  Rational factor;
  for (int r = 0; r < rank_; ++r) {
    const int p = pivots_[r];
    if (v[p] == 0) continue;
    factor = v[p];
    const auto& row = rows_[r];
    for (int j = 0; j <= n_; ++j)
      if (row[j] != 0) v[j] -= factor * row[j];
  }
  int pivot = -1;
  for (int j = 0; j < n_; ++j)
    if (v[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot < 0) return v[n_] == 0 ? Outcome::Redundant : Outcome::Inconsistent;
  if (rank_ == n_) throw std::logic_error("rank exceeds the number of unknowns");
  if (v[pivot] != 1) {
    const Rational lead = v[pivot];
    for (int j = 0; j <= n_; ++j)
      if (v[j] != 0) v[j] /= lead;
  }
  for (int r = 0; r < rank_; ++r) {
    auto& row = rows_[r];
    if (row[pivot] == 0) continue;
    factor = row[pivot];
    for (int j = 0; j <= n_; ++j)
      if (v[j] != 0) row[j] -= factor * v[j];
  }
  std::swap(rows_[rank_], scratch_);
  pivots_[rank_] = pivot;
  ++rank_;
  return Outcome::Added;
}

Point IncrementalSystem::solution() const {
  if (rank_ != n_) throw std::logic_error("system is not full rank");
  Point x(n_);
  for (int r = 0; r < rank_; ++r) x[pivots_[r]] = rows_[r][n_];
  return x;
}

}  // namespace tubix
