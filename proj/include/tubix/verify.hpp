#ifndef TUBIX_VERIFY_HPP
#define TUBIX_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "tubix/graph.hpp"
#include "tubix/linalg.hpp"
#include "tubix/realization.hpp"
#include "tubix/tubings.hpp"

namespace tubix {

class InfeasiblePoint : public std::runtime_error {
 public:
  InfeasiblePoint(const HalfSpace& violated, std::string what)
      : std::runtime_error(std::move(what)), violated_(violated) {}
  const HalfSpace& violated() const { return violated_; }

 private:
  HalfSpace violated_;
};

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::optional<nlohmann::ordered_json> witness;
};

// Tubes whose halfspaces are tight at p, in canonical order. Throws
// InfeasiblePoint on a violated halfspace and std::invalid_argument when p is
// off the hyperplane sum(x) = total.
std::vector<Tube> tight_set(const HRep& h, const Point& p);

// feasibility, tight_sets (tight set equals the vertex's own tubing) and
// simplicity (n-1 tight halfspaces, full rank together with the equality).
std::vector<CheckResult> verify_vertices_against_hrep(const Graph& g, const std::vector<RealizedVertex>& vertices,
                                                      const HRep& h);

struct CapExceeded {
  BigInt candidates;
};

using OracleResult = std::variant<std::vector<Point>, CapExceeded>;

// Vertex set of the H-polytope by brute force: every choice of n-1
// halfspaces, made tight together with the equality, is solved exactly and
// kept when unique and feasible. Subsets whose rows are already dependent are
// pruned, since no extension of them can be a basis. Points come back sorted.
// `jobs` splits the search over worker threads; the result does not depend on it.
OracleResult enumerate_hrep_vertices_bruteforce(const HRep& h, const BigInt& cap, int jobs = 1);

// Every halfspace is tight on a set of vertices of affine rank n-1.
CheckResult verify_facets(const Graph& g, const std::vector<RealizedVertex>& vertices, const HRep& h);

// For every tubing with at most kmax tubes, the vertices whose tubings extend
// it are exactly the vertices tight on all its halfspaces; that set is
// nonempty and spans a face of dimension n-1-k.
CheckResult verify_face_lattice(const Graph& g, const std::vector<RealizedVertex>& vertices, const HRep& h, int kmax);

// Euler relation over the proper faces, with f_j = #(n-1-j)-tubings.
bool euler_check(const std::vector<std::uint64_t>& fv);

struct VerifyOptions {
  BigInt oracle_cap = 10'000'000;
  std::optional<int> kmax;  // defaults to n-1
  int jobs = 1;
};

struct VerificationReport {
  nlohmann::ordered_json graph;
  std::string scheme;
  std::vector<CheckResult> checks;

  // Pass iff no executed check failed.
  bool passed() const;
  bool complete() const;
  const CheckResult* first_failure() const;
};

VerificationReport full_report(const Graph& g, const WeightScheme& scheme, const VerifyOptions& options = {});

using SchemeFactory = std::function<WeightScheme(int n)>;

struct SurveyEntry {
  Graph graph;
  VerificationReport report;
};

// Every graph on n labeled nodes (or only the connected ones) in edge-mask
// order, each with its report. Results are delivered to `sink` in that order
// even when `jobs` > 1. Stops after the first failure when stop_on_fail.
void survey(int n, bool connected_only, const SchemeFactory& scheme, const VerifyOptions& options, int jobs,
            bool stop_on_fail, const std::function<void(const SurveyEntry&)>& sink);

// Scans connected graphs on 2..max_n nodes in increasing n and returns the
// first whose report fails.
std::optional<SurveyEntry> find_first_failure(int max_n, const SchemeFactory& scheme, const VerifyOptions& options,
                                              int jobs = 1);

}  // namespace tubix

#endif
