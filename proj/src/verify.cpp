#include "tubix/verify.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

#include "tubix/serialize.hpp"

namespace tubix {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

namespace {

Rational support_sum(NodeSet support, const Point& p) {
  Rational s = 0;
  for (int i : support.members()) s += p[i];
  return s;
}

Rational coordinate_sum(const Point& p) {
  Rational s = 0;
  for (const Rational& x : p) s += x;
  return s;
}

Json tubes_to_json(const std::vector<Tube>& tubes) {
  Json j = Json::array();
  for (const Tube& t : tubes) j.push_back(tube_to_json(t));
  return j;
}

// Halfspaces that are tight or violated at p.
std::vector<Tube> active_set(const HRep& h, const Point& p) {
  std::vector<Tube> out;
  for (const auto& hs : h.halfspaces)
    if (support_sum(hs.support(), p) <= hs.rhs) out.push_back(hs.tube);
  return out;
}

CheckResult make_check(std::string name) { return CheckResult{std::move(name), CheckStatus::Pass, std::nullopt}; }

void fail(CheckResult& c, Json witness) {
  if (c.status == CheckStatus::Fail) return;  // keep the first witness
  c.status = CheckStatus::Fail;
  c.witness = std::move(witness);
}

Json vertex_witness(const RealizedVertex& v) {
  return Json{{"tubing", tubing_to_json(v.tubing)}, {"point", point_to_json(v.point)}};
}

}  // namespace

std::vector<Tube> tight_set(const HRep& h, const Point& p) {
  if (static_cast<int>(p.size()) != h.n) throw std::invalid_argument("point has the wrong dimension");
  if (coordinate_sum(p) != Rational(h.total)) throw std::invalid_argument("point is off the hyperplane sum(x) = total");
  std::vector<Tube> out;
  for (const auto& hs : h.halfspaces) {
    Rational s = support_sum(hs.support(), p);
    if (s < hs.rhs)
      throw InfeasiblePoint(hs, "point violates the halfspace of a tube of size " + std::to_string(hs.tube.size()));
    if (s == hs.rhs) out.push_back(hs.tube);
  }
  return out;
}

std::vector<CheckResult> verify_vertices_against_hrep(const Graph& g, const std::vector<RealizedVertex>& vertices,
                                                      const HRep& h) {
  const int n = g.n();
  CheckResult feasibility = make_check("feasibility");
  CheckResult tight = make_check("tight_sets");
  CheckResult simplicity = make_check("simplicity");

  for (const auto& v : vertices) {
    if (static_cast<int>(v.point.size()) != n) {
      Json w = vertex_witness(v);
      w["reason"] = "wrong dimension";
      fail(feasibility, w);
      fail(tight, w);
      fail(simplicity, w);
      continue;
    }
    if (coordinate_sum(v.point) != Rational(h.total)) {
      Json w = vertex_witness(v);
      w["violated"] = "equality";
      fail(feasibility, w);
    }
    for (const auto& hs : h.halfspaces) {
      if (support_sum(hs.support(), v.point) < hs.rhs) {
        Json w = vertex_witness(v);
        w["violated"] = tube_to_json(hs.tube);
        fail(feasibility, w);
        break;
      }
    }

    std::vector<Tube> active = active_set(h, v.point);
    if (active != v.tubing.tubes()) {
      Json w = vertex_witness(v);
      w["tight"] = tubes_to_json(active);
      fail(tight, w);
    }

    RationalMatrix rows;
    for (const Tube& t : active) {
      std::vector<Rational> r(n);
      for (int i : t.nodes().members()) r[i] = 1;
      rows.push_back(std::move(r));
    }
    rows.emplace_back(n, Rational(1));
    const std::size_t rank = exact_rank(rows);
    if (static_cast<int>(active.size()) != n - 1 || static_cast<int>(rank) != n) {
      Json w = vertex_witness(v);
      w["tight_count"] = active.size();
      w["rank"] = rank;
      fail(simplicity, w);
    }
  }
  return {feasibility, tight, simplicity};
}

OracleResult enumerate_hrep_vertices_bruteforce(const HRep& h, const BigInt& cap, int jobs) {
  const int n = h.n;
  const int m = static_cast<int>(h.halfspaces.size());
  const int pick = n - 1;
  if (n < 2) throw std::invalid_argument("oracle needs n >= 2");

  BigInt candidates = 0;
  if (pick <= m) {
    candidates = 1;
    for (int i = 0; i < pick; ++i) candidates = candidates * (m - i) / (i + 1);
  }
  if (candidates > cap) return CapExceeded{candidates};

  std::vector<Rational> rhs;
  rhs.reserve(m);
  for (const auto& hs : h.halfspaces) rhs.emplace_back(hs.rhs);

  // Integral points with small entries are checked in machine integers; the
  // bound keeps every support sum far from overflow, so the test stays exact.
  constexpr std::int64_t kSmall = std::int64_t{1} << 40;
  bool small_rhs = true;
  std::vector<std::int64_t> rhs_small(m);
  for (int j = 0; j < m; ++j) {
    if (h.halfspaces[j].rhs >= kSmall) {
      small_rhs = false;
      break;
    }
    rhs_small[j] = h.halfspaces[j].rhs.convert_to<std::int64_t>();
  }
  auto feasible = [&](const Point& x) {
    bool small = small_rhs;
    std::vector<std::int64_t> xs(n);
    for (int i = 0; i < n && small; ++i) {
      if (denominator(x[i]) != 1 || abs(numerator(x[i])) >= kSmall) small = false;
      else xs[i] = numerator(x[i]).convert_to<std::int64_t>();
    }
    if (small) {
      for (int j = 0; j < m; ++j) {
        std::int64_t sum = 0;
        for (std::uint64_t b = h.halfspaces[j].support().bits(); b != 0; b &= b - 1) sum += xs[std::countr_zero(b)];
        if (sum < rhs_small[j]) return false;
      }
      return true;
    }
    for (int j = 0; j < m; ++j)
      if (support_sum(h.halfspaces[j].support(), x) < rhs[j]) return false;
    return true;
  };

  IncrementalSystem base(n);
  base.add(NodeSet::full(n), Rational(h.total));

  // Each top-level choice is an independent subtree.
  auto search_from = [&](int first, std::set<Point>& found) {
    std::vector<IncrementalSystem> stack(static_cast<std::size_t>(pick) + 1, base);
    stack[1] = base;
    if (stack[1].add(h.halfspaces[first].support(), rhs[first]) != IncrementalSystem::Outcome::Added) return;
    auto rec = [&](auto&& self, int start, int depth) -> void {
      if (depth == pick) {
        Point x = stack[depth].solution();
        if (feasible(x)) found.insert(std::move(x));
        return;
      }
      for (int j = start; j <= m - (pick - depth); ++j) {
        stack[depth + 1] = stack[depth];
        if (stack[depth + 1].add(h.halfspaces[j].support(), rhs[j]) != IncrementalSystem::Outcome::Added) continue;
        self(self, j + 1, depth + 1);
      }
    };
    rec(rec, first + 1, 1);
  };

  std::set<Point> all;
  const int last_first = m - pick;
  const int workers = std::max(1, std::min(jobs, last_first + 1));
  if (workers == 1) {
    for (int first = 0; first <= last_first; ++first) search_from(first, all);
  } else {
    std::vector<std::set<Point>> partial(workers);
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int first = next++; first <= last_first; first = next++) search_from(first, partial[w]);
      });
    for (auto& t : pool) t.join();
    for (auto& s : partial) all.merge(s);
  }
  return std::vector<Point>(all.begin(), all.end());
}

CheckResult verify_facets(const Graph& g, const std::vector<RealizedVertex>& vertices, const HRep& h) {
  const int n = g.n();
  CheckResult c = make_check("facets");
  for (const auto& hs : h.halfspaces) {
    std::vector<Point> on;
    for (const auto& v : vertices)
      if (static_cast<int>(v.point.size()) == n && support_sum(hs.support(), v.point) == hs.rhs) on.push_back(v.point);
    const std::size_t rank = affine_rank(on);
    if (static_cast<int>(rank) != n - 1) {
      fail(c, Json{{"tube", tube_to_json(hs.tube)}, {"tight_vertices", on.size()}, {"affine_rank", rank}});
    }
  }
  return c;
}

CheckResult verify_face_lattice(const Graph& g, const std::vector<RealizedVertex>& vertices, const HRep& h,
                                int kmax) {
  const int n = g.n();
  CheckResult c = make_check("face_lattice");
  if (kmax < 0 || kmax > n - 1) throw std::invalid_argument("kmax must lie in [0, n-1]");
  TubeCatalog cat(g);
  const std::size_t m = cat.size();

  std::vector<boost::dynamic_bitset<>> combinatorial, geometric;
  for (const auto& v : vertices) {
    boost::dynamic_bitset<> comb(m), geo(m);
    for (const Tube& t : v.tubing)
      if (auto idx = cat.index_of(t.nodes())) comb[*idx] = true;
    if (static_cast<int>(v.point.size()) == n) {
      for (const auto& hs : h.halfspaces)
        if (support_sum(hs.support(), v.point) == hs.rhs)
          if (auto idx = cat.index_of(hs.tube.nodes())) geo[*idx] = true;
    }
    combinatorial.push_back(std::move(comb));
    geometric.push_back(std::move(geo));
  }

  for (int k = 0; k <= kmax && c.status != CheckStatus::Fail; ++k) {
    for (const Tubing& face : enumerate_tubings(cat, k)) {
      boost::dynamic_bitset<> want(m);
      for (std::size_t i : cat.indices_of(face)) want[i] = true;
      std::vector<std::size_t> by_tubing, by_geometry;
      std::vector<Point> pts;
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (want.is_subset_of(combinatorial[i])) by_tubing.push_back(i);
        if (want.is_subset_of(geometric[i])) {
          by_geometry.push_back(i);
          pts.push_back(vertices[i].point);
        }
      }
      const std::size_t rank = pts.empty() ? 0 : affine_rank(pts);
      if (by_tubing != by_geometry || by_geometry.empty() || static_cast<int>(rank) != n - k) {
        fail(c, Json{{"tubing", tubing_to_json(face)},
                     {"vertices_by_tubing", by_tubing.size()},
                     {"vertices_by_geometry", by_geometry.size()},
                     {"affine_rank", rank},
                     {"expected_affine_rank", n - k}});
        break;
      }
    }
  }
  return c;
}

bool euler_check(const std::vector<std::uint64_t>& fv) {
  const int n = static_cast<int>(fv.size()) + 1;
  if (n < 2) throw std::invalid_argument("euler check needs n >= 2");
  // f_j counts j-dimensional faces, i.e. (n-1-j)-tubings, stored at fv[n-2-j].
  std::int64_t alternating = 0;
  for (int j = 0; j <= n - 2; ++j) {
    auto fj = static_cast<std::int64_t>(fv[n - 2 - j]);
    alternating += (j % 2 == 0) ? fj : -fj;
  }
  const std::int64_t expected = 1 - ((n - 1) % 2 == 0 ? 1 : -1);
  return alternating == expected;
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

bool VerificationReport::complete() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Skipped; });
}

const CheckResult* VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return &c;
  return nullptr;
}

VerificationReport full_report(const Graph& g, const WeightScheme& scheme, const VerifyOptions& options) {
  const int n = g.n();
  if (n < 2) throw std::invalid_argument("verification needs n >= 2");
  VerificationReport r;
  r.graph = graph_to_json(g);
  r.scheme = scheme.name();

  TubeCatalog cat(g);
  std::vector<RealizedVertex> vertices;
  CheckResult realize_check = make_check("realize");
  try {
    vertices = realize(cat, scheme);
  } catch (const SolverError& e) {
    fail(realize_check, Json{{"error", e.what()}});
  }
  r.checks.push_back(realize_check);
  const char* rest[] = {"feasibility", "tight_sets", "simplicity", "facets", "oracle", "face_lattice", "euler"};
  if (realize_check.status == CheckStatus::Fail) {
    for (const char* name : rest) r.checks.push_back(CheckResult{name, CheckStatus::Skipped, std::nullopt});
    return r;
  }

  HRep h = build_hrep(cat, scheme);
  for (auto& c : verify_vertices_against_hrep(g, vertices, h)) r.checks.push_back(std::move(c));
  r.checks.push_back(verify_facets(g, vertices, h));

  CheckResult oracle = make_check("oracle");
  OracleResult brute = enumerate_hrep_vertices_bruteforce(h, options.oracle_cap, options.jobs);
  if (auto* skipped = std::get_if<CapExceeded>(&brute)) {
    oracle.status = CheckStatus::Skipped;
    oracle.witness = Json{{"candidates", to_exact_string(skipped->candidates)},
                          {"cap", to_exact_string(options.oracle_cap)}};
  } else {
    const auto& hull = std::get<std::vector<Point>>(brute);
    std::set<Point> realized;
    for (const auto& v : vertices) realized.insert(v.point);
    std::set<Point> expected(hull.begin(), hull.end());
    if (realized != expected) {
      Json missing = Json::array(), extra = Json::array();
      for (const auto& p : expected)
        if (!realized.count(p)) missing.push_back(point_to_json(p));
      for (const auto& p : realized)
        if (!expected.count(p)) extra.push_back(point_to_json(p));
      fail(oracle, Json{{"hrep_vertices", expected.size()},
                        {"realized_points", realized.size()},
                        {"missing_from_realization", missing},
                        {"not_hrep_vertices", extra}});
    }
  }
  r.checks.push_back(oracle);

  r.checks.push_back(verify_face_lattice(g, vertices, h, options.kmax.value_or(n - 1)));

  CheckResult euler = make_check("euler");
  auto fv = f_vector(cat);
  if (!euler_check(fv)) fail(euler, Json{{"f_vector", fv}});
  r.checks.push_back(euler);
  return r;
}

void survey(int n, bool connected_only, const SchemeFactory& scheme, const VerifyOptions& options, int jobs,
            bool stop_on_fail, const std::function<void(const SurveyEntry&)>& sink) {
  if (n < 2) throw std::invalid_argument("survey needs n >= 2");
  const int pairs = n * (n - 1) / 2;
  if (pairs >= 63) throw std::invalid_argument("survey supports at most 11 nodes");
  const WeightScheme ws = scheme(n);

  std::vector<std::uint64_t> masks;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    if (connected_only && !is_connected_subset(graph_from_edge_mask(n, mask), NodeSet::full(n))) continue;
    masks.push_back(mask);
  }

  VerifyOptions per_graph = options;
  per_graph.jobs = 1;
  std::vector<std::optional<SurveyEntry>> results(masks.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_fail{std::numeric_limits<std::size_t>::max()};

  auto work = [&] {
    for (std::size_t i = next++; i < masks.size() && i <= first_fail.load(); i = next++) {
      Graph g = graph_from_edge_mask(n, masks[i]);
      SurveyEntry entry{g, full_report(g, ws, per_graph)};
      if (stop_on_fail && !entry.report.passed()) {
        std::size_t cur = first_fail.load();
        while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {
        }
      }
      {
        std::lock_guard lock(mu);
        results[i] = std::move(entry);
      }
      ready.notify_all();
    }
  };

  const int workers = std::max(1, jobs);
  if (workers == 1) {
    for (std::uint64_t mask : masks) {
      Graph g = graph_from_edge_mask(n, mask);
      SurveyEntry entry{g, full_report(g, ws, per_graph)};
      sink(entry);
      if (stop_on_fail && !entry.report.passed()) return;
    }
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);

  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (i > first_fail.load()) break;
    std::optional<SurveyEntry> entry;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return results[i].has_value(); });
      entry = std::move(results[i]);
      results[i].reset();
    }
    sink(*entry);
    if (stop_on_fail && !entry->report.passed()) break;
  }
  for (auto& t : pool) t.join();
}

std::optional<SurveyEntry> find_first_failure(int max_n, const SchemeFactory& scheme, const VerifyOptions& options,
                                              int jobs) {
  std::optional<SurveyEntry> found;
  for (int n = 2; n <= max_n && !found; ++n) {
    survey(n, true, scheme, options, jobs, true, [&](const SurveyEntry& e) {
      if (!e.report.passed()) found = e;
    });
  }
  return found;
}

}  // namespace tubix
