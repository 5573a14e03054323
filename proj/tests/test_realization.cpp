#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "tubix/realization.hpp"

using namespace tubix;
using testing::point;
using testing::tubing;

TEST_CASE("scheme_power3") {
  auto w = scheme_power3(4);
  CHECK(w.weight(1) == 0);
  CHECK(w.weight(2) == 1);
  CHECK(w.weight(3) == 3);
  CHECK(w.weight(4) == 9);
  CHECK(scheme_power3(3).total() == 3);
  CHECK(scheme_power3(10).weight(10) == 6561);
  CHECK(scheme_power3(60).weight(60) == pow_int(3, 58));
  CHECK_THROWS_AS(scheme_power3(1), std::invalid_argument);
  CHECK_THROWS_AS(w.weight(5), std::out_of_range);
  CHECK_THROWS_AS(w.weight(0), std::out_of_range);
}

TEST_CASE("scheme_loday") {
  auto w = scheme_loday(5);
  CHECK(w.weight(2) == 3);
  CHECK(w.weight(3) == 6);
  CHECK(w.weight(4) == 10);
  CHECK(w.weight(5) == 15);
  // C(2,2): singleton tubes sit at depth 1
  CHECK(w.weight(1) == 1);
  CHECK_THROWS_AS(scheme_loday(1), std::invalid_argument);
}

TEST_CASE("scheme_custom") {
  auto w = scheme_custom(R"(["0","1","3"])", 3);
  CHECK(w.name() == "custom");
  CHECK(w.weight(3) == 3);
  CHECK(scheme_custom(R"(["0","1","123456789012345678901234567890"])", 3).total() ==
        BigInt("123456789012345678901234567890"));
  CHECK_THROWS_AS(scheme_custom(R"(["0","1"])", 3), std::invalid_argument);
  CHECK_THROWS_AS(scheme_custom(R"([0,1,3])", 3), std::invalid_argument);
  CHECK_THROWS_AS(scheme_custom(R"(["0","-1","3"])", 3), std::invalid_argument);
  CHECK_THROWS_AS(scheme_custom(R"(["0","x","3"])", 3), std::invalid_argument);
  CHECK_THROWS_AS(scheme_custom("not json", 3), std::invalid_argument);
}

TEST_CASE("smallest_containing_tube") {
  Tubing u = tubing({{0}, {0, 1}});
  CHECK(smallest_containing_tube(u, 1) == Tube(NodeSet::of({0, 1})));
  CHECK_FALSE(smallest_containing_tube(u, 2).has_value());
  CHECK(smallest_containing_tube(u, 0) == Tube(NodeSet::of({0})));
}

TEST_CASE("compute_coordinates") {
  auto w3 = scheme_power3(3);
  CHECK(compute_coordinates(testing::empty(3), tubing({{0}, {1}}), w3) == point({0, 0, 3}));
  CHECK(compute_coordinates(testing::path(3), tubing({{0}, {2}}), w3) == point({0, 3, 0}));
  CHECK(compute_coordinates(testing::path(3), tubing({{0}, {0, 1}}), w3) == point({0, 1, 2}));

  std::set<Point> perms;
  std::vector<long> base{0, 1, 2};
  do perms.insert(point({base[0], base[1], base[2]}));
  while (std::next_permutation(base.begin(), base.end()));
  CHECK(testing::point_set(realize(testing::complete(3), w3)) == perms);

  CHECK_THROWS_AS(compute_coordinates(testing::path(3), tubing({{0}}), w3), SolverError);
  CHECK_THROWS_AS(compute_coordinates(testing::path(3), tubing({{0}, {1}, {0, 1}}), w3), SolverError);
}

TEST_CASE("realize") {
  auto p3 = realize(testing::path(3), scheme_power3(3));
  REQUIRE(p3.size() == 5);
  CHECK(testing::point_set(p3) ==
        std::set<Point>{point({0, 3, 0}), point({0, 1, 2}), point({1, 0, 2}), point({2, 0, 1}), point({2, 1, 0})});
  // canonical tubing order
  CHECK(p3[0].tubing == tubing({{0}, {2}}));
  CHECK(p3[0].point == point({0, 3, 0}));

  CHECK(testing::point_set(realize(testing::empty(3), scheme_power3(3))) ==
        std::set<Point>{point({3, 0, 0}), point({0, 3, 0}), point({0, 0, 3})});

  auto k4 = realize(testing::complete(4), scheme_power3(4));
  CHECK(testing::point_set(k4).size() == 24);
  for (const auto& v : k4) {
    Point sorted = v.point;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == point({0, 1, 2, 6}));
  }

  auto single = realize(testing::path(1), WeightScheme("power3", {BigInt(0)}));
  REQUIRE(single.size() == 1);
  CHECK(single[0].point == point({0}));
  CHECK(single[0].tubing.empty());
}

TEST_CASE("loday weights reproduce the classical coordinates") {
  CHECK(testing::point_set(realize(testing::path(3), scheme_loday(3))) ==
        std::set<Point>{point({1, 4, 1}), point({1, 2, 3}), point({2, 1, 3}), point({3, 1, 2}), point({3, 2, 1})});
  for (const auto& v : realize(testing::complete(4), scheme_loday(4))) {
    Point sorted = v.point;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == point({1, 2, 3, 4}));
  }
}

TEST_CASE("build_hrep") {
  auto h = build_hrep(testing::path(3), scheme_power3(3));
  CHECK(h.n == 3);
  CHECK(h.total == 3);
  REQUIRE(h.halfspaces.size() == 5);
  std::vector<std::pair<NodeSet, int>> want{{NodeSet::of({0}), 0},
                                            {NodeSet::of({1}), 0},
                                            {NodeSet::of({2}), 0},
                                            {NodeSet::of({0, 1}), 1},
                                            {NodeSet::of({1, 2}), 1}};
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(h.halfspaces[i].support() == want[i].first);
    CHECK(h.halfspaces[i].rhs == want[i].second);
  }

  auto e3 = build_hrep(testing::empty(3), scheme_power3(3));
  CHECK(e3.halfspaces.size() == 3);
  for (const auto& hs : e3.halfspaces) CHECK(hs.rhs == 0);

  auto k3 = build_hrep(testing::complete(3), scheme_power3(3));
  CHECK(k3.halfspaces.size() == 6);
  for (const auto& hs : k3.halfspaces) CHECK(hs.rhs == (hs.tube.size() == 1 ? 0 : 1));

  for (int n = 2; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < (1U << (n * (n - 1) / 2)); ++mask) {
      Graph g = graph_from_edge_mask(n, mask);
      auto hr = build_hrep(g, scheme_power3(n));
      CHECK(hr.halfspaces.size() == enumerate_tubes(g).size());
      CHECK(std::count_if(hr.halfspaces.begin(), hr.halfspaces.end(), [](const HalfSpace& hs) { return hs.rhs == 0; }) ==
            n);
    }
}

TEST_CASE("check_weight_condition") {
  auto p = check_weight_condition(scheme_power3(10), 10);
  CHECK(p.pass);
  CHECK(p.entries.size() == 8);
  CHECK(p.entries.front().k == 3);
  CHECK_FALSE(p.first_failure.has_value());

  auto l = check_weight_condition(scheme_loday(6), 6);
  CHECK_FALSE(l.pass);
  REQUIRE(l.first_failure.has_value());
  CHECK(*l.first_failure == 3);
  CHECK(l.entries[0].weight == 6);
  CHECK(l.entries[0].twice_previous == 6);
  // the baseline w(2) > 2 w(1) is comfortable for loday as well
  CHECK(scheme_loday(2).weight(2) > 2 * scheme_loday(2).weight(1));

  CHECK_THROWS_AS(check_weight_condition(scheme_power3(3), 2), std::invalid_argument);
  CHECK_THROWS_AS(check_weight_condition(scheme_power3(3), 4), std::invalid_argument);
}

TEST_CASE("triangular solve matches a dense solve of the whole system on every graph up to 5 nodes") {
  for (int n = 2; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < (1U << (n * (n - 1) / 2)); ++mask) {
      Graph g = graph_from_edge_mask(n, mask);
      for (const auto& scheme : {scheme_power3(n), scheme_loday(n)}) {
        std::vector<oracle::Rational> w;
        for (const auto& x : scheme.weights()) w.emplace_back(x);
        for (const auto& v : realize(g, scheme)) {
          auto ref = oracle::coordinates(n, testing::to_sets(v.tubing), w);
          REQUIRE(ref.has_value());
          CHECK(*ref == v.point);
        }
      }
    }
}

TEST_CASE("power3 coordinate invariants on every graph up to 5 nodes") {
  for (int n = 2; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < (1U << (n * (n - 1) / 2)); ++mask) {
      Graph g = graph_from_edge_mask(n, mask);
      const bool connected = is_connected_subset(g, g.all_nodes());
      auto s = scheme_power3(n);
      auto vs = realize(g, s);
      CHECK(testing::point_set(vs).size() == vs.size());
      for (const auto& v : vs) {
        Rational total = 0;
        for (const auto& x : v.point) {
          CHECK(denominator(x) == 1);
          CHECK(x >= 0);
          total += x;
        }
        CHECK(total == Rational(pow_int(3, n - 2)));
        for (const auto& t : v.tubing) {
          Rational sum = 0;
          for (int x : t.nodes().members()) sum += v.point[x];
          CHECK(sum == Rational(s.weight(t.size())));
        }
        if (connected)
          for (int i = 0; i < n; ++i)
            CHECK((v.point[i] == 0) == v.tubing.contains(Tube(NodeSet::single(i))));
      }
    }
}

TEST_CASE("relabeling nodes permutes the coordinates") {
  std::mt19937_64 rng(20061016);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int pairs = n * (n - 1) / 2;
    Graph g = graph_from_edge_mask(n, rng() & ((std::uint64_t{1} << pairs) - 1));
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = relabel(g, perm);

    std::set<Point> expected;
    for (const auto& v : realize(g, scheme_power3(n))) {
      Point q(n);
      for (int i = 0; i < n; ++i) q[perm[i]] = v.point[i];
      expected.insert(q);
    }
    CHECK(testing::point_set(realize(h, scheme_power3(n))) == expected);
  }
}
