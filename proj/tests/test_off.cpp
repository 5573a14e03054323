#include <map>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "tubix/off_export.hpp"

using namespace tubix;

namespace {

// Each undirected edge of a closed surface borders exactly two faces, once
// in each direction when the faces are consistently oriented.
void check_closed(const OffMesh& m) {
  std::map<std::pair<std::size_t, std::size_t>, int> directed;
  for (const auto& f : m.faces) {
    CHECK(f.size() >= 3);
    for (std::size_t i = 0; i < f.size(); ++i) {
      REQUIRE(f[i] < m.vertices.size());
      ++directed[{f[i], f[(i + 1) % f.size()]}];
    }
  }
  for (const auto& [e, count] : directed) {
    CHECK(count == 1);
    CHECK(directed.count({e.second, e.first}) == 1);
  }
  // V - E + F = 2
  const long edges = static_cast<long>(directed.size()) / 2;
  CHECK(static_cast<long>(m.vertices.size()) - edges + static_cast<long>(m.faces.size()) == 2);
}

}  // namespace

TEST_CASE("project_to_hyperplane is an isometry on the hyperplane") {
  auto a = project_to_hyperplane(testing::point({0, 1, 2, 6}));
  auto b = project_to_hyperplane(testing::point({1, 0, 2, 6}));
  REQUIRE(a.size() == 3);
  double d2 = 0;
  for (int i = 0; i < 3; ++i) d2 += (a[i] - b[i]) * (a[i] - b[i]);
  CHECK(d2 == doctest::Approx(2.0));
}

TEST_CASE("build_off_mesh") {
  auto s = scheme_power3(4);
  struct Case {
    Graph g;
    std::size_t v, f;
  };
  for (const auto& c : {Case{testing::complete(4), 24, 14}, Case{testing::path(4), 14, 9}, Case{testing::cycle(4), 20, 12},
                        Case{testing::star(4), 16, 10}, Case{testing::empty(4), 4, 4}}) {
    auto m = build_off_mesh(c.g, s);
    CHECK(m.vertices.size() == c.v);
    CHECK(m.faces.size() == c.f);
    check_closed(m);
  }
  CHECK_THROWS_AS(build_off_mesh(testing::path(3), scheme_power3(3)), ExportError);
  CHECK_THROWS_AS(build_off_mesh(testing::cycle(4), scheme_loday(4)), ExportError);
}

TEST_CASE("write_off") {
  std::string text = write_off(build_off_mesh(testing::path(4), scheme_power3(4)));
  std::istringstream in(text);
  std::string header;
  std::size_t v = 0, f = 0, e = 0;
  in >> header >> v >> f >> e;
  CHECK(header == "OFF");
  CHECK(v == 14);
  CHECK(f == 9);
  CHECK(e == 21);
  for (std::size_t i = 0; i < v; ++i) {
    double x, y, z;
    CHECK(static_cast<bool>(in >> x >> y >> z));
  }
  std::size_t total = 0;
  for (std::size_t i = 0; i < f; ++i) {
    std::size_t k;
    in >> k;
    total += k;
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t idx;
      in >> idx;
      CHECK(idx < v);
    }
  }
  CHECK(total == 2 * e);
  CHECK(text == write_off(build_off_mesh(testing::path(4), scheme_power3(4))));
}
