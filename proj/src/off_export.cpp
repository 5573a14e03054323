#include "tubix/off_export.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace tubix {

std::vector<double> project_to_hyperplane(const Point& p) {
  const std::size_t n = p.size();
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = p[i].convert_to<double>();
  std::vector<double> out;
  double prefix = 0;
  for (std::size_t k = 1; k < n; ++k) {
    prefix += x[k - 1];
    const double kk = static_cast<double>(k);
    out.push_back((prefix - kk * x[k]) / std::sqrt(kk * (kk + 1)));
  }
  return out;
}

namespace {

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

OffMesh build_off_mesh(const Graph& g, const WeightScheme& s, const VerifyOptions& options) {
  if (g.n() != 4) throw ExportError("OFF export needs a 4-node graph (a 3-dimensional polytope)");
  VerificationReport report = full_report(g, s, options);
  if (!report.passed()) throw ExportError("realization does not verify; refusing to export");

  TubeCatalog cat(g);
  auto vertices = realize(cat, s);
  HRep h = build_hrep(cat, s);

  OffMesh mesh;
  for (const auto& v : vertices) {
    auto y = project_to_hyperplane(v.point);
    mesh.vertices.push_back({y[0], y[1], y[2]});
  }
  for (const auto& hs : h.halfspaces) {
    std::vector<std::size_t> face;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      Rational sum = 0;
      for (int x : hs.support().members()) sum += vertices[i].point[x];
      if (sum == hs.rhs) face.push_back(i);
    }
    Point indicator(4);
    for (int x : hs.support().members()) indicator[x] = 1;
    auto inward = project_to_hyperplane(indicator);
    const Vec3 outward{-inward[0], -inward[1], -inward[2]};

    Vec3 centroid{0, 0, 0};
    for (std::size_t i : face)
      for (int d = 0; d < 3; ++d) centroid[d] += mesh.vertices[i][d] / static_cast<double>(face.size());
    const Vec3 u = sub(mesh.vertices[face.front()], centroid);
    const Vec3 w = cross(outward, u);
    auto angle = [&](std::size_t i) {
      Vec3 r = sub(mesh.vertices[i], centroid);
      return std::atan2(dot(r, w), dot(r, u));
    };
    std::sort(face.begin(), face.end(), [&](std::size_t a, std::size_t b) { return angle(a) < angle(b); });
    mesh.faces.push_back(std::move(face));
  }
  return mesh;
}

std::string write_off(const OffMesh& mesh) {
  std::size_t corners = 0;
  for (const auto& f : mesh.faces) corners += f.size();
  std::ostringstream os;
  os << "OFF\n" << mesh.vertices.size() << ' ' << mesh.faces.size() << ' ' << corners / 2 << '\n';
  os << std::setprecision(17);
  for (const auto& v : mesh.vertices) {
    for (int d = 0; d < 3; ++d) {
      double c = v[d] == 0.0 ? 0.0 : v[d];
      os << c << (d < 2 ? ' ' : '\n');
    }
  }
  for (const auto& f : mesh.faces) {
    os << f.size();
    for (std::size_t i : f) os << ' ' << i;
    os << '\n';
  }
  return os.str();
}

}  // namespace tubix
