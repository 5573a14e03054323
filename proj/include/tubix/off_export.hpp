#ifndef TUBIX_OFF_EXPORT_HPP
#define TUBIX_OFF_EXPORT_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "tubix/graph.hpp"
#include "tubix/realization.hpp"
#include "tubix/verify.hpp"

namespace tubix {

class ExportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coordinates of p in the orthonormal basis e_1..e_{n-1} of the hyperplane
// direction space, e_k = (1,..,1,-k,0,..,0)/sqrt(k(k+1)) with k ones.
std::vector<double> project_to_hyperplane(const Point& p);

struct OffMesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::vector<std::size_t>> faces;  // counter-clockwise seen from outside
};

// Builds the 3D mesh of P(G) for a 4-node graph: one face per tube, vertex
// cycles sorted by angle around the facet centroid. Throws ExportError when
// n != 4 or the realization does not verify.
OffMesh build_off_mesh(const Graph& g, const WeightScheme& s, const VerifyOptions& options = {});

// OFF header, "V F E" counts line, vertices with 17 significant digits, faces.
std::string write_off(const OffMesh& mesh);

}  // namespace tubix

#endif
