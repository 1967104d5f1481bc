#pragma once

#include "isolab/core.hpp"

#include <memory>
#include <vector>

namespace isolab {

// Closed halfspace {x : <normal, x> <= offset} with unit normal.
struct Halfspace {
  Vec normal;
  double offset = 0.0;

  Halfspace() = default;
  Halfspace(const Vec& n, double c) : normal(n), offset(c) {
    double len = normal.norm();
    if (!(len > kTol)) throw std::invalid_argument("Halfspace: zero normal");
    normal /= len;
    offset /= len;
  }

  Halfspace complement() const {
    Halfspace h;
    h.normal = -normal;
    h.offset = -offset;
    return h;
  }
};

// Facets are (dim-1)-simplices; a polytope with more vertices per face is
// stored triangulated (adjacent coplanar facets share a normal).
struct Facet {
  Vec normal;                  // outward unit normal
  double offset = 0.0;         // <normal, v> == offset on the facet
  double measure = 0.0;        // (dim-1)-measure of the simplex
  std::vector<int> vertices;   // dim vertex indices
  std::vector<int> neighbors;  // neighbors[j] shares all vertices but vertices[j]
};

// Convex polytope in ambient dimension 1..4, vertex plus facet representation.
// Degenerate hulls (affine_dim < dim) are legal values: they carry an affine
// frame and a full-dimensional reduced hull in frame coordinates instead of
// ambient facets.  Instances are immutable after construction.
class Polytope {
 public:
  Polytope() = default;

  static Polytope make_empty(int dim) {
    Polytope p;
    p.dim_ = dim;
    p.affine_dim_ = -1;
    return p;
  }

  int dim() const { return dim_; }
  int affine_dim() const { return affine_dim_; }
  bool empty() const { return vertices_.empty(); }
  bool full_dimensional() const { return !empty() && affine_dim_ == dim_; }

  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  const Vec& frame_origin() const { return frame_origin_; }
  const Eigen::MatrixXd& frame_basis() const { return frame_basis_; }
  bool has_reduced() const { return static_cast<bool>(reduced_); }
  const Polytope& reduced() const { return *reduced_; }

  Vec vertex_centroid() const;
  bool contains(const Vec& x, double tol = kTol) const;

  // Dimension-top measure in the affine hull: ambient volume when full
  // dimensional, else length/area/... of the reduced hull.
  double intrinsic_measure() const;

 private:
  int dim_ = 0;
  int affine_dim_ = -1;
  std::vector<Vec> vertices_;
  std::vector<Facet> facets_;
  Vec frame_origin_;
  Eigen::MatrixXd frame_basis_;  // dim x affine_dim, orthonormal columns
  std::shared_ptr<const Polytope> reduced_;

  friend class HullBuilder;
};

// Convex hull of the given points.  Lower dimensional input yields a
// degenerate hull, never an error; an empty input throws.
Polytope convex_hull(const std::vector<Vec>& points, int dim);

}  // namespace isolab
