#include "isolab/polytope.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace isolab {

namespace {

// Vector orthogonal to the span of the columns of E ((d-1) vectors in R^d).
Vec generalized_cross(const Eigen::MatrixXd& E) {
  const int d = static_cast<int>(E.rows());
  Vec n(d);
  if (d == 2) {
    n << -E(1, 0), E(0, 0);
  } else if (d == 3) {
    Eigen::Vector3d a = E.col(0), b = E.col(1);
    Eigen::Vector3d c = a.cross(b);
    n << c(0), c(1), c(2);
  } else if (d == 4) {
    // Cofactor expansion along the missing row.
    for (int i = 0; i < 4; ++i) {
      Eigen::Matrix3d m;
      int r = 0;
      for (int j = 0; j < 4; ++j) {
        if (j == i) continue;
        m.row(r++) = E.row(j);
      }
      n(i) = ((i % 2) ? -1.0 : 1.0) * m.determinant();
    }
  } else {
    throw std::logic_error("generalized_cross: dimension out of range");
  }
  return n;
}

double simplex_facet_measure(const std::vector<Vec>& pts, const std::vector<int>& vs, int d) {
  if (d == 1) return 1.0;  // counting measure of a point facet
  Eigen::MatrixXd E(d, d - 1);
  for (int j = 1; j < d; ++j) E.col(j - 1) = pts[vs[j]] - pts[vs[0]];
  if (d == 2) return E.col(0).norm();
  Eigen::MatrixXd G = E.transpose() * E;
  double det = G.determinant();
  if (det < 0.0) det = 0.0;
  double fact = (d == 3) ? 2.0 : 6.0;
  return std::sqrt(det) / fact;
}

struct BFacet {
  std::vector<int> vs;  // d global point ids
  std::vector<int> nb;  // nb[j] opposite vs[j]
  Vec n;
  double off = 0.0;
  bool alive = true;
};

}  // namespace

class HullBuilder {
 public:
  HullBuilder(const std::vector<Vec>& pts, int d) : pts_(pts), d_(d) {}

  Polytope run();

 private:
  const std::vector<Vec>& pts_;
  int d_;
  std::vector<BFacet> facets_;
  Vec c0_;  // interior point of the initial simplex

  int rank_detect(std::vector<int>& chosen, Eigen::MatrixXd& basis) const;
  void make_facet(std::vector<int> vs, std::vector<int> nb, int parent);
  void insert_point(int q);
  Polytope assemble() const;
  Polytope degenerate(const std::vector<int>& chosen, int rank,
                      const Eigen::MatrixXd& basis) const;
  Polytope dim1() const;
};

int HullBuilder::rank_detect(std::vector<int>& chosen, Eigen::MatrixXd& basis) const {
  const int m = static_cast<int>(pts_.size());
  chosen.clear();
  chosen.push_back(0);
  basis.resize(d_, 0);
  for (int k = 0; k < d_; ++k) {
    int best = -1;
    double best_dist = kTol;
    for (int i = 0; i < m; ++i) {
      Vec r = pts_[i] - pts_[0];
      if (k > 0) r -= basis.leftCols(k) * (basis.leftCols(k).transpose() * r);
      double dn = r.norm();
      if (dn > best_dist) {
        best_dist = dn;
        best = i;
      }
    }
    if (best < 0) return k;
    chosen.push_back(best);
    Vec r = pts_[best] - pts_[0];
    if (k > 0) r -= basis.leftCols(k) * (basis.leftCols(k).transpose() * r);
    basis.conservativeResize(Eigen::NoChange, k + 1);
    basis.col(k) = r / r.norm();
  }
  return d_;
}

void HullBuilder::make_facet(std::vector<int> vs, std::vector<int> nb, int parent) {
  BFacet f;
  f.vs = std::move(vs);
  f.nb = std::move(nb);
  Eigen::MatrixXd E(d_, d_ - 1);
  for (int j = 1; j < d_; ++j) E.col(j - 1) = pts_[f.vs[j]] - pts_[f.vs[0]];
  Vec n = generalized_cross(E);
  double len = n.norm();
  double scale = 0.0;
  for (int j = 0; j < d_ - 1; ++j) scale = std::max(scale, E.col(j).norm());
  if (len > 1e-14 * std::max(1.0, std::pow(scale, d_ - 1))) {
    f.n = n / len;
  } else if (parent >= 0) {
    // Sliver facet, affinely dependent vertices; inherit the plane it replaces.
    f.n = facets_[parent].n;
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(E.transpose(), Eigen::ComputeFullV);
    f.n = svd.matrixV().col(d_ - 1);
  }
  double off = 0.0;
  for (int id : f.vs) off += f.n.dot(pts_[id]);
  off /= static_cast<double>(f.vs.size());
  if (f.n.dot(c0_) > off) {
    f.n = -f.n;
    off = -off;
  }
  f.off = off;
  facets_.push_back(std::move(f));
}

void HullBuilder::insert_point(int q) {
  const Vec& p = pts_[q];
  std::vector<int> visible;
  for (int i = 0; i < static_cast<int>(facets_.size()); ++i) {
    if (facets_[i].alive && facets_[i].n.dot(p) > facets_[i].off + kTol) visible.push_back(i);
  }
  if (visible.empty()) return;

  std::vector<char> is_visible(facets_.size(), 0);
  for (int i : visible) is_visible[i] = 1;

  struct Ridge {
    std::vector<int> verts;
    int outer;
    int parent;
  };
  std::vector<Ridge> horizon;
  for (int fi : visible) {
    const BFacet& f = facets_[fi];
    for (int j = 0; j < d_; ++j) {
      int g = f.nb[j];
      if (g >= 0 && !is_visible[g]) {
        Ridge r;
        r.outer = g;
        r.parent = fi;
        for (int k = 0; k < d_; ++k)
          if (k != j) r.verts.push_back(f.vs[k]);
        horizon.push_back(std::move(r));
      }
    }
  }

  std::map<std::vector<int>, std::pair<int, int>> open_ridges;
  for (const Ridge& r : horizon) {
    std::vector<int> vs = r.verts;
    vs.push_back(q);
    std::vector<int> nb(d_, -1);
    nb[d_ - 1] = r.outer;  // across the horizon ridge
    int fid = static_cast<int>(facets_.size());
    make_facet(std::move(vs), std::move(nb), r.parent);
    // Rewire the outer facet to point at the replacement of its dead neighbor.
    BFacet& outer = facets_[r.outer];
    for (int j = 0; j < d_; ++j) {
      if (outer.nb[j] == r.parent) outer.nb[j] = fid;
    }
    // Pair new facets along their shared sub-ridges (all contain q).
    for (int j = 0; j + 1 < d_; ++j) {
      std::vector<int> key;
      for (int k = 0; k + 1 < d_; ++k)
        if (k != j) key.push_back(facets_[fid].vs[k]);
      std::sort(key.begin(), key.end());
      auto it = open_ridges.find(key);
      if (it == open_ridges.end()) {
        open_ridges.emplace(std::move(key), std::make_pair(fid, j));
      } else {
        facets_[fid].nb[j] = it->second.first;
        facets_[it->second.first].nb[it->second.second] = fid;
        open_ridges.erase(it);
      }
    }
  }
  for (int fi : visible) facets_[fi].alive = false;
}

Polytope HullBuilder::dim1() const {
  int lo = 0, hi = 0;
  for (int i = 1; i < static_cast<int>(pts_.size()); ++i) {
    if (pts_[i](0) < pts_[lo](0)) lo = i;
    if (pts_[i](0) > pts_[hi](0)) hi = i;
  }
  Polytope P;
  P.dim_ = 1;
  if (pts_[hi](0) - pts_[lo](0) <= kTol) {
    P.affine_dim_ = 0;
    P.vertices_.push_back(pts_[lo]);
    return P;
  }
  P.affine_dim_ = 1;
  P.vertices_.push_back(pts_[lo]);
  P.vertices_.push_back(pts_[hi]);
  Facet fl, fh;
  fl.normal = vec1(-1.0);
  fl.offset = -pts_[lo](0);
  fl.measure = 1.0;
  fl.vertices = {0};
  fl.neighbors = {1};
  fh.normal = vec1(1.0);
  fh.offset = pts_[hi](0);
  fh.measure = 1.0;
  fh.vertices = {1};
  fh.neighbors = {0};
  P.facets_ = {fl, fh};
  return P;
}

Polytope HullBuilder::degenerate(const std::vector<int>& chosen, int rank,
                                 const Eigen::MatrixXd& basis) const {
  Polytope P;
  P.dim_ = d_;
  if (rank == 0) {
    P.affine_dim_ = 0;
    P.vertices_.push_back(pts_[chosen[0]]);
    return P;
  }
  const Vec origin = pts_[chosen[0]];
  std::vector<Vec> local(pts_.size());
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    Vec l = basis.transpose() * (pts_[i] - origin);
    local[i] = l;
  }
  HullBuilder sub(local, rank);
  Polytope red = sub.run();
  P.affine_dim_ = red.affine_dim();
  P.frame_origin_ = origin;
  P.frame_basis_ = basis;
  for (const Vec& v : red.vertices()) {
    Vec amb = origin + basis * v;
    P.vertices_.push_back(amb);
  }
  std::sort(P.vertices_.begin(), P.vertices_.end(), lex_less);
  P.reduced_ = std::make_shared<const Polytope>(std::move(red));
  return P;
}

Polytope HullBuilder::assemble() const {
  // Collect alive facets and their vertices, then canonicalize.
  std::vector<int> used;
  for (const BFacet& f : facets_)
    if (f.alive)
      for (int id : f.vs) used.push_back(id);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());

  std::vector<int> order = used;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lex_less(pts_[a], pts_[b]); });
  std::vector<int> global_to_local(pts_.size(), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) global_to_local[order[i]] = i;

  Polytope P;
  P.dim_ = d_;
  P.affine_dim_ = d_;
  for (int id : order) P.vertices_.push_back(pts_[id]);

  std::vector<int> facet_ids;
  for (int i = 0; i < static_cast<int>(facets_.size()); ++i)
    if (facets_[i].alive) facet_ids.push_back(i);
  // Deterministic facet order: by sorted local vertex ids.
  std::vector<std::vector<int>> keys(facet_ids.size());
  for (std::size_t k = 0; k < facet_ids.size(); ++k) {
    for (int id : facets_[facet_ids[k]].vs) keys[k].push_back(global_to_local[id]);
    std::sort(keys[k].begin(), keys[k].end());
  }
  std::vector<int> perm(facet_ids.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<int> facet_pos(facets_.size(), -1);
  for (std::size_t k = 0; k < perm.size(); ++k) facet_pos[facet_ids[perm[k]]] = static_cast<int>(k);

  for (std::size_t k = 0; k < perm.size(); ++k) {
    const BFacet& bf = facets_[facet_ids[perm[k]]];
    Facet f;
    f.normal = bf.n;
    f.offset = bf.off;
    f.measure = simplex_facet_measure(pts_, bf.vs, d_);
    for (int id : bf.vs) f.vertices.push_back(global_to_local[id]);
    for (int nb : bf.nb) f.neighbors.push_back(nb >= 0 ? facet_pos[nb] : -1);
    P.facets_.push_back(std::move(f));
  }
  return P;
}

Polytope HullBuilder::run() {
  if (pts_.empty()) return Polytope::make_empty(d_);
  if (d_ == 1) return dim1();

  std::vector<int> chosen;
  Eigen::MatrixXd basis;
  int rank = rank_detect(chosen, basis);
  if (rank < d_) return degenerate(chosen, rank, basis);

  c0_ = Vec::Zero(d_);
  for (int id : chosen) c0_ += pts_[id];
  c0_ /= static_cast<double>(chosen.size());

  // Initial simplex: one facet per omitted vertex.
  const int ns = d_ + 1;
  for (int omit = 0; omit < ns; ++omit) {
    std::vector<int> vs;
    for (int j = 0; j < ns; ++j)
      if (j != omit) vs.push_back(chosen[j]);
    std::vector<int> nb(d_, -1);
    make_facet(std::move(vs), std::move(nb), -1);
  }
  // Wire simplex adjacency: facet `omit` neighbors facet `omit2` across the
  // ridge missing both.
  for (int a = 0; a < ns; ++a) {
    BFacet& fa = facets_[a];
    for (int j = 0; j < d_; ++j) {
      int missing = fa.vs[j];
      for (int b = 0; b < ns; ++b) {
        if (b == a) continue;
        if (std::find(facets_[b].vs.begin(), facets_[b].vs.end(), missing) ==
            facets_[b].vs.end()) {
          fa.nb[j] = b;
          break;
        }
      }
    }
  }

  std::vector<char> in_simplex(pts_.size(), 0);
  for (int id : chosen) in_simplex[id] = 1;
  for (int i = 0; i < static_cast<int>(pts_.size()); ++i)
    if (!in_simplex[i]) insert_point(i);

  return assemble();
}

Polytope convex_hull(const std::vector<Vec>& points, int dim) {
  if (dim < 1 || dim > 4)
    throw std::invalid_argument("convex_hull: DimensionOutOfRange (dim must be 1..4)");
  if (points.empty()) throw std::invalid_argument("convex_hull: EmptyInput");
  std::vector<Vec> pts;
  pts.reserve(points.size());
  for (const Vec& p : points) {
    if (p.size() != dim) throw std::invalid_argument("convex_hull: point dimension mismatch");
    if (!finite(p)) throw std::invalid_argument("convex_hull: non-finite coordinate");
    pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec& a, const Vec& b) { return a == b; }),
            pts.end());
  HullBuilder hb(pts, dim);
  return hb.run();
}

Vec Polytope::vertex_centroid() const {
  if (empty()) throw std::runtime_error("Polytope: EmptyPolytope");
  Vec c = Vec::Zero(dim_);
  for (const Vec& v : vertices_) c += v;
  return c / static_cast<double>(vertices_.size());
}

bool Polytope::contains(const Vec& x, double tol) const {
  if (empty()) return false;
  if (affine_dim_ == 0) return (x - vertices_[0]).norm() <= tol;
  if (full_dimensional()) {
    for (const Facet& f : facets_)
      if (f.normal.dot(x) > f.offset + tol) return false;
    return true;
  }
  Vec r = x - frame_origin_;
  Vec local = frame_basis_.transpose() * r;
  Vec residual = r - frame_basis_ * local;
  if (residual.norm() > tol) return false;
  return reduced_->contains(local, tol);
}

double Polytope::intrinsic_measure() const {
  if (empty()) return 0.0;
  if (affine_dim_ == 0) return 0.0;
  const Polytope& top = full_dimensional() ? *this : *reduced_;
  // Fan decomposition from the vertex centroid.
  Vec c = top.vertex_centroid();
  double vol = 0.0;
  const int d = top.dim();
  for (const Facet& f : top.facets()) {
    double h = f.offset - f.normal.dot(c);
    if (h > 0.0) vol += f.measure * h / static_cast<double>(d);
  }
  return vol;
}

}  // namespace isolab
