#pragma once

#include <vector>

namespace isolab {

// Nodes and weights of the m-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussRule& gauss_legendre(int m);

// Quadrature rule for integrals over a level range [0, t_max].  Integrands of
// the form t -> W_i({f >= t}) are bounded but can have derivative
// singularities at both endpoints, so the default rule grades panel widths
// dyadically toward 0 and t_max.
struct LevelRule {
  double t_max = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  template <typename F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) acc += weights[k] * f(nodes[k]);
    return acc;
  }
};

// Dyadically graded composite rule; panels_per_side halvings from each end.
LevelRule graded_level_rule(double t_max, int panels_per_side = 24,
                            int nodes_per_panel = 4);

// Composite rule with panels split at the given interior knots (e.g. levels
// of polytope vertices, where slice functionals have kinks).
LevelRule knot_level_rule(double t_max, const std::vector<double>& knots,
                          int nodes_per_panel = 8, int max_panels = 256);

}  // namespace isolab
