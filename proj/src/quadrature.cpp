#include "isolab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace isolab {

namespace {

GaussRule compute_gauss(int m) {
  // Newton iteration on Legendre polynomials, roots symmetric about zero.
  GaussRule r;
  r.nodes.resize(m);
  r.weights.resize(m);
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (m + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < m; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = m * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.nodes[i] = -x;
    r.nodes[m - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.weights[i] = w;
    r.weights[m - 1 - i] = w;
  }
  return r;
}

void append_panel(LevelRule& rule, double a, double b, const GaussRule& g) {
  if (!(b > a)) return;
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    rule.nodes.push_back(mid + half * g.nodes[k]);
    rule.weights.push_back(half * g.weights[k]);
  }
}

}  // namespace

const GaussRule& gauss_legendre(int m) {
  if (m < 1 || m > 128) throw std::invalid_argument("gauss_legendre: bad order");
  static std::map<int, GaussRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, compute_gauss(m)).first;
  return it->second;
}

LevelRule graded_level_rule(double t_max, int panels_per_side, int nodes_per_panel) {
  if (!(t_max > 0.0)) throw std::invalid_argument("graded_level_rule: t_max must be positive");
  const GaussRule& g = gauss_legendre(nodes_per_panel);
  LevelRule rule;
  rule.t_max = t_max;
  const double half = 0.5 * t_max;
  // Lower side: [half*2^-k-1, half*2^-k], closing panel down to 0.
  double hi = half;
  for (int k = 0; k < panels_per_side; ++k) {
    double lo = hi * 0.5;
    append_panel(rule, lo, hi, g);
    hi = lo;
  }
  append_panel(rule, 0.0, hi, g);
  // Upper side mirrored toward t_max.
  double gap = half;
  for (int k = 0; k < panels_per_side; ++k) {
    double next = gap * 0.5;
    append_panel(rule, t_max - gap, t_max - next, g);
    gap = next;
  }
  append_panel(rule, t_max - gap, t_max, g);
  return rule;
}

LevelRule knot_level_rule(double t_max, const std::vector<double>& knots,
                          int nodes_per_panel, int max_panels) {
  if (!(t_max > 0.0)) throw std::invalid_argument("knot_level_rule: t_max must be positive");
  std::vector<double> cuts;
  cuts.push_back(0.0);
  for (double k : knots)
    if (k > 1e-14 * t_max && k < t_max * (1.0 - 1e-14)) cuts.push_back(k);
  cuts.push_back(t_max);
  std::sort(cuts.begin(), cuts.end());
  // Merge near-coincident knots.
  std::vector<double> merged;
  for (double c : cuts) {
    if (merged.empty() || c - merged.back() > 1e-12 * t_max) merged.push_back(c);
  }
  if (merged.back() != t_max) merged.back() = t_max;
  // Thin to at most max_panels panels, always keeping the endpoints.
  if (static_cast<int>(merged.size()) - 1 > max_panels) {
    std::vector<double> thin;
    thin.push_back(merged.front());
    double n_inner = static_cast<double>(merged.size() - 2);
    for (int j = 1; j < max_panels; ++j) {
      std::size_t idx = 1 + static_cast<std::size_t>(n_inner * j / max_panels);
      if (thin.back() < merged[idx]) thin.push_back(merged[idx]);
    }
    thin.push_back(merged.back());
    merged = std::move(thin);
  }
  const GaussRule& g = gauss_legendre(nodes_per_panel);
  LevelRule rule;
  rule.t_max = t_max;
  for (std::size_t i = 0; i + 1 < merged.size(); ++i)
    append_panel(rule, merged[i], merged[i + 1], g);
  return rule;
}

}  // namespace isolab
