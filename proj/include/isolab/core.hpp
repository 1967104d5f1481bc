#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace isolab {

// Ambient dimension is always between 1 and 4, so vectors and small matrices
// live on the stack.
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, 4, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 4, 4>;
using Box = Eigen::AlignedBox<double, Eigen::Dynamic>;

inline constexpr double kTol = 1e-9;  // global geometric tolerance
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Volume of the n-dimensional Euclidean unit ball.
inline double unit_ball_volume(int n) {
  if (n < 0) throw std::invalid_argument("unit_ball_volume: negative dimension");
  return std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

inline Vec vec1(double x) {
  Vec v(1);
  v << x;
  return v;
}

inline Vec vec2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

inline Vec vec3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

inline Vec vec4(double x, double y, double z, double w) {
  Vec v(4);
  v << x, y, z, w;
  return v;
}

inline bool finite(const Vec& v) { return v.allFinite(); }

// Lexicographic comparison on exact coordinates; used to canonicalize vertex
// lists so that outputs do not depend on input order.
inline bool lex_less(const Vec& a, const Vec& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

}  // namespace isolab
