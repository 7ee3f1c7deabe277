#ifndef SNIPAL_VEC_HPP_
#define SNIPAL_VEC_HPP_

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace snipal {

using Vec = std::vector<double>;

inline void check_size(const Vec& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw std::invalid_argument(std::string(what) + ": expected length " +
                                std::to_string(n) + ", got " +
                                std::to_string(v.size()));
  }
}

inline double dot(const Vec& a, const Vec& b) {
  check_size(b, a.size(), "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Vec& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

inline double norm_inf(const Vec& a) {
  double s = 0.0;
  for (double v : a) s = std::max(s, std::fabs(v));
  return s;
}

// y += alpha * x
inline void axpy(double alpha, const Vec& x, Vec& y) {
  check_size(y, x.size(), "axpy");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline void scale(Vec& x, double alpha) {
  for (double& v : x) v *= alpha;
}

inline Vec scaled(const Vec& x, double alpha) {
  Vec y = x;
  scale(y, alpha);
  return y;
}

inline Vec add(const Vec& a, const Vec& b) {
  check_size(b, a.size(), "add");
  Vec y = a;
  axpy(1.0, b, y);
  return y;
}

inline Vec sub(const Vec& a, const Vec& b) {
  check_size(b, a.size(), "sub");
  Vec y = a;
  axpy(-1.0, b, y);
  return y;
}

inline Vec zeros(std::size_t n) { return Vec(n, 0.0); }

inline Vec unit(std::size_t n, std::size_t i) {
  Vec e(n, 0.0);
  e[i] = 1.0;
  return e;
}

inline bool all_finite(const Vec& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace snipal

#endif  // SNIPAL_VEC_HPP_
