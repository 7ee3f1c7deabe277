#include "snipal/box.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace snipal {

BoxSet BoxSet::bounds(Vec l, Vec u) {
  BoxSet box{std::move(l), std::move(u)};
  box.validate();
  return box;
}

void BoxSet::validate() const {
  if (lower.size() != upper.size()) throw std::invalid_argument("BoxSet: bound lengths differ");
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (std::isnan(lower[i]) || std::isnan(upper[i]))
      throw std::invalid_argument("BoxSet: NaN bound at index " + std::to_string(i));
    if (lower[i] > upper[i])
      throw std::invalid_argument("BoxSet: lower > upper at index " + std::to_string(i));
  }
}

bool BoxSet::contains(const Vec& x, double tol) const {
  check_size(x, lower.size(), "BoxSet::contains");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < lower[i] - tol || x[i] > upper[i] + tol) return false;
  }
  return true;
}

Vec project(const Vec& w, const BoxSet& box) {
  check_size(w, box.lower.size(), "project");
  Vec p(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    p[i] = std::min(std::max(w[i], box.lower[i]), box.upper[i]);
  }
  return p;
}

ActiveSet active_set(const Vec& w, const BoxSet& box) {
  check_size(w, box.lower.size(), "active_set");
  ActiveSet aset;
  for (std::size_t i = 0; i < w.size(); ++i) {
    // Strict comparisons: a boundary tie picks the zero Jacobian element.
    if (box.lower[i] < w[i] && w[i] < box.upper[i]) aset.indices.push_back(static_cast<int>(i));
  }
  return aset;
}

Vec apply_jacobian(const ActiveSet& aset, const Vec& v) {
  Vec out(v.size(), 0.0);
  for (int i : aset.indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= v.size())
      throw std::invalid_argument("apply_jacobian: index out of range");
    out[i] = v[i];
  }
  return out;
}

Vec moreau_dual_step(const Vec& w, const BoxSet& box, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("moreau_dual_step: sigma must be positive");
  Vec z = project(w, box);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = (z[i] - w[i]) / sigma;
  return z;
}

}  // namespace snipal
