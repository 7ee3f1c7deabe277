#ifndef SNIPAL_BOX_HPP_
#define SNIPAL_BOX_HPP_

#include <limits>
#include <vector>

#include "snipal/vec.hpp"

namespace snipal {

constexpr double kInf = std::numeric_limits<double>::infinity();

// The box K = { x | lower <= x <= upper }, entries may be -inf / +inf.
struct BoxSet {
  Vec lower;
  Vec upper;

  int dim() const { return static_cast<int>(lower.size()); }

  static BoxSet nonnegative(int n) { return BoxSet{Vec(n, 0.0), Vec(n, kInf)}; }
  static BoxSet free_box(int n) { return BoxSet{Vec(n, -kInf), Vec(n, kInf)}; }
  static BoxSet bounds(Vec l, Vec u);  // validates

  void validate() const;
  bool contains(const Vec& x, double tol = 0.0) const;
};

// Strictly interior index set of a projection argument: the indices i with
// lower[i] < w[i] < upper[i]. Boundary ties are excluded.
struct ActiveSet {
  std::vector<int> indices;  // strictly increasing

  int size() const { return static_cast<int>(indices.size()); }
  bool empty() const { return indices.empty(); }
};

// Componentwise clamp of w onto the box (median of l, w, u).
Vec project(const Vec& w, const BoxSet& box);

ActiveSet active_set(const Vec& w, const BoxSet& box);

// Zeroes every component of v outside the active set.
Vec apply_jacobian(const ActiveSet& aset, const Vec& v);

// sigma^{-1} (Pi_K(w) - w); the z-update of the dual ADMM with
// w = x + sigma (A^T y - c) already formed by the caller.
Vec moreau_dual_step(const Vec& w, const BoxSet& box, double sigma);

}  // namespace snipal

#endif  // SNIPAL_BOX_HPP_
