#ifndef SNIPAL_KRYLOV_HPP_
#define SNIPAL_KRYLOV_HPP_

#include <vector>

#include "snipal/linop.hpp"
#include "snipal/vec.hpp"

namespace snipal {

enum class KrylovStatus { kConverged, kMaxIter, kBreakdown, kIndefinite };

struct KrylovResult {
  Vec solution;
  Vec residual;  // rhs - op * solution, recomputed explicitly
  int iterations = 0;
  KrylovStatus status = KrylovStatus::kConverged;
  std::vector<double> residual_norms;  // per-iteration estimates, starting at ||rhs||
};

// MINRES for symmetric (possibly singular, consistent) systems; zero initial
// point. Terminates when the residual norm drops to tol * ||rhs||. The
// returned residual vector is recomputed from the final iterate because the
// recurrence estimate can drift.
KrylovResult minres_solve(const LinearOperator& op, const Vec& rhs, double tol, int maxit);

// Conjugate gradients for symmetric positive definite systems; zero initial
// point and the same relative termination rule. Negative curvature flags the
// result as indefinite.
KrylovResult cg_solve(const LinearOperator& op, const Vec& rhs, double tol, int maxit);

}  // namespace snipal

#endif  // SNIPAL_KRYLOV_HPP_
