#ifndef SNIPAL_NEWTON_HPP_
#define SNIPAL_NEWTON_HPP_

#include <memory>
#include <optional>
#include <string>

#include "snipal/box.hpp"
#include "snipal/dense.hpp"
#include "snipal/krylov.hpp"
#include "snipal/linop.hpp"
#include "snipal/problem.hpp"

namespace snipal {

// Solution strategy for H dy = g with H = tau/sigma I + sigma A_J A_J^T:
//   kDirectH     dense Cholesky of the m x m matrix H
//   kSmwG        Sherman-Morrison-Woodbury through the p x p G = rho I + A_J^T A_J
//   kIterativeH  Krylov on H, matrix-free
//   kIterativeG  Krylov on G with the residual mapped back as -rho^{-1} A_J xi
enum class NewtonStrategy { kDirectH, kSmwG, kIterativeH, kIterativeG };

enum class KrylovKind { kMinres, kCg };

struct NewtonOptions {
  int direct_limit = 2000;  // densify threshold for H (m) and G (p)
  KrylovKind krylov = KrylovKind::kMinres;
  bool force_iterative = false;
  int max_krylov = 0;  // 0 -> 4*dim + 100
};

struct NewtonSolveStats {
  int krylov_iterations = 0;
  double inner_tol = 0.0;  // Krylov tolerance actually used (absolute)
  bool refined = false;
};

// Immutable Newton system for one SSN iteration; factorizations happen at
// build time so concurrent solves with different right-hand sides are safe.
class NewtonSystem {
 public:
  static NewtonSystem build(const LpProblem& prob, const ActiveSet& aset, double sigma,
                            double tau, std::optional<NewtonStrategy> strategy_hint = std::nullopt,
                            const NewtonOptions& opts = {});

  // H v without forming H: sigma*rho*v + sigma * A (e_J o (A^T v)).
  Vec apply_h(const Vec& v) const;

  struct SolveResult {
    Vec dy;
    Vec residual;  // g - H dy (exact mapping for the iterative G path)
    NewtonSolveStats stats;
  };
  // Solves H dy = g to absolute residual norm <= tol.
  SolveResult solve(const Vec& g, double tol) const;

  // kappa(H) <= 1 + ||A||^2 sigma^2 / tau for any active set.
  double condition_bound(double norm_a) const;

  double sigma() const { return sigma_; }
  double tau() const { return tau_; }
  double rho() const { return rho_; }
  int dim() const { return m_; }
  int active_size() const { return p_; }
  NewtonStrategy strategy() const { return strategy_; }
  const ActiveSet& aset() const { return aset_; }
  const LinOpPtr& a_sub() const { return a_sub_; }
  const std::string& warning() const { return warning_; }

 private:
  NewtonSystem() = default;

  Vec direct_solve_once(const Vec& g) const;

  int m_ = 0;
  int p_ = 0;
  double sigma_ = 1.0;
  double tau_ = 1.0;
  double rho_ = 1.0;
  ActiveSet aset_;
  LinOpPtr a_full_;
  LinOpPtr a_sub_;
  NewtonStrategy strategy_ = NewtonStrategy::kDirectH;
  NewtonOptions opts_;
  std::shared_ptr<const DenseCholesky> factor_;  // H or G factor for direct paths
  double a_sub_norm_est_ = 0.0;                  // for the iterative G inner tolerance
  std::string warning_;
};

}  // namespace snipal

#endif  // SNIPAL_NEWTON_HPP_
