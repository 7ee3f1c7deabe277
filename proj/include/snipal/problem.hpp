#ifndef SNIPAL_PROBLEM_HPP_
#define SNIPAL_PROBLEM_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "snipal/box.hpp"
#include "snipal/linop.hpp"
#include "snipal/vec.hpp"

namespace snipal {

// Data of the primal LP  min { c'x : Ax = b, x in K }  and its dual over y.
struct LpProblem {
  LinOpPtr a;  // m x n
  Vec b;       // length m
  Vec c;       // length n
  BoxSet box;  // dimension n

  int rows() const { return a ? a->rows() : 0; }
  int cols() const { return a ? a->cols() : 0; }

  void validate() const;
  // Non-fatal observations (e.g. more constraints than variables).
  std::vector<std::string> diagnostics() const;
};

struct PrimalDualPoint {
  Vec x;  // length n
  Vec y;  // length m
  std::optional<Vec> z;

  // The dual slack: stored z if present, else c - A^T y.
  Vec dual_slack(const LpProblem& prob) const;

  static PrimalDualPoint zero(const LpProblem& prob) {
    return PrimalDualPoint{Vec(prob.cols(), 0.0), Vec(prob.rows(), 0.0), std::nullopt};
  }
};

struct KktReport {
  double eta_p = 0.0;  // ||b - Ax|| / (1 + ||b||)
  double eta_d = 0.0;  // ||A'y + z - c|| / (1 + ||c||)
  double eta_c = 0.0;  // ||x - Pi_K(x - z)|| / (1 + ||x|| + ||z||)
  double eta = 0.0;    // max of the three
  double pobj = 0.0;   // c'x
  double dobj = 0.0;   // b'y - support_K(A'y - c); -inf when the conjugate blows up
  bool dobj_finite = true;
};

// Relative KKT residual; the global stopping metric.
KktReport kkt_residual(const LpProblem& prob, const PrimalDualPoint& pt);

// Plain logging objectives (c'x, b'y).
std::pair<double, double> objective_values(const LpProblem& prob, const PrimalDualPoint& pt);

// Support function of the box at s, i.e. sup { <s, x> : x in K }. Components
// of s within +-tol of zero are treated as zero against infinite bounds.
double box_support(const BoxSet& box, const Vec& s, double tol);

}  // namespace snipal

#endif  // SNIPAL_PROBLEM_HPP_
