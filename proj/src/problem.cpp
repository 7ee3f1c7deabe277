#include "snipal/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace snipal {

void LpProblem::validate() const {
  if (!a) throw std::invalid_argument("LpProblem: missing constraint operator");
  box.validate();
  if (static_cast<int>(b.size()) != a->rows())
    throw std::invalid_argument("LpProblem: b length does not match operator rows");
  if (static_cast<int>(c.size()) != a->cols())
    throw std::invalid_argument("LpProblem: c length does not match operator cols");
  if (box.dim() != a->cols())
    throw std::invalid_argument("LpProblem: box dimension does not match operator cols");
}

std::vector<std::string> LpProblem::diagnostics() const {
  std::vector<std::string> notes;
  if (rows() > cols()) {
    notes.push_back("m > n (" + std::to_string(rows()) + " constraints, " +
                    std::to_string(cols()) + " variables); the dual approach expects m <= n");
  }
  return notes;
}

Vec PrimalDualPoint::dual_slack(const LpProblem& prob) const {
  if (z) {
    check_size(*z, prob.c.size(), "PrimalDualPoint::z");
    return *z;
  }
  Vec aty = prob.a->apply_transpose(y);
  Vec slack = prob.c;
  axpy(-1.0, aty, slack);
  return slack;
}

double box_support(const BoxSet& box, const Vec& s, double tol) {
  check_size(s, box.lower.size(), "box_support");
  double total = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double si = s[i];
    if (si > tol) {
      if (std::isinf(box.upper[i])) return kInf;
      total += si * box.upper[i];
    } else if (si < -tol) {
      if (std::isinf(box.lower[i])) return kInf;
      total += si * box.lower[i];
    } else if (si > 0.0) {
      if (!std::isinf(box.upper[i])) total += si * box.upper[i];
    } else if (si < 0.0) {
      if (!std::isinf(box.lower[i])) total += si * box.lower[i];
    }
  }
  return total;
}

KktReport kkt_residual(const LpProblem& prob, const PrimalDualPoint& pt) {
  prob.validate();
  check_size(pt.x, prob.c.size(), "kkt_residual: x");
  check_size(pt.y, prob.b.size(), "kkt_residual: y");

  const Vec z = pt.dual_slack(prob);
  KktReport rep;

  Vec ax = prob.a->apply(pt.x);
  rep.eta_p = norm2(sub(prob.b, ax)) / (1.0 + norm2(prob.b));

  Vec aty = prob.a->apply_transpose(pt.y);
  Vec dres = add(aty, z);
  axpy(-1.0, prob.c, dres);
  rep.eta_d = norm2(dres) / (1.0 + norm2(prob.c));

  Vec proj = project(sub(pt.x, z), prob.box);
  rep.eta_c = norm2(sub(pt.x, proj)) / (1.0 + norm2(pt.x) + norm2(z));

  rep.eta = std::max(rep.eta_p, std::max(rep.eta_d, rep.eta_c));

  rep.pobj = dot(prob.c, pt.x);
  const double by = dot(prob.b, pt.y);
  Vec s = sub(aty, prob.c);
  const double conj = box_support(prob.box, s, 1e-12 * (1.0 + norm2(prob.c)));
  if (std::isinf(conj)) {
    rep.dobj = -kInf;
    rep.dobj_finite = false;
  } else {
    rep.dobj = by - conj;
    rep.dobj_finite = true;
  }
  return rep;
}

std::pair<double, double> objective_values(const LpProblem& prob, const PrimalDualPoint& pt) {
  return {dot(prob.c, pt.x), dot(prob.b, pt.y)};
}

}  // namespace snipal
