#include "dsparsa/penalty.hpp"

#include <cmath>

#include "dsparsa/errors.hpp"

namespace dsparsa {

namespace {

double sgn(double x) { return static_cast<double>(x > 0.0) - static_cast<double>(x < 0.0); }

void require_theta(double theta) {
  if (!(theta > 0.0)) throw ParameterError("penalty: theta must be positive");
}

}  // namespace

DCPenalty DCPenalty::exponential(double theta) {
  require_theta(theta);
  return {PenaltyKind::exp, theta, 0.0, 0.0, 0.0};
}

DCPenalty DCPenalty::lp_plus(double theta, double epsilon) {
  if (!(theta > 1.0)) throw ParameterError("lp_plus: theta must exceed 1 (exponent 1/theta in (0,1))");
  if (!(epsilon > 0.0)) throw ParameterError("lp_plus: epsilon must be positive");
  return {PenaltyKind::lp_plus, theta, 0.0, 0.0, epsilon};
}

DCPenalty DCPenalty::lp_minus(double theta, double p) {
  require_theta(theta);
  if (!(p < 0.0)) throw ParameterError("lp_minus: p must be negative");
  return {PenaltyKind::lp_minus, theta, 0.0, p, 0.0};
}

DCPenalty DCPenalty::scad(double theta, double a) {
  require_theta(theta);
  if (!(a > 1.0)) throw ParameterError("scad: a must exceed 1");
  return {PenaltyKind::scad, theta, a, 0.0, 0.0};
}

DCPenalty DCPenalty::logarithmic(double theta) {
  require_theta(theta);
  return {PenaltyKind::log, theta, 0.0, 0.0, 0.0};
}

DCPenalty DCPenalty::l1() { return {PenaltyKind::l1, 1.0, 0.0, 0.0, 0.0}; }

double eval_g(const DCPenalty& pen, double x) {
  const double ax = std::abs(x);
  switch (pen.kind) {
    case PenaltyKind::exp:
      return 1.0 - std::exp(-pen.theta * ax);
    case PenaltyKind::lp_plus:
      return std::pow(ax + pen.epsilon, 1.0 / pen.theta);
    case PenaltyKind::lp_minus:
      return 1.0 - std::pow(pen.theta * ax + 1.0, pen.p);
    case PenaltyKind::scad: {
      const double t = pen.theta, a = pen.a;
      if (ax <= 1.0 / t) return 2.0 * t / (a + 1.0) * ax;
      if (ax <= a / t) return (-t * t * ax * ax + 2.0 * a * t * ax - 1.0) / (a * a - 1.0);
      return 1.0;
    }
    case PenaltyKind::log:
      return std::log1p(pen.theta * ax) / std::log1p(pen.theta);
    case PenaltyKind::l1:
      return ax;
  }
  return 0.0;
}

double eta(const DCPenalty& pen) {
  switch (pen.kind) {
    case PenaltyKind::exp:
      return pen.theta;
    case PenaltyKind::lp_plus:
      return std::pow(pen.epsilon, 1.0 / pen.theta - 1.0) / pen.theta;
    case PenaltyKind::lp_minus:
      return -pen.p * pen.theta;
    case PenaltyKind::scad:
      return 2.0 * pen.theta / (pen.a + 1.0);
    case PenaltyKind::log:
      return pen.theta / std::log1p(pen.theta);
    case PenaltyKind::l1:
      return 1.0;
  }
  return 0.0;
}

double grad_g_minus(const DCPenalty& pen, double x) {
  const double ax = std::abs(x);
  const double s = sgn(x);
  switch (pen.kind) {
    case PenaltyKind::exp:
      return s * pen.theta * (1.0 - std::exp(-pen.theta * ax));
    case PenaltyKind::lp_plus: {
      const double e = 1.0 / pen.theta - 1.0;
      return s / pen.theta * (std::pow(pen.epsilon, e) - std::pow(ax + pen.epsilon, e));
    }
    case PenaltyKind::lp_minus:
      return -s * pen.p * pen.theta * (1.0 - std::pow(1.0 + pen.theta * ax, pen.p - 1.0));
    case PenaltyKind::scad: {
      const double t = pen.theta, a = pen.a;
      if (ax <= 1.0 / t) return 0.0;
      if (ax <= a / t) return s * 2.0 * t * (t * ax - 1.0) / (a * a - 1.0);
      return s * 2.0 * t / (a + 1.0);
    }
    case PenaltyKind::log:
      return s * pen.theta * pen.theta * ax / (std::log1p(pen.theta) * (1.0 + pen.theta * ax));
    case PenaltyKind::l1:
      return 0.0;
  }
  return 0.0;
}

double soft_threshold(double x, double tau) {
  if (tau < 0.0) throw ParameterError("soft_threshold: tau must be nonnegative");
  return sgn(x) * std::max(std::abs(x) - tau, 0.0);
}

Eigen::VectorXd soft_threshold(const Eigen::VectorXd& x, double tau) {
  if (tau < 0.0) throw ParameterError("soft_threshold: tau must be nonnegative");
  Eigen::VectorXd out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    out[i] = sgn(x[i]) * std::max(std::abs(x[i]) - tau, 0.0);
  }
  return out;
}

double eval_G(const DCPenalty& pen, const Eigen::VectorXd& x) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) total += eval_g(pen, x[i]);
  return total;
}

Eigen::VectorXd grad_G_minus(const DCPenalty& pen, const Eigen::VectorXd& x) {
  Eigen::VectorXd out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = grad_g_minus(pen, x[i]);
  return out;
}

}  // namespace dsparsa
