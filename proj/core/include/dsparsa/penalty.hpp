#pragma once

#include <Eigen/Core>

namespace dsparsa {

enum class PenaltyKind { exp, lp_plus, lp_minus, scad, log, l1 };

// Separable sparsity penalty G(x) = sum_j g(x_j), where each scalar g has the
// difference-of-convex split g = g+ - g- with g+(x) = eta * |x| and g- smooth.
// theta controls sharpness for every kind; a is the SCAD knee (> 1), p the
// negative exponent of lp_minus, epsilon the smoothing offset of lp_plus
// (whose exponent is 1/theta, so theta > 1).
//
// Construct through the factories: they validate the parameter domains.
struct DCPenalty {
  PenaltyKind kind = PenaltyKind::l1;
  double theta = 1.0;
  double a = 0.0;
  double p = 0.0;
  double epsilon = 0.0;

  static DCPenalty exponential(double theta);
  static DCPenalty lp_plus(double theta, double epsilon = 1e-6);
  static DCPenalty lp_minus(double theta, double p);
  static DCPenalty scad(double theta, double a);
  static DCPenalty logarithmic(double theta);
  static DCPenalty l1();
};

double eval_g(const DCPenalty& pen, double x);

// Slope of the convex part g+(x) = eta * |x|.
double eta(const DCPenalty& pen);

// Gradient of the smooth concave-complement part g-; odd, zero at the origin.
double grad_g_minus(const DCPenalty& pen, double x);

// sign(x) * max(|x| - tau, 0), the proximal operator of tau * |.|.
double soft_threshold(double x, double tau);
Eigen::VectorXd soft_threshold(const Eigen::VectorXd& x, double tau);

double eval_G(const DCPenalty& pen, const Eigen::VectorXd& x);
Eigen::VectorXd grad_G_minus(const DCPenalty& pen, const Eigen::VectorXd& x);

}  // namespace dsparsa
