#include "rsph/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace rsph {

namespace {

double log_beta(double x, double y) {
  return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y);
}

// Golub-Welsch for the Jacobi weight (1-t)^a (1+t)^b on [-1, 1]:
// nodes are eigenvalues of the symmetrized recurrence matrix, weights come
// from the first eigenvector components scaled by the weight's total mass.
QuadratureRule golub_welsch_jacobi(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("golub_welsch_jacobi: need n >= 1");
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  const double ab = a + b;
  diag(0) = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    double q = 2.0 * k + ab;
    diag(k) = (b * b - a * a) / (q * (q + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    double q = 2.0 * k + ab;
    double num = 4.0 * k * (k + a) * (k + b) * (k + ab);
    double den = q * q * (q * q - 1.0);
    sub(k - 1) = std::sqrt(num / den);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("golub_welsch_jacobi: eigensolver failed");
  }

  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + log_beta(a + 1.0, b + 1.0));
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    double v = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v * v;
  }
  return rule;
}

// Enforce the exact t -> -t symmetry of an even weight; keeps antipodal
// node pairing exact on product grids.
void symmetrize(QuadratureRule& rule) {
  int n = static_cast<int>(rule.nodes.size());
  for (int i = 0, j = n - 1; i < j; ++i, --j) {
    double t = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    rule.nodes[i] = -t;
    rule.nodes[j] = t;
    double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.weights[i] = w;
    rule.weights[j] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
}

}  // namespace

QuadratureRule gauss_legendre(int n) {
  QuadratureRule rule = golub_welsch_jacobi(n, 0.0, 0.0);
  symmetrize(rule);
  return rule;
}

QuadratureRule gauss_sine_measure(int n, int m) {
  if (m < 0) throw std::invalid_argument("gauss_sine_measure: need m >= 0");
  QuadratureRule rule;
  if (m % 2 == 1) {
    // (1-t^2)^{(m-1)/2} is a polynomial: fold it into Gauss-Legendre.
    rule = golub_welsch_jacobi(n, 0.0, 0.0);
    symmetrize(rule);
    int half = (m - 1) / 2;
    for (int i = 0; i < n; ++i) {
      double s2 = 1.0 - rule.nodes[i] * rule.nodes[i];
      double factor = 1.0;
      for (int p = 0; p < half; ++p) factor *= s2;
      rule.weights[i] *= factor;
    }
  } else {
    // half-integer power: ultraspherical Gauss-Jacobi keeps exactness
    double a = 0.5 * (m - 1);
    rule = golub_welsch_jacobi(n, a, a);
    symmetrize(rule);
  }
  return rule;
}

QuadratureRule gauss_jacobi_left(int n, double exponent) {
  if (!(exponent > -1.0)) {
    throw std::invalid_argument("gauss_jacobi_left: exponent must exceed -1");
  }
  // u = (1+x)/2 maps the (1+x)^exponent Jacobi weight onto u^exponent over [0,1].
  QuadratureRule rule = golub_welsch_jacobi(n, 0.0, exponent);
  const double scale = std::pow(0.5, exponent + 1.0);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = 0.5 * (1.0 + rule.nodes[i]);
    rule.weights[i] *= scale;
  }
  return rule;
}

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double fa, double b,
                    double fb, double m, double fm, double whole, double tol, int depth) {
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = f(lm);
  double frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
  if (a == b) return 0.0;
  double fa = f(a);
  double fb = f(b);
  double m = 0.5 * (a + b);
  double fm = f(m);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

}  // namespace rsph
