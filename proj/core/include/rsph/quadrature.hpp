#pragma once

#include <functional>
#include <vector>

namespace rsph {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1], exact for polynomials of degree 2n-1.
QuadratureRule gauss_legendre(int n);

/// Rule for the polar measure: integrates f(cos theta) (sin theta)^m dtheta
/// over [0, pi], i.e. f(t) (1-t^2)^{(m-1)/2} dt over [-1, 1]. For odd m the
/// (1-t^2) factor is a polynomial folded into Gauss-Legendre weights; for
/// even m the half-integer power requires Gauss-Gegenbauer nodes. Exact for
/// f of degree 2n-1 (even m) or 2n-1-(m-1) (odd m).
QuadratureRule gauss_sine_measure(int n, int m);

/// Gauss-Jacobi rule for ∫_0^1 f(u) u^exponent du, exponent > -1.
/// The endpoint singularity is absorbed by the weight, so f only needs
/// to be smooth.
QuadratureRule gauss_jacobi_left(int n, double exponent);

/// Adaptive Simpson integration of a smooth integrand.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 48);

}  // namespace rsph
