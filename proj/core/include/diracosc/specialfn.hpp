#pragma once

namespace diracosc {

/// Largest supported Laguerre degree. The upward recurrence is stable in the
/// oscillatory regime used here; beyond this degree accuracy near the
/// classical turning point degrades, so higher degrees are rejected.
inline constexpr int kLaguerreMaxDegree = 200;

/// Generalized Laguerre polynomial L_n^a(x), evaluated by the three-term
/// recurrence L_k^a = ((2k-1+a-x) L_{k-1}^a - (k-1+a) L_{k-2}^a) / k.
/// Requires 0 <= n <= kLaguerreMaxDegree and finite x.
double laguerre(int n, double a, double x);

/// d/dx L_n^a(x) = -L_{n-1}^{a+1}(x).
double laguerre_deriv(int n, double a, double x);

/// d^2/dx^2 L_n^a(x) = L_{n-2}^{a+2}(x).
double laguerre_deriv2(int n, double a, double x);

/// ln Gamma(x) for x > 0, accurate to at least 12 significant digits
/// (Lanczos approximation evaluated in extended precision).
double log_gamma(double x);

/// Normalization constant a_n = sqrt(2 lambda Gamma(n+1) / Gamma(n+order+3/2))
/// of the oscillator-type upper spinor component, computed in log space.
/// Requires n >= 0, lambda > 0 and n + order + 3/2 > 0.
double norm_const_oscillator(int n, double order, double lambda);

}  // namespace diracosc
