#pragma once

// One-dimensional quadrature building blocks: Gauss-Legendre rules and
// spectrally accurate trapezoid sums on circles.

#include <map>
#include <mutex>

#include "qdom/common.hpp"

namespace qdom {

struct Rule1D {
  std::vector<double> x;  // nodes
  std::vector<double> w;  // weights
};

// Gauss-Legendre on [-1, 1], Newton iteration on the Legendre recurrence.
inline const Rule1D& gauss_legendre(int n) {
  if (n < 1) throw UnsupportedOrder("gauss_legendre: n >= 1 required");
  static std::map<int, Rule1D> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  Rule1D r;
  r.x.resize(n);
  r.w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  return cache.emplace(n, std::move(r)).first->second;
}

inline Rule1D gauss_legendre_on(double a, double b, int n) {
  const Rule1D& ref = gauss_legendre(n);
  Rule1D r;
  r.x.resize(n);
  r.w.resize(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    r.x[i] = mid + half * ref.x[i];
    r.w[i] = half * ref.w[i];
  }
  return r;
}

// Integral of f along the straight segment [a, b] in C by Gauss-Legendre.
template <class F>
Complex segment_integral(Complex a, Complex b, int n, F&& f) {
  const Rule1D& ref = gauss_legendre(n);
  const Complex mid = 0.5 * (a + b), half = 0.5 * (b - a);
  return half * pairwise_sum<Complex>(std::size_t(n), [&](std::size_t i) {
           return ref.w[i] * f(mid + half * ref.x[i]);
         });
}

// Integral of f along the circular arc of radius rho about `center`,
// from angle t0 to t1 (signed, radians).
template <class F>
Complex arc_integral(Complex center, double rho, double t0, double t1, int n, F&& f) {
  const Rule1D& ref = gauss_legendre(n);
  const double mid = 0.5 * (t0 + t1), half = 0.5 * (t1 - t0);
  return half * pairwise_sum<Complex>(std::size_t(n), [&](std::size_t i) {
           const double t = mid + half * ref.x[i];
           const Complex z = center + rho * Complex(std::cos(t), std::sin(t));
           const Complex dz = rho * Complex(-std::sin(t), std::cos(t));
           return ref.w[i] * f(z) * dz;
         });
}

// Adaptive wrapper: doubles the point count until two successive estimates
// agree to `tol` (absolute+relative mix), starting at n0.
template <class Integrate>
Complex refine_to_tolerance(Integrate&& integrate, int n0, double tol, const char* what) {
  Complex prev = integrate(n0);
  for (int n = 2 * n0; n <= 64 * n0; n *= 2) {
    Complex cur = integrate(n);
    if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  throw ConvergenceFailure(std::string(what) + ": quadrature did not converge under refinement");
}

}  // namespace qdom
