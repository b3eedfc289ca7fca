#pragma once

// Shared aliases, error types and small numeric helpers used across qdom.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdom {

using Complex = std::complex<double>;
using CPoint = std::vector<Complex>;   // point of C^n
using MultiIndex = std::vector<int>;   // one non-negative order per variable

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatch : Error { using Error::Error; };
struct OutsideDomain : Error { using Error::Error; };
struct UnsupportedOrder : Error { using Error::Error; };
struct TruncationError : Error { using Error::Error; };
struct PeriodMatrixSingular : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };
struct NotReinhardt : Error { using Error::Error; };
struct ConvergenceFailure : Error { using Error::Error; };
struct UncertifiedMap : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Multi-index helpers

inline int mi_order(const MultiIndex& a) {
  int s = 0;
  for (int v : a) {
    if (v < 0) throw UnsupportedOrder("multi-index entries must be non-negative");
    s += v;
  }
  return s;
}

inline double factorial(int n) {
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline double mi_factorial(const MultiIndex& a) {
  double r = 1.0;
  for (int v : a) r *= factorial(v);
  return r;
}

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= double(n - k + i) / double(i);
  return r;
}

// n (n-1) ... (n-k+1); valid for negative n as well
inline double falling(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= double(n - i);
  return r;
}

inline bool mi_leq(const MultiIndex& a, const MultiIndex& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Enumerate all multi-indices of given length with |m| <= order, graded order.
inline std::vector<MultiIndex> enumerate_multi_indices(int nvars, int order) {
  std::vector<MultiIndex> out;
  MultiIndex cur(nvars, 0);
  for (int total = 0; total <= order; ++total) {
    // enumerate compositions of `total` into nvars parts
    std::vector<int> stack;
    std::function<void(int, int)> rec;  // (position, remaining)
    rec = [&](int pos, int rem) {
      if (pos == nvars - 1) {
        cur[pos] = rem;
        out.push_back(cur);
        return;
      }
      for (int v = rem; v >= 0; --v) {
        cur[pos] = v;
        rec(pos + 1, rem - v);
      }
    };
    if (nvars == 0) break;
    rec(0, total);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Summation: blocked pairwise accumulation, deterministic and accurate for
// the long quadrature sums used throughout.

template <class T, class F>
T pairwise_sum(std::size_t n, F&& term) {
  if (n == 0) return T{};
  if (n <= 32) {
    T s{};
    for (std::size_t i = 0; i < n; ++i) s += term(i);
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum<T>(half, term) +
         pairwise_sum<T>(n - half, [&](std::size_t i) { return term(half + i); });
}

inline double abs2(Complex z) { return z.real() * z.real() + z.imag() * z.imag(); }

inline Complex cpow_int(Complex z, int n) {
  if (n == 0) return Complex(1.0, 0.0);
  if (n < 0) return 1.0 / cpow_int(z, -n);
  Complex r(1.0, 0.0), b = z;
  int e = n;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline Complex mono_eval(const CPoint& z, const MultiIndex& exps) {
  Complex r(1.0, 0.0);
  for (std::size_t i = 0; i < exps.size(); ++i) r *= cpow_int(z[i], exps[i]);
  return r;
}

inline void require_dim(const CPoint& z, int n, const char* what) {
  if (int(z.size()) != n)
    throw DimensionMismatch(std::string(what) + ": point dimension " +
                            std::to_string(z.size()) + " != " + std::to_string(n));
}

}  // namespace qdom
