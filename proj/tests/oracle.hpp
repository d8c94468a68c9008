#pragma once

// Test-only reference evaluations. Plain arithmetic straight from the
// textbook expressions: no log domain, no shared helpers with the library.

#include <cmath>
#include <functional>

namespace oracle {

struct Constants {
  double ca, ct, na, s2, kappa_i, np;
  int J;
};

inline double x_pow(const Constants& c, int e) { return std::pow(c.np * c.kappa_i, e); }

inline double snr(const Constants& c, int l) {
  const double num = c.ca * c.ct * c.na * x_pow(c, 2 * (c.J - 1));
  return num / (c.s2 * c.ca * x_pow(c, 2 * (c.J - l)) + c.s2 * (c.ct * x_pow(c, 2 * (l - 1)) + c.s2));
}

/// The l-dependent part of the SNR denominator. The numerator and sigma^4 do
/// not depend on l, so argmax snr = argmin snr_penalty, and the penalty still
/// separates indices when sigma^4 dominates the denominator in doubles.
inline double snr_penalty(const Constants& c, int l) {
  return c.ca * x_pow(c, 2 * (c.J - l)) + c.ct * x_pow(c, 2 * (l - 1));
}

inline double power(const Constants& c, int l) {
  const double num = c.ca * c.ct * c.na * x_pow(c, 2 * (c.J - 1)) + c.s2 * c.ca * x_pow(c, 2 * (c.J - l));
  return num / (c.ct * x_pow(c, 2 * (l - 1)) + c.s2);
}

/// argmax over 1..J, ties to the smaller index.
inline int brute_force(const Constants& c, const std::function<double(const Constants&, int)>& f) {
  int best = 1;
  double best_v = f(c, 1);
  for (int l = 2; l <= c.J; ++l) {
    const double v = f(c, l);
    if (v > best_v) {
      best = l;
      best_v = v;
    }
  }
  return best;
}

/// Root of a sign-changing function on [lo, hi].
inline double bisect(const std::function<double(double)>& f, double lo, double hi, int iters = 200) {
  double flo = f(lo);
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Least-squares slope of y against x.
template <class Xs, class Ys>
double slope(const Xs& xs, const Ys& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace oracle
