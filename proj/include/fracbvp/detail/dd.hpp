#pragma once

#include <cmath>
#include <limits>

// Compensated double-double arithmetic (~31 significant digits).
// Used by the Mittag-Leffler Taylor branch, where alternating-series
// cancellation burns |z|^(1/mu)/ln(10) digits before anything is left.

namespace fracbvp::detail {

struct dd {
  double hi = 0.0;
  double lo = 0.0;
};

inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

// requires |a| >= |b|
inline dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline dd add(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  dd t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline dd add(dd a, double b) { return add(a, dd{b, 0.0}); }
inline dd neg(dd a) { return {-a.hi, -a.lo}; }
inline dd sub(dd a, dd b) { return add(a, neg(b)); }
inline dd sub(dd a, double b) { return add(a, dd{-b, 0.0}); }

inline dd mul(dd a, dd b) {
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline dd mul(dd a, double b) { return mul(a, dd{b, 0.0}); }

inline dd div(dd a, dd b) {
  double q1 = a.hi / b.hi;
  dd r = sub(a, mul(b, q1));
  double q2 = r.hi / b.hi;
  r = sub(r, mul(b, q2));
  double q3 = r.hi / b.hi;
  dd q = quick_two_sum(q1, q2);
  return add(q, q3);
}

inline dd div(dd a, double b) { return div(a, dd{b, 0.0}); }
inline dd from_ratio(long long n, long long d) {
  return div(dd{static_cast<double>(n), 0.0}, dd{static_cast<double>(d), 0.0});
}

inline dd ldexp(dd a, int k) { return {std::ldexp(a.hi, k), std::ldexp(a.lo, k)}; }

inline double to_double(dd a) { return a.hi + a.lo; }

// verified against 60-digit references
inline constexpr dd DD_LN2{6.931471805599453e-01, 2.3190468138462996e-17};
inline constexpr dd DD_PI{3.141592653589793e+00, 1.2246467991473532e-16};
inline constexpr dd DD_LN2PI{1.8378770664093456e+00, -7.756588316134483e-17};

inline dd exp(dd a) {
  if (a.hi < -745.0) return {0.0, 0.0};
  if (a.hi > 709.0) return {std::numeric_limits<double>::infinity(), 0.0};
  double k = std::round(a.hi / DD_LN2.hi);
  dd r = sub(a, mul(DD_LN2, k));
  dd sum{1.0, 0.0};
  dd term{1.0, 0.0};
  for (int i = 1; i < 64; ++i) {
    term = div(mul(term, r), static_cast<double>(i));
    sum = add(sum, term);
    if (std::abs(term.hi) < 1e-36 * std::abs(sum.hi)) break;
  }
  return ldexp(sum, static_cast<int>(k));
}

inline dd log(dd a) {
  dd y{std::log(a.hi), 0.0};
  for (int it = 0; it < 3; ++it) {
    dd e = exp(neg(y));
    dd t = sub(mul(a, e), dd{1.0, 0.0});
    y = add(y, t);
  }
  return y;
}

// ln Gamma(x) for x > 0: Stirling with Bernoulli tail above 24,
// downward shift via the functional equation below.
inline dd lngamma(dd x) {
  struct Rat { long long n, d; };
  static constexpr Rat bern[] = {
      {1, 6},        {-1, 30},          {1, 42},           {-1, 30},
      {5, 66},       {-691, 2730},      {7, 6},            {-3617, 510},
      {43867, 798},  {-174611, 330},    {854513, 138},     {-236364091, 2730},
      {8553103, 6},  {-23749461029LL, 870}, {8615841276005LL, 14322}, {-7709321041217LL, 510}};
  dd shift{0.0, 0.0};
  while (x.hi < 24.0) {
    shift = add(shift, log(x));
    x = add(x, 1.0);
  }
  dd lz = log(x);
  dd res = mul(sub(x, dd{0.5, 0.0}), lz);
  res = sub(res, x);
  res = add(res, mul(DD_LN2PI, 0.5));
  dd z2 = mul(x, x);
  dd zp = x;
  for (int j = 1; j <= 16; ++j) {
    dd b = from_ratio(bern[j - 1].n, bern[j - 1].d);
    dd term = div(b, mul(zp, static_cast<double>(2 * j * (2 * j - 1))));
    res = add(res, term);
    if (std::abs(term.hi) < 1e-36 * std::abs(res.hi)) break;
    zp = mul(zp, z2);
  }
  return sub(res, shift);
}

}  // namespace fracbvp::detail
