#include "fracbvp/mittag_leffler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracbvp/detail/dd.hpp"
#include "fracbvp/gamma.hpp"

namespace fracbvp {

namespace {

using detail::dd;

// Taylor/asymptotic crossover expressed on D = |z|^(1/mu). At D = 38 the
// double-double Taylor noise (~e^D * 1e-31) and the optimally truncated
// inverse-power remainder (~e^-D) are both below 1e-10 of the value.
constexpr double kSwitchD = 38.0;

double taylor_threshold(double mu) { return std::pow(kSwitchD, mu); }

// 1/Gamma(mu*n + eta) in double-double, cached per (mu,eta): every caller
// (mode solves, zero scans, Caputo meshes) hits a handful of (mu,eta) pairs
// with thousands of z values.
class InvGammaCache {
 public:
  dd get(double mu, double eta, int n) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto& vec = table_[{mu, eta}];
    while (static_cast<int>(vec.size()) <= n) {
      int i = static_cast<int>(vec.size());
      dd arg = detail::add(detail::mul(dd{mu, 0.0}, static_cast<double>(i)), dd{eta, 0.0});
      vec.push_back(detail::exp(detail::neg(detail::lngamma(arg))));
    }
    return vec[n];
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<double, double>, std::vector<dd>> table_;
};

InvGammaCache& inv_gamma_cache() {
  static InvGammaCache cache;
  return cache;
}

double taylor_sum_dd(double mu, double eta, double z) {
  auto& cache = inv_gamma_cache();
  double az = std::abs(z);
  double peak = (az > 1.0) ? std::pow(az, 1.0 / mu) : 0.0;
  int hump_end = static_cast<int>(peak / mu) + 2;
  int nmax = hump_end + static_cast<int>(10.0 * std::sqrt(peak + 4.0) / mu) + 64;
  dd sum{0.0, 0.0};
  dd zp{1.0, 0.0};
  dd zdd{z, 0.0};
  for (int n = 0; n <= nmax; ++n) {
    dd term = detail::mul(zp, cache.get(mu, eta, n));
    sum = detail::add(sum, term);
    if (n > hump_end &&
        std::abs(term.hi) < 1e-35 * std::max(std::abs(sum.hi), 1e-280))
      break;
    zp = detail::mul(zp, zdd);
  }
  return detail::to_double(sum);
}

// z <= -threshold branch.  Algebraic series sum_j (-1)^{j+1} t^-j / Gamma(eta - mu j),
// truncated at the minimum of its sin-free envelope t^-j Gamma(1 + mu j - eta)/pi,
// plus the residue term of the integral representation (exact, present for mu >= 1):
//   (2/mu) t^((1-eta)/mu) exp(D cos(pi/mu)) cos(pi(1-eta)/mu + D sin(pi/mu)), D = t^(1/mu)
// with factor 1 instead of 2 at mu = 1 where the conjugate saddles merge.
double asymptotic_neg(double mu, double eta, double z) {
  double t = -z;
  double lnt = std::log(t);
  double sum = 0.0;
  double prev_env = std::numeric_limits<double>::max();
  double invt = 1.0 / t;
  double tp = invt;
  for (int j = 1; j <= 400; ++j) {
    double x = eta - mu * j;
    double reflected = 1.0 - x;
    if (reflected > 1.0) {
      double lenv = -j * lnt + std::lgamma(reflected) - std::log(M_PI);
      if (lenv > prev_env) break;
      prev_env = lenv;
      if (lenv < -700.0) {
        sum += tp * reciprocal_gamma(x) * ((j & 1) ? 1.0 : -1.0);
        break;
      }
    }
    sum += tp * reciprocal_gamma(x) * ((j & 1) ? 1.0 : -1.0);
    tp *= invt;
    if (tp < 1e-300) break;
  }
  if (mu >= 1.0) {
    double D = std::pow(t, 1.0 / mu);
    double re = D * std::cos(M_PI / mu);
    double im = D * std::sin(M_PI / mu);
    if (re > -745.0) {
      double factor = (mu > 1.0) ? 2.0 / mu : 1.0;
      double amp = factor * std::pow(t, (1.0 - eta) / mu) * std::exp(re);
      sum += amp * std::cos(M_PI * (1.0 - eta) / mu + im);
    }
  }
  return sum;
}

}  // namespace

void MLQuery::validate() const {
  if (!(mu > 0.0 && mu <= 2.0))
    throw std::domain_error("MLQuery: mu must lie in (0, 2], got " + std::to_string(mu));
  if (!(eta > 0.0))
    throw std::domain_error("MLQuery: eta must be positive, got " + std::to_string(eta));
  if (!std::isfinite(z)) throw std::domain_error("MLQuery: non-finite argument z");
}

double ml_eval(const MLQuery& q) {
  q.validate();
  const double mu = q.mu, eta = q.eta, z = q.z;

  // classical identities, exact and immune to series cancellation
  if (mu == 1.0 && eta == 1.0) return std::exp(z);
  if (mu == 1.0 && eta == 2.0) return (z == 0.0) ? 1.0 : std::expm1(z) / z;
  if (mu == 2.0 && eta == 1.0) {
    return (z >= 0.0) ? std::cosh(std::sqrt(z)) : std::cos(std::sqrt(-z));
  }
  if (mu == 2.0 && eta == 2.0) {
    if (z == 0.0) return 1.0;
    double r = std::sqrt(std::abs(z));
    return (z > 0.0) ? std::sinh(r) / r : std::sin(r) / r;
  }

  if (z == 0.0) return reciprocal_gamma(eta);
  if (z > 0.0) {
    if (std::pow(z, 1.0 / mu) > 700.0)
      throw std::overflow_error("ml_eval: E_{mu,eta}(z) overflows for z = " + std::to_string(z));
    return taylor_sum_dd(mu, eta, z);
  }
  if (-z <= taylor_threshold(mu)) return taylor_sum_dd(mu, eta, z);
  return asymptotic_neg(mu, eta, z);
}

double ml_envelope_constant(double mu, double eta) {
  MLQuery{mu, eta, 0.0}.validate();
  static std::mutex mutex;
  static std::map<std::pair<double, double>, double> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({mu, eta});
    if (it != cache.end()) return it->second;
  }
  double m = reciprocal_gamma(eta);  // (1+0)|E(0)|
  const int npts = 1200;
  for (int i = 0; i <= npts; ++i) {
    double t = std::pow(10.0, -8.0 + 14.0 * i / npts);
    double v = std::abs(ml_eval({mu, eta, -t}));
    m = std::max(m, (1.0 + t) * v);
  }
  std::lock_guard<std::mutex> lock(mutex);
  cache[{mu, eta}] = m;
  return m;
}

double ml_eval_bounded(const MLQuery& q) {
  if (q.z > 0.0)
    throw std::invalid_argument("ml_eval_bounded: requires z <= 0");
  double v = ml_eval(q);
  double m = ml_envelope_constant(q.mu, q.eta);
  if (std::abs(v) > m * (1.0 + 1e-6) / (1.0 + std::abs(q.z)))
    throw std::logic_error("ml_eval_bounded: envelope M/(1+|z|) violated at z = " +
                           std::to_string(q.z) + " (evaluator defect)");
  return v;
}

double default_zero_scan_bound(double beta) {
  return 10.0 * std::pow(gamma_fn(2.0 - beta), -1.0 / beta);
}

ZeroCertificate ml_largest_real_zero(double beta, double eta,
                                     std::optional<double> scan_bound) {
  if (!(beta > 1.0 && beta <= 2.0))
    throw std::domain_error("ml_largest_real_zero: beta must lie in (1, 2]");
  double bound = scan_bound.value_or(beta < 2.0 ? default_zero_scan_bound(beta) : 50.0);
  if (!(bound > 0.0)) throw std::domain_error("ml_largest_real_zero: scan bound must be positive");

  ZeroCertificate cert;
  cert.beta = beta;
  cert.eta = eta;
  cert.scan_bound = bound;

  const double step = 0.01;
  auto f = [&](double t) { return ml_eval({beta, eta, -t}); };
  double lo = 0.0, hi = 0.0;
  double prev_t = step, prev_v = f(step);
  for (double t = 2 * step; t <= bound + 0.5 * step; t += step) {
    double v = f(t);
    if ((prev_v < 0.0 && v >= 0.0) || (prev_v > 0.0 && v <= 0.0) || prev_v == 0.0) {
      ++cert.zero_count_scanned;
      lo = prev_t;
      hi = t;
    }
    prev_t = t;
    prev_v = v;
  }
  if (cert.zero_count_scanned == 0) return cert;

  double flo = f(lo);
  while (hi - lo > 1e-10) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if ((flo <= 0.0) == (fm <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  cert.bracket_lo = lo;
  cert.bracket_hi = hi;
  cert.largest_zero = 0.5 * (lo + hi);
  return cert;
}

}  // namespace fracbvp
