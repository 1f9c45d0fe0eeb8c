#include "fracbvp/phi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace fracbvp {

PowerSum PowerSum::monomial(double coeff, double expo) {
  PowerSum p;
  if (coeff != 0.0) p.terms_.push_back({coeff, expo});
  return p;
}

PowerSum PowerSum::from_polynomial(const std::vector<double>& coeffs) {
  PowerSum p;
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0.0) p.terms_.push_back({coeffs[i], static_cast<double>(i)});
  return p;
}

void PowerSum::compress() {
  std::map<double, double> acc;
  for (const auto& t : terms_) acc[t.expo] += t.coeff;
  terms_.clear();
  for (const auto& [expo, coeff] : acc)
    if (coeff != 0.0) terms_.push_back({coeff, expo});
}

PowerSum PowerSum::derivative() const {
  PowerSum out;
  for (const auto& t : terms_)
    if (t.expo != 0.0) out.terms_.push_back({t.coeff * t.expo, t.expo - 1.0});
  out.compress();
  return out;
}

PowerSum PowerSum::derivative(int times) const {
  PowerSum out = *this;
  for (int i = 0; i < times; ++i) out = out.derivative();
  return out;
}

PowerSum PowerSum::times_power(double m) const {
  PowerSum out;
  for (const auto& t : terms_) out.terms_.push_back({t.coeff, t.expo + m});
  return out;
}

PowerSum PowerSum::operator+(const PowerSum& other) const {
  PowerSum out = *this;
  out.terms_.insert(out.terms_.end(), other.terms_.begin(), other.terms_.end());
  out.compress();
  return out;
}

PowerSum PowerSum::operator*(const PowerSum& other) const {
  PowerSum out;
  for (const auto& s : terms_)
    for (const auto& t : other.terms_)
      out.terms_.push_back({s.coeff * t.coeff, s.expo + t.expo});
  out.compress();
  return out;
}

double PowerSum::eval(double x) const {
  double acc = 0.0;
  for (const auto& t : terms_) acc += t.coeff * std::pow(x, t.expo);
  return acc;
}

double PowerSum::value_at_zero() const {
  double acc = 0.0;
  for (const auto& t : terms_) {
    if (t.expo < 0.0) return t.coeff > 0.0 ? std::numeric_limits<double>::infinity()
                                           : -std::numeric_limits<double>::infinity();
    if (t.expo == 0.0) acc += t.coeff;
  }
  return acc;
}

double PowerSum::value_at_one() const {
  double acc = 0.0;
  for (const auto& t : terms_) acc += t.coeff;
  return acc;
}

double PowerSum::min_exponent() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& t : terms_) m = std::min(m, t.expo);
  return m;
}

std::optional<double> PowerSum::weighted_l2_sq(double m) const {
  PowerSum sq = (*this) * (*this);
  double acc = 0.0;
  for (const auto& t : sq.terms_) {
    double p = t.expo - m;
    if (p <= -1.0) return std::nullopt;
    acc += t.coeff / (p + 1.0);
  }
  return acc;
}

void PhiSpec::validate() const {
  if (family == Family::poly) {
    if (coefficients.empty())
      throw std::domain_error("PhiSpec: poly family needs at least one coefficient");
  } else {
    if (index < 1) throw std::domain_error("PhiSpec: eigenmode index must be >= 1");
  }
}

std::string PhiSpec::family_name() const {
  return family == Family::poly ? "poly" : "eigenmode";
}

namespace {

// x^k (1-x)^k expanded exactly (integer binomials, k <= 30)
PowerSum envelope_power_sum(int k) {
  std::vector<double> binom(k + 1, 0.0);
  binom[0] = 1.0;
  for (int r = 1; r <= k; ++r)
    for (int c = r; c >= 1; --c) binom[c] += binom[c - 1];
  PowerSum out;
  for (int j = 0; j <= k; ++j)
    out = out + PowerSum::monomial((j & 1) ? -binom[j] : binom[j], static_cast<double>(k + j));
  return out;
}

}  // namespace

std::optional<PowerSum> phi_power_sum(const PhiSpec& spec, const GreenSpec& gspec) {
  if (spec.family != PhiSpec::Family::poly) return std::nullopt;
  return envelope_power_sum(gspec.k) * PowerSum::from_polynomial(spec.coefficients);
}

std::function<double(double)> make_phi(const PhiSpec& spec, const GreenSpec& gspec,
                                       const EigenBasis* basis) {
  spec.validate();
  if (spec.family == PhiSpec::Family::poly) {
    PowerSum p = *phi_power_sum(spec, gspec);
    return [p](double x) { return p.eval(x); };
  }
  if (basis == nullptr)
    throw std::invalid_argument("make_phi: eigenmode family needs a computed basis");
  if (spec.index > basis->count)
    throw std::domain_error("make_phi: eigenmode index exceeds retained mode count");
  const EigenBasis* b = basis;
  int idx = spec.index;
  return [b, idx](double x) { return eigenfunction(*b, idx, x); };
}

std::optional<DecayBound> decay_bound(const PhiSpec& spec, const GreenSpec& gspec) {
  auto phi = phi_power_sum(spec, gspec);
  if (!phi) return std::nullopt;
  const int k = gspec.k;
  const double m = gspec.m;

  DecayBound out;
  out.chain_ok = true;
  // chain of the proof: phi_1 = x^m phi, phi_{j+1} = x^m phi_j^(2k)
  PowerSum chain = phi->times_power(m);
  for (int j = 1; j <= 3; ++j) {
    for (int i = 0; i < k; ++i) {
      PowerSum d = chain.derivative(i);
      double z0 = d.value_at_zero(), z1 = d.value_at_one();
      if (!(std::abs(z0) < 1e-12) || !(std::abs(z1) < 1e-12)) out.chain_ok = false;
    }
    if (j < 3) chain = chain.derivative(2 * k).times_power(m);
  }
  PowerSum integrand = chain.derivative(2 * k);
  auto rhs = integrand.weighted_l2_sq(m);
  if (!rhs) {
    out.chain_ok = false;
    out.rhs = std::numeric_limits<double>::infinity();
  } else {
    out.rhs = *rhs;
  }
  return out;
}

}  // namespace fracbvp
