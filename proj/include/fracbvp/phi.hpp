#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fracbvp/spectral.hpp"

namespace fracbvp {

/// Finite sum of real-exponent power terms sum_i c_i x^(p_i).
/// Exact under differentiation and multiplication by x^m, which is all the
/// iterated-chain coefficient-decay bound needs.
class PowerSum {
 public:
  PowerSum() = default;
  static PowerSum monomial(double coeff, double expo);
  static PowerSum from_polynomial(const std::vector<double>& coeffs);  // sum c_i x^i

  PowerSum derivative() const;
  PowerSum derivative(int times) const;
  PowerSum times_power(double m) const;  // x^m * this
  PowerSum operator+(const PowerSum& other) const;
  PowerSum operator*(const PowerSum& other) const;

  double eval(double x) const;
  double value_at_zero() const;  // +-inf when a negative exponent survives
  double value_at_one() const;
  double min_exponent() const;

  /// int_0^1 x^-m f(x)^2 dx in closed form; nullopt when divergent.
  std::optional<double> weighted_l2_sq(double m) const;

  bool empty() const { return terms_.empty(); }

 private:
  struct Term {
    double coeff;
    double expo;
  };
  void compress();
  std::vector<Term> terms_;
};

/// Data-function descriptor: either the structurally admissible polynomial
/// family phi(x) = x^k (1-x)^k sum c_i x^i, or a computed eigenmode X_j.
struct PhiSpec {
  enum class Family { poly, eigenmode };
  Family family = Family::poly;
  std::vector<double> coefficients;  // poly family
  int index = 1;                     // eigenmode family, 1-based

  void validate() const;
  std::string family_name() const;
};

/// Callable phi. The eigenmode family needs the computed basis.
std::function<double(double)> make_phi(const PhiSpec& spec, const GreenSpec& gspec,
                                       const EigenBasis* basis);

/// Exact power-sum form; only the poly family has one.
std::optional<PowerSum> phi_power_sum(const PhiSpec& spec, const GreenSpec& gspec);

/// The iterated chain phi_1 = x^m phi, phi_{j+1} = x^m phi_j^(2k) behind the
/// coefficient-decay bound: returns the closed-form right side
/// int_0^1 x^-m (phi_3^(2k))^2 dx together with whether the chain's
/// endpoint-vanishing hypotheses actually hold for this phi.
struct DecayBound {
  bool chain_ok = false;
  double rhs = 0.0;
};
std::optional<DecayBound> decay_bound(const PhiSpec& spec, const GreenSpec& gspec);

}  // namespace fracbvp
