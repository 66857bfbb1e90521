#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orealg/expr.hpp"
#include "orealg/field_tower.hpp"

namespace orealg {

/// Element of R = K[t;delta], coefficients lowest degree first, no trailing
/// zeros. Multiplication follows t*a = a*t + delta(a).
class OrePoly {
 public:
  explicit OrePoly(TowerPtr ctx);
  OrePoly(TowerPtr ctx, std::vector<Element> coeffs);

  static OrePoly constant(TowerPtr ctx, const Element& c);
  static OrePoly monomial(TowerPtr ctx, const Element& c, std::size_t k);
  static OrePoly t(TowerPtr ctx) { return monomial(ctx, ctx->one(), 1); }

  const TowerPtr& context() const { return ctx_; }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  /// Coefficient of t^i (zero beyond the degree).
  Element coeff(std::size_t i) const;
  /// nullopt encodes deg(0) = -infinity, which compares below every degree.
  std::optional<std::size_t> degree() const;
  /// Degree of a nonzero polynomial; ZeroPolynomial for 0.
  std::size_t deg() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }
  const Element& leading() const;
  /// a^{-1} f for the leading coefficient a. ZeroPolynomial for 0.
  OrePoly monic() const;

  OrePoly operator-() const;
  friend OrePoly operator+(const OrePoly& a, const OrePoly& b);
  friend OrePoly operator-(const OrePoly& a, const OrePoly& b);
  friend OrePoly operator*(const OrePoly& a, const OrePoly& b);
  friend bool operator==(const OrePoly& a, const OrePoly& b);
  /// c*f and f*c.
  OrePoly scale_left(const Element& c) const;
  OrePoly scale_right(const Element& c) const;
  /// t * f, computed from t*a = a*t + delta(a).
  OrePoly times_t() const;
  /// f * t^k.
  OrePoly shift(std::size_t k) const;
  OrePoly pow(unsigned n) const;

  /// Canonical text, e.g. "t^2 - x*t + (x^2+1)/(x)".
  std::string str() const;

 private:
  void check(const OrePoly& other) const;
  void trim();

  TowerPtr ctx_;
  std::vector<Element> coeffs_;
};

struct DivMod {
  OrePoly quotient;
  OrePoly remainder;
};

/// g = q*f + r with deg r < deg f.
DivMod right_divmod(const OrePoly& g, const OrePoly& f);
/// g = f*q + r with deg r < deg f.
DivMod left_divmod(const OrePoly& g, const OrePoly& f);
OrePoly mod_r(const OrePoly& g, const OrePoly& f);
/// Monic generator of Rf + Rg.
OrePoly right_gcd(const OrePoly& f, const OrePoly& g);
/// (t - b)^n.
OrePoly linear_power(const TowerPtr& ctx, const Element& b, unsigned n);
/// sum_i h_i z^i for h over K (coefficients on the left).
OrePoly compose(const std::vector<Element>& h, const OrePoly& z);

using Bindings = std::map<std::string, OrePoly>;

/// Evaluates an expression in t, the generators and the bound names.
/// Division and negative exponents are allowed only for degree-0 operands.
OrePoly evaluate_ore(const TowerPtr& ctx, const Expr& e, const Bindings& bindings = {});
OrePoly parse_ore(const TowerPtr& ctx, std::string_view text, const Bindings& bindings = {});

}  // namespace orealg
