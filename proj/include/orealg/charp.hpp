#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orealg/ore_poly.hpp"
#include "orealg/petit.hpp"

namespace orealg {

/// g(t) = t^{p^e} + c_1 t^{p^{e-1}} + ... + c_e t with c_i in F, and
/// optionally f(t) = g(t) - d0.
struct PPolynomial {
  TowerPtr ctx;
  std::size_t e = 0;
  std::vector<Element> c;  // c[i-1] = c_i, coefficient of t^{p^{e-i}}
  std::optional<Element> d0;

  /// The monic p-polynomial t^{p^e} (all c_i = 0).
  static PPolynomial monomial(TowerPtr ctx, std::size_t e);

  OrePoly g() const;
  /// g - d0 (g when d0 is unset).
  OrePoly f() const;
};

/// V_p(b) = b^p + delta^{p-1}(b).
Element v_p(const FieldTower& k, const Element& b);
/// V_p iterated e times.
Element v_pe(const FieldTower& k, const Element& b, std::size_t e);
/// V_g(b) = V_{p^e}(b) + c_1 V_{p^{e-1}}(b) + ... + c_e b.
Element v_f(const PPolynomial& g, const Element& b);

/// Least p-polynomial g with g(delta) = 0 on K, from the F-linear dependence
/// among delta, delta^p, delta^{p^2}, ... on the F-basis.
PPolynomial min_p_polynomial(const TowerPtr& k);

struct CenterInfo {
  PPolynomial g;
  OrePoly z;  // g(t) - d0, central in R
};

/// Center F[z] of R. NonConstantD0 when d0 is not in F.
CenterInfo center_of_R(const TowerPtr& k, const Element& d0);

/// Monic generator of the largest two-sided ideal in Rf: h(z) for the least
/// h in F[z] with mod_r(h(z), f) = 0, z = g(t).
OrePoly bound_of(const OrePoly& f);

/// S_f for f = g - d0; checked to be two-sided.
AlgebraPtr differential_extension(const TowerPtr& k, const Element& d0);

struct SplitResult {
  std::optional<Element> witness;  // b with V_g(b) = d0
  unsigned bound = 0;
  Element denominator;             // ansatz denominator
  std::size_t unknowns = 0;        // F_p-dimension of the ansatz
  std::string label;               // "split", or the bounded failure label
};

/// Searches b = n / den with V_g(b) = d0, n ranging over an F_p-space of
/// polynomials of degree <= bound + deg(den) and den the denominator of d0.
SplitResult split_solver(const PPolynomial& g, unsigned bound);

struct RootSearch {
  std::vector<Element> roots;
  unsigned bound_used = 0;
};

/// r in K with mod_r(f, t - r) = 0, searched by exhaustion over numerators
/// of degree <= bound (coefficients in F_p, or integers of absolute value
/// <= 2 over Q) and denominators 1, D, D^2 with D the denominator of f's
/// coefficients. The bound is lowered when the candidate count would exceed
/// a fixed budget; bound_used reports the effective value.
RootSearch right_root_search(const OrePoly& f, unsigned bound);

/// A common denominator of elems: per rational layer the lcm of the
/// denominators, multiplied over the layers (1 for polynomials).
Element common_denominator(const FieldTower& k, std::span<const Element> elems);

}  // namespace orealg
