#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "orealg/linalg.hpp"
#include "orealg/ore_poly.hpp"

namespace orealg {

/// T(v) = A v + delta(v) on K^n, delta applied entrywise.
class PseudoLinearTransform {
 public:
  PseudoLinearTransform(TowerPtr ctx, linalg::Matrix a);

  const TowerPtr& context() const { return ctx_; }
  std::size_t dim() const { return a_.size(); }
  const linalg::Matrix& matrix() const { return a_; }

  linalg::Vector apply(const linalg::Vector& v) const;

 private:
  TowerPtr ctx_;
  linalg::Matrix a_;
};

/// T on R/Rf with basis 1, t, ..., t^{n-1}: left multiplication by t. NotMonic
/// unless f is monic of degree >= 1.
PseudoLinearTransform from_polynomial(const OrePoly& f);
/// The zero matrix: T = delta entrywise.
PseudoLinearTransform zero_plt(const TowerPtr& ctx, std::size_t n);

struct CyclicCertificate {
  linalg::Vector v;
  OrePoly h;  // monic, sum h_i T^i(v) = 0
};

/// The certificate at v, or nullopt when v, T v, ..., T^{n-1} v are dependent.
std::optional<CyclicCertificate> cyclic_certificate(const PseudoLinearTransform& t,
                                                    const linalg::Vector& v);

/// Tries the standard basis vectors, then 10 seeded random polynomial
/// vectors, then vectors with entries powers of the first generator.
/// NoCyclicVectorFound when every candidate fails.
CyclicCertificate characteristic_polynomial(const PseudoLinearTransform& t, std::uint64_t seed);

/// Kronecker-basis transform: (A x I + I x B) u + delta(u).
PseudoLinearTransform tensor(const PseudoLinearTransform& a, const PseudoLinearTransform& b);

/// Characteristic polynomial of from_polynomial(f) x from_polynomial(g); one
/// representative of the similarity class, of degree deg f * deg g.
OrePoly resultant(const OrePoly& f, const OrePoly& g, std::uint64_t seed);

struct SimilarityResult {
  std::optional<std::pair<OrePoly, OrePoly>> witness;  // (u, u') with u' f = g u
  unsigned bound = 0;
  std::size_t solution_dim = 0;  // dimension of {u : g u in Rf} inside the ansatz
};

/// u of degree < deg f with g u in Rf and right_gcd(u, f) = 1. Exact over F
/// when [K:F] is finite; otherwise numerators of degree <= bound + deg(D) over
/// D, the product of the denominators of f and g. DegreeMismatch unless
/// deg f = deg g.
SimilarityResult similarity_search(const OrePoly& f, const OrePoly& g, unsigned bound);

}  // namespace orealg
