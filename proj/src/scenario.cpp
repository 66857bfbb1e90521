#include "orealg/scenario.hpp"

#include "orealg/charp.hpp"
#include "orealg/error.hpp"
#include "orealg/nucleus.hpp"

namespace orealg {

namespace {

mpz_class power(std::uint32_t p, unsigned long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, k);
  return r;
}

bool prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

TowerDescription scenario_tower(std::uint32_t p, unsigned e) {
  TowerDescription d;
  d.base = TowerDescription::Base::PrimeField;
  d.p = p;
  std::string product;
  for (unsigned i = 1; i <= e; ++i) {
    const std::string name = e == 1 ? "x" : "x" + std::to_string(i);
    d.layers.push_back({TowerDescription::Layer::Kind::Rational, name, ""});
    d.derivation.emplace_back(name, product.empty() ? "1" : "(" + product + ")^" + std::to_string(p - 1));
    product += (product.empty() ? "" : "*") + name;
  }
  return d;
}

}  // namespace

Bookkeeping bookkeeping(std::uint32_t p, unsigned n) {
  if (!prime(p) || n == 0) throw Error(ErrorKind::InvalidArgument, "bookkeeping needs a prime p and n >= 1");
  Bookkeeping b;
  b.p = p;
  b.n = n;
  b.m = power(p, n);
  b.m_squared = b.m * b.m;
  const unsigned long e = b.m.get_ui() - 1;
  b.dim = b.m * power(p, e);
  b.n_bound = n + 1 <= b.m;
  b.fits = b.m <= power(p, e);
  b.strict = b.m_squared < b.dim;
  return b;
}

ScenarioReport scenario_builder(std::uint32_t p, unsigned e, std::size_t m) {
  if (!prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (e == 0) throw Error(ErrorKind::InvalidArgument, "e must be at least 1");
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "m must be at least 1");
  const mpz_class pe = power(p, e);
  if (mpz_class(static_cast<unsigned long>(m)) > pe) {
    throw Error(ErrorKind::UnsatisfiedHypothesis,
                "m <= p^e fails: m = " + std::to_string(m) + ", p^e = " + pe.get_str());
  }
  ScenarioReport r;
  r.p = p;
  r.e = e;
  r.m = m;
  r.tower = FieldTower::make(scenario_tower(p, e));
  const auto& k = r.tower;
  const Element x1 = k->generators().front();
  OrePoly f(k);
  if (pe == static_cast<unsigned long>(m)) {
    r.regime = "differential_extension";
    r.hypothesis = "m = p^e";
    const PPolynomial g = min_p_polynomial(k);
    if (g.g().deg() != m) {
      throw Error(ErrorKind::InternalInconsistency, "minimum p-polynomial has degree " +
                                                        std::to_string(g.g().deg()) + ", expected m");
    }
    r.algebra = differential_extension(k, x1.pow(p));
  } else {
    r.regime = "nonassociative";
    r.hypothesis = "m < p^e";
    r.algebra = PetitAlgebra::make(OrePoly::monomial(k, k->one(), m) - OrePoly::constant(k, x1));
    if (r.algebra->two_sided()) {
      throw Error(ErrorKind::InternalInconsistency, "t^m - x_1 is two-sided");
    }
  }
  r.two_sided = r.algebra->two_sided();
  r.dimension = *r.algebra->f_dimension();
  if (r.dimension <= kScenarioNucleusLimit) {
    const auto nc = nucleus_and_center(*r.algebra);
    r.right = right_nucleus(*r.algebra).dim();
    r.left = left_nucleus(*r.algebra).dim();
    r.middle = middle_nucleus(*r.algebra).dim();
    r.nucleus = nc.nucleus.dim();
    r.center = nc.center.dim();
  }
  // m = p^n with e = m - 1.
  unsigned n = 0;
  std::size_t q = 1;
  while (q < m) {
    q *= p;
    ++n;
  }
  if (q == m && n >= 1 && e == m - 1) r.counts = bookkeeping(p, n);
  return r;
}

}  // namespace orealg
