#include "orealg/plt.hpp"

#include <random>

#include "orealg/charp.hpp"
#include "orealg/error.hpp"

namespace orealg {

PseudoLinearTransform::PseudoLinearTransform(TowerPtr ctx, linalg::Matrix a)
    : ctx_(std::move(ctx)), a_(std::move(a)) {
  for (auto& row : a_) {
    if (row.size() != a_.size()) throw Error(ErrorKind::InvalidArgument, "matrix is not square");
    for (auto& e : row) e = ctx_->lift(e);
  }
}

linalg::Vector PseudoLinearTransform::apply(const linalg::Vector& v) const {
  const std::size_t n = dim();
  if (v.size() != n) throw Error(ErrorKind::InvalidArgument, "vector has the wrong length");
  linalg::Vector out(n, ctx_->zero());
  for (std::size_t i = 0; i < n; ++i) {
    Element s = ctx_->derive(v[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (!a_[i][j].is_zero() && !v[j].is_zero()) s = s + a_[i][j] * v[j];
    }
    out[i] = s;
  }
  return out;
}

PseudoLinearTransform from_polynomial(const OrePoly& f) {
  if (f.is_zero() || f.deg() == 0 || !f.is_monic()) {
    throw Error(ErrorKind::NotMonic, "expected a monic polynomial of degree >= 1, got " + f.str());
  }
  const auto& ctx = f.context();
  const std::size_t n = f.deg();
  linalg::Matrix a(n, linalg::Vector(n, ctx->zero()));
  for (std::size_t j = 0; j < n; ++j) {
    const OrePoly col = mod_r(OrePoly::monomial(ctx, ctx->one(), j + 1), f);
    for (std::size_t i = 0; i < n; ++i) a[i][j] = col.coeff(i);
  }
  return PseudoLinearTransform(ctx, std::move(a));
}

PseudoLinearTransform zero_plt(const TowerPtr& ctx, std::size_t n) {
  return PseudoLinearTransform(ctx, linalg::Matrix(n, linalg::Vector(n, ctx->zero())));
}

std::optional<CyclicCertificate> cyclic_certificate(const PseudoLinearTransform& t,
                                                    const linalg::Vector& v) {
  const auto& ctx = t.context();
  const std::size_t n = t.dim();
  std::vector<linalg::Vector> iterates{v};
  for (std::size_t i = 0; i < n; ++i) iterates.push_back(t.apply(iterates.back()));
  // Columns T^0 v .. T^{n-1} v; solve for h_i with sum h_i T^i v = -T^n v.
  linalg::Matrix m(n, linalg::Vector(n, ctx->zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = iterates[j][i];
  }
  if (linalg::rank(m, n) != n) return std::nullopt;
  linalg::Vector rhs;
  for (const auto& e : iterates[n]) rhs.push_back(-e);
  auto h = linalg::solve(m, rhs, ctx->top());
  if (!h) throw Error(ErrorKind::InternalInconsistency, "full-rank system has no solution");
  h->push_back(ctx->one());
  return CyclicCertificate{v, OrePoly(ctx, std::move(*h))};
}

CyclicCertificate characteristic_polynomial(const PseudoLinearTransform& t, std::uint64_t seed) {
  const auto& ctx = t.context();
  const std::size_t n = t.dim();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "transform of dimension 0");
  auto unit = [&](std::size_t i) {
    linalg::Vector v(n, ctx->zero());
    v[i] = ctx->one();
    return v;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = cyclic_certificate(t, unit(i))) return *c;
  }
  std::mt19937_64 rng(seed);
  RandomSpec spec;
  spec.height = 5;
  spec.degree = 2;
  spec.den_degree = 0;
  for (int trial = 0; trial < 10; ++trial) {
    linalg::Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(ctx->random_element(rng, spec));
    if (auto c = cyclic_certificate(t, v)) return *c;
  }
  // Entries x^{k_i} with 0 <= k_i <= n for the first generator x.
  const Element x = ctx->generators().front();
  std::vector<std::size_t> k(n, 0);
  for (;;) {
    linalg::Vector v;
    for (auto e : k) v.push_back(x.pow(static_cast<long long>(e)));
    if (auto c = cyclic_certificate(t, v)) return *c;
    std::size_t pos = 0;
    while (pos < n && ++k[pos] > n) k[pos++] = 0;
    if (pos == n) break;
  }
  throw Error(ErrorKind::NoCyclicVectorFound,
              "no cyclic vector among the standard, random and power candidates");
}

PseudoLinearTransform tensor(const PseudoLinearTransform& a, const PseudoLinearTransform& b) {
  if (a.context() != b.context()) throw Error(ErrorKind::ContextMismatch, "transforms over different towers");
  const auto& ctx = a.context();
  const std::size_t n = a.dim();
  const std::size_t k = b.dim();
  linalg::Matrix m(n * k, linalg::Vector(n * k, ctx->zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t row = i * k + j;
      for (std::size_t i2 = 0; i2 < n; ++i2) m[row][i2 * k + j] = m[row][i2 * k + j] + a.matrix()[i][i2];
      for (std::size_t j2 = 0; j2 < k; ++j2) m[row][i * k + j2] = m[row][i * k + j2] + b.matrix()[j][j2];
    }
  }
  return PseudoLinearTransform(ctx, std::move(m));
}

OrePoly resultant(const OrePoly& f, const OrePoly& g, std::uint64_t seed) {
  if (f.context() != g.context()) throw Error(ErrorKind::ContextMismatch, "polynomials over different towers");
  return characteristic_polynomial(tensor(from_polynomial(f), from_polynomial(g)), seed).h;
}

SimilarityResult similarity_search(const OrePoly& f, const OrePoly& g, unsigned bound) {
  if (f.context() != g.context()) throw Error(ErrorKind::ContextMismatch, "polynomials over different towers");
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "similarity of 0");
  if (f.deg() != g.deg()) {
    throw Error(ErrorKind::DegreeMismatch, "similar polynomials have equal degree, got " +
                                               std::to_string(f.deg()) + " and " + std::to_string(g.deg()));
  }
  const auto& ctx = f.context();
  const std::size_t n = f.deg();
  SimilarityResult out;
  out.bound = bound;
  const bool exact = ctx->has_fbasis() && ctx->constants_certified();

  std::vector<OrePoly> unknowns;
  if (exact) {
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& k : ctx->fbasis().basis()) unknowns.push_back(OrePoly::monomial(ctx, k, i));
    }
  } else {
    std::vector<Element> coeffs(f.coeffs());
    coeffs.insert(coeffs.end(), g.coeffs().begin(), g.coeffs().end());
    Element den = ctx->one();
    for (const auto& c : coeffs) den = den * common_denominator(*ctx, std::span<const Element>(&c, 1));
    unsigned den_degree = 0;
    if (const auto* fr = std::get_if<Element::Frac>(&den.rep())) {
      den_degree = static_cast<unsigned>(std::max(upoly::degree(fr->num), 0));
    }
    const Element inv = den.inverse();
    for (const auto& mono : ctx->monomials(bound + den_degree)) {
      for (std::size_t i = 0; i < n; ++i) unknowns.push_back(OrePoly::monomial(ctx, mono * inv, i));
    }
  }
  std::vector<OrePoly> images;
  for (const auto& u : unknowns) images.push_back(mod_r(g * u, f));

  linalg::Matrix rows;
  const Level& field = exact ? ctx->top() : ctx->base_level();
  for (std::size_t s = 0; s < n; ++s) {
    if (exact) {
      const std::size_t d = ctx->fbasis().dimension();
      std::vector<linalg::Vector> cols;
      for (const auto& r : images) {
        const Element c = r.coeff(s);
        cols.push_back(c.is_zero() ? linalg::Vector(d, ctx->zero()) : ctx->fbasis().coordinates(c));
      }
      for (std::size_t i = 0; i < d; ++i) {
        linalg::Vector row;
        for (const auto& c : cols) row.push_back(c[i]);
        rows.push_back(std::move(row));
      }
    } else {
      std::vector<Element> elems;
      for (const auto& r : images) elems.push_back(r.coeff(s));
      for (auto& r : linalg::base_relation_rows(elems)) rows.push_back(std::move(r));
    }
  }
  const auto null = linalg::nullspace(rows, unknowns.size(), field);
  out.solution_dim = null.size();
  std::vector<OrePoly> sols;
  for (auto it = null.rbegin(); it != null.rend(); ++it) {
    OrePoly u(ctx);
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
      if (!(*it)[j].is_zero()) u = u + unknowns[j].scale_left(ctx->lift((*it)[j]));
    }
    sols.push_back(u);
  }
  auto accept = [&](const OrePoly& u) -> bool {
    if (u.is_zero() || right_gcd(u, f).deg() != 0) return false;
    const auto qr = right_divmod(g * u, f);
    if (!qr.remainder.is_zero() || !(qr.quotient * f == g * u)) {
      throw Error(ErrorKind::InternalInconsistency, "similarity witness fails u' f = g u");
    }
    out.witness = std::make_pair(u, qr.quotient);
    return true;
  };
  for (const auto& u : sols) {
    if (accept(u)) return out;
  }
  // Small combinations u_i + c u_j with c in {1, -1}.
  std::size_t budget = 4000;
  for (std::size_t i = 0; i < sols.size() && budget > 0; ++i) {
    for (std::size_t j = i + 1; j < sols.size() && budget > 0; ++j, --budget) {
      if (accept(sols[i] + sols[j]) || accept(sols[i] - sols[j])) return out;
    }
  }
  return out;
}

}  // namespace orealg
