#include "orealg/petit.hpp"

#include "orealg/charp.hpp"
#include "orealg/error.hpp"
#include "orealg/linalg.hpp"

namespace orealg {

AlgebraPtr PetitAlgebra::make(const OrePoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroModulus, "modulus is 0");
  if (f.deg() == 0) throw Error(ErrorKind::ZeroModulus, "modulus has degree 0");
  auto a = std::shared_ptr<PetitAlgebra>(new PetitAlgebra(f.monic()));
  a->two_sided_ = is_two_sided(a->f_);
  a->t_associative_ = t_powers_associative(*a);
  return a;
}

PetitAlgebra::PetitAlgebra(OrePoly f) : f_(std::move(f)), m_(f_.deg()) {
  shifted_.push_back(f_);
  for (std::size_t k = 1; k + 1 < m_; ++k) shifted_.push_back(shifted_.back().times_t());
}

OrePoly PetitAlgebra::reduce(const OrePoly& g) const {
  OrePoly r = g;
  while (!r.is_zero() && r.deg() >= m_) {
    const std::size_t k = r.deg() - m_;
    // Products of reduced elements have degree <= 2m - 2.
    if (k >= shifted_.size()) return mod_r(r, f_);
    r = r - shifted_[k].scale_left(r.leading());
  }
  return r;
}

OrePoly PetitAlgebra::circ(const OrePoly& g, const OrePoly& h) const { return reduce(g * h); }

OrePoly PetitAlgebra::associator(const OrePoly& a, const OrePoly& b, const OrePoly& c) const {
  return circ(circ(a, b), c) - circ(a, circ(b, c));
}

std::optional<std::size_t> PetitAlgebra::f_dimension() const {
  if (!context()->has_fbasis()) return std::nullopt;
  return m_ * context()->fbasis().dimension();
}

std::vector<OrePoly> PetitAlgebra::f_basis() const {
  const FBasis& fb = context()->fbasis();
  std::vector<OrePoly> out;
  for (std::size_t i = 0; i < m_; ++i) {
    for (const auto& k : fb.basis()) out.push_back(OrePoly::monomial(context(), k, i));
  }
  return out;
}

std::vector<Element> PetitAlgebra::f_coordinates(const OrePoly& g) const {
  const FBasis& fb = context()->fbasis();
  if (!g.is_zero() && g.deg() >= m_) {
    throw Error(ErrorKind::InvalidArgument, "element of degree >= m has no S_f coordinates");
  }
  std::vector<Element> out;
  out.reserve(m_ * fb.dimension());
  for (std::size_t i = 0; i < m_; ++i) {
    const Element c = g.coeff(i);
    if (c.is_zero()) {
      out.insert(out.end(), fb.dimension(), context()->zero());
    } else {
      const auto ci = fb.coordinates(c);
      out.insert(out.end(), ci.begin(), ci.end());
    }
  }
  return out;
}

OrePoly PetitAlgebra::from_f_coordinates(std::span<const Element> coords) const {
  const FBasis& fb = context()->fbasis();
  const std::size_t d = fb.dimension();
  if (coords.size() != m_ * d) throw Error(ErrorKind::InvalidArgument, "wrong coordinate length");
  std::vector<Element> c;
  for (std::size_t i = 0; i < m_; ++i) c.push_back(fb.from_coordinates(coords.subspan(i * d, d)));
  return OrePoly(context(), std::move(c));
}

OrePoly PetitAlgebra::random_element(std::mt19937_64& rng, const RandomSpec& spec) const {
  std::vector<Element> c;
  for (std::size_t i = 0; i < m_; ++i) c.push_back(context()->random_element(rng, spec));
  return OrePoly(context(), std::move(c));
}

// ---------------------------------------------------------------------------

SfElement::SfElement(AlgebraPtr algebra, const OrePoly& g)
    : algebra_(std::move(algebra)), value_(algebra_->reduce(g)) {}

bool operator==(const SfElement& a, const SfElement& b) {
  return *a.algebra_ == *b.algebra_ && a.value_ == b.value_;
}

namespace {

void same_algebra(const SfElement& a, const SfElement& b) {
  if (a.algebra() != b.algebra() && !(*a.algebra() == *b.algebra())) {
    throw Error(ErrorKind::AlgebraMismatch, "elements of different Petit algebras");
  }
}

}  // namespace

SfElement circ(const SfElement& g, const SfElement& h) {
  same_algebra(g, h);
  return SfElement(g.algebra(), g.algebra()->circ(g.value(), h.value()));
}

SfElement associator(const SfElement& a, const SfElement& b, const SfElement& c) {
  same_algebra(a, b);
  same_algebra(a, c);
  return SfElement(a.algebra(), a.algebra()->associator(a.value(), b.value(), c.value()));
}

// ---------------------------------------------------------------------------

bool is_two_sided(const OrePoly& f) {
  const OrePoly g = f.monic();
  const auto& ctx = g.context();
  if (!mod_r(g * OrePoly::t(ctx), g).is_zero()) return false;
  for (const auto& a : ctx->generators()) {
    if (!mod_r(g * OrePoly::constant(ctx, a), g).is_zero()) return false;
  }
  return true;
}

bool t_powers_associative(const PetitAlgebra& a) {
  const auto& ctx = a.context();
  const OrePoly& f = a.modulus();
  const OrePoly t = OrePoly::t(ctx);
  const bool criterion = mod_r(f * t, f).is_zero();
  if (a.degree() >= 2) {
    // t^m as an element of S_f is t^m mod_r f.
    const OrePoly tm = a.reduce(OrePoly::monomial(ctx, ctx->one(), a.degree()));
    const bool literal = a.circ(tm, t) == a.circ(t, tm);
    if (literal != criterion) {
      throw Error(ErrorKind::InternalInconsistency,
                  "t^m o t = t o t^m disagrees with f*t in Rf for f = " + f.str());
    }
  }
  return criterion;
}

std::optional<ZeroDivisorPair> zero_divisor_search(const PetitAlgebra& a, unsigned trials,
                                                   std::uint64_t seed, unsigned root_bound) {
  const auto& ctx = a.context();
  const std::size_t m = a.degree();
  if (m < 2) return std::nullopt;
  const OrePoly& f = a.modulus();
  const OrePoly t = OrePoly::t(ctx);
  for (const auto& r : right_root_search(f, root_bound).roots) {
    const OrePoly lin = t - OrePoly::constant(ctx, r);
    const auto q = right_divmod(f, lin).quotient;
    if (a.circ(q, lin).is_zero()) return ZeroDivisorPair{q, lin};
    throw Error(ErrorKind::InternalInconsistency, "right factor did not give a zero divisor");
  }
  std::mt19937_64 rng(seed);
  RandomSpec spec;
  spec.height = 2;
  spec.degree = 1;
  spec.den_degree = 0;
  for (unsigned trial = 0; trial < trials; ++trial) {
    std::uniform_int_distribution<std::size_t> deg(1, m - 1);
    const std::size_t d = deg(rng);
    std::vector<Element> c;
    for (std::size_t i = 0; i < d; ++i) c.push_back(ctx->random_element(rng, spec));
    c.push_back(ctx->one());
    const OrePoly h(ctx, std::move(c));
    // g -> g o h is left K-linear; its kernel is found over K.
    linalg::Matrix mat(m, linalg::Vector(m, ctx->zero()));
    for (std::size_t i = 0; i < m; ++i) {
      const OrePoly col = a.circ(OrePoly::monomial(ctx, ctx->one(), i), h);
      for (std::size_t j = 0; j < m; ++j) mat[j][i] = col.coeff(j);
    }
    const auto kernel = linalg::nullspace(mat, m, ctx->top());
    if (kernel.empty()) continue;
    const OrePoly g(ctx, kernel.front());
    if (g.is_zero() || !a.circ(g, h).is_zero()) {
      throw Error(ErrorKind::InternalInconsistency, "kernel vector is not a zero divisor");
    }
    return ZeroDivisorPair{g, h};
  }
  return std::nullopt;
}

}  // namespace orealg
