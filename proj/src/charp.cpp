#include "orealg/charp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "orealg/error.hpp"
#include "orealg/linalg.hpp"

namespace orealg {

namespace {

void require_char_p(const FieldTower& k) {
  if (k.characteristic() == 0) {
    throw Error(ErrorKind::WrongCharacteristic, "requires a field of prime characteristic");
  }
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

linalg::Matrix matrix_pow(const linalg::Matrix& a, std::size_t n, const Level& field) {
  linalg::Matrix result = linalg::identity(a.size(), field);
  linalg::Matrix base = a;
  while (n > 0) {
    if (n & 1U) result = linalg::multiply(result, base);
    n >>= 1U;
    if (n > 0) base = linalg::multiply(base, base);
  }
  return result;
}

// sum_i f_i N_i(r), N_0 = 1, N_{i+1} = delta(N_i) + N_i r; zero iff t - r
// right-divides f.
Element right_evaluation(const FieldTower& k, const std::vector<Element>& f, const Element& r) {
  Element n = k.one();
  Element acc = f[0];
  for (std::size_t i = 1; i < f.size(); ++i) {
    n = k.derive(n) + n * r;
    if (!f[i].is_zero()) acc = acc + f[i] * n;
  }
  return acc;
}

}  // namespace

PPolynomial PPolynomial::monomial(TowerPtr ctx, std::size_t e) {
  PPolynomial g;
  g.c.assign(e, ctx->zero());
  g.ctx = std::move(ctx);
  g.e = e;
  return g;
}

OrePoly PPolynomial::g() const {
  const std::size_t p = ctx->characteristic();
  std::vector<Element> coeffs(ipow(p, e) + 1, ctx->zero());
  coeffs.back() = ctx->one();
  for (std::size_t i = 1; i <= e; ++i) coeffs[ipow(p, e - i)] = c[i - 1];
  return OrePoly(ctx, std::move(coeffs));
}

OrePoly PPolynomial::f() const {
  if (!d0) return g();
  return g() - OrePoly::constant(ctx, *d0);
}

Element v_p(const FieldTower& k, const Element& b) {
  require_char_p(k);
  const std::uint32_t p = k.characteristic();
  return k.lift(b).pow(p) + k.derive(b, p - 1);
}

Element v_pe(const FieldTower& k, const Element& b, std::size_t e) {
  Element r = k.lift(b);
  for (std::size_t i = 0; i < e; ++i) r = v_p(k, r);
  return r;
}

Element v_f(const PPolynomial& g, const Element& b) {
  const FieldTower& k = *g.ctx;
  require_char_p(k);
  // w[j] = V_{p^j}(b)
  std::vector<Element> w{k.lift(b)};
  for (std::size_t j = 0; j < g.e; ++j) w.push_back(v_p(k, w.back()));
  Element acc = w[g.e];
  for (std::size_t i = 1; i <= g.e; ++i) {
    if (!g.c[i - 1].is_zero()) acc = acc + g.c[i - 1] * w[g.e - i];
  }
  return acc;
}

PPolynomial min_p_polynomial(const TowerPtr& k) {
  const FBasis& fb = k->fbasis();
  const std::size_t d = fb.dimension();
  const std::uint32_t p = k->characteristic();
  const Level& top = k->top();
  linalg::Matrix delta(d, linalg::Vector(d, k->zero()));
  for (std::size_t j = 0; j < d; ++j) {
    const auto col = fb.coordinates(k->derive(fb.basis()[j]));
    for (std::size_t i = 0; i < d; ++i) delta[i][j] = col[i];
  }
  auto flatten = [&](const linalg::Matrix& m) {
    linalg::Vector v;
    for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
    return v;
  };
  // powers[s] = delta^{p^s}, flattened
  std::vector<linalg::Vector> powers{flatten(delta)};
  linalg::Matrix current = delta;
  for (std::size_t s = 1; s <= d; ++s) {
    current = matrix_pow(current, p, top);
    const linalg::Vector target = flatten(current);
    // columns: delta^{p^{s-1}}, ..., delta^{p^0}  <->  c_1, ..., c_s
    linalg::Matrix a(d * d, linalg::Vector(s, k->zero()));
    linalg::Vector rhs(d * d, k->zero());
    for (std::size_t r = 0; r < d * d; ++r) {
      for (std::size_t j = 0; j < s; ++j) a[r][j] = powers[s - 1 - j][r];
      rhs[r] = -target[r];
    }
    if (auto sol = linalg::solve(a, rhs, top)) {
      PPolynomial g;
      g.ctx = k;
      g.e = s;
      g.c = std::move(*sol);
      return g;
    }
    powers.push_back(target);
  }
  throw Error(ErrorKind::InternalInconsistency, "no p-polynomial annihilates the derivation");
}

CenterInfo center_of_R(const TowerPtr& k, const Element& d0) {
  if (!k->is_constant(d0)) {
    throw Error(ErrorKind::NonConstantD0, "d0 = " + k->lift(d0).str() + " is not a constant");
  }
  CenterInfo info{min_p_polynomial(k), OrePoly(k)};
  info.g.d0 = k->lift(d0);
  info.z = info.g.f();
  const OrePoly t = OrePoly::t(k);
  bool central = info.z * t == t * info.z;
  for (const auto& a : k->generators()) {
    const OrePoly ap = OrePoly::constant(k, a);
    central = central && info.z * ap == ap * info.z;
  }
  if (!central) throw Error(ErrorKind::InternalInconsistency, "g(t) - d0 is not central");
  return info;
}

OrePoly bound_of(const OrePoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "bound of 0");
  const auto& k = f.context();
  const FBasis& fb = k->fbasis();
  if (f.deg() == 0) return OrePoly::constant(k, k->one());
  const AlgebraPtr s = PetitAlgebra::make(f);
  const OrePoly z = min_p_polynomial(k).g();
  const std::size_t n = s->degree() * fb.dimension();
  // r_j = z^j mod_r f, using z^{j+1} = z^j z = q z f + r_j z for central z.
  std::vector<linalg::Vector> coords;
  OrePoly r = OrePoly::constant(k, k->one());
  for (std::size_t j = 0; j <= n; ++j) {
    if (j > 0) r = s->reduce(r * z);
    const auto v = s->f_coordinates(r);
    if (j > 0) {
      linalg::Matrix a(n, linalg::Vector(j, k->zero()));
      linalg::Vector rhs(n, k->zero());
      for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t col = 0; col < j; ++col) a[row][col] = coords[col][row];
        rhs[row] = -v[row];
      }
      if (auto sol = linalg::solve(a, rhs, k->top())) {
        std::vector<Element> h = std::move(*sol);
        h.push_back(k->one());
        OrePoly b = compose(h, z).monic();
        if (!mod_r(b, f).is_zero()) {
          throw Error(ErrorKind::InternalInconsistency, "bound is not divisible by f");
        }
        return b;
      }
    }
    coords.push_back(v);
  }
  throw Error(ErrorKind::InternalInconsistency, "no bound found within dim S_f powers of z");
}

AlgebraPtr differential_extension(const TowerPtr& k, const Element& d0) {
  const CenterInfo c = center_of_R(k, d0);
  AlgebraPtr a = PetitAlgebra::make(c.z);
  if (!a->two_sided()) {
    throw Error(ErrorKind::InternalInconsistency, "g - d0 is not two-sided");
  }
  return a;
}

Element common_denominator(const FieldTower& k, std::span<const Element> elems) {
  std::function<Element(const Level&, const std::vector<Element>&)> rec =
      [&](const Level& level, const std::vector<Element>& es) -> Element {
    if (level.depth() == 0) return k.one();
    const Level& inner = *level.inner();
    std::vector<Element> coeffs;
    if (level.kind() == Level::Kind::PInsep) {
      for (const auto& e : es) {
        const auto& c = std::get<Element::Alg>(e.rep()).coeffs;
        coeffs.insert(coeffs.end(), c.begin(), c.end());
      }
      return rec(inner, coeffs);
    }
    upoly::Poly lcm{inner.one()};
    for (const auto& e : es) {
      const auto& f = std::get<Element::Frac>(e.rep());
      if (!upoly::is_one(f.den)) lcm = upoly::lcm(lcm, f.den);
      coeffs.insert(coeffs.end(), f.num.begin(), f.num.end());
      coeffs.insert(coeffs.end(), f.den.begin(), f.den.end());
    }
    const Element own = k.lift(level.make_fraction(lcm, {inner.one()}));
    return own * rec(inner, coeffs);
  };
  std::vector<Element> lifted;
  for (const auto& e : elems) lifted.push_back(k.lift(e));
  return rec(k.top(), lifted);
}

SplitResult split_solver(const PPolynomial& g, unsigned bound) {
  const FieldTower& k = *g.ctx;
  require_char_p(k);
  const Element d0 = g.d0 ? *g.d0 : k.zero();
  if (!k.is_constant(d0)) {
    throw Error(ErrorKind::NonConstantD0, "d0 = " + d0.str() + " is not a constant");
  }
  SplitResult out{std::nullopt, bound, k.one(), 0, ""};
  const std::string failure = g.e == 1 ? "division (uncertified at bound " + std::to_string(bound) + ")"
                                       : "not split within bound " + std::to_string(bound);
  if (d0.is_zero()) {
    out.witness = k.zero();
    out.label = "split";
    return out;
  }
  out.denominator = common_denominator(k, std::span<const Element>(&d0, 1));
  unsigned den_degree = 0;
  if (const auto* f = std::get_if<Element::Frac>(&out.denominator.rep())) {
    den_degree = static_cast<unsigned>(std::max(upoly::degree(f->num), 0));
  }
  const auto monos = k.monomials(bound + den_degree);
  const Element den_inv = out.denominator.inverse();
  std::vector<Element> images;
  std::vector<Element> candidates;
  for (const auto& mono : monos) {
    candidates.push_back(mono * den_inv);
    images.push_back(v_f(g, candidates.back()));
  }
  out.unknowns = candidates.size();
  images.push_back(-d0);
  const linalg::Matrix rows = linalg::base_relation_rows(images);
  const std::size_t n = candidates.size();
  linalg::Matrix a;
  linalg::Vector rhs;
  for (const auto& row : rows) {
    a.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n));
    rhs.push_back(-row[n]);
  }
  const Level& base = k.base_level();
  std::optional<linalg::Vector> sol;
  if (a.empty()) {
    sol = linalg::Vector(n, base.zero());
  } else {
    sol = linalg::solve(a, rhs, base);
  }
  if (!sol) {
    out.label = failure;
    return out;
  }
  Element b = k.zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (!(*sol)[j].is_zero()) b = b + k.lift((*sol)[j]) * candidates[j];
  }
  if (!(v_f(g, b) == d0)) throw Error(ErrorKind::InternalInconsistency, "V_g(b) != d0");
  const OrePoly lin = OrePoly::t(g.ctx) - OrePoly::constant(g.ctx, b);
  PPolynomial with_d0 = g;
  with_d0.d0 = d0;
  if (!mod_r(with_d0.f(), lin).is_zero()) {
    throw Error(ErrorKind::InternalInconsistency, "t - b does not right-divide g - d0");
  }
  out.witness = b;
  out.label = "split";
  return out;
}

RootSearch right_root_search(const OrePoly& f_in, unsigned bound) {
  RootSearch out;
  out.bound_used = bound;
  if (f_in.is_zero()) return out;
  const OrePoly f = f_in.monic();
  const auto& ctx = f.context();
  const FieldTower& k = *ctx;
  if (f.deg() == 0) return out;
  if (f.deg() == 1) {
    out.roots.push_back(-f.coeff(0));
    return out;
  }
  std::vector<Element> coeff_values;
  if (k.characteristic() == 0) {
    for (int c = -2; c <= 2; ++c) coeff_values.push_back(k.integer(c));
  } else {
    for (std::uint32_t c = 0; c < k.characteristic(); ++c) coeff_values.push_back(k.integer(c));
  }
  constexpr double budget = 200000.0;
  std::vector<Element> monos = k.monomials(bound);
  while (out.bound_used > 0 &&
         std::pow(static_cast<double>(coeff_values.size()), static_cast<double>(monos.size())) * 3 >
             budget) {
    --out.bound_used;
    monos = k.monomials(out.bound_used);
  }
  const Element den = common_denominator(k, f.coeffs());
  std::vector<Element> templates{k.one()};
  if (!den.is_one()) {
    templates.push_back(den.inverse());
    templates.push_back(den.inverse().pow(2));
  }
  const std::vector<Element>& fc = f.coeffs();
  std::vector<std::size_t> digits(monos.size(), 0);
  for (const auto& scale : templates) {
    std::fill(digits.begin(), digits.end(), 0);
    for (;;) {
      Element num = k.zero();
      for (std::size_t i = 0; i < monos.size(); ++i) {
        if (!coeff_values[digits[i]].is_zero()) num = num + coeff_values[digits[i]] * monos[i];
      }
      const Element r = num * scale;
      if (right_evaluation(k, fc, r).is_zero() &&
          std::find(out.roots.begin(), out.roots.end(), r) == out.roots.end()) {
        const OrePoly lin = OrePoly::t(ctx) - OrePoly::constant(ctx, r);
        if (!mod_r(f, lin).is_zero()) {
          throw Error(ErrorKind::InternalInconsistency, "root test disagrees with right division");
        }
        out.roots.push_back(r);
      }
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == coeff_values.size()) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
  }
  return out;
}

}  // namespace orealg
