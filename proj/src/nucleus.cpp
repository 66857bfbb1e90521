#include "orealg/nucleus.hpp"

#include <random>

#include "orealg/charp.hpp"
#include "orealg/error.hpp"

namespace orealg {

namespace {

bool exact_case(const PetitAlgebra& a) {
  const auto& k = *a.context();
  return k.has_fbasis() && k.constants_certified();
}

// Rows of a homogeneous system, compressed by elimination as they arrive.
class RowSystem {
 public:
  RowSystem(std::size_t cols, const Level& field) : cols_(cols), field_(&field) {}

  void add(linalg::Vector row) {
    bool zero = true;
    for (const auto& e : row) zero = zero && e.is_zero();
    if (zero) return;
    rows_.push_back(std::move(row));
    if (rows_.size() > 2 * cols_ + 4) compress();
  }

  void add_rows(const linalg::Matrix& rows) {
    for (const auto& r : rows) add(r);
  }

  std::size_t rank() {
    compress();
    return rows_.size();
  }

  std::vector<linalg::Vector> nullspace() const { return linalg::nullspace(rows_, cols_, *field_); }

 private:
  void compress() { rows_ = linalg::row_reduce(std::move(rows_), cols_).rows; }

  std::size_t cols_;
  const Level* field_;
  linalg::Matrix rows_;
};

// Membership and coordinates for a fixed exact subspace, from one
// elimination of [B | I].
class ExactSpan {
 public:
  explicit ExactSpan(const FSubspace& s) : s_(&s) {
    const PetitAlgebra& a = *s.ambient;
    n_ = s.basis.size();
    width_ = *a.f_dimension();
    const Level& top = a.context()->top();
    linalg::Matrix aug;
    for (std::size_t i = 0; i < n_; ++i) {
      auto row = a.f_coordinates(s.basis[i]);
      for (std::size_t j = 0; j < n_; ++j) row.push_back(i == j ? top.one() : top.zero());
      aug.push_back(std::move(row));
    }
    auto e = linalg::row_reduce(std::move(aug), width_ + n_);
    rows_ = std::move(e.rows);
    pivots_ = std::move(e.pivots);
    for (auto p : pivots_) {
      if (p >= width_) throw Error(ErrorKind::InternalInconsistency, "subspace basis is dependent");
    }
  }

  std::optional<linalg::Vector> coords(const OrePoly& g) const {
    const PetitAlgebra& a = *s_->ambient;
    const Level& top = a.context()->top();
    if (!g.is_zero() && g.deg() >= a.degree()) return std::nullopt;
    linalg::Vector residual = a.f_coordinates(g);
    linalg::Vector c(n_, top.zero());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Element lambda = residual[pivots_[k]];
      if (lambda.is_zero()) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        if (!rows_[k][j].is_zero()) residual[j] = residual[j] - lambda * rows_[k][j];
      }
      for (std::size_t j = 0; j < n_; ++j) {
        if (!rows_[k][width_ + j].is_zero()) c[j] = c[j] + lambda * rows_[k][width_ + j];
      }
    }
    for (const auto& r : residual) {
      if (!r.is_zero()) return std::nullopt;
    }
    return c;
  }

 private:
  const FSubspace* s_;
  std::size_t n_ = 0;
  std::size_t width_ = 0;
  linalg::Matrix rows_;
  std::vector<std::size_t> pivots_;
};

// Coordinates of g in a base-field span: sum c_i b_i = g with c_i in Q / F_p.
std::optional<linalg::Vector> base_coords(const FSubspace& s, const OrePoly& g) {
  const PetitAlgebra& a = *s.ambient;
  const std::size_t n = s.basis.size();
  const Level& base = a.context()->base_level();
  linalg::Matrix rows;
  for (std::size_t deg = 0; deg < a.degree(); ++deg) {
    std::vector<Element> elems;
    for (const auto& b : s.basis) elems.push_back(b.coeff(deg));
    elems.push_back(-g.coeff(deg));
    for (auto& r : linalg::base_relation_rows(elems)) rows.push_back(std::move(r));
  }
  if (!g.is_zero() && g.deg() >= a.degree()) return std::nullopt;
  if (rows.empty()) return linalg::Vector(n, base.zero());
  linalg::Matrix lhs;
  linalg::Vector rhs;
  for (const auto& r : rows) {
    lhs.emplace_back(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
    rhs.push_back(-r[n]);
  }
  if (n == 0) {
    for (const auto& v : rhs) {
      if (!v.is_zero()) return std::nullopt;
    }
    return linalg::Vector{};
  }
  return linalg::solve(lhs, rhs, base);
}

const Level& scalar_level(const FSubspace& s) {
  const auto& k = *s.ambient->context();
  switch (s.kind) {
    case FSubspace::Kind::AnsatzLowerBound:
    case FSubspace::Kind::AnsatzMaximal:
      return k.base_level();
    default:
      return k.top();
  }
}

bool check_closed(const FSubspace& s) {
  const PetitAlgebra& a = *s.ambient;
  if (s.kind == FSubspace::Kind::StructuralK) return true;
  if (s.kind == FSubspace::Kind::Exact) {
    const ExactSpan span(s);
    for (const auto& x : s.basis) {
      for (const auto& y : s.basis) {
        if (!span.coords(a.circ(x, y))) return false;
      }
    }
    return true;
  }
  for (const auto& x : s.basis) {
    for (const auto& y : s.basis) {
      if (!base_coords(s, a.circ(x, y))) return false;
    }
  }
  return true;
}

unsigned polynomial_degree(const Element& e) {
  if (const auto* f = std::get_if<Element::Frac>(&e.rep())) {
    return static_cast<unsigned>(std::max(upoly::degree(f->num), 0));
  }
  return 0;
}

std::vector<OrePoly> k_multiples(const PetitAlgebra& a, const std::vector<linalg::Vector>& kbasis) {
  const auto& ctx = a.context();
  std::vector<OrePoly> out;
  for (const auto& v : kbasis) {
    const OrePoly g(ctx, v);
    for (const auto& k : ctx->fbasis().basis()) out.push_back(g.scale_left(k));
  }
  return out;
}

FSubspace structural_field(const PetitAlgebra& a, std::uint64_t seed, bool left) {
  const auto& ctx = a.context();
  std::mt19937_64 rng(seed);
  std::vector<Element> xs(ctx->generators());
  xs.push_back(ctx->one());
  xs.push_back(ctx->random_element(rng));
  for (int i = 0; i < 100; ++i) {
    const OrePoly x = OrePoly::constant(ctx, xs[static_cast<std::size_t>(i) % xs.size()]);
    const OrePoly p = a.random_element(rng);
    const OrePoly q = a.random_element(rng);
    const OrePoly r = left ? a.associator(x, p, q) : a.associator(p, x, q);
    if (!r.is_zero()) {
      throw Error(ErrorKind::InternalInconsistency,
                  std::string("K is not in the ") + (left ? "left" : "middle") + " nucleus");
    }
  }
  FSubspace s{a.shared_from_this(), FSubspace::Kind::StructuralK, {OrePoly::constant(ctx, ctx->one())}, true};
  return s;
}

void expect_structure(const PetitAlgebra& a, const FSubspace& s, const char* which) {
  const std::size_t d = a.context()->fbasis().dimension();
  const std::size_t expected = a.two_sided() ? *a.f_dimension() : d;
  if (s.dim() != expected) {
    throw Error(ErrorKind::InternalInconsistency,
                std::string(which) + " nucleus has dimension " + std::to_string(s.dim()) +
                    ", expected " + std::to_string(expected));
  }
}

}  // namespace

std::string to_string(FSubspace::Kind kind) {
  switch (kind) {
    case FSubspace::Kind::Exact: return "exact";
    case FSubspace::Kind::AnsatzLowerBound: return "lower_bound";
    case FSubspace::Kind::AnsatzMaximal: return "certified_maximal";
    case FSubspace::Kind::StructuralK: return "structural_K";
  }
  return "?";
}

std::string to_string(APolyResult::Verdict v) {
  switch (v) {
    case APolyResult::Verdict::APolynomial: return "a_polynomial";
    case APolyResult::Verdict::NotAPolynomial: return "not_a_polynomial";
    case APolyResult::Verdict::Inconclusive: return "inconclusive";
    case APolyResult::Verdict::EigenringOnly: return "eigenring_only";
  }
  return "?";
}

AnsatzConfig default_ansatz(const PetitAlgebra& a) {
  const auto& k = *a.context();
  Element den = k.one();
  for (const auto& c : a.modulus().coeffs()) den = den * common_denominator(k, std::span<const Element>(&c, 1));
  AnsatzConfig cfg;
  cfg.denominator = den.pow(static_cast<long long>(a.degree()));
  cfg.numerator_degree = static_cast<unsigned>(2 * a.degree());
  return cfg;
}

FSubspace right_nucleus(const PetitAlgebra& a, const std::optional<AnsatzConfig>& cfg) {
  const auto& ctx = a.context();
  const OrePoly& f = a.modulus();
  // m = 1: S_f is K itself.
  if (a.degree() == 1) return embedded_field(a);
  FSubspace out{a.shared_from_this(), FSubspace::Kind::Exact, {}, false};
  if (exact_case(a) && !cfg) {
    const auto basis = a.f_basis();
    const std::size_t n = basis.size();
    linalg::Matrix m(n, linalg::Vector(n, ctx->zero()));
    for (std::size_t j = 0; j < n; ++j) {
      const auto col = a.f_coordinates(a.reduce(f * basis[j]));
      for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
    }
    for (const auto& v : linalg::nullspace(m, n, ctx->top())) out.basis.push_back(a.from_f_coordinates(v));
    out.closed = check_closed(out);
    if (!out.closed) throw Error(ErrorKind::InternalInconsistency, "right nucleus is not closed");
    return out;
  }
  if (!cfg) {
    throw Error(ErrorKind::AnsatzRequired,
                "[K:F] is infinite; the right nucleus needs an ansatz (numerator degree bound)");
  }
  const Element den = cfg->denominator ? ctx->lift(*cfg->denominator) : ctx->one();
  if (den.is_zero()) throw Error(ErrorKind::InconsistentAnsatz, "ansatz denominator is 0");
  const Element den_inv = den.inverse();
  const auto monos = ctx->monomials(cfg->numerator_degree + polynomial_degree(den));
  std::vector<OrePoly> unknowns;
  // Highest monomials first, so that low-degree solutions come out as free
  // variables.
  for (std::size_t j = monos.size(); j-- > 0;) {
    for (std::size_t i = a.degree(); i-- > 0;) {
      unknowns.push_back(OrePoly::monomial(ctx, monos[j] * den_inv, i));
    }
  }
  const std::size_t n = unknowns.size();
  std::vector<OrePoly> images;
  for (const auto& u : unknowns) images.push_back(a.reduce(f * u));
  RowSystem sys(n, ctx->base_level());
  for (std::size_t deg = 0; deg < a.degree(); ++deg) {
    std::vector<Element> elems;
    for (const auto& r : images) elems.push_back(r.coeff(deg));
    sys.add_rows(linalg::base_relation_rows(elems));
  }
  auto null = sys.nullspace();
  for (auto it = null.rbegin(); it != null.rend(); ++it) {
    OrePoly g(ctx);
    for (std::size_t j = 0; j < n; ++j) {
      if (!(*it)[j].is_zero()) g = g + unknowns[j].scale_left(ctx->lift((*it)[j]));
    }
    out.basis.push_back(g);
  }
  const std::size_t m = a.degree();
  out.kind = out.dim() == m * m ? FSubspace::Kind::AnsatzMaximal : FSubspace::Kind::AnsatzLowerBound;
  out.closed = check_closed(out);
  if (out.kind == FSubspace::Kind::AnsatzMaximal && !out.closed) {
    throw Error(ErrorKind::InternalInconsistency, "maximal eigenring is not closed");
  }
  return out;
}

FSubspace left_nucleus(const PetitAlgebra& a, std::uint64_t seed) {
  if (!exact_case(a)) return structural_field(a, seed, true);
  const auto& ctx = a.context();
  const std::size_t m = a.degree();
  const auto sbasis = a.f_basis();
  std::vector<OrePoly> second;
  for (std::size_t l = 0; l < m; ++l) second.push_back(OrePoly::monomial(ctx, ctx->one(), l));
  for (const auto& k : ctx->fbasis().basis()) second.push_back(OrePoly::constant(ctx, k));
  std::vector<OrePoly> ts;
  for (std::size_t i = 0; i < m; ++i) ts.push_back(OrePoly::monomial(ctx, ctx->one(), i));
  // x -> [x, p, q] is left K-linear; unknowns are the K-coefficients of x.
  // [x, p, k q] = [x, p k, q] + [x, p, k] o q reduces q to t^l and k in K.
  RowSystem sys(m, ctx->top());
  for (const auto& p : sbasis) {
    for (const auto& q : second) {
      std::vector<OrePoly> cols;
      for (const auto& t : ts) cols.push_back(a.associator(t, p, q));
      for (std::size_t s = 0; s < m; ++s) {
        linalg::Vector row;
        for (const auto& c : cols) row.push_back(c.coeff(s));
        sys.add(std::move(row));
      }
    }
    // K itself always solves the system; once nothing else does, stop.
    if (!a.two_sided() && sys.rank() == m - 1) break;
  }
  FSubspace out{a.shared_from_this(), FSubspace::Kind::Exact, k_multiples(a, sys.nullspace()), false};
  expect_structure(a, out, "left");
  out.closed = true;
  return out;
}

FSubspace middle_nucleus(const PetitAlgebra& a, std::uint64_t seed) {
  if (!exact_case(a)) return structural_field(a, seed, false);
  const auto& ctx = a.context();
  const std::size_t m = a.degree();
  const auto sbasis = a.f_basis();
  const std::size_t n = sbasis.size();
  const std::size_t d = ctx->fbasis().dimension();
  // [k p, y, q] = k [p, y, q] for k in K, so p runs over t^j only.
  RowSystem sys(n, ctx->top());
  for (std::size_t j = 0; j < m; ++j) {
    const OrePoly p = OrePoly::monomial(ctx, ctx->one(), j);
    for (const auto& q : sbasis) {
      std::vector<linalg::Vector> cols;
      for (const auto& y : sbasis) cols.push_back(a.f_coordinates(a.associator(p, y, q)));
      for (std::size_t s = 0; s < n; ++s) {
        linalg::Vector row;
        for (const auto& c : cols) row.push_back(c[s]);
        sys.add(std::move(row));
      }
      if (!a.two_sided() && sys.rank() == n - d) break;
    }
    if (!a.two_sided() && sys.rank() == n - d) break;
  }
  FSubspace out{a.shared_from_this(), FSubspace::Kind::Exact, {}, false};
  for (const auto& v : sys.nullspace()) out.basis.push_back(a.from_f_coordinates(v));
  expect_structure(a, out, "middle");
  out.closed = true;
  return out;
}

FSubspace embedded_field(const PetitAlgebra& a) {
  const auto& ctx = a.context();
  if (!exact_case(a)) {
    return FSubspace{a.shared_from_this(), FSubspace::Kind::StructuralK,
                     {OrePoly::constant(ctx, ctx->one())}, true};
  }
  FSubspace out{a.shared_from_this(), FSubspace::Kind::Exact, {}, true};
  for (const auto& k : ctx->fbasis().basis()) out.basis.push_back(OrePoly::constant(ctx, k));
  return out;
}

std::optional<linalg::Vector> coordinates_in(const FSubspace& s, const OrePoly& g) {
  switch (s.kind) {
    case FSubspace::Kind::Exact:
      return ExactSpan(s).coords(g);
    case FSubspace::Kind::StructuralK:
      if (!g.is_zero() && g.deg() > 0) return std::nullopt;
      return linalg::Vector{g.coeff(0)};
    default:
      return base_coords(s, g);
  }
}

FSubspace intersect(const FSubspace& a, const FSubspace& b) {
  if (a.kind != FSubspace::Kind::Exact || b.kind != FSubspace::Kind::Exact) {
    throw Error(ErrorKind::InfiniteDimension, "intersections need exact F-subspaces");
  }
  const PetitAlgebra& alg = *a.ambient;
  const auto& ctx = alg.context();
  const std::size_t width = *alg.f_dimension();
  const std::size_t n = a.dim() + b.dim();
  linalg::Matrix m(width, linalg::Vector(n, ctx->zero()));
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const auto c = alg.f_coordinates(a.basis[j]);
    for (std::size_t i = 0; i < width; ++i) m[i][j] = c[i];
  }
  for (std::size_t j = 0; j < b.dim(); ++j) {
    const auto c = alg.f_coordinates(b.basis[j]);
    for (std::size_t i = 0; i < width; ++i) m[i][a.dim() + j] = -c[i];
  }
  FSubspace out{a.ambient, FSubspace::Kind::Exact, {}, false};
  for (const auto& v : linalg::nullspace(m, n, ctx->top())) {
    OrePoly g(ctx);
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (!v[j].is_zero()) g = g + a.basis[j].scale_left(v[j]);
    }
    out.basis.push_back(g);
  }
  out.closed = a.closed && b.closed;
  return out;
}

NucleusCenter nucleus_and_center(const PetitAlgebra& a) {
  if (!exact_case(a)) {
    throw Error(ErrorKind::InfiniteDimension, "nucleus and center need finite [K:F]");
  }
  const auto& ctx = a.context();
  const FSubspace r = right_nucleus(a);
  const FSubspace l = left_nucleus(a);
  const FSubspace mid = middle_nucleus(a);
  FSubspace nuc = intersect(intersect(l, mid), r);
  nuc.closed = check_closed(nuc);
  const auto sbasis = a.f_basis();
  const std::size_t n = nuc.dim();
  RowSystem sys(n, ctx->top());
  for (const auto& y : sbasis) {
    std::vector<linalg::Vector> cols;
    for (const auto& z : nuc.basis) cols.push_back(a.f_coordinates(a.circ(z, y) - a.circ(y, z)));
    for (std::size_t s = 0; s < sbasis.size(); ++s) {
      linalg::Vector row;
      for (const auto& c : cols) row.push_back(c[s]);
      sys.add(std::move(row));
    }
  }
  FSubspace center{a.shared_from_this(), FSubspace::Kind::Exact, {}, false};
  for (const auto& v : sys.nullspace()) {
    OrePoly g(ctx);
    for (std::size_t j = 0; j < n; ++j) {
      if (!v[j].is_zero()) g = g + nuc.basis[j].scale_left(v[j]);
    }
    center.basis.push_back(g);
  }
  center.closed = check_closed(center);
  return {nuc, center};
}

bool field_in_right_nucleus(const PetitAlgebra& a) {
  const auto& ctx = a.context();
  const OrePoly& f = a.modulus();
  for (const auto& g : ctx->generators()) {
    if (!mod_r(f * OrePoly::constant(ctx, g), f).is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// presentations

linalg::Vector present_mul(const FAlgebraPresentation& p, const linalg::Vector& a,
                           const linalg::Vector& b) {
  const std::size_t n = p.structure.size();
  const Level& field = scalar_level(p.subspace);
  linalg::Vector out(n, field.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const Element ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!p.structure[i][j][k].is_zero()) out[k] = out[k] + ab * p.structure[i][j][k];
      }
    }
  }
  return out;
}

FAlgebraPresentation presentation(const FSubspace& s) {
  const PetitAlgebra& a = *s.ambient;
  const auto& ctx = a.context();
  const std::size_t n = s.dim();
  std::optional<ExactSpan> span;
  if (s.kind == FSubspace::Kind::Exact) span.emplace(s);
  auto coords = [&](const OrePoly& g) {
    return span ? span->coords(g) : coordinates_in(s, g);
  };
  FAlgebraPresentation p;
  p.subspace = s;
  p.structure.assign(n, std::vector<linalg::Vector>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto c = coords(a.circ(s.basis[i], s.basis[j]));
      if (!c) {
        throw Error(ErrorKind::NotClosed, "product of basis elements " + std::to_string(i) + ", " +
                                              std::to_string(j) + " leaves the subspace");
      }
      p.structure[i][j] = std::move(*c);
    }
  }
  auto unit = coords(OrePoly::constant(ctx, ctx->one()));
  if (!unit) throw Error(ErrorKind::NotClosed, "the unit is not in the subspace");
  p.unit = std::move(*unit);
  p.subspace.closed = true;
  const Level& field = scalar_level(s);
  auto basis_vec = [&](std::size_t i) {
    linalg::Vector v(n, field.zero());
    v[i] = field.one();
    return v;
  };
  bool assoc = true;
  for (std::size_t i = 0; i < n && assoc; ++i) {
    for (std::size_t j = 0; j < n && assoc; ++j) {
      for (std::size_t k = 0; k < n && assoc; ++k) {
        const auto lhs = present_mul(p, p.structure[i][j], basis_vec(k));
        const auto rhs = present_mul(p, basis_vec(i), p.structure[j][k]);
        assoc = lhs == rhs;
      }
    }
  }
  p.associative = assoc;
  return p;
}

std::optional<std::pair<linalg::Vector, linalg::Vector>> presentation_zero_divisor(
    const FAlgebraPresentation& p, unsigned trials, std::uint64_t seed) {
  const std::size_t n = p.structure.size();
  const Level& field = scalar_level(p.subspace);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (unsigned trial = 0; trial < trials; ++trial) {
    linalg::Vector a(n, field.zero());
    bool zero = true;
    for (auto& c : a) {
      c = field.from_integer(coeff(rng));
      zero = zero && c.is_zero();
    }
    if (zero) continue;
    linalg::Matrix left(n, linalg::Vector(n, field.zero()));
    for (std::size_t j = 0; j < n; ++j) {
      linalg::Vector e(n, field.zero());
      e[j] = field.one();
      const auto col = present_mul(p, a, e);
      for (std::size_t i = 0; i < n; ++i) left[i][j] = col[i];
    }
    const auto kernel = linalg::nullspace(left, n, field);
    if (!kernel.empty()) return std::make_pair(a, kernel.front());
  }
  return std::nullopt;
}

std::optional<linalg::Vector> central_idempotent_search(const FAlgebraPresentation& p, int height,
                                                        std::size_t budget) {
  const std::size_t n = p.structure.size();
  const Level& field = scalar_level(p.subspace);
  std::vector<int> digits(n, -height);
  std::vector<linalg::Vector> basis;
  for (std::size_t i = 0; i < n; ++i) {
    linalg::Vector e(n, field.zero());
    e[i] = field.one();
    basis.push_back(std::move(e));
  }
  for (std::size_t count = 0; count < budget; ++count) {
    linalg::Vector e(n, field.zero());
    bool zero = true;
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = field.from_integer(digits[i]);
      zero = zero && digits[i] == 0;
    }
    if (!zero && e != p.unit && present_mul(p, e, e) == e) {
      bool central = true;
      for (const auto& b : basis) central = central && present_mul(p, e, b) == present_mul(p, b, e);
      if (central) return e;
    }
    std::size_t pos = 0;
    while (pos < n && ++digits[pos] > height) digits[pos++] = -height;
    if (pos == n) break;
  }
  return std::nullopt;
}

bool verify_isomorphism(const FAlgebraPresentation& a, const FAlgebraPresentation& b,
                        const linalg::Matrix& phi) {
  const std::size_t n = a.structure.size();
  if (b.structure.size() != n || phi.size() != n) return false;
  if (linalg::rank(phi, n) != n) return false;
  const Level& field = scalar_level(b.subspace);
  auto image = [&](const linalg::Vector& v) {
    linalg::Vector out(n, field.zero());
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] = out[k] + v[i] * phi[i][k];
    }
    return out;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(image(a.structure[i][j]) == present_mul(b, phi[i], phi[j]))) return false;
    }
  }
  return true;
}

APolyResult a_polynomial_test(const PetitAlgebra& a, const std::optional<AnsatzConfig>& cfg) {
  APolyResult out;
  out.maximum = a.degree() * a.degree();
  if (a.degree() == 1 && !exact_case(a)) {
    out.dim = 1;
    out.verdict = APolyResult::Verdict::APolynomial;
    return out;
  }
  if (exact_case(a) && !cfg) {
    out.dim = right_nucleus(a).dim();
    out.verdict = APolyResult::Verdict::EigenringOnly;
    return out;
  }
  if (!cfg) {
    throw Error(ErrorKind::AnsatzRequired, "the A-polynomial test over infinite [K:F] needs an ansatz");
  }
  const FSubspace r = right_nucleus(a, cfg);
  out.dim = r.dim();
  out.verdict = out.dim == out.maximum ? APolyResult::Verdict::APolynomial
                                       : APolyResult::Verdict::Inconclusive;
  return out;
}

}  // namespace orealg
