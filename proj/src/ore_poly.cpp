#include "orealg/ore_poly.hpp"

#include "orealg/error.hpp"

namespace orealg {

OrePoly::OrePoly(TowerPtr ctx) : ctx_(std::move(ctx)) {}

OrePoly::OrePoly(TowerPtr ctx, std::vector<Element> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) {
    if (c.level_ptr() != &ctx_->top()) c = ctx_->lift(c);
  }
  trim();
}

OrePoly OrePoly::constant(TowerPtr ctx, const Element& c) { return OrePoly(std::move(ctx), {c}); }

OrePoly OrePoly::monomial(TowerPtr ctx, const Element& c, std::size_t k) {
  std::vector<Element> v(k + 1, ctx->zero());
  v[k] = c;
  return OrePoly(std::move(ctx), std::move(v));
}

void OrePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void OrePoly::check(const OrePoly& other) const {
  if (ctx_ != other.ctx_) {
    throw Error(ErrorKind::ContextMismatch, "polynomials over different coefficient fields");
  }
}

Element OrePoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ctx_->zero(); }

std::optional<std::size_t> OrePoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::size_t OrePoly::deg() const {
  if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
  return coeffs_.size() - 1;
}

const Element& OrePoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of 0");
  return coeffs_.back();
}

OrePoly OrePoly::monic() const {
  const Element& lc = leading();
  if (lc.is_one()) return *this;
  return scale_left(lc.inverse());
}

OrePoly OrePoly::operator-() const {
  OrePoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

OrePoly operator+(const OrePoly& a, const OrePoly& b) {
  a.check(b);
  const auto& longer = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
  const auto& shorter = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
  OrePoly r = longer;
  for (std::size_t i = 0; i < shorter.coeffs_.size(); ++i) r.coeffs_[i] = r.coeffs_[i] + shorter.coeffs_[i];
  r.trim();
  return r;
}

OrePoly operator-(const OrePoly& a, const OrePoly& b) { return a + (-b); }

OrePoly OrePoly::times_t() const {
  if (is_zero()) return *this;
  std::vector<Element> out(coeffs_.size() + 1, ctx_->zero());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    out[j + 1] = out[j + 1] + coeffs_[j];
    out[j] = out[j] + ctx_->derive(coeffs_[j]);
  }
  return OrePoly(ctx_, std::move(out));
}

OrePoly operator*(const OrePoly& a, const OrePoly& b) {
  a.check(b);
  OrePoly result(a.ctx_);
  if (a.is_zero() || b.is_zero()) return result;
  // a*b = sum_i a_i (t^i b), with t^i b built one factor of t at a time.
  std::vector<Element> acc(a.coeffs_.size() + b.coeffs_.size() - 1, a.ctx_->zero());
  OrePoly ti_b = b;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (i > 0) ti_b = ti_b.times_t();
    const Element& ai = a.coeffs_[i];
    if (ai.is_zero()) continue;
    for (std::size_t j = 0; j < ti_b.coeffs_.size(); ++j) {
      if (!ti_b.coeffs_[j].is_zero()) acc[j] = acc[j] + ai * ti_b.coeffs_[j];
    }
  }
  return OrePoly(a.ctx_, std::move(acc));
}

bool operator==(const OrePoly& a, const OrePoly& b) {
  return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
}

OrePoly OrePoly::scale_left(const Element& c) const {
  if (c.is_zero()) return OrePoly(ctx_);
  std::vector<Element> out;
  out.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.push_back(c * a);
  return OrePoly(ctx_, std::move(out));
}

OrePoly OrePoly::scale_right(const Element& c) const { return *this * constant(ctx_, c); }

OrePoly OrePoly::shift(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Element> out(k, ctx_->zero());
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return OrePoly(ctx_, std::move(out));
}

OrePoly OrePoly::pow(unsigned n) const {
  OrePoly result = constant(ctx_, ctx_->one());
  OrePoly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

std::string OrePoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Element& c = coeffs_[k];
    if (c.is_zero()) continue;
    const std::string cs = c.str();
    std::string term;
    if (k == 0) {
      term = cs;
    } else {
      const std::string mono = k == 1 ? "t" : "t^" + std::to_string(k);
      if (cs == "1") {
        term = mono;
      } else if (cs == "-1") {
        term = "-" + mono;
      } else if (is_compound(cs)) {
        term = "(" + cs + ")*" + mono;
      } else {
        term = cs + "*" + mono;
      }
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// division

DivMod right_divmod(const OrePoly& g, const OrePoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::DivisionByZero, "right division by 0");
  if (g.context() != f.context()) {
    throw Error(ErrorKind::ContextMismatch, "polynomials over different coefficient fields");
  }
  const auto& ctx = f.context();
  const std::size_t m = f.deg();
  OrePoly r = g;
  if (r.is_zero() || r.deg() < m) return {OrePoly(ctx), r};
  const Element lc_inv = f.leading().inverse();
  const std::size_t n = r.deg();
  // powers[k] = t^k f
  std::vector<OrePoly> powers{f};
  for (std::size_t k = 1; k <= n - m; ++k) powers.push_back(powers.back().times_t());
  std::vector<Element> q(n - m + 1, ctx->zero());
  while (!r.is_zero() && r.deg() >= m) {
    const std::size_t k = r.deg() - m;
    const Element c = r.leading() * lc_inv;
    q[k] = c;
    r = r - powers[k].scale_left(c);
  }
  return {OrePoly(ctx, std::move(q)), r};
}

DivMod left_divmod(const OrePoly& g, const OrePoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::DivisionByZero, "left division by 0");
  if (g.context() != f.context()) {
    throw Error(ErrorKind::ContextMismatch, "polynomials over different coefficient fields");
  }
  const auto& ctx = f.context();
  const std::size_t m = f.deg();
  OrePoly r = g;
  if (r.is_zero() || r.deg() < m) return {OrePoly(ctx), r};
  const Element lc_inv = f.leading().inverse();
  std::vector<Element> q(r.deg() - m + 1, ctx->zero());
  while (!r.is_zero() && r.deg() >= m) {
    const std::size_t k = r.deg() - m;
    const Element c = lc_inv * r.leading();
    q[k] = c;
    r = r - (f * OrePoly::constant(ctx, c)).shift(k);
  }
  return {OrePoly(ctx, std::move(q)), r};
}

OrePoly mod_r(const OrePoly& g, const OrePoly& f) { return right_divmod(g, f).remainder; }

OrePoly right_gcd(const OrePoly& f, const OrePoly& g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::DivisionByZero, "right gcd of 0 and 0");
  OrePoly a = f;
  OrePoly b = g;
  while (!b.is_zero()) {
    OrePoly r = mod_r(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

OrePoly linear_power(const TowerPtr& ctx, const Element& b, unsigned n) {
  const OrePoly lin(ctx, {-ctx->lift(b), ctx->one()});
  OrePoly r = OrePoly::constant(ctx, ctx->one());
  for (unsigned i = 0; i < n; ++i) r = r * lin;
  return r;
}

OrePoly compose(const std::vector<Element>& h, const OrePoly& z) {
  const auto& ctx = z.context();
  OrePoly result(ctx);
  OrePoly power = OrePoly::constant(ctx, ctx->one());
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i > 0) power = power * z;
    if (!h[i].is_zero()) result = result + power.scale_left(h[i]);
  }
  return result;
}

// ---------------------------------------------------------------------------
// parsing

OrePoly evaluate_ore(const TowerPtr& ctx, const Expr& e, const Bindings& bindings) {
  auto scalar_of = [&](const OrePoly& p, const Expr& where, const char* what) {
    if (!p.is_zero() && p.deg() > 0) {
      throw Error(ErrorKind::TypeError, std::string(what) + " a polynomial of positive degree at line " +
                                            std::to_string(where.line) + ", column " +
                                            std::to_string(where.column));
    }
    return p.coeff(0);
  };
  switch (e.kind) {
    case Expr::Kind::Number:
      return OrePoly::constant(ctx, ctx->integer(e.number));
    case Expr::Kind::Symbol: {
      if (e.name == "t") return OrePoly::t(ctx);
      if (auto it = bindings.find(e.name); it != bindings.end()) {
        if (it->second.context() != ctx) {
          throw Error(ErrorKind::ContextMismatch, "'" + e.name + "' belongs to another field");
        }
        return it->second;
      }
      for (const auto& name : ctx->generator_names()) {
        if (name == e.name) return OrePoly::constant(ctx, ctx->generator(name));
      }
      throw Error(ErrorKind::TypeError, "unknown name '" + e.name + "' at line " +
                                            std::to_string(e.line) + ", column " +
                                            std::to_string(e.column));
    }
    case Expr::Kind::Neg:
      return -evaluate_ore(ctx, *e.lhs, bindings);
    case Expr::Kind::Add:
      return evaluate_ore(ctx, *e.lhs, bindings) + evaluate_ore(ctx, *e.rhs, bindings);
    case Expr::Kind::Sub:
      return evaluate_ore(ctx, *e.lhs, bindings) - evaluate_ore(ctx, *e.rhs, bindings);
    case Expr::Kind::Mul:
      return evaluate_ore(ctx, *e.lhs, bindings) * evaluate_ore(ctx, *e.rhs, bindings);
    case Expr::Kind::Div: {
      const OrePoly num = evaluate_ore(ctx, *e.lhs, bindings);
      const Element den = scalar_of(evaluate_ore(ctx, *e.rhs, bindings), *e.rhs, "cannot divide by");
      if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by 0");
      return num.scale_right(den.inverse());
    }
    case Expr::Kind::Pow: {
      const OrePoly base = evaluate_ore(ctx, *e.lhs, bindings);
      if (e.exponent >= 0) return base.pow(static_cast<unsigned>(e.exponent));
      const Element c = scalar_of(base, e, "negative exponent on");
      return OrePoly::constant(ctx, c.pow(e.exponent));
    }
  }
  return OrePoly(ctx);
}

OrePoly parse_ore(const TowerPtr& ctx, std::string_view text, const Bindings& bindings) {
  return evaluate_ore(ctx, *parse_expression(text), bindings);
}

}  // namespace orealg
