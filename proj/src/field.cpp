#include "orealg/field.hpp"

#include <cassert>
#include <ostream>
#include <sstream>

#include "orealg/error.hpp"

namespace orealg {

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // p is prime and a != 0 (mod p): Fermat.
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return result;
}

const Element::Frac& as_frac(const Element& e) { return std::get<Element::Frac>(e.rep()); }
const Element::Alg& as_alg(const Element& e) { return std::get<Element::Alg>(e.rep()); }

const Level& common_level(const Element& a, const Element& b) {
  if (a.level_ptr() == b.level_ptr()) return a.level();
  const Level& deeper = a.level().depth() >= b.level().depth() ? a.level() : b.level();
  return deeper;
}

}  // namespace

bool is_compound(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      --depth;
    } else if (depth == 0 && i > 0 && (c == '+' || c == '-')) {
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Element

bool Element::is_zero() const { return level_->is_zero(*this); }

bool Element::is_one() const {
  switch (rep_.index()) {
    case 0:
      return std::get<0>(rep_) == 1;
    case 1:
      return std::get<1>(rep_) == 1;
    case 2: {
      const auto& f = std::get<2>(rep_);
      return f.num.size() == 1 && f.num[0].is_one() && f.den.size() == 1;
    }
    default: {
      const auto& a = std::get<3>(rep_);
      return a.coeffs.size() == 1 && a.coeffs[0].is_one();
    }
  }
}

Element Element::operator-() const { return level_->neg(*this); }

Element Element::inverse() const { return level_->inv(*this); }

Element Element::pow(long long n) const {
  if (n < 0) return inverse().pow(-n);
  Element result = level_->one();
  Element base = *this;
  auto e = static_cast<unsigned long long>(n);
  while (e > 0) {
    if (e & 1ULL) result = result * base;
    e >>= 1ULL;
    if (e > 0) base = base * base;
  }
  return result;
}

Element& Element::operator+=(const Element& rhs) { return *this = *this + rhs; }
Element& Element::operator-=(const Element& rhs) { return *this = *this - rhs; }
Element& Element::operator*=(const Element& rhs) { return *this = *this * rhs; }
Element& Element::operator/=(const Element& rhs) { return *this = *this / rhs; }

Element operator+(const Element& a, const Element& b) {
  const Level& l = common_level(a, b);
  if (a.level_ptr() == b.level_ptr()) return l.add(a, b);
  return l.add(l.lift(a), l.lift(b));
}

Element operator-(const Element& a, const Element& b) {
  const Level& l = common_level(a, b);
  if (a.level_ptr() == b.level_ptr()) return l.sub(a, b);
  return l.sub(l.lift(a), l.lift(b));
}

Element operator*(const Element& a, const Element& b) {
  const Level& l = common_level(a, b);
  if (a.level_ptr() == b.level_ptr()) return l.mul(a, b);
  return l.mul(l.lift(a), l.lift(b));
}

Element operator/(const Element& a, const Element& b) {
  const Level& l = common_level(a, b);
  if (a.level_ptr() == b.level_ptr()) return l.mul(a, l.inv(b));
  return l.mul(l.lift(a), l.inv(l.lift(b)));
}

bool operator==(const Element& a, const Element& b) {
  if (a.level_ptr() != b.level_ptr()) {
    const Level& l = common_level(a, b);
    return l.lift(a) == l.lift(b);
  }
  if (a.rep_.index() != b.rep_.index()) return false;
  switch (a.rep_.index()) {
    case 0:
      return std::get<0>(a.rep_) == std::get<0>(b.rep_);
    case 1:
      return std::get<1>(a.rep_) == std::get<1>(b.rep_);
    case 2:
      return std::get<2>(a.rep_).num == std::get<2>(b.rep_).num &&
             std::get<2>(a.rep_).den == std::get<2>(b.rep_).den;
    default:
      return std::get<3>(a.rep_).coeffs == std::get<3>(b.rep_).coeffs;
  }
}

std::string Element::str() const { return level_->format(*this); }

std::size_t Element::weight() const {
  switch (rep_.index()) {
    case 0:
      return 1;
    case 1: {
      const auto& q = std::get<1>(rep_);
      return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
    }
    case 2: {
      std::size_t w = 1;
      for (const auto& c : std::get<2>(rep_).num) w += c.weight() + 1;
      for (const auto& c : std::get<2>(rep_).den) w += c.weight() + 1;
      return w;
    }
    default: {
      std::size_t w = 1;
      for (const auto& c : std::get<3>(rep_).coeffs) w += c.weight() + 1;
      return w;
    }
  }
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.str(); }

// ---------------------------------------------------------------------------
// Level

Level::Level(Kind kind, std::uint32_t characteristic, const Level* inner, std::string name)
    : kind_(kind),
      characteristic_(characteristic),
      depth_(inner == nullptr ? 0 : inner->depth() + 1),
      inner_(inner),
      name_(std::move(name)) {}

std::unique_ptr<Level> Level::rationals() {
  return std::unique_ptr<Level>(new Level(Kind::Rationals, 0, nullptr, "Q"));
}

std::unique_ptr<Level> Level::prime_field(std::uint32_t p) {
  return std::unique_ptr<Level>(new Level(Kind::PrimeField, p, nullptr, "F" + std::to_string(p)));
}

std::unique_ptr<Level> Level::rational(const Level* inner, std::string name) {
  return std::unique_ptr<Level>(
      new Level(Kind::Rational, inner->characteristic(), inner, std::move(name)));
}

std::unique_ptr<Level> Level::pinsep(const Level* inner, std::string name, Element alpha) {
  if (inner->characteristic() == 0) {
    throw Error(ErrorKind::UnsupportedCombination,
                "p-th root layer '" + name + "' requires prime characteristic");
  }
  auto level = std::unique_ptr<Level>(
      new Level(Kind::PInsep, inner->characteristic(), inner, std::move(name)));
  level->alpha_ = inner->lift(alpha);
  return level;
}

const Level& Level::base() const {
  const Level* l = this;
  while (l->inner_ != nullptr) l = l->inner_;
  return *l;
}

Element Level::zero() const {
  switch (kind_) {
    case Kind::PrimeField:
      return Element(this, std::uint64_t{0});
    case Kind::Rationals:
      return Element(this, mpq_class(0));
    case Kind::Rational:
      return Element(this, Element::Frac{{}, {inner_->one()}});
    case Kind::PInsep:
      return Element(this, Element::Alg{});
  }
  return Element(this, std::uint64_t{0});
}

Element Level::one() const {
  switch (kind_) {
    case Kind::PrimeField:
      return Element(this, std::uint64_t{characteristic_ == 1 ? 0U : 1U});
    case Kind::Rationals:
      return Element(this, mpq_class(1));
    case Kind::Rational:
      return Element(this, Element::Frac{{inner_->one()}, {inner_->one()}});
    case Kind::PInsep:
      return Element(this, Element::Alg{{inner_->one()}});
  }
  return zero();
}

Element Level::from_integer(const mpz_class& n) const {
  switch (kind_) {
    case Kind::PrimeField: {
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), characteristic_);
      return Element(this, static_cast<std::uint64_t>(r.get_ui()));
    }
    case Kind::Rationals:
      return Element(this, mpq_class(n));
    default:
      return lift(inner_->from_integer(n));
  }
}

Element Level::from_rational(const mpq_class& q) const {
  return from_integer(q.get_num()) / from_integer(q.get_den());
}

Element Level::generator() const {
  switch (kind_) {
    case Kind::Rational:
      return Element(this, Element::Frac{{inner_->zero(), inner_->one()}, {inner_->one()}});
    case Kind::PInsep:
      return make_algebraic({inner_->zero(), inner_->one()});
    default:
      throw Error(ErrorKind::InvalidArgument, "base level has no generator");
  }
}

bool Level::is_above_or_equal(const Level& other) const {
  for (const Level* l = this; l != nullptr; l = l->inner_) {
    if (l == &other) return true;
  }
  return false;
}

Element Level::lift(const Element& e) const {
  if (e.level_ptr() == this) return e;
  if (inner_ == nullptr || depth_ <= e.level().depth()) {
    throw Error(ErrorKind::ContextMismatch, "element belongs to a different field tower");
  }
  Element x = inner_->lift(e);
  if (kind_ == Kind::Rational) {
    if (x.is_zero()) return zero();
    return Element(this, Element::Frac{{std::move(x)}, {inner_->one()}});
  }
  if (x.is_zero()) return zero();
  return Element(this, Element::Alg{{std::move(x)}});
}

bool Level::is_zero(const Element& a) const {
  switch (a.rep().index()) {
    case 0:
      return std::get<0>(a.rep()) == 0;
    case 1:
      return sgn(std::get<1>(a.rep())) == 0;
    case 2:
      return as_frac(a).num.empty();
    default:
      return as_alg(a).coeffs.empty();
  }
}

Element Level::make_fraction(std::vector<Element> num, std::vector<Element> den) const {
  upoly::trim(num);
  upoly::trim(den);
  if (den.empty()) throw Error(ErrorKind::DivisionByZero, "fraction with zero denominator");
  if (num.empty()) return zero();
  if (den.size() > 1) {
    auto g = upoly::gcd(num, den);
    if (g.size() > 1) {
      num = upoly::divmod(num, g).first;
      den = upoly::divmod(den, g).first;
    }
  }
  if (!den.back().is_one()) {
    const Element lc_inv = den.back().inverse();
    num = upoly::scale(num, lc_inv);
    den = upoly::scale(den, lc_inv);
  }
  return Element(this, Element::Frac{std::move(num), std::move(den)});
}

Element Level::make_algebraic(std::vector<Element> coeffs) const {
  const std::size_t p = characteristic_;
  for (std::size_t k = coeffs.size(); k-- > p;) {
    if (coeffs[k].is_zero()) continue;
    coeffs[k - p] = coeffs[k - p] + coeffs[k] * *alpha_;
  }
  if (coeffs.size() > p) coeffs.resize(p, inner_->zero());
  upoly::trim(coeffs);
  return Element(this, Element::Alg{std::move(coeffs)});
}

Element Level::add(const Element& a, const Element& b) const {
  switch (kind_) {
    case Kind::PrimeField:
      return Element(this, (std::get<0>(a.rep()) + std::get<0>(b.rep())) % characteristic_);
    case Kind::Rationals:
      return Element(this, mpq_class(std::get<1>(a.rep()) + std::get<1>(b.rep())));
    case Kind::Rational: {
      if (a.is_zero()) return b;
      if (b.is_zero()) return a;
      const auto& fa = as_frac(a);
      const auto& fb = as_frac(b);
      if (fa.den == fb.den) {
        auto num = upoly::add(fa.num, fb.num);
        if (upoly::is_one(fa.den)) {
          if (num.empty()) return zero();
          return Element(this, Element::Frac{std::move(num), fa.den});
        }
        return make_fraction(std::move(num), fa.den);
      }
      return make_fraction(upoly::add(upoly::mul(fa.num, fb.den), upoly::mul(fb.num, fa.den)),
                           upoly::mul(fa.den, fb.den));
    }
    case Kind::PInsep:
      return make_algebraic(upoly::add(as_alg(a).coeffs, as_alg(b).coeffs));
  }
  return zero();
}

Element Level::neg(const Element& a) const {
  switch (kind_) {
    case Kind::PrimeField: {
      const auto v = std::get<0>(a.rep());
      return Element(this, v == 0 ? 0 : characteristic_ - v);
    }
    case Kind::Rationals:
      return Element(this, mpq_class(-std::get<1>(a.rep())));
    case Kind::Rational: {
      if (a.is_zero()) return a;
      const auto& fa = as_frac(a);
      return Element(this, Element::Frac{upoly::neg(fa.num), fa.den});
    }
    case Kind::PInsep:
      return Element(this, Element::Alg{upoly::neg(as_alg(a).coeffs)});
  }
  return zero();
}

Element Level::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element Level::mul(const Element& a, const Element& b) const {
  switch (kind_) {
    case Kind::PrimeField:
      return Element(this, std::get<0>(a.rep()) * std::get<0>(b.rep()) % characteristic_);
    case Kind::Rationals:
      return Element(this, mpq_class(std::get<1>(a.rep()) * std::get<1>(b.rep())));
    case Kind::Rational: {
      if (a.is_zero() || b.is_zero()) return zero();
      const auto& fa = as_frac(a);
      const auto& fb = as_frac(b);
      const bool da = upoly::is_one(fa.den);
      const bool db = upoly::is_one(fb.den);
      if (da && db) return Element(this, Element::Frac{upoly::mul(fa.num, fb.num), fa.den});
      // Cross-cancel so the result is already reduced.
      upoly::Poly an = fa.num, ad = fa.den, bn = fb.num, bd = fb.den;
      if (!db) {
        auto g = upoly::gcd(an, bd);
        if (g.size() > 1) {
          an = upoly::divmod(an, g).first;
          bd = upoly::divmod(bd, g).first;
        }
      }
      if (!da) {
        auto g = upoly::gcd(bn, ad);
        if (g.size() > 1) {
          bn = upoly::divmod(bn, g).first;
          ad = upoly::divmod(ad, g).first;
        }
      }
      auto num = upoly::mul(an, bn);
      auto den = upoly::mul(ad, bd);
      if (!den.back().is_one()) {
        const Element lc_inv = den.back().inverse();
        num = upoly::scale(num, lc_inv);
        den = upoly::scale(den, lc_inv);
      }
      return Element(this, Element::Frac{std::move(num), std::move(den)});
    }
    case Kind::PInsep:
      return make_algebraic(upoly::mul(as_alg(a).coeffs, as_alg(b).coeffs));
  }
  return zero();
}

Element Level::inv(const Element& a) const {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  switch (kind_) {
    case Kind::PrimeField:
      return Element(this, mod_inverse(std::get<0>(a.rep()), characteristic_));
    case Kind::Rationals:
      return Element(this, mpq_class(1 / std::get<1>(a.rep())));
    case Kind::Rational: {
      const auto& fa = as_frac(a);
      auto num = fa.den;
      auto den = fa.num;
      if (!den.back().is_one()) {
        const Element lc_inv = den.back().inverse();
        num = upoly::scale(num, lc_inv);
        den = upoly::scale(den, lc_inv);
      }
      return Element(this, Element::Frac{std::move(num), std::move(den)});
    }
    case Kind::PInsep: {
      // Extended Euclid against u^p - alpha.
      upoly::Poly modulus(characteristic_ + 1, inner_->zero());
      modulus[0] = -*alpha_;
      modulus[characteristic_] = inner_->one();
      upoly::Poly r0 = modulus;
      upoly::Poly r1 = as_alg(a).coeffs;
      upoly::Poly s0;
      upoly::Poly s1 = upoly::constant(inner_->one());
      while (!r1.empty()) {
        auto [q, r] = upoly::divmod(r0, r1);
        upoly::Poly s2 = upoly::sub(s0, upoly::mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
      }
      if (r0.size() != 1) {
        throw Error(ErrorKind::UnsupportedCombination,
                    name_ + "^p - alpha is reducible; the layer is not a field");
      }
      return make_algebraic(upoly::scale(s0, r0[0].inverse()));
    }
  }
  return zero();
}

std::string Level::format(const Element& a) const {
  switch (kind_) {
    case Kind::PrimeField:
      return std::to_string(std::get<0>(a.rep()));
    case Kind::Rationals:
      return std::get<1>(a.rep()).get_str();
    case Kind::Rational: {
      const auto& fa = as_frac(a);
      if (fa.num.empty()) return "0";
      std::string num = upoly::format(fa.num, name_);
      if (upoly::is_one(fa.den)) return num;
      if (is_compound(num)) num = "(" + num + ")";
      return num + "/(" + upoly::format(fa.den, name_) + ")";
    }
    case Kind::PInsep: {
      const auto& aa = as_alg(a);
      if (aa.coeffs.empty()) return "0";
      return upoly::format(aa.coeffs, name_);
    }
  }
  return "?";
}

std::optional<bool> Level::is_pth_power(const Element& a) const {
  const std::size_t p = characteristic_;
  switch (kind_) {
    case Kind::PrimeField:
      return true;
    case Kind::Rationals:
      return std::nullopt;
    case Kind::Rational: {
      const auto& fa = as_frac(a);
      for (const auto* poly : {&fa.num, &fa.den}) {
        for (std::size_t k = 0; k < poly->size(); ++k) {
          if ((*poly)[k].is_zero()) continue;
          if (k % p != 0) return false;
          auto sub = inner_->is_pth_power((*poly)[k]);
          if (!sub.has_value() || !*sub) return sub;
        }
      }
      return true;
    }
    case Kind::PInsep: {
      const auto& aa = as_alg(a);
      if (aa.coeffs.size() > 1) return false;
      if (aa.coeffs.empty()) return true;
      auto sub = inner_->is_pth_power(aa.coeffs[0]);
      if (sub.has_value() && *sub) return true;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// upoly

namespace upoly {

void trim(Poly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly constant(const Element& c) {
  if (c.is_zero()) return {};
  return {c};
}

bool is_one(const Poly& a) { return a.size() == 1 && a[0].is_one(); }

Poly add(const Poly& a, const Poly& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const Poly& longer = a.size() >= b.size() ? a : b;
  const Poly& shorter = a.size() >= b.size() ? b : a;
  Poly r = longer;
  for (std::size_t i = 0; i < shorter.size(); ++i) r[i] = r[i] + shorter[i];
  trim(r);
  return r;
}

Poly neg(const Poly& a) {
  Poly r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(-c);
  return r;
}

Poly sub(const Poly& a, const Poly& b) { return add(a, neg(b)); }

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, a[0].level().zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] = r[i + j] + a[i] * b[j];
    }
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, const Element& c) {
  if (c.is_zero()) return {};
  if (c.is_one()) return a;
  Poly r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(x * c);
  trim(r);
  return r;
}

Poly shift(const Poly& a, std::size_t k) {
  if (a.empty()) return {};
  Poly r(k, a[0].level().zero());
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  const Element lc_inv = b.back().inverse();
  Poly r = a;
  Poly q(a.size() - b.size() + 1, b[0].level().zero());
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (r[k].is_zero()) continue;
    const Element c = r[k] * lc_inv;
    const std::size_t s = k - (b.size() - 1);
    q[s] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[s + j] = r[s + j] - c * b[j];
  }
  r.resize(b.size() - 1, b[0].level().zero());
  trim(r);
  trim(q);
  return {q, r};
}

Poly monic(const Poly& a) {
  if (a.empty() || a.back().is_one()) return a;
  return scale(a, a.back().inverse());
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.empty()) {
    if (y.size() == 1) return {y[0].level().one()};
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  return monic(divmod(mul(a, b), gcd(a, b)).first);
}

Poly pow(const Poly& a, unsigned n) {
  if (a.empty()) return n == 0 ? Poly{} : a;
  Poly result{a[0].level().one()};
  Poly base = a;
  while (n > 0) {
    if (n & 1U) result = mul(result, base);
    n >>= 1U;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

Poly derivative(const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r;
  r.reserve(a.size() - 1);
  for (std::size_t k = 1; k < a.size(); ++k) {
    r.push_back(a[k] * a[k].level().from_integer(static_cast<long>(k)));
  }
  trim(r);
  return r;
}

std::string format(const Poly& a, const std::string& var) {
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k].is_zero()) continue;
    std::string mono;
    if (k == 1) {
      mono = var;
    } else if (k > 1) {
      mono = var + "^" + std::to_string(k);
    }
    const std::string cs = a[k].str();
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else if (cs == "1") {
      term = mono;
    } else if (cs == "-1") {
      term = "-" + mono;
    } else if (is_compound(cs)) {
      term = "(" + cs + ")*" + mono;
    } else {
      term = cs + "*" + mono;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

}  // namespace upoly

}  // namespace orealg
