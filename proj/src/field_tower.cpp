#include "orealg/field_tower.hpp"

#include <algorithm>
#include <cctype>

#include "orealg/error.hpp"
#include "orealg/linalg.hpp"

namespace orealg {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

TowerDescription TowerDescription::rational_function_field(std::uint32_t p, const std::string& var,
                                                           const std::string& image) {
  TowerDescription d;
  d.base = p == 0 ? Base::Rationals : Base::PrimeField;
  d.p = p;
  d.layers.push_back({Layer::Kind::Rational, var, ""});
  d.derivation.emplace_back(var, image);
  return d;
}

// ---------------------------------------------------------------------------
// construction

std::shared_ptr<const FieldTower> FieldTower::make(const TowerDescription& description) {
  std::shared_ptr<FieldTower> tower(new FieldTower());
  tower->description_ = description;

  if (description.base == TowerDescription::Base::PrimeField) {
    if (!is_prime(description.p) || description.p >= (1U << 31U)) {
      throw Error(ErrorKind::InvalidArgument,
                  "base F" + std::to_string(description.p) + " is not a supported prime field");
    }
    tower->levels_.push_back(Level::prime_field(description.p));
  } else {
    tower->levels_.push_back(Level::rationals());
  }

  std::map<std::string, Element> symbols;
  for (const auto& layer : description.layers) {
    if (!is_identifier(layer.name) || layer.name == "t") {
      throw Error(ErrorKind::TypeError, "invalid generator name '" + layer.name + "'");
    }
    if (symbols.count(layer.name) != 0) {
      throw Error(ErrorKind::TypeError, "duplicate generator '" + layer.name + "'");
    }
    const Level* inner = tower->levels_.back().get();
    if (layer.kind == TowerDescription::Layer::Kind::PInsep) {
      if (inner->characteristic() == 0) {
        throw Error(ErrorKind::UnsupportedCombination,
                    "p-th root layer '" + layer.name + "' over a characteristic-0 field");
      }
      const Element alpha = evaluate_in(*inner, symbols, *parse_expression(layer.alpha));
      if (auto pth = inner->is_pth_power(alpha); pth.has_value() && *pth) {
        throw Error(ErrorKind::UnsupportedCombination,
                    "alpha = " + alpha.str() + " is a p-th power; " + layer.name +
                        "^p - alpha is reducible");
      }
      tower->levels_.push_back(Level::pinsep(inner, layer.name, alpha));
    } else {
      tower->levels_.push_back(Level::rational(inner, layer.name));
    }
    symbols.emplace(layer.name, tower->levels_.back()->generator());
  }

  const Level& top = tower->top();
  for (std::size_t i = 1; i < tower->levels_.size(); ++i) {
    tower->generators_.push_back(top.lift(tower->levels_[i]->generator()));
  }
  tower->images_.assign(description.layers.size(), top.zero());

  std::vector<bool> seen(description.layers.size(), false);
  for (const auto& [name, image] : description.derivation) {
    auto it = std::find_if(description.layers.begin(), description.layers.end(),
                           [&](const auto& l) { return l.name == name; });
    if (it == description.layers.end()) {
      throw Error(ErrorKind::TypeError, "derivation given for unknown generator '" + name + "'");
    }
    const auto idx = static_cast<std::size_t>(it - description.layers.begin());
    if (seen[idx]) throw Error(ErrorKind::TypeError, "derivation of '" + name + "' given twice");
    seen[idx] = true;
    tower->images_[idx] = tower->parse(image);
  }

  for (std::size_t i = 0; i < description.layers.size(); ++i) {
    const Level& l = *tower->levels_[i + 1];
    if (l.kind() != Level::Kind::PInsep) continue;
    if (!tower->derive(top.lift(l.alpha())).is_zero()) {
      throw Error(ErrorKind::NonConstantAlpha,
                  "alpha of layer '" + l.name() + "' is not a constant: " + l.alpha().str());
    }
  }

  if (std::all_of(tower->images_.begin(), tower->images_.end(),
                  [](const Element& e) { return e.is_zero(); })) {
    throw Error(ErrorKind::ConstantFieldTooLarge, "the derivation is zero; every element is constant");
  }

  // Which rational generators are p-th powers of a later root layer.
  tower->consumed_by_.assign(description.layers.size(), -1);
  bool clean = true;
  for (std::size_t j = 0; j < description.layers.size(); ++j) {
    const Level& l = *tower->levels_[j + 1];
    if (l.kind() != Level::Kind::PInsep) continue;
    const Element alpha = top.lift(l.alpha());
    bool matched = false;
    for (std::size_t i = 0; i < j; ++i) {
      if (tower->levels_[i + 1]->kind() == Level::Kind::Rational && tower->consumed_by_[i] < 0 &&
          tower->generators_[i] == alpha) {
        tower->consumed_by_[i] = static_cast<int>(j);
        matched = true;
        break;
      }
    }
    clean = clean && matched;
  }

  if (tower->characteristic() == 0) {
    tower->constant_field_ = "Q";
    tower->certified_ = description.layers.size() == 1;
    return tower;
  }

  if (!clean) {
    tower->constant_field_ = "Const(delta) (uncertified)";
    return tower;
  }
  tower->fbasis_ = std::make_unique<FBasis>(*tower);
  const auto kernel = tower->constant_kernel();
  if (kernel.size() != 1) {
    throw Error(ErrorKind::ConstantFieldTooLarge,
                "ker(delta) has dimension " + std::to_string(kernel.size()) + " over K^p");
  }
  tower->certified_ = true;
  std::string gens;
  const std::string p = std::to_string(tower->characteristic());
  for (std::size_t i = 0; i < description.layers.size(); ++i) {
    const Level& l = *tower->levels_[i + 1];
    std::string g;
    if (l.kind() == Level::Kind::PInsep) continue;
    g = tower->consumed_by_[i] >= 0 ? l.name() : l.name() + "^" + p;
    gens += (gens.empty() ? "" : ",") + g;
  }
  tower->constant_field_ = "F" + p + (gens.empty() ? "" : "(" + gens + ")");
  return tower;
}

// ---------------------------------------------------------------------------
// evaluation

Element FieldTower::evaluate_in(const Level& level, const std::map<std::string, Element>& symbols,
                                const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return level.from_integer(e.number);
    case Expr::Kind::Symbol: {
      auto it = symbols.find(e.name);
      if (it == symbols.end()) {
        throw Error(ErrorKind::TypeError, "'" + e.name + "' at line " + std::to_string(e.line) +
                                              ", column " + std::to_string(e.column) +
                                              " is not a field element here");
      }
      return level.lift(it->second);
    }
    case Expr::Kind::Neg:
      return -evaluate_in(level, symbols, *e.lhs);
    case Expr::Kind::Add:
      return evaluate_in(level, symbols, *e.lhs) + evaluate_in(level, symbols, *e.rhs);
    case Expr::Kind::Sub:
      return evaluate_in(level, symbols, *e.lhs) - evaluate_in(level, symbols, *e.rhs);
    case Expr::Kind::Mul:
      return evaluate_in(level, symbols, *e.lhs) * evaluate_in(level, symbols, *e.rhs);
    case Expr::Kind::Div:
      return evaluate_in(level, symbols, *e.lhs) / evaluate_in(level, symbols, *e.rhs);
    case Expr::Kind::Pow:
      return evaluate_in(level, symbols, *e.lhs).pow(e.exponent);
  }
  return level.zero();
}

Element FieldTower::evaluate(const Expr& e) const {
  std::map<std::string, Element> symbols;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    symbols.emplace(description_.layers[i].name, generators_[i]);
  }
  return evaluate_in(top(), symbols, e);
}

Element FieldTower::parse(std::string_view text) const { return evaluate(*parse_expression(text)); }

Element FieldTower::generator(std::string_view name) const {
  for (std::size_t i = 0; i < description_.layers.size(); ++i) {
    if (description_.layers[i].name == name) return generators_[i];
  }
  throw Error(ErrorKind::TypeError, "unknown generator '" + std::string(name) + "'");
}

std::vector<std::string> FieldTower::generator_names() const {
  std::vector<std::string> names;
  for (const auto& l : description_.layers) names.push_back(l.name);
  return names;
}

// ---------------------------------------------------------------------------
// derivation

Element FieldTower::evaluate_top(std::size_t layer, const upoly::Poly& p) const {
  const Level& t = top();
  Element acc = t.zero();
  for (std::size_t k = p.size(); k-- > 0;) {
    acc = acc * generators_[layer] + t.lift(p[k]);
  }
  return acc;
}

Element FieldTower::derive_poly(std::size_t layer, const upoly::Poly& p) const {
  const Level& t = top();
  const Level& inner = *levels_[layer];
  Element coeff_part = t.zero();
  for (std::size_t k = p.size(); k-- > 0;) {
    coeff_part = coeff_part * generators_[layer] + derive_at(inner, p[k]);
  }
  const auto dp = upoly::derivative(p);
  if (dp.empty() || images_[layer].is_zero()) return coeff_part;
  return coeff_part + evaluate_top(layer, dp) * images_[layer];
}

Element FieldTower::derive_at(const Level& level, const Element& a) const {
  const Level& t = top();
  if (level.depth() == 0 || a.is_zero()) return t.zero();
  const std::size_t layer = static_cast<std::size_t>(level.depth()) - 1;
  const Element& image = images_[layer];
  if (level.kind() == Level::Kind::Rational) {
    const auto& f = std::get<Element::Frac>(a.rep());
    if (level.inner()->depth() == 0) {
      // Coefficients are constants: formal quotient rule.
      if (image.is_zero()) return t.zero();
      upoly::Poly num;
      upoly::Poly den;
      if (upoly::is_one(f.den)) {
        num = upoly::derivative(f.num);
        den = f.den;
      } else {
        num = upoly::sub(upoly::mul(upoly::derivative(f.num), f.den),
                         upoly::mul(f.num, upoly::derivative(f.den)));
        den = upoly::mul(f.den, f.den);
      }
      if (num.empty()) return t.zero();
      return t.lift(level.make_fraction(std::move(num), std::move(den))) * image;
    }
    const Element dn = derive_poly(layer, f.num);
    if (upoly::is_one(f.den)) return dn;
    const Element n = evaluate_top(layer, f.num);
    const Element d = evaluate_top(layer, f.den);
    const Element dd = derive_poly(layer, f.den);
    return (dn * d - n * dd) / (d * d);
  }
  // p-th root layer
  const auto& c = std::get<Element::Alg>(a.rep()).coeffs;
  Element coeff_part = t.zero();
  for (std::size_t k = c.size(); k-- > 0;) {
    coeff_part = coeff_part * generators_[layer] + derive_at(*level.inner(), c[k]);
  }
  const auto dc = upoly::derivative(c);
  if (dc.empty() || image.is_zero()) return coeff_part;
  return coeff_part + t.lift(level.make_algebraic(dc)) * image;
}

Element FieldTower::derive(const Element& a) const {
  const Element lifted = top().lift(a);
  return derive_at(top(), lifted);
}

Element FieldTower::derive(const Element& a, unsigned times) const {
  Element r = top().lift(a);
  for (unsigned i = 0; i < times && !r.is_zero(); ++i) r = derive(r);
  return r;
}

// ---------------------------------------------------------------------------
// constants

const FBasis& FieldTower::fbasis() const {
  if (characteristic() == 0) {
    throw Error(ErrorKind::InfiniteDimension, "K is infinite-dimensional over its constants");
  }
  if (!fbasis_) {
    throw Error(ErrorKind::UnsupportedCombination,
                "F-basis needs every p-th root layer to adjoin the root of a distinct rational "
                "generator");
  }
  return *fbasis_;
}

std::vector<Element> FieldTower::constant_kernel() const {
  const FBasis& fb = fbasis();
  const std::size_t n = fb.dimension();
  linalg::Matrix m(n, linalg::Vector(n, zero()));
  for (std::size_t j = 0; j < n; ++j) {
    const auto c = fb.coordinates(derive(fb.basis()[j]));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = c[i];
  }
  std::vector<Element> kernel;
  for (const auto& v : linalg::nullspace(m, n, top())) kernel.push_back(fb.from_coordinates(v));
  return kernel;
}

std::size_t FieldTower::inseparable_exponent() const {
  const FBasis& fb = fbasis();
  std::size_t e = 0;
  for (std::size_t d = fb.dimension(); d > 1; d /= characteristic()) ++e;
  return e;
}

// Monomials in the generators: exponents < p on root layers, total degree
// <= max_degree on the rational layers.
std::vector<Element> FieldTower::monomials(unsigned max_degree) const {
  std::vector<Element> out{one()};
  std::vector<unsigned> used{0};
  for (std::size_t i = 0; i < layer_count(); ++i) {
    const Element& x = generators_[i];
    const bool root = level(i + 1).kind() == Level::Kind::PInsep;
    std::vector<Element> next;
    std::vector<unsigned> next_used;
    for (std::size_t j = 0; j < out.size(); ++j) {
      Element power = out[j];
      const unsigned limit = root ? characteristic() - 1 : max_degree - used[j];
      for (unsigned a = 0; a <= limit; ++a) {
        if (a > 0) power = power * x;
        next.push_back(power);
        next_used.push_back(root ? used[j] : used[j] + a);
      }
    }
    out = std::move(next);
    used = std::move(next_used);
  }
  return out;
}

// ---------------------------------------------------------------------------
// random elements

Element FieldTower::random_at(const Level& level, std::mt19937_64& rng, const RandomSpec& spec) const {
  switch (level.kind()) {
    case Level::Kind::PrimeField: {
      std::uniform_int_distribution<std::uint64_t> dist(0, level.characteristic() - 1);
      return level.from_integer(mpz_class(static_cast<unsigned long>(dist(rng))));
    }
    case Level::Kind::Rationals: {
      std::uniform_int_distribution<int> dist(-spec.height, spec.height);
      return level.from_integer(dist(rng));
    }
    case Level::Kind::Rational: {
      RandomSpec inner_spec = spec;
      inner_spec.degree = std::min(spec.degree, 1);
      inner_spec.den_degree = 0;
      std::uniform_int_distribution<int> ndeg(0, std::max(spec.degree, 0));
      std::uniform_int_distribution<int> ddeg(0, std::max(spec.den_degree, 0));
      upoly::Poly num;
      const int nd = ndeg(rng);
      for (int k = 0; k <= nd; ++k) num.push_back(random_at(*level.inner(), rng, inner_spec));
      upoly::Poly den;
      const int dd = ddeg(rng);
      for (int k = 0; k < dd; ++k) den.push_back(random_at(*level.inner(), rng, inner_spec));
      den.push_back(level.inner()->one());
      return level.make_fraction(std::move(num), std::move(den));
    }
    case Level::Kind::PInsep: {
      RandomSpec inner_spec = spec;
      inner_spec.degree = std::min(spec.degree, 1);
      std::vector<Element> c;
      for (std::uint32_t i = 0; i < level.characteristic(); ++i) {
        c.push_back(random_at(*level.inner(), rng, inner_spec));
      }
      return level.make_algebraic(std::move(c));
    }
  }
  return level.zero();
}

Element FieldTower::random_element(std::mt19937_64& rng, const RandomSpec& spec) const {
  return random_at(top(), rng, spec);
}

Element FieldTower::random_constant(std::mt19937_64& rng, const RandomSpec& spec) const {
  if (characteristic() == 0) return top().lift(random_at(base_level(), rng, spec));
  RandomSpec small = spec;
  small.degree = std::min(spec.degree, 1);
  small.den_degree = std::min(spec.den_degree, 1);
  return random_at(top(), rng, small).pow(characteristic());
}

// ---------------------------------------------------------------------------
// FBasis

FBasis::FBasis(const FieldTower& tower) : tower_(&tower) {
  const std::size_t p = tower.characteristic();
  const std::size_t layers = tower.layer_count();
  free_.assign(layers, false);
  for (std::size_t i = 0; i < layers; ++i) {
    free_[i] = tower.level(i + 1).kind() == Level::Kind::PInsep || tower.consumed_by_[i] < 0;
  }
  span_.assign(layers + 1, 1);
  for (std::size_t d = 1; d <= layers; ++d) span_[d] = span_[d - 1] * (free_[d - 1] ? p : 1);
  const std::size_t dim = span_[layers];
  for (std::size_t idx = 0; idx < dim; ++idx) {
    Element mono = tower.one();
    for (std::size_t i = 0; i < layers; ++i) {
      if (!free_[i]) continue;
      const std::size_t digit = (idx / span_[i]) % p;
      if (digit > 0) mono = mono * tower.generators()[i].pow(static_cast<long long>(digit));
    }
    basis_.push_back(mono);
  }
}

std::vector<Element> FBasis::coords_at(const Level& level, const Element& a) const {
  const Level& top = tower_->top();
  const std::size_t depth = static_cast<std::size_t>(level.depth());
  if (depth == 0) return {top.lift(a)};
  const std::size_t layer = depth - 1;
  const std::size_t p = tower_->characteristic();
  const std::size_t below = span_[depth - 1];
  std::vector<Element> out(span_[depth], top.zero());
  const Element& gen = tower_->generators()[layer];

  if (level.kind() == Level::Kind::PInsep) {
    const auto& c = std::get<Element::Alg>(a.rep()).coeffs;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      const auto sub = coords_at(*level.inner(), c[i]);
      for (std::size_t j = 0; j < below; ++j) out[i * below + j] = sub[j];
    }
    return out;
  }

  const auto& f = std::get<Element::Frac>(a.rep());
  upoly::Poly w = f.num;
  std::optional<Element> den_inv;
  if (!upoly::is_one(f.den)) {
    // a = num * den^(p-1) / den^p with den^p in P.
    w = upoly::mul(f.num, upoly::pow(f.den, static_cast<unsigned>(p - 1)));
    den_inv = tower_->evaluate_top(layer, f.den).pow(static_cast<long long>(p)).inverse();
  }
  const bool free = free_[layer];
  const Element gen_p = gen.pow(static_cast<long long>(p));
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k].is_zero()) continue;
    const auto sub = coords_at(*level.inner(), w[k]);
    const std::size_t r = free ? k % p : 0;
    const Element factor =
        free ? gen_p.pow(static_cast<long long>(k / p)) : gen.pow(static_cast<long long>(k));
    for (std::size_t j = 0; j < below; ++j) {
      if (sub[j].is_zero()) continue;
      out[r * below + j] = out[r * below + j] + sub[j] * factor;
    }
  }
  if (den_inv) {
    for (auto& c : out) {
      if (!c.is_zero()) c = c * *den_inv;
    }
  }
  return out;
}

std::vector<Element> FBasis::coordinates(const Element& a) const {
  return coords_at(tower_->top(), tower_->top().lift(a));
}

Element FBasis::from_coordinates(std::span<const Element> coords) const {
  if (coords.size() != basis_.size()) {
    throw Error(ErrorKind::InvalidArgument, "coordinate vector has the wrong length");
  }
  Element acc = tower_->zero();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_zero()) acc = acc + coords[i] * basis_[i];
  }
  return acc;
}

}  // namespace orealg
