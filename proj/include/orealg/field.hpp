#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace orealg {

class Level;

/// An exact element of one level of a field tower.
///
/// The representation is recursive: the base level stores an F_p residue or a
/// GMP rational, a rational-function layer stores a reduced fraction of
/// univariate polynomials over the layer below (denominator monic), and a
/// p-th-root layer stores a coefficient vector in powers u^0..u^{p-1}.
/// Every element is in canonical form, so equality is structural.
///
/// Elements reference their Level by pointer; the owning FieldTower must
/// outlive them.
class Element {
 public:
  struct Frac {
    std::vector<Element> num;
    std::vector<Element> den;
  };
  struct Alg {
    std::vector<Element> coeffs;
  };
  using Rep = std::variant<std::uint64_t, mpq_class, Frac, Alg>;

  Element(const Level* level, Rep rep) : level_(level), rep_(std::move(rep)) {}

  const Level& level() const { return *level_; }
  const Level* level_ptr() const { return level_; }
  const Rep& rep() const { return rep_; }

  bool is_zero() const;
  bool is_one() const;

  Element operator-() const;
  Element inverse() const;
  Element pow(long long n) const;

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Element& rhs);
  Element& operator/=(const Element& rhs);

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b);

  /// Canonical string, e.g. "(2*x^2+1)/(x^3+2)".
  std::string str() const;

  /// Rough size measure used to pick cheap pivots during elimination.
  std::size_t weight() const;

 private:
  const Level* level_;
  Rep rep_;
};

std::ostream& operator<<(std::ostream& os, const Element& e);

/// One level of a field tower. Levels form a chain through inner().
class Level {
 public:
  enum class Kind { Rationals, PrimeField, Rational, PInsep };

  static std::unique_ptr<Level> rationals();
  static std::unique_ptr<Level> prime_field(std::uint32_t p);
  static std::unique_ptr<Level> rational(const Level* inner, std::string name);
  /// Adjoins u with u^p = alpha; alpha lives on the inner level.
  static std::unique_ptr<Level> pinsep(const Level* inner, std::string name, Element alpha);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return characteristic_; }
  int depth() const { return depth_; }
  const Level* inner() const { return inner_; }
  const std::string& name() const { return name_; }
  const Element& alpha() const { return *alpha_; }
  const Level& base() const;

  Element zero() const;
  Element one() const;
  Element from_integer(const mpz_class& n) const;
  Element from_rational(const mpq_class& q) const;
  /// The generator adjoined at this level (Rational or PInsep only).
  Element generator() const;

  /// Lifts an element of this level or of any level below it.
  Element lift(const Element& e) const;
  bool is_above_or_equal(const Level& other) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element inv(const Element& a) const;
  bool is_zero(const Element& a) const;
  std::string format(const Element& a) const;

  /// Builds the canonical element num/den (den != 0) on a Rational level.
  Element make_fraction(std::vector<Element> num, std::vector<Element> den) const;
  /// Builds the canonical element sum c_i u^i on a PInsep level.
  Element make_algebraic(std::vector<Element> coeffs) const;

  /// True when a is a p-th power in this level; nullopt when undecided.
  std::optional<bool> is_pth_power(const Element& a) const;

 private:
  Level(Kind kind, std::uint32_t characteristic, const Level* inner, std::string name);

  Kind kind_;
  std::uint32_t characteristic_;
  int depth_;
  const Level* inner_;
  std::string name_;
  std::optional<Element> alpha_;
};

/// Dense univariate polynomials over a level, lowest degree first, no
/// trailing zeros (the zero polynomial is empty).
namespace upoly {

using Poly = std::vector<Element>;

void trim(Poly& a);
int degree(const Poly& a);
Poly constant(const Element& c);
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Element& c);
Poly shift(const Poly& a, std::size_t k);
/// Returns (q, r) with a = q*b + r, deg r < deg b. b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly monic(const Poly& a);
/// Monic gcd; gcd(0, 0) is the empty polynomial.
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
Poly pow(const Poly& a, unsigned n);
Poly derivative(const Poly& a);
bool is_one(const Poly& a);
std::string format(const Poly& a, const std::string& var);

}  // namespace upoly

/// True if s contains a '+' or '-' outside parentheses after its first
/// character, i.e. it needs parentheses when used as a factor.
bool is_compound(const std::string& s);

}  // namespace orealg
