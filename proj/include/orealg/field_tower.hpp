#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orealg/expr.hpp"
#include "orealg/field.hpp"

namespace orealg {

/// Declarative description of a coefficient field K with derivation.
struct TowerDescription {
  enum class Base { Rationals, PrimeField };
  struct Layer {
    enum class Kind { Rational, PInsep };
    Kind kind = Kind::Rational;
    std::string name;
    std::string alpha;  // PInsep only: expression for u^p, over the previous layers
    bool operator==(const Layer&) const = default;
  };

  Base base = Base::Rationals;
  std::uint32_t p = 0;
  std::vector<Layer> layers;
  /// Generator name -> expression for its image under the derivation.
  /// Unlisted generators are constants.
  std::vector<std::pair<std::string, std::string>> derivation;

  bool operator==(const TowerDescription&) const = default;

  /// Q(x) or F_p(x) with derivation(x) = image. p == 0 selects Q.
  static TowerDescription rational_function_field(std::uint32_t p, const std::string& var,
                                                  const std::string& image);
};

class FieldTower;

/// Basis of K over the reference field P = K^p (characteristic p only),
/// given by monomials in the free generators with exponents < p, and the
/// coordinate maps to and from P-vectors. When the tower certifies its
/// constants, P is exactly the constant field F.
class FBasis {
 public:
  explicit FBasis(const FieldTower& tower);

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Element>& basis() const { return basis_; }
  /// Coordinates of a in the basis, all lying in P.
  std::vector<Element> coordinates(const Element& a) const;
  Element from_coordinates(std::span<const Element> coords) const;

 private:
  std::vector<Element> coords_at(const Level& level, const Element& a) const;

  const FieldTower* tower_;
  std::vector<bool> free_;            // per layer: contributes monomials
  std::vector<std::size_t> span_;     // per depth: number of coordinates
  std::vector<Element> basis_;
};

struct RandomSpec {
  int height = 3;        // |integer coefficients| (ℚ base)
  int degree = 2;        // numerator degree per rational layer
  int den_degree = 1;    // denominator degree per rational layer (0: polynomials)
};

/// A coefficient field K as a tower over ℚ or F_p, with a derivation and
/// its identified constant subfield F.
class FieldTower {
 public:
  /// Validates the description and certifies the constant field when
  /// possible. Throws Error with NonConstantAlpha, ConstantFieldTooLarge,
  /// UnsupportedCombination or TypeError.
  static std::shared_ptr<const FieldTower> make(const TowerDescription& description);

  FieldTower(const FieldTower&) = delete;
  FieldTower& operator=(const FieldTower&) = delete;

  const TowerDescription& description() const { return description_; }
  std::uint32_t characteristic() const { return top().characteristic(); }
  const Level& top() const { return *levels_.back(); }
  const Level& base_level() const { return *levels_.front(); }
  const Level& level(std::size_t depth) const { return *levels_[depth]; }
  std::size_t layer_count() const { return levels_.size() - 1; }

  Element zero() const { return top().zero(); }
  Element one() const { return top().one(); }
  Element integer(const mpz_class& n) const { return top().from_integer(n); }
  Element rational(const mpq_class& q) const { return top().from_rational(q); }
  Element lift(const Element& e) const { return top().lift(e); }
  /// Generators as top-level elements, in layer order.
  const std::vector<Element>& generators() const { return generators_; }
  Element generator(std::string_view name) const;
  std::vector<std::string> generator_names() const;

  Element parse(std::string_view text) const;
  /// Evaluates an expression whose symbols are generator names; any other
  /// symbol (including "t") is a TypeError.
  Element evaluate(const Expr& e) const;

  Element derive(const Element& a) const;
  Element derive(const Element& a, unsigned times) const;
  bool is_constant(const Element& a) const { return derive(a).is_zero(); }
  const Element& derivation_image(std::size_t layer) const { return images_[layer]; }

  /// True when [K:F] is finite, i.e. characteristic p.
  bool finite_over_constants() const { return characteristic() != 0; }
  /// True when the F-basis machinery is available for this tower.
  bool has_fbasis() const { return fbasis_ != nullptr; }
  /// Throws InfiniteDimension (characteristic 0) or UnsupportedCombination.
  const FBasis& fbasis() const;
  /// Basis of ker(derivation) over F, as elements of K.
  std::vector<Element> constant_kernel() const;
  /// True when Const(derivation) = F was verified by the kernel check.
  bool constants_certified() const { return certified_; }
  /// Human-readable F, e.g. "F3(x^3)" or "Q".
  const std::string& constant_field() const { return constant_field_; }
  /// log_p [K:F] when finite.
  std::size_t inseparable_exponent() const;

  /// Monomials in the generators with exponents < p on root layers and
  /// total degree <= max_degree on the rational layers.
  std::vector<Element> monomials(unsigned max_degree) const;

  Element random_element(std::mt19937_64& rng, const RandomSpec& spec = {}) const;
  /// Random element of the constant field F (finite case) or of the base.
  Element random_constant(std::mt19937_64& rng, const RandomSpec& spec = {}) const;

 private:
  FieldTower() = default;

  Element derive_at(const Level& level, const Element& a) const;
  Element derive_poly(std::size_t layer, const upoly::Poly& p) const;
  Element evaluate_top(std::size_t layer, const upoly::Poly& p) const;
  Element random_at(const Level& level, std::mt19937_64& rng, const RandomSpec& spec) const;
  static Element evaluate_in(const Level& level, const std::map<std::string, Element>& symbols,
                             const Expr& e);

  friend class FBasis;

  TowerDescription description_;
  std::vector<std::unique_ptr<Level>> levels_;
  std::vector<Element> generators_;
  std::vector<Element> images_;
  std::vector<int> consumed_by_;  // per layer: index of the PInsep layer taking its p-th root, or -1
  std::unique_ptr<FBasis> fbasis_;
  bool certified_ = false;
  std::string constant_field_;
};

using TowerPtr = std::shared_ptr<const FieldTower>;

}  // namespace orealg
