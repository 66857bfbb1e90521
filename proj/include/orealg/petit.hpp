#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "orealg/ore_poly.hpp"

namespace orealg {

class PetitAlgebra;
using AlgebraPtr = std::shared_ptr<const PetitAlgebra>;

/// S_f = R_m with g o h = gh mod_r f, for monic f of degree m.
class PetitAlgebra : public std::enable_shared_from_this<PetitAlgebra> {
 public:
  /// Monicizes f. ZeroModulus for f = 0 or deg f = 0.
  static AlgebraPtr make(const OrePoly& f);

  PetitAlgebra(const PetitAlgebra&) = delete;
  PetitAlgebra& operator=(const PetitAlgebra&) = delete;

  const OrePoly& modulus() const { return f_; }
  const TowerPtr& context() const { return f_.context(); }
  std::size_t degree() const { return m_; }
  /// m = 1, where S_f is just K.
  bool degenerate() const { return m_ == 1; }
  bool two_sided() const { return two_sided_; }
  bool t_associative() const { return t_associative_; }

  /// g mod_r f, using cached t^k f.
  OrePoly reduce(const OrePoly& g) const;
  OrePoly circ(const OrePoly& g, const OrePoly& h) const;
  OrePoly associator(const OrePoly& a, const OrePoly& b, const OrePoly& c) const;

  /// F-dimension m * [K:F] when [K:F] is finite.
  std::optional<std::size_t> f_dimension() const;
  /// F-basis {k_j t^i}, ordered by i then by the F-basis of K.
  std::vector<OrePoly> f_basis() const;
  /// F-coordinates (length m * [K:F]) of an element of degree < m.
  std::vector<Element> f_coordinates(const OrePoly& g) const;
  OrePoly from_f_coordinates(std::span<const Element> coords) const;

  /// A random element of degree < m.
  OrePoly random_element(std::mt19937_64& rng, const RandomSpec& spec = {}) const;

  friend bool operator==(const PetitAlgebra& a, const PetitAlgebra& b) { return a.f_ == b.f_; }

 private:
  explicit PetitAlgebra(OrePoly f);

  OrePoly f_;
  std::size_t m_;
  std::vector<OrePoly> shifted_;  // shifted_[k] = t^k f
  bool two_sided_ = false;
  bool t_associative_ = false;
};

/// An element of a particular S_f (degree < m).
class SfElement {
 public:
  /// Reduces g modulo f.
  SfElement(AlgebraPtr algebra, const OrePoly& g);

  const AlgebraPtr& algebra() const { return algebra_; }
  const OrePoly& value() const { return value_; }
  std::string str() const { return value_.str(); }

  friend bool operator==(const SfElement& a, const SfElement& b);

 private:
  AlgebraPtr algebra_;
  OrePoly value_;
};

/// Throws AlgebraMismatch for elements of different algebras.
SfElement circ(const SfElement& g, const SfElement& h);
SfElement associator(const SfElement& a, const SfElement& b, const SfElement& c);

/// f*t and f*a (a a tower generator) all lie in Rf.
bool is_two_sided(const OrePoly& f);

/// mod_r(f*t, f) = 0, checked against t^m o t = t o t^m. InternalInconsistency
/// if the two criteria disagree.
bool t_powers_associative(const PetitAlgebra& a);

struct ZeroDivisorPair {
  OrePoly left;
  OrePoly right;
};

/// Looks for nonzero g, h with g o h = 0: right factors t - r from the
/// bounded root search first, then seeded random h whose right
/// multiplication map (left K-linear) is singular.
std::optional<ZeroDivisorPair> zero_divisor_search(const PetitAlgebra& a, unsigned trials,
                                                   std::uint64_t seed, unsigned root_bound = 2);

}  // namespace orealg
