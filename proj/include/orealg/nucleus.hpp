#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orealg/linalg.hpp"
#include "orealg/petit.hpp"

namespace orealg {

/// A subspace of S_f with a basis over the scalars of `kind`.
struct FSubspace {
  enum class Kind {
    Exact,             // F-basis, [K:F] finite, exact elimination
    AnsatzLowerBound,  // base-field span found inside a bounded ansatz
    AnsatzMaximal,     // ansatz span of the maximal dimension m^2
    StructuralK,       // the embedded K (basis {1} over K), infinite [K:F]
  };

  AlgebraPtr ambient;
  Kind kind = Kind::Exact;
  std::vector<OrePoly> basis;
  /// Whether products of basis elements stay in the span (checked).
  bool closed = false;

  std::size_t dim() const { return basis.size(); }
  bool certified() const { return kind == Kind::Exact || kind == Kind::AnsatzMaximal; }
};

std::string to_string(FSubspace::Kind kind);

/// Ansatz for characteristic 0: numerators of total degree <= numerator_degree
/// + deg(denominator) in the generators, over the given denominator.
struct AnsatzConfig {
  unsigned numerator_degree = 0;
  std::optional<Element> denominator;  // default: 1
};

/// Denominator = (product of the denominators of f's coefficients)^m,
/// numerator degree 2m.
AnsatzConfig default_ansatz(const PetitAlgebra& a);

/// Nuc_r = {g : f g in Rf}. Exact over F when [K:F] is finite; otherwise the
/// solution space inside the ansatz (AnsatzRequired without one).
FSubspace right_nucleus(const PetitAlgebra& a, const std::optional<AnsatzConfig>& cfg = {});
/// Exact associator systems when [K:F] is finite; the embedded K with a
/// sampled verification otherwise. InternalInconsistency when a computed
/// answer contradicts the structure theory (K for non-two-sided f).
FSubspace left_nucleus(const PetitAlgebra& a, std::uint64_t seed = 1);
FSubspace middle_nucleus(const PetitAlgebra& a, std::uint64_t seed = 1);

/// The copy of K inside S_f.
FSubspace embedded_field(const PetitAlgebra& a);

struct NucleusCenter {
  FSubspace nucleus;
  FSubspace center;
};

/// Nuc = Nuc_l cap Nuc_m cap Nuc_r and its commutant part. Finite [K:F] only.
NucleusCenter nucleus_and_center(const PetitAlgebra& a);

/// True when every element of K lies in Nuc_r (f a in Rf for the generators).
bool field_in_right_nucleus(const PetitAlgebra& a);

/// Coordinates of g in the basis of s, or nullopt when g is not in the span.
std::optional<linalg::Vector> coordinates_in(const FSubspace& s, const OrePoly& g);
FSubspace intersect(const FSubspace& a, const FSubspace& b);

struct FAlgebraPresentation {
  FSubspace subspace;
  /// structure[i][j][k]: x_i o x_j = sum_k structure[i][j][k] x_k
  std::vector<std::vector<linalg::Vector>> structure;
  linalg::Vector unit;
  bool associative = false;
};

/// NotClosed when a product leaves the span.
FAlgebraPresentation presentation(const FSubspace& s);

/// Multiplies coordinate vectors through the structure constants.
linalg::Vector present_mul(const FAlgebraPresentation& p, const linalg::Vector& a,
                           const linalg::Vector& b);

/// Random a (small integer coordinates), then b in the kernel of left
/// multiplication by a.
std::optional<std::pair<linalg::Vector, linalg::Vector>> presentation_zero_divisor(
    const FAlgebraPresentation& p, unsigned trials, std::uint64_t seed);

/// e with e*e = e, e central, e != 0, 1, among coordinate vectors with
/// entries in [-height, height]; at most `budget` candidates.
std::optional<linalg::Vector> central_idempotent_search(const FAlgebraPresentation& p, int height,
                                                        std::size_t budget);

/// phi maps basis element i of `a` to sum_k phi[i][k] y_k in `b`; checks
/// bijectivity and phi(x_i x_j) = phi(x_i) phi(x_j).
bool verify_isomorphism(const FAlgebraPresentation& a, const FAlgebraPresentation& b,
                        const linalg::Matrix& phi);

struct APolyResult {
  enum class Verdict { APolynomial, NotAPolynomial, Inconclusive, EigenringOnly };
  Verdict verdict = Verdict::Inconclusive;
  std::size_t dim = 0;      // eigenring dimension (a lower bound unless certified)
  std::size_t maximum = 0;  // m^2
};

std::string to_string(APolyResult::Verdict v);

/// APolynomial iff dim Nuc_r = m^2. In characteristic p the exact eigenring
/// dimension is reported as EigenringOnly.
APolyResult a_polynomial_test(const PetitAlgebra& a, const std::optional<AnsatzConfig>& cfg = {});

}  // namespace orealg
