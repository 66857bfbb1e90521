#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "orealg/petit.hpp"

namespace orealg {

/// Dimension count for m = p^n and [K:F] = p^{m-1}: the chain
/// m^2 < m p^e <= m p^{m-1} with e = m - 1, and n + 1 <= p^n behind it.
struct Bookkeeping {
  std::uint32_t p = 0;
  unsigned n = 0;
  mpz_class m;            // p^n
  mpz_class m_squared;    // m^2
  mpz_class dim;          // m p^{m-1}
  bool n_bound = false;   // n + 1 <= p^n
  bool fits = false;      // m <= p^{m-1}
  bool strict = false;    // m^2 < m p^{m-1}
};

Bookkeeping bookkeeping(std::uint32_t p, unsigned n);

struct ScenarioReport {
  std::uint32_t p = 0;
  unsigned e = 0;
  std::size_t m = 0;
  std::string regime;      // "nonassociative" (m < p^e) or "differential_extension" (m = p^e)
  std::string hypothesis;  // the inequality that selected the regime
  TowerPtr tower;
  AlgebraPtr algebra;
  std::size_t dimension = 0;  // m p^e
  bool two_sided = false;
  /// Nuclei dimensions over F; unset above the size limit.
  std::optional<std::size_t> right, left, middle, nucleus, center;
  std::optional<Bookkeeping> counts;  // when m = p^n and e = m - 1
};

/// Largest dim_F S_f for which the scenario computes nuclei.
inline constexpr std::size_t kScenarioNucleusLimit = 36;

/// Tower F_p(x_1..x_e) with delta(x_1) = 1, delta(x_i) = (x_1...x_{i-1})^{p-1},
/// so [K:F] = p^e. For m = p^e, f = g - x_1^p with g the minimum p-polynomial;
/// for m < p^e, f = t^m - x_1. UnsatisfiedHypothesis when m > p^e.
ScenarioReport scenario_builder(std::uint32_t p, unsigned e, std::size_t m);

}  // namespace orealg
