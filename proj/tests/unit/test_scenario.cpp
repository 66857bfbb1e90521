#include <doctest.h>

#include "orealg/charp.hpp"
#include "orealg/error.hpp"
#include "orealg/scenario.hpp"

using namespace orealg;

TEST_CASE("scenario (3, 1, 2): nonassociative regime") {
  const auto r = scenario_builder(3, 1, 2);
  CHECK(r.regime == "nonassociative");
  CHECK(r.dimension == 6);
  CHECK(!r.two_sided);
  CHECK(r.algebra->modulus() == parse_ore(r.tower, "t^2 - x"));
  CHECK(r.left == std::optional<std::size_t>(3));
  CHECK(r.middle == std::optional<std::size_t>(3));
  REQUIRE(r.nucleus.has_value());
  CHECK(*r.nucleus < 3);
  CHECK(!r.counts.has_value());
}

TEST_CASE("scenario (3, 1, 3): differential extension regime") {
  const auto r = scenario_builder(3, 1, 3);
  CHECK(r.regime == "differential_extension");
  CHECK(r.two_sided);
  CHECK(r.dimension == 9);
  CHECK(is_two_sided(r.algebra->modulus()));
  CHECK(r.right == std::optional<std::size_t>(9));
  CHECK(r.nucleus == std::optional<std::size_t>(9));
  CHECK(r.center == std::optional<std::size_t>(1));
}

TEST_CASE("scenario hypotheses") {
  try {
    scenario_builder(2, 1, 3);
    FAIL("expected UnsatisfiedHypothesis");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsatisfiedHypothesis);
    CHECK(std::string(e.what()).find("m <= p^e") != std::string::npos);
  }
  CHECK_THROWS_AS(scenario_builder(4, 1, 2), Error);
}

TEST_CASE("scenario towers have [K:F] = p^e") {
  for (auto [p, e] : {std::pair{2U, 2U}, std::pair{3U, 2U}, std::pair{2U, 3U}}) {
    CAPTURE(p);
    CAPTURE(e);
    const auto r = scenario_builder(p, e, 2);
    std::size_t pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    CHECK(r.tower->fbasis().dimension() == pe);
    CHECK(r.dimension == 2 * pe);
    CHECK(min_p_polynomial(r.tower).g().deg() == pe);
  }
  // (2, 2, 4) and (2, 3, 4): m = p^n with e = m - 1 only in the second.
  CHECK(scenario_builder(2, 2, 4).regime == "differential_extension");
  const auto r = scenario_builder(2, 3, 4);
  CHECK(r.regime == "nonassociative");
  REQUIRE(r.counts.has_value());
  CHECK(r.counts->n == 2);
  CHECK(r.counts->strict);
}

TEST_CASE("bookkeeping n + 1 <= p^n") {
  for (std::uint32_t p : {2U, 3U, 5U}) {
    for (unsigned n = 1; n <= 4; ++n) {
      CAPTURE(p);
      CAPTURE(n);
      const auto b = bookkeeping(p, n);
      unsigned long m = 1;
      for (unsigned i = 0; i < n; ++i) m *= p;
      CHECK(b.m == m);
      CHECK(b.n_bound);
      CHECK(b.fits);
      // dim = p^{n + m - 1}
      mpz_class dim;
      mpz_ui_pow_ui(dim.get_mpz_t(), p, n + m - 1);
      CHECK(b.dim == dim);
      CHECK(b.m_squared <= b.dim);
      // m^2 = m p^{m-1} exactly when n + 1 = p^n, which happens only at (2, 1).
      CHECK(b.strict == (n + 1 < m));
      CHECK(b.strict == !(p == 2 && n == 1));
    }
  }
}
