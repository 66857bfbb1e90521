#include <doctest.h>

#include <random>

#include "orealg/error.hpp"
#include "orealg/ore_poly.hpp"

using namespace orealg;

namespace {

TowerPtr qx() { return FieldTower::make(TowerDescription::rational_function_field(0, "x", "1")); }
TowerPtr f3x() { return FieldTower::make(TowerDescription::rational_function_field(3, "x", "1")); }

OrePoly random_poly(const TowerPtr& k, std::mt19937_64& rng, int max_deg, bool nonzero = false) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  RandomSpec spec;
  spec.degree = 1;
  spec.den_degree = 1;
  for (;;) {
    std::vector<Element> c;
    const int d = dd(rng);
    for (int i = 0; i <= d; ++i) c.push_back(k->random_element(rng, spec));
    OrePoly p(k, c);
    if (!nonzero || !p.is_zero()) return p;
  }
}

// Independent product: t^i a = sum_k C(i,k) delta^k(a) t^(i-k), binomials taken
// as integers and mapped into K.
OrePoly binomial_product(const OrePoly& f, const OrePoly& g) {
  const auto& k = f.context();
  if (f.is_zero() || g.is_zero()) return OrePoly(k);
  std::vector<Element> out(f.deg() + g.deg() + 1, k->zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      mpz_class binom = 1;
      for (std::size_t s = 0; s <= i; ++s) {
        out[i - s + j] += f.coeffs()[i] * k->integer(binom) * k->derive(g.coeffs()[j], s);
        binom = binom * (i - s) / (s + 1);
      }
    }
  }
  return OrePoly(k, out);
}

}  // namespace

TEST_CASE("multiplication examples") {
  auto k = qx();
  CHECK((parse_ore(k, "t") * parse_ore(k, "x")).str() == "x*t + 1");
  CHECK((parse_ore(k, "t^2") * parse_ore(k, "x")).str() == "x*t^2 + 2*t");
  CHECK(parse_ore(k, "t*x") == parse_ore(k, "x*t + 1"));
  CHECK(parse_ore(k, "t^2 - x*t + (x^2+1)/x").str() == "t^2 - x*t + (x^2+1)/(x)");
  CHECK(OrePoly(k).str() == "0");
  CHECK(!OrePoly(k).degree().has_value());
  CHECK(OrePoly(k).degree() < std::optional<std::size_t>(0));
}

TEST_CASE("division examples") {
  auto k = qx();
  const auto dm = right_divmod(parse_ore(k, "t^2"), parse_ore(k, "t - x"));
  CHECK(dm.quotient == parse_ore(k, "t + x"));
  CHECK(dm.remainder == parse_ore(k, "x^2 + 1"));
  const auto f = parse_ore(k, "t^3 + x*t + 1/x");
  CHECK(right_divmod(f, f).quotient == parse_ore(k, "1"));
  CHECK(right_divmod(f, f).remainder.is_zero());
  CHECK(mod_r(parse_ore(k, "t^2"), parse_ore(k, "t^2")).is_zero());
  CHECK(right_gcd(parse_ore(k, "2*t - 2*x"), parse_ore(k, "t-x")) == parse_ore(k, "t - x"));
  CHECK_THROWS_AS(right_divmod(f, OrePoly(k)), Error);
}

TEST_CASE("linear powers") {
  auto k3 = f3x();
  CHECK(linear_power(k3, k3->parse("x"), 3) == parse_ore(k3, "t^3 - x^3"));
  auto k = qx();
  CHECK(linear_power(k, k->parse("x"), 1) == parse_ore(k, "t - x"));
  CHECK(linear_power(k, k->parse("x"), 2) == parse_ore(k, "t^2 - 2*x*t + x^2 - 1"));
}

TEST_CASE("ring axioms and division on random inputs") {
  for (auto k : {qx(), f3x()}) {
    std::mt19937_64 rng(k->characteristic() + 11);
    for (int i = 0; i < 200; ++i) {
      const auto f = random_poly(k, rng, 2);
      const auto g = random_poly(k, rng, 2);
      const auto h = random_poly(k, rng, 2);
      CHECK(f * g == binomial_product(f, g));
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);
      CHECK((f + g) * h == f * h + g * h);
      if (!f.is_zero() && !g.is_zero()) CHECK((f * g).deg() == f.deg() + g.deg());
      CHECK(f * parse_ore(k, "1") == f);
      if (!g.is_zero()) {
        const auto r = right_divmod(f, g);
        CHECK(r.quotient * g + r.remainder == f);
        CHECK(r.remainder.degree() < g.degree());
        const auto l = left_divmod(f, g);
        CHECK(g * l.quotient + l.remainder == f);
        CHECK(l.remainder.degree() < g.degree());
      }
    }
  }
}

TEST_CASE("construct-then-divide") {
  auto k = qx();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_poly(k, rng, 2);
    const auto g = random_poly(k, rng, 2, true);
    auto r0 = random_poly(k, rng, 2);
    r0 = mod_r(r0, g);
    const auto dm = right_divmod(f * g + r0, g);
    CHECK(dm.quotient == f);
    CHECK(dm.remainder == r0);
  }
}

TEST_CASE("right gcd of constructed common factors") {
  for (auto k : {qx(), f3x()}) {
    std::mt19937_64 rng(k->characteristic() + 101);
    for (int i = 0; i < 20; ++i) {
      const auto h = random_poly(k, rng, 2, true);
      const auto a = parse_ore(k, "t - x") * h;
      const auto b = parse_ore(k, "t + 1") * h;
      const auto d = right_gcd(a, b);
      CHECK(d.is_monic());
      CHECK(mod_r(a, d).is_zero());
      CHECK(mod_r(b, d).is_zero());
      CHECK(mod_r(d, h.monic()).is_zero());
    }
  }
}

TEST_CASE("parser rejects ill-typed input") {
  auto k = qx();
  CHECK_THROWS_AS(parse_ore(k, "x/t"), Error);
  CHECK_THROWS_AS(parse_ore(k, "t^-1"), Error);
  CHECK_THROWS_AS(parse_ore(k, "y*t"), Error);
  CHECK_THROWS_AS(parse_ore(k, "t +"), SyntaxError);
  CHECK(parse_ore(k, "x^-2*t") == parse_ore(k, "(1/x^2)*t"));
}
