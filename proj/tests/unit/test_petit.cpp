#include <doctest.h>

#include <random>

#include "orealg/charp.hpp"
#include "orealg/error.hpp"
#include "orealg/petit.hpp"

using namespace orealg;

namespace {

TowerPtr qx() { return FieldTower::make(TowerDescription::rational_function_field(0, "x", "1")); }
TowerPtr f3x() { return FieldTower::make(TowerDescription::rational_function_field(3, "x", "1")); }

}  // namespace

TEST_CASE("Petit algebra of t^2 over Q(x)") {
  auto k = qx();
  auto s = PetitAlgebra::make(parse_ore(k, "t^2"));
  CHECK(!s->two_sided());
  CHECK(s->t_associative());
  CHECK(s->circ(parse_ore(k, "t"), parse_ore(k, "x*t + 1")) == parse_ore(k, "2*t"));
  CHECK(s->associator(parse_ore(k, "t"), parse_ore(k, "t"), parse_ore(k, "x")) == parse_ore(k, "-2*t"));
  CHECK(!s->f_dimension().has_value());
  CHECK(!is_two_sided(parse_ore(k, "t^2")));
}

TEST_CASE("modulus normalization") {
  auto k = qx();
  auto a = PetitAlgebra::make(parse_ore(k, "x*t^2 + t + 1"));
  auto b = PetitAlgebra::make(parse_ore(k, "t^2 + (1/x)*t + 1/x"));
  CHECK(*a == *b);
  CHECK_THROWS_AS(PetitAlgebra::make(OrePoly(k)), Error);
  const SfElement g(a, parse_ore(k, "t"));
  const SfElement h(PetitAlgebra::make(parse_ore(k, "t^3")), parse_ore(k, "t"));
  try {
    circ(g, h);
    FAIL("expected AlgebraMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AlgebraMismatch);
  }
}

TEST_CASE("two-sidedness over F3(x)") {
  auto k = f3x();
  CHECK(is_two_sided(parse_ore(k, "t^3 - x^3")));
  CHECK(!is_two_sided(parse_ore(k, "t^3 - x")));
  CHECK(mod_r(parse_ore(k, "(t^3 - x)*t"), parse_ore(k, "t^3 - x")) == parse_ore(k, "1"));
  auto s = PetitAlgebra::make(parse_ore(k, "t^3 - x^3"));
  CHECK(s->two_sided());
  CHECK(s->f_dimension() == std::optional<std::size_t>(9));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto a = s->random_element(rng);
    const auto b = s->random_element(rng);
    const auto c = s->random_element(rng);
    CHECK(s->associator(a, b, c).is_zero());
  }
  auto u = PetitAlgebra::make(parse_ore(k, "t^2 - x"));
  CHECK(u->t_associative() == mod_r(parse_ore(k, "(t^2 - x)*t"), parse_ore(k, "t^2 - x")).is_zero());
  CHECK(!u->t_associative());
}

TEST_CASE("Petit product properties") {
  for (auto k : {qx(), f3x()}) {
    auto s = PetitAlgebra::make(parse_ore(k, "t^3 + x*t + 1"));
    std::mt19937_64 rng(9);
    const auto one = parse_ore(k, "1");
    for (int i = 0; i < 50; ++i) {
      const auto g = s->random_element(rng);
      const auto h = s->random_element(rng);
      const auto a = k->random_element(rng);
      CHECK(s->circ(one, h) == h);
      CHECK(s->circ(h, one) == h);
      CHECK(s->circ(g.scale_left(a), h) == s->circ(g, h).scale_left(a));
      CHECK(s->associator(one, g, h).is_zero());
      const auto c = OrePoly::constant(k, a);
      CHECK(s->circ(c, g) == c * g);
    }
  }
}

TEST_CASE("F-coordinates round trip") {
  auto k = f3x();
  auto s = PetitAlgebra::make(parse_ore(k, "t^2 - x"));
  CHECK(s->f_dimension() == std::optional<std::size_t>(6));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 30; ++i) {
    const auto g = s->random_element(rng);
    const auto c = s->f_coordinates(g);
    CHECK(c.size() == 6);
    for (const auto& ci : c) CHECK(k->is_constant(ci));
    CHECK(s->from_f_coordinates(c) == g);
  }
}

TEST_CASE("zero divisors") {
  auto k = qx();
  auto f = parse_ore(k, "(t - x)*(t + x)");
  auto s = PetitAlgebra::make(f);
  CHECK(s->circ(parse_ore(k, "t - x"), parse_ore(k, "t + x")).is_zero());
  auto zd = zero_divisor_search(*s, 10, 1);
  REQUIRE(zd.has_value());
  CHECK(!zd->left.is_zero());
  CHECK(!zd->right.is_zero());
  CHECK(s->circ(zd->left, zd->right).is_zero());

  CHECK(!zero_divisor_search(*PetitAlgebra::make(parse_ore(k, "t")), 10, 1).has_value());

  auto k3 = f3x();
  auto d = PetitAlgebra::make(parse_ore(k3, "t^3 - x^3"));
  const auto lin = parse_ore(k3, "t - x");
  CHECK(d->circ(lin, lin * lin).is_zero());
  auto zd3 = zero_divisor_search(*d, 10, 1);
  REQUIRE(zd3.has_value());
  CHECK(d->circ(zd3->left, zd3->right).is_zero());
}
