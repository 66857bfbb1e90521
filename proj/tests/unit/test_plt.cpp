#include <doctest.h>

#include <random>

#include "orealg/error.hpp"
#include "orealg/nucleus.hpp"
#include "orealg/plt.hpp"

using namespace orealg;

namespace {

TowerPtr qx() { return FieldTower::make(TowerDescription::rational_function_field(0, "x", "1")); }
TowerPtr f3x() { return FieldTower::make(TowerDescription::rational_function_field(3, "x", "1")); }

OrePoly random_monic(const TowerPtr& k, std::mt19937_64& rng, std::size_t deg,
                     const RandomSpec& spec = {}) {
  std::vector<Element> c;
  for (std::size_t i = 0; i < deg; ++i) c.push_back(k->random_element(rng, spec));
  c.push_back(k->one());
  return OrePoly(k, std::move(c));
}

// Applies h = sum h_i t^i to v through T: sum h_i T^i(v).
linalg::Vector act(const PseudoLinearTransform& t, const OrePoly& h, linalg::Vector v) {
  const auto& k = t.context();
  linalg::Vector out(v.size(), k->zero());
  for (std::size_t i = 0; i <= h.deg(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = out[j] + h.coeff(i) * v[j];
    v = t.apply(v);
  }
  return out;
}

}  // namespace

TEST_CASE("pseudo-linearity") {
  for (auto k : {qx(), f3x()}) {
    std::mt19937_64 rng(2);
    const auto t = from_polynomial(random_monic(k, rng, 3));
    for (int i = 0; i < 100; ++i) {
      const Element alpha = k->random_element(rng);
      linalg::Vector v, av;
      for (int j = 0; j < 3; ++j) {
        v.push_back(k->random_element(rng));
        av.push_back(alpha * v.back());
      }
      const auto lhs = t.apply(av);
      const auto tv = t.apply(v);
      for (std::size_t j = 0; j < 3; ++j) CHECK(lhs[j] == alpha * tv[j] + k->derive(alpha) * v[j]);
    }
  }
}

TEST_CASE("transform of a polynomial") {
  auto k = qx();
  const auto b = parse_ore(k, "x^2 + 1").coeff(0);
  const auto t1 = from_polynomial(parse_ore(k, "t - x^2 - 1"));
  REQUIRE(t1.dim() == 1);
  CHECK(t1.matrix()[0][0] == b);
  CHECK(cyclic_certificate(t1, {k->one()})->h == parse_ore(k, "t - x^2 - 1"));
  const auto t2 = from_polynomial(parse_ore(k, "t^2"));
  CHECK(t2.apply({k->one(), k->zero()}) == linalg::Vector{k->zero(), k->one()});
  CHECK(t2.apply({k->zero(), k->one()}) == linalg::Vector{k->zero(), k->zero()});
  CHECK_THROWS_AS(from_polynomial(parse_ore(k, "2*t^2")), Error);
  CHECK_THROWS_AS(from_polynomial(parse_ore(k, "1")), Error);
}

TEST_CASE("characteristic polynomial round trip") {
  for (auto k : {qx(), f3x()}) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
      const auto f = random_monic(k, rng, 1 + static_cast<std::size_t>(i % 4));
      const auto t = from_polynomial(f);
      linalg::Vector e(f.deg(), k->zero());
      e[0] = k->one();
      const auto c = cyclic_certificate(t, e);
      REQUIRE(c.has_value());
      CHECK(c->h == f);
      CHECK(characteristic_polynomial(t, 1).h == f);
    }
  }
}

TEST_CASE("zero transform") {
  auto k = qx();
  const auto z = zero_plt(k, 2);
  const auto x = parse_ore(k, "x").coeff(0);
  const auto c = cyclic_certificate(z, {x, k->one()});
  REQUIRE(c.has_value());
  CHECK(c->h == parse_ore(k, "t^2"));
  CHECK(!cyclic_certificate(z, {k->one(), k->zero()}).has_value());
  const auto found = characteristic_polynomial(z, 7);
  CHECK(found.h.deg() == 2);
  for (const auto& e : act(z, found.h, found.v)) CHECK(e.is_zero());
  // The class of the zero transform is split: its eigenring has dimension 4.
  auto s = PetitAlgebra::make(found.h);
  CHECK(right_nucleus(*s, default_ansatz(*s)).dim() == 4);
}

TEST_CASE("resultants") {
  auto k = qx();
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const Element a = k->random_element(rng);
    const Element b = k->random_element(rng);
    const OrePoly fa(k, {-a, k->one()});
    const OrePoly fb(k, {-b, k->one()});
    CHECK(resultant(fa, fb, 1) == OrePoly(k, {-(a + b), k->one()}));
  }
  CHECK(resultant(parse_ore(k, "t"), parse_ore(k, "t"), 1) == parse_ore(k, "t"));
  RandomSpec small;
  small.height = 2;
  small.degree = 1;
  for (auto tower : {qx(), f3x()}) {
    for (int i = 0; i < 12; ++i) {
      const auto f = random_monic(tower, rng, 1 + static_cast<std::size_t>(i % 3), small);
      const auto g = random_monic(tower, rng, 1 + static_cast<std::size_t>((i / 3) % 2), small);
      const auto tt = tensor(from_polynomial(f), from_polynomial(g));
      const auto c = characteristic_polynomial(tt, 3);
      CHECK(c.h.deg() == f.deg() * g.deg());
      CHECK(c.h.is_monic());
      for (const auto& e : act(tt, c.h, c.v)) CHECK(e.is_zero());
    }
  }
}

TEST_CASE("similarity search") {
  auto k = qx();
  const auto f = parse_ore(k, "t^2 + x*t + 1");
  const auto self = similarity_search(f, f, 0);
  REQUIRE(self.witness.has_value());
  CHECK(self.witness->first == parse_ore(k, "1"));
  CHECK(self.witness->second == parse_ore(k, "1"));

  std::mt19937_64 rng(4);
  RandomSpec spec;
  spec.height = 3;
  spec.degree = 1;
  spec.den_degree = 1;
  for (int i = 0; i < 10; ++i) {
    const Element c = k->random_element(rng, spec);
    if (c.is_zero()) continue;
    const Element shift = parse_ore(k, "x").coeff(0) + k->derive(c) * c.inverse();
    const OrePoly g(k, {-shift, k->one()});
    const auto r = similarity_search(parse_ore(k, "t - x"), g, 4);
    REQUIRE(r.witness.has_value());
    const auto& [u, up] = *r.witness;
    CHECK(up * parse_ore(k, "t - x") == g * u);
    CHECK(right_gcd(u, parse_ore(k, "t - x")).deg() == 0);
  }
  CHECK(!similarity_search(parse_ore(k, "t"), parse_ore(k, "t - 1"), 3).witness.has_value());
  try {
    similarity_search(parse_ore(k, "t"), parse_ore(k, "t^2"), 3);
    FAIL("expected DegreeMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeMismatch);
  }

  auto k3 = f3x();
  const auto h = parse_ore(k3, "t^2 - x");
  const auto r3 = similarity_search(h, h, 0);
  REQUIRE(r3.witness.has_value());
  CHECK(r3.witness->second * h == h * r3.witness->first);
}
