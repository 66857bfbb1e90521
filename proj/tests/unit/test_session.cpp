#include <doctest.h>

#include <random>
#include <sstream>

#include "orealg/cli.hpp"
#include "orealg/error.hpp"
#include "orealg/session.hpp"

using namespace orealg;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InternalInconsistency;
}

// Random session over a random tower, with bindings printed from random
// polynomials so that the expressions are valid.
SessionFile random_session(std::mt19937_64& rng) {
  SessionFile s;
  const std::uint32_t primes[] = {0, 2, 3, 5, 7};
  const std::uint32_t p = primes[rng() % 5];
  s.tower.base = p == 0 ? TowerDescription::Base::Rationals : TowerDescription::Base::PrimeField;
  s.tower.p = p;
  const std::size_t layers = 1 + rng() % 2;
  for (std::size_t i = 0; i < layers; ++i) {
    const std::string name = std::string(1, static_cast<char>('a' + i)) + std::to_string(rng() % 10);
    s.tower.layers.push_back({TowerDescription::Layer::Kind::Rational, name, ""});
  }
  const std::string x = s.tower.layers[0].name;
  s.tower.derivation.emplace_back(x, "1");
  if (layers == 2) s.tower.derivation.emplace_back(s.tower.layers[1].name, "1/" + x);
  if (rng() % 2) s.bound = static_cast<unsigned>(rng() % 20);
  if (rng() % 2) s.seed = rng() % 1000;
  if (rng() % 3 == 0) s.format = rng() % 2 ? "json" : "text";
  const std::size_t n = rng() % 4;
  RandomSpec spec;
  spec.height = 3;
  spec.degree = 2;
  spec.den_degree = 1;
  const auto tower = FieldTower::make(s.tower);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Element> c;
    const std::size_t d = rng() % 4;
    for (std::size_t j = 0; j <= d; ++j) c.push_back(tower->random_element(rng, spec));
    s.bindings.emplace_back("f" + std::to_string(i), OrePoly(tower, c).str());
  }
  if (n > 0) s.bindings.emplace_back("g", "f0*t - 2*f0");
  return s;
}

}  // namespace

TEST_CASE("session grammar") {
  const auto s = parse_session("base=F3\nlayer rational x\ndelta x = 1\nf = t^2 - x");
  CHECK(s.tower.p == 3);
  REQUIRE(s.bindings.size() == 1);
  CHECK(s.bindings[0] == std::pair<std::string, std::string>{"f", "t^2 - x"});
  const auto loaded = load_session(parse_session("base = Q\nlayer rational x\ndelta x = 1\nf = t*x\n"));
  CHECK(loaded.values.at("f").str() == "x*t + 1");
  const auto full = parse_session(
      "# comment\n\nbase = F3\nlayer rational s\nlayer rational x\nlayer pinsep u s\n"
      "delta x = 1\ndelta u = x^2\nbound = 4\nseed = 9\nformat = json\nf = t^3 - u\ng = f*t\n");
  CHECK(full.tower.layers.size() == 3);
  CHECK(full.bound == std::optional<unsigned>(4));
  CHECK(full.seed == std::optional<std::uint64_t>(9));
  CHECK(full.format == std::optional<std::string>("json"));
  const auto lf = load_session(full);
  CHECK(lf.values.at("g") == lf.values.at("f") * parse_ore(lf.tower, "t"));
}

TEST_CASE("session errors carry positions") {
  CHECK(kind_of([] { parse_session("base=Q\nlayer pinsep u 2"); }) == ErrorKind::TypeError);
  try {
    parse_session("base = F3\nlayer rational x\ndelta x = 1 +\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 14);
  }
  try {
    parse_session("base = F3\nlayer irrational x\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 7);
  }
  CHECK(kind_of([] { parse_session("layer rational x\n"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_session("base = G7\n"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_session("base = Q\nlayer rational x\nf = 1\nf = 2\n"); }) == ErrorKind::TypeError);
  CHECK(kind_of([] { parse_session("base = Q\nlayer rational x\nx = 1\n"); }) == ErrorKind::TypeError);
  CHECK(kind_of([] { parse_session("base = Q\nlayer rational x\nf = 1\ndelta x = 1\n"); }) ==
        ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_session("base = Q\nformat = yaml\n"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { load_session(parse_session("base = Q\nlayer rational x\ndelta x = 1\nf = y\n")); }) ==
        ErrorKind::TypeError);
}

TEST_CASE("print and parse round trip") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const SessionFile s = random_session(rng);
    const std::string text = print_session(s);
    CAPTURE(text);
    CHECK(parse_session(text) == s);
    const auto a = load_session(s);
    const auto b = load_session(parse_session(text));
    for (const auto& [name, value] : a.values) CHECK(b.values.at(name).str() == value.str());
  }
}

TEST_CASE("driver exit codes") {
  std::ostringstream out, err;
  CHECK(cli_main({"orealg"}, out, err) == kExitError);
  CHECK(cli_main({"orealg", "scenario", "3", "1", "2", "--json"}, out, err) == kExitOk);
  CHECK(cli_main({"orealg", "scenario", "2", "1", "3"}, out, err) == kExitError);
  CHECK(cli_main({"orealg", "mul", "/nonexistent.session", "t"}, out, err) == kExitError);
  CHECK(cli_verbs().size() == 21);
}
