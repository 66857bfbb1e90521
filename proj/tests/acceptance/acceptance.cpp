// End-to-end acceptance checks, one PASS/FAIL line per criterion.
//
//   acceptance <golden-dir>

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orealg/charp.hpp"
#include "orealg/cli.hpp"
#include "orealg/error.hpp"
#include "orealg/nucleus.hpp"
#include "orealg/plt.hpp"
#include "orealg/scenario.hpp"

using namespace orealg;

namespace {

TowerPtr fpx(std::uint32_t p) { return FieldTower::make(TowerDescription::rational_function_field(p, "x", "1")); }

OrePoly random_poly(const TowerPtr& k, std::mt19937_64& rng, int max_deg, const RandomSpec& spec) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  std::vector<Element> c;
  const int d = dd(rng);
  for (int i = 0; i <= d; ++i) c.push_back(k->random_element(rng, spec));
  return OrePoly(k, std::move(c));
}

OrePoly random_monic(const TowerPtr& k, std::mt19937_64& rng, std::size_t deg, const RandomSpec& spec) {
  std::vector<Element> c;
  for (std::size_t i = 0; i < deg; ++i) c.push_back(k->random_element(rng, spec));
  c.push_back(k->one());
  return OrePoly(k, std::move(c));
}

// sum_i C(i,s) f_i delta^s(g_j) t^(i-s+j), independent of the library product.
OrePoly binomial_product(const OrePoly& f, const OrePoly& g) {
  const auto& k = f.context();
  if (f.is_zero() || g.is_zero()) return OrePoly(k);
  std::vector<Element> out(f.deg() + g.deg() + 1, k->zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      mpz_class binom = 1;
      for (std::size_t s = 0; s <= i; ++s) {
        out[i - s + j] += f.coeffs()[i] * k->integer(binom) * k->derive(g.coeffs()[j], static_cast<unsigned>(s));
        binom = binom * (i - s) / (s + 1);
      }
    }
  }
  return OrePoly(k, out);
}

bool ore_random_suite() {
  RandomSpec spec;
  spec.height = 3;
  spec.degree = 1;
  spec.den_degree = 1;
  int cases = 0;
  for (auto k : {fpx(0), fpx(3), fpx(5)}) {
    std::mt19937_64 rng(100 + k->characteristic());
    const int n = k->characteristic() == 0 ? 100 : 50;
    for (int i = 0; i < n; ++i, ++cases) {
      const auto a = random_poly(k, rng, 3, spec);
      const auto b = random_poly(k, rng, 3, spec);
      const auto c = random_poly(k, rng, 2, spec);
      if ((a * b) * c != a * (b * c)) return false;
      if (a * (b + c) != a * b + a * c) return false;
      if (a * b != binomial_product(a, b)) return false;
      if (!a.is_zero() && !b.is_zero() && (a * b).deg() != a.deg() + b.deg()) return false;
      if (b.is_zero()) continue;
      const auto r = right_divmod(a, b);
      if (r.quotient * b + r.remainder != a || r.remainder.degree() >= b.degree()) return false;
      const auto l = left_divmod(a, b);
      if (b * l.quotient + l.remainder != a || l.remainder.degree() >= b.degree()) return false;
    }
  }
  return cases == 200;
}

bool division_example() {
  auto k = fpx(0);
  const auto dm = right_divmod(parse_ore(k, "t^2"), parse_ore(k, "t - x"));
  return dm.quotient == parse_ore(k, "t + x") && dm.remainder == parse_ore(k, "x^2 + 1") &&
         dm.quotient * parse_ore(k, "t - x") + dm.remainder == parse_ore(k, "t^2");
}

bool frobenius() {
  for (std::uint32_t p : {3u, 5u}) {
    auto k = fpx(p);
    std::mt19937_64 rng(p);
    for (int i = 0; i < 100; ++i) {
      const Element b = k->random_element(rng);
      // Repeated multiplication by t - b as the oracle for (t - b)^p.
      const OrePoly lin(k, {-b, k->one()});
      OrePoly acc = OrePoly::constant(k, k->one());
      for (std::uint32_t j = 0; j < p; ++j) acc = acc * lin;
      if (acc != OrePoly::monomial(k, k->one(), p) - OrePoly::constant(k, v_p(*k, b))) return false;
      if (acc != linear_power(k, b, p)) return false;
    }
  }
  return true;
}

bool eigenring_t2() {
  auto k = fpx(0);
  auto s = PetitAlgebra::make(parse_ore(k, "t^2"));
  AnsatzConfig cfg;
  cfg.numerator_degree = 2;
  const auto r = right_nucleus(*s, cfg);
  if (r.dim() != 4) return false;
  for (const char* g : {"1", "t", "x*t", "x - x^2*t"}) {
    const auto e = parse_ore(k, g);
    if (!coordinates_in(r, e)) return false;
    if (!mod_r(s->modulus() * e, s->modulus()).is_zero()) return false;
  }
  return a_polynomial_test(*s, cfg).verdict == APolyResult::Verdict::APolynomial;
}

bool nuclei_nonassociative() {
  auto k = fpx(3);
  auto s = PetitAlgebra::make(parse_ore(k, "t^2 - x"));
  const auto l = left_nucleus(*s);
  const auto m = middle_nucleus(*s);
  const auto kf = embedded_field(*s);
  if (l.dim() != 3 || m.dim() != 3 || s->f_dimension() != std::optional<std::size_t>(6)) return false;
  for (const auto& g : kf.basis) {
    if (!coordinates_in(l, g) || !coordinates_in(m, g)) return false;
  }
  const auto nc = nucleus_and_center(*s);
  if (nc.nucleus.dim() == 0 || nc.nucleus.dim() >= 3) return false;
  for (const auto& g : nc.nucleus.basis) {
    if (g.degree().value_or(0) != 0) return false;
  }
  return true;
}

bool two_sided_and_associators() {
  auto k = fpx(3);
  const auto f = parse_ore(k, "t^3 - x^3");
  if (!is_two_sided(f)) return false;
  auto s = PetitAlgebra::make(f);
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    const auto a = s->random_element(rng);
    const auto b = s->random_element(rng);
    const auto c = s->random_element(rng);
    if (!s->associator(a, b, c).is_zero()) return false;
  }
  auto q = fpx(0);
  const auto t2 = parse_ore(q, "t^2");
  if (is_two_sided(t2)) return false;
  auto s2 = PetitAlgebra::make(t2);
  return s2->associator(parse_ore(q, "t"), parse_ore(q, "t"), parse_ore(q, "x")) == parse_ore(q, "-2*t");
}

bool center_and_bound() {
  auto k = fpx(3);
  if (min_p_polynomial(k).g() != parse_ore(k, "t^3")) return false;
  const auto c = center_of_R(k, k->zero());
  if (c.z != parse_ore(k, "t^3")) return false;
  for (const char* e : {"t", "x", "x^2*t + 1/x"}) {
    const auto a = parse_ore(k, e);
    if (c.z * a != a * c.z) return false;
  }
  return bound_of(parse_ore(k, "t - x")) == parse_ore(k, "t^3 - x^3");
}

bool split_examples() {
  auto k = fpx(3);
  PPolynomial g = PPolynomial::monomial(k, 1);
  g.d0 = k->parse("x^3");
  const auto r = split_solver(g, 4);
  if (!r.witness || *r.witness != k->parse("x")) return false;
  if (!mod_r(g.f(), OrePoly(k, {-*r.witness, k->one()})).is_zero()) return false;
  g.d0 = k->parse("x^-3");
  const auto none = split_solver(g, 10);
  return !none.witness && none.label == "division (uncertified at bound 10)";
}

bool plt_checks() {
  auto k = fpx(0);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const Element a = k->random_element(rng);
    const Element b = k->random_element(rng);
    const OrePoly fa(k, {-a, k->one()});
    const OrePoly fb(k, {-b, k->one()});
    if (resultant(fa, fb, 1) != OrePoly(k, {-(a + b), k->one()})) return false;
  }
  for (auto tower : {fpx(0), fpx(3)}) {
    std::mt19937_64 r2(5);
    for (std::size_t d = 1; d <= 4; ++d) {
      for (int i = 0; i < 5; ++i) {
        const auto f = random_monic(tower, r2, d, RandomSpec{});
        if (characteristic_polynomial(from_polynomial(f), 1).h != f) return false;
      }
    }
  }
  const auto z = characteristic_polynomial(zero_plt(k, 2), 7);
  auto s = PetitAlgebra::make(z.h);
  return z.h.deg() == 2 && right_nucleus(*s, default_ansatz(*s)).dim() == 4;
}

bool scenarios() {
  const auto a = scenario_builder(3, 1, 2);
  if (a.regime != "nonassociative" || a.dimension != 6 || a.two_sided) return false;
  if (a.algebra->modulus() != parse_ore(a.tower, "t^2 - x")) return false;
  if (!a.nucleus || *a.nucleus >= 3) return false;
  const auto b = scenario_builder(3, 1, 3);
  if (b.regime != "differential_extension" || b.dimension != 9 || !b.two_sided) return false;
  if (b.center != std::optional<std::size_t>(1)) return false;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (unsigned n = 1; n <= 4; ++n) {
      const auto c = bookkeeping(p, n);
      mpz_class m;
      mpz_ui_pow_ui(m.get_mpz_t(), p, n);
      mpz_class dim;
      mpz_ui_pow_ui(dim.get_mpz_t(), p, n + m.get_ui() - 1);
      if (c.m != m || c.m_squared != m * m || c.dim != dim) return false;
      if (!c.n_bound || !c.fits || c.strict != (n + 1 < m)) return false;
    }
  }
  return true;
}

// Whitespace-separated words; double quotes group words into one argument.
std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  bool have = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
      have = true;
    } else if (!quoted && (c == ' ' || c == '\t')) {
      if (have) out.push_back(cur);
      cur.clear();
      have = false;
    } else {
      cur += c;
      have = true;
    }
  }
  if (have) out.push_back(cur);
  return out;
}

bool cli_goldens(const std::string& dir) {
  std::ifstream cases(dir + "/cases.txt");
  if (!cases) return false;
  int count = 0;
  bool saw_not_found = false;
  std::string line;
  while (std::getline(cases, line)) {
    const auto tok = tokenize(line);
    if (tok.empty() || tok[0].starts_with("#")) continue;
    const int expected_code = std::stoi(tok[1]);
    std::vector<std::string> args{"orealg"};
    bool text = false;
    for (std::size_t i = 2; i < tok.size(); ++i) {
      if (tok[i] == "--text") {
        text = true;
      } else {
        args.push_back(tok[i].ends_with(".session") ? dir + "/" + tok[i] : tok[i]);
      }
    }
    if (!text) args.push_back("--json");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli_main(args, out, err);
    std::ifstream want(dir + "/expected/" + tok[0] + ".out", std::ios::binary);
    std::ostringstream expected;
    expected << want.rdbuf();
    if (code != expected_code) return false;
    if ((expected_code == 1 ? err.str() : out.str()) != expected.str()) return false;
    saw_not_found = saw_not_found || code == kExitNotFound;
    ++count;
  }
  return count > 0 && saw_not_found;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <golden-dir>\n";
    return 1;
  }
  const std::string golden = argv[1];
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria = {
      {"Ore arithmetic on 200 random cases", ore_random_suite},
      {"right_divmod(t^2, t - x) = (t + x, x^2 + 1)", division_example},
      {"(t - b)^p = t^p - V_p(b) over F3(x) and F5(x)", frobenius},
      {"eigenring of t^2 over Q(x) at N = 2", eigenring_t2},
      {"nuclei of t^2 - x over F3(x)", nuclei_nonassociative},
      {"two-sidedness and associators", two_sided_and_associators},
      {"minimum p-polynomial, center and bound", center_and_bound},
      {"split solver witnesses and bounded failure", split_examples},
      {"resultants, characteristic polynomials, zero transform", plt_checks},
      {"scenario builder and bookkeeping", scenarios},
      {"CLI golden outputs and exit codes", [&] { return cli_goldens(golden); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    std::string why;
    try {
      ok = criteria[i].second();
    } catch (const std::exception& e) {
      why = std::string(" (") + e.what() + ")";
    }
    if (!ok) ++failed;
    std::cout << (ok ? "PASS " : "FAIL ") << (i + 1 < 10 ? " " : "") << i + 1 << "  " << criteria[i].first << why
              << '\n';
  }
  return failed == 0 ? 0 : 1;
}
