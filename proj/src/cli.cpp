#include "orealg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "orealg/charp.hpp"
#include "orealg/error.hpp"
#include "orealg/nucleus.hpp"
#include "orealg/plt.hpp"
#include "orealg/scenario.hpp"
#include "orealg/session.hpp"

namespace orealg {

namespace {

using json = nlohmann::json;

struct Options {
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> bound;
};

struct Outcome {
  json value;
  int code = kExitOk;
};

struct Context {
  const Session* session = nullptr;
  Options opts;
  std::vector<std::string> args;

  const TowerPtr& tower() const { return session->tower; }

  std::uint64_t seed() const {
    if (opts.seed) return *opts.seed;
    if (session && session->file.seed) return *session->file.seed;
    return 1;
  }

  unsigned bound(unsigned fallback) const {
    if (opts.bound) return *opts.bound;
    if (session && session->file.bound) return *session->file.bound;
    if (const char* env = std::getenv("OREALG_BOUND")) {
      char* end = nullptr;
      const unsigned long v = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0') return static_cast<unsigned>(v);
    }
    return fallback;
  }

  void arity(std::size_t lo, std::size_t hi, const char* usage) const {
    if (args.size() < lo || args.size() > hi) {
      throw Error(ErrorKind::InvalidArgument, std::string("usage: ") + usage);
    }
  }

  OrePoly poly(std::size_t i) const {
    const auto it = session->values.find(args[i]);
    if (it != session->values.end()) return it->second;
    return parse_ore(tower(), args[i], session->values);
  }

  Element element(std::size_t i) const {
    const OrePoly g = poly(i);
    if (!g.is_zero() && g.deg() > 0) {
      throw Error(ErrorKind::TypeError, "'" + args[i] + "' is not an element of K");
    }
    return g.coeff(0);
  }

  unsigned natural(std::size_t i) const {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(args[i], &used);
      if (used == args[i].size() && v < (1UL << 20)) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidArgument, "'" + args[i] + "' is not a small nonnegative integer");
  }
};

json strings(const std::vector<OrePoly>& v) {
  json out = json::array();
  for (const auto& g : v) out.push_back(g.str());
  return out;
}

json strings(const std::vector<Element>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(e.str());
  return out;
}

json subspace(const FSubspace& s) {
  return {{"dim", s.dim()}, {"kind", to_string(s.kind)}, {"basis", strings(s.basis)}, {"closed", s.closed}};
}

bool finite(const TowerPtr& k) { return k->has_fbasis() && k->constants_certified(); }

// Ansatz from the defaults, with the numerator bound overridable.
AnsatzConfig ansatz(const Context& c, const PetitAlgebra& a) {
  AnsatzConfig cfg = default_ansatz(a);
  cfg.numerator_degree = c.bound(cfg.numerator_degree);
  return cfg;
}

json ansatz_json(const AnsatzConfig& cfg) {
  return {{"numerator_degree", cfg.numerator_degree},
          {"denominator", cfg.denominator ? cfg.denominator->str() : "1"}};
}

PPolynomial p_polynomial(const Context& c) {
  if (c.tower()->characteristic() == 0) {
    throw Error(ErrorKind::WrongCharacteristic, "p-polynomials need a tower of characteristic p");
  }
  return min_p_polynomial(c.tower());
}

// ---------------------------------------------------------------------------
// verbs

Outcome cmd_mul(const Context& c) {
  c.arity(1, 64, "mul <a> [b ...]");
  OrePoly r = c.poly(0);
  for (std::size_t i = 1; i < c.args.size(); ++i) r = r * c.poly(i);
  return {{{"product", r.str()}}};
}

Outcome cmd_divmod(const Context& c, bool right) {
  c.arity(2, 2, right ? "divmod-r <f> <g>" : "divmod-l <f> <g>");
  const auto d = right ? right_divmod(c.poly(0), c.poly(1)) : left_divmod(c.poly(0), c.poly(1));
  return {{{"quotient", d.quotient.str()}, {"remainder", d.remainder.str()}}};
}

Outcome cmd_gcd(const Context& c) {
  c.arity(2, 2, "gcd-r <f> <g>");
  return {{{"gcd", right_gcd(c.poly(0), c.poly(1)).str()}}};
}

Outcome cmd_petit(const Context& c) {
  c.arity(1, 1, "petit <f>");
  const auto a = PetitAlgebra::make(c.poly(0));
  json dim = nullptr;
  if (finite(c.tower())) dim = *a->f_dimension();
  return {{{"modulus", a->modulus().str()},
           {"degree", a->degree()},
           {"dimension", dim},
           {"two_sided", a->two_sided()},
           {"t_associative", a->t_associative()},
           {"degenerate", a->degenerate()},
           {"field_in_right_nucleus", field_in_right_nucleus(*a)}}};
}

Outcome cmd_assoc(const Context& c) {
  c.arity(4, 4, "assoc <f> <a> <b> <c>");
  const auto a = PetitAlgebra::make(c.poly(0));
  const auto r = a->associator(a->reduce(c.poly(1)), a->reduce(c.poly(2)), a->reduce(c.poly(3)));
  return {{{"associator", r.str()}}};
}

Outcome cmd_two_sided(const Context& c) {
  c.arity(1, 1, "two-sided <f>");
  return {{{"two_sided", is_two_sided(c.poly(0))}}};
}

Outcome cmd_nuclei(const Context& c) {
  c.arity(1, 1, "nuclei <f>");
  const auto a = PetitAlgebra::make(c.poly(0));
  json out;
  if (finite(c.tower())) {
    const auto nc = nucleus_and_center(*a);
    out["right"] = subspace(right_nucleus(*a));
    out["left"] = subspace(left_nucleus(*a, c.seed()));
    out["middle"] = subspace(middle_nucleus(*a, c.seed()));
    out["nucleus"] = subspace(nc.nucleus);
    out["center"] = subspace(nc.center);
    out["ansatz"] = nullptr;
  } else {
    const auto cfg = ansatz(c, *a);
    out["right"] = subspace(right_nucleus(*a, cfg));
    out["left"] = subspace(left_nucleus(*a, c.seed()));
    out["middle"] = subspace(middle_nucleus(*a, c.seed()));
    out["nucleus"] = nullptr;
    out["center"] = nullptr;
    out["ansatz"] = ansatz_json(cfg);
  }
  return {out};
}

Outcome cmd_eigenring(const Context& c) {
  c.arity(1, 1, "eigenring <f>");
  const auto a = PetitAlgebra::make(c.poly(0));
  const FSubspace r = finite(c.tower()) ? right_nucleus(*a) : right_nucleus(*a, ansatz(c, *a));
  return {{{"dim", r.dim()}, {"basis", strings(r.basis)}, {"certified_max", r.certified()}},
          r.certified() ? kExitOk : kExitNotFound};
}

Outcome cmd_apoly(const Context& c) {
  c.arity(1, 1, "apoly <f>");
  const auto a = PetitAlgebra::make(c.poly(0));
  const auto r = finite(c.tower()) ? a_polynomial_test(*a) : a_polynomial_test(*a, ansatz(c, *a));
  return {{{"verdict", to_string(r.verdict)}, {"dim", r.dim}, {"maximum", r.maximum}},
          r.verdict == APolyResult::Verdict::Inconclusive ? kExitNotFound : kExitOk};
}

Outcome cmd_vp(const Context& c) {
  c.arity(1, 2, "vp <b> [e]");
  const unsigned e = c.args.size() == 2 ? c.natural(1) : 1;
  return {{{"e", e}, {"value", v_pe(*c.tower(), c.element(0), e).str()}}};
}

Outcome cmd_minpoly(const Context& c) {
  c.arity(0, 0, "minpoly");
  const auto g = p_polynomial(c);
  return {{{"g", g.g().str()}, {"e", g.e}, {"coefficients", strings(g.c)}}};
}

Outcome cmd_center(const Context& c) {
  c.arity(0, 1, "center [d0]");
  const Element d0 = c.args.empty() ? c.tower()->zero() : c.element(0);
  const auto info = center_of_R(c.tower(), d0);
  return {{{"g", info.g.g().str()}, {"z", info.z.str()}}};
}

Outcome cmd_bound(const Context& c) {
  c.arity(1, 1, "bound <f>");
  const auto b = bound_of(c.poly(0));
  return {{{"bound", b.str()}, {"degree", b.deg()}}};
}

SplitResult split_for(const Context& c, const Element& d0) {
  PPolynomial g = p_polynomial(c);
  g.d0 = d0;
  const unsigned fallback = 2 * static_cast<unsigned>(c.tower()->fbasis().dimension());
  return split_solver(g, c.bound(fallback));
}

Outcome cmd_diffext(const Context& c) {
  c.arity(1, 1, "diffext <d0>");
  const Element d0 = c.element(0);
  const auto a = differential_extension(c.tower(), d0);
  const auto s = split_for(c, d0);
  json w = nullptr;
  if (s.witness) w = s.witness->str();
  return {{{"modulus", a->modulus().str()},
           {"dimension", *a->f_dimension()},
           {"two_sided", a->two_sided()},
           {"label", s.label},
           {"bound", s.bound},
           {"witness_b", w}},
          s.witness ? kExitOk : kExitNotFound};
}

Outcome cmd_split(const Context& c) {
  c.arity(1, 1, "split <d0>");
  const auto s = split_for(c, c.element(0));
  if (s.witness) return {{{"verdict", "split"}, {"witness_b", s.witness->str()}}};
  return {{{"verdict", "no_solution_within_bound"}}, kExitNotFound};
}

Outcome cmd_roots(const Context& c) {
  c.arity(1, 1, "roots <f>");
  const auto r = right_root_search(c.poly(0), c.bound(2));
  return {{{"roots", strings(r.roots)}, {"bound_used", r.bound_used}},
          r.roots.empty() ? kExitNotFound : kExitOk};
}

Outcome cmd_resultant(const Context& c) {
  c.arity(2, 2, "resultant <f> <g>");
  const auto r = resultant(c.poly(0), c.poly(1), c.seed());
  return {{{"resultant", r.str()}, {"degree", r.deg()}}};
}

Outcome cmd_charpoly(const Context& c) {
  c.arity(1, 2, "charpoly <f> | charpoly zero <n>");
  const bool zero = c.args[0] == "zero" && !c.session->values.count("zero");
  if (zero != (c.args.size() == 2)) throw Error(ErrorKind::InvalidArgument, "usage: charpoly <f> | charpoly zero <n>");
  const auto t = zero ? zero_plt(c.tower(), c.natural(1)) : from_polynomial(c.poly(0));
  const auto cert = characteristic_polynomial(t, c.seed());
  return {{{"charpoly", cert.h.str()}, {"vector", strings(cert.v)}}};
}

Outcome cmd_similar(const Context& c) {
  c.arity(2, 2, "similar <f> <g>");
  const auto r = similarity_search(c.poly(0), c.poly(1), c.bound(2));
  if (!r.witness) return {{{"verdict", "no_witness_within_bound"}, {"bound", r.bound}}, kExitNotFound};
  return {{{"verdict", "similar"},
           {"u", r.witness->first.str()},
           {"u_prime", r.witness->second.str()},
           {"bound", r.bound}}};
}

json optional_size(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

Outcome cmd_scenario(const Context& c) {
  c.arity(3, 3, "scenario <p> <e> <m>");
  const auto r = scenario_builder(c.natural(0), c.natural(1), c.natural(2));
  json counts = nullptr;
  if (r.counts) {
    counts = {{"n", r.counts->n},
              {"m", r.counts->m.get_str()},
              {"m_squared", r.counts->m_squared.get_str()},
              {"dimension", r.counts->dim.get_str()},
              {"n_bound", r.counts->n_bound},
              {"fits", r.counts->fits},
              {"strict", r.counts->strict}};
  }
  return {{{"p", r.p},
           {"e", r.e},
           {"m", r.m},
           {"regime", r.regime},
           {"hypothesis", r.hypothesis},
           {"modulus", r.algebra->modulus().str()},
           {"dimension", r.dimension},
           {"two_sided", r.two_sided},
           {"nuclei",
            {{"right", optional_size(r.right)},
             {"left", optional_size(r.left)},
             {"middle", optional_size(r.middle)},
             {"nucleus", optional_size(r.nucleus)},
             {"center", optional_size(r.center)}}},
           {"bookkeeping", counts}}};
}

using Handler = std::function<Outcome(const Context&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"mul", cmd_mul},
      {"divmod-r", [](const Context& c) { return cmd_divmod(c, true); }},
      {"divmod-l", [](const Context& c) { return cmd_divmod(c, false); }},
      {"gcd-r", cmd_gcd},
      {"petit", cmd_petit},
      {"assoc", cmd_assoc},
      {"two-sided", cmd_two_sided},
      {"nuclei", cmd_nuclei},
      {"eigenring", cmd_eigenring},
      {"apoly", cmd_apoly},
      {"vp", cmd_vp},
      {"minpoly", cmd_minpoly},
      {"center", cmd_center},
      {"bound", cmd_bound},
      {"diffext", cmd_diffext},
      {"split", cmd_split},
      {"roots", cmd_roots},
      {"resultant", cmd_resultant},
      {"charpoly", cmd_charpoly},
      {"similar", cmd_similar},
      {"scenario", cmd_scenario},
  };
  return table;
}

// ---------------------------------------------------------------------------
// text output

std::string scalar_text(const json& v) {
  if (v.is_null()) return "none";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit_text(const json& v, const std::string& prefix, std::ostream& out) {
  for (const auto& [key, value] : v.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      emit_text(value, name, out);
    } else if (value.is_array()) {
      out << name << ":";
      if (value.empty()) out << " (empty)";
      out << '\n';
      for (const auto& item : value) out << "  " << scalar_text(item) << '\n';
    } else {
      out << name << ": " << scalar_text(value) << '\n';
    }
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read session file " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

const std::vector<std::string>& cli_verbs() {
  static const std::vector<std::string> verbs = [] {
    std::vector<std::string> v;
    for (const auto& [name, h] : handlers()) v.push_back(name);
    return v;
  }();
  return verbs;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic in differential polynomial rings and Petit algebras", "orealg"};
  Options opts;
  std::string verb;
  std::vector<std::string> positional;
  std::uint64_t seed = 0;
  unsigned bound = 0;
  app.add_option("verb", verb, "command")->required();
  app.add_option("args", positional, "session file, then command arguments");
  app.add_flag("--json", opts.json, "emit JSON");
  auto* seed_opt = app.add_option("--seed", seed, "random seed");
  auto* bound_opt = app.add_option("--bound", bound, "search / ansatz bound");
  app.positionals_at_end(false);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    out << "verbs:";
    for (const auto& v : cli_verbs()) out << ' ' << v;
    out << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  if (seed_opt->count()) opts.seed = seed;
  if (bound_opt->count()) opts.bound = bound;

  try {
    const auto it = handlers().find(verb);
    if (it == handlers().end()) throw Error(ErrorKind::InvalidArgument, "unknown verb '" + verb + "'");
    Context c;
    c.opts = opts;
    std::optional<Session> session;
    if (verb == "scenario") {
      c.args = positional;
    } else {
      if (positional.empty()) throw Error(ErrorKind::InvalidArgument, "missing session file");
      const SessionFile file = parse_session(read_file(positional.front()));
      session = load_session(file);
      c.session = &*session;
      c.args.assign(positional.begin() + 1, positional.end());
      if (!opts.json && file.format == "json") c.opts.json = true;
    }
    const Outcome r = it->second(c);
    if (c.opts.json) {
      out << r.value.dump(2) << '\n';
    } else {
      emit_text(r.value, "", out);
    }
    return r.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace orealg
