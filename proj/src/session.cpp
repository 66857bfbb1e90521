#include "orealg/session.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "orealg/error.hpp"
#include "orealg/expr.hpp"

namespace orealg {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, int line) : text_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  int column() const { return static_cast<int>(pos_) + 1; }
  int line() const { return line_; }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  std::string identifier(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
    }
    if (start == pos_) throw SyntaxError(line_, column(), what);
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) throw SyntaxError(line_, column(), std::string("'") + c + "'");
    ++pos_;
  }

  std::uint64_t integer(const char* what) {
    skip_ws();
    std::uint64_t v = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first) throw SyntaxError(line_, column(), what);
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  // The rest of the line as an expression, syntax-checked; returns its text.
  std::string expression() {
    skip_ws();
    const int col = column();
    std::string rest(text_.substr(pos_));
    while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t' || rest.back() == '\r')) rest.pop_back();
    if (rest.empty()) throw SyntaxError(line_, col, "expression");
    parse_expression(rest, line_, col);
    pos_ = text_.size();
    return rest;
  }

  void end() {
    if (!at_end()) throw SyntaxError(line_, column(), "end of line");
  }

 private:
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

const std::set<std::string> kKeywords = {"base", "layer", "delta", "bound", "seed", "format", "t"};

}  // namespace

SessionFile parse_session(std::string_view text) {
  SessionFile s;
  bool have_base = false;
  std::set<std::string> layer_names;
  std::set<std::string> binding_names;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    Cursor c(line, line_no);
    if (c.at_end()) continue;
    {
      Cursor probe(line, line_no);
      probe.skip_ws();
      if (line.substr(static_cast<std::size_t>(probe.column() - 1)).starts_with("#")) continue;
    }
    const int key_col = [&] {
      Cursor probe(line, line_no);
      probe.skip_ws();
      return probe.column();
    }();
    const std::string key = c.identifier("a keyword or binding name");
    const bool header = key == "base" || key == "layer" || key == "delta";
    if (header && !s.bindings.empty()) throw SyntaxError(line_no, key_col, "a binding (header lines come first)");
    if (key != "base" && header && !have_base) throw SyntaxError(line_no, key_col, "'base' line first");

    if (key == "base") {
      if (have_base) throw SyntaxError(line_no, key_col, "a single 'base' line");
      c.expect('=');
      c.skip_ws();
      const int col = c.column();
      const std::string v = c.identifier("Q or F<p>");
      if (v == "Q") {
        s.tower.base = TowerDescription::Base::Rationals;
        s.tower.p = 0;
      } else if (v.size() > 1 && v[0] == 'F' &&
                 v.find_first_not_of("0123456789", 1) == std::string::npos && v.size() < 11) {
        s.tower.base = TowerDescription::Base::PrimeField;
        s.tower.p = static_cast<std::uint32_t>(std::stoull(v.substr(1)));
      } else {
        throw SyntaxError(line_no, col, "Q or F<p>");
      }
      c.end();
      have_base = true;
    } else if (key == "layer") {
      c.skip_ws();
      const int kind_col = c.column();
      const std::string kind = c.identifier("'rational' or 'pinsep'");
      TowerDescription::Layer layer;
      if (kind == "rational") {
        layer.kind = TowerDescription::Layer::Kind::Rational;
      } else if (kind == "pinsep") {
        layer.kind = TowerDescription::Layer::Kind::PInsep;
      } else {
        throw SyntaxError(line_no, kind_col, "'rational' or 'pinsep'");
      }
      c.skip_ws();
      const int name_col = c.column();
      layer.name = c.identifier("a generator name");
      if (kKeywords.count(layer.name) || layer_names.count(layer.name)) {
        throw SyntaxError(line_no, name_col, "a fresh generator name");
      }
      if (layer.kind == TowerDescription::Layer::Kind::PInsep) {
        if (s.tower.base == TowerDescription::Base::Rationals) {
          throw Error(ErrorKind::TypeError, "line " + std::to_string(line_no) +
                                                ": a p-th root layer needs base F<p>, not Q");
        }
        layer.alpha = c.expression();
      }
      c.end();
      layer_names.insert(layer.name);
      s.tower.layers.push_back(std::move(layer));
    } else if (key == "delta") {
      c.skip_ws();
      const int name_col = c.column();
      const std::string name = c.identifier("a generator name");
      if (!layer_names.count(name)) throw SyntaxError(line_no, name_col, "a declared generator");
      c.expect('=');
      s.tower.derivation.emplace_back(name, c.expression());
    } else if (key == "bound" || key == "seed") {
      c.expect('=');
      const auto v = c.integer("a nonnegative integer");
      c.end();
      if (key == "bound") {
        if (v > 1000000) throw SyntaxError(line_no, key_col, "a bound <= 1000000");
        s.bound = static_cast<unsigned>(v);
      } else {
        s.seed = v;
      }
    } else if (key == "format") {
      c.expect('=');
      c.skip_ws();
      const int col = c.column();
      const std::string v = c.identifier("text or json");
      if (v != "text" && v != "json") throw SyntaxError(line_no, col, "text or json");
      c.end();
      s.format = v;
    } else {
      if (!have_base) throw SyntaxError(line_no, key_col, "'base' line first");
      if (key == "t" || layer_names.count(key)) {
        throw Error(ErrorKind::TypeError,
                    "line " + std::to_string(line_no) + ": '" + key + "' is not a free binding name");
      }
      if (binding_names.count(key)) {
        throw Error(ErrorKind::TypeError,
                    "line " + std::to_string(line_no) + ": '" + key + "' is bound twice");
      }
      c.expect('=');
      s.bindings.emplace_back(key, c.expression());
      binding_names.insert(key);
    }
  }
  if (!have_base) throw SyntaxError(line_no + 1, 1, "a 'base' line");
  return s;
}

std::string print_session(const SessionFile& s) {
  std::ostringstream out;
  out << "base = " << (s.tower.base == TowerDescription::Base::Rationals ? "Q" : "F" + std::to_string(s.tower.p))
      << '\n';
  for (const auto& l : s.tower.layers) {
    if (l.kind == TowerDescription::Layer::Kind::Rational) {
      out << "layer rational " << l.name << '\n';
    } else {
      out << "layer pinsep " << l.name << ' ' << l.alpha << '\n';
    }
  }
  for (const auto& [name, image] : s.tower.derivation) out << "delta " << name << " = " << image << '\n';
  if (s.bound) out << "bound = " << *s.bound << '\n';
  if (s.seed) out << "seed = " << *s.seed << '\n';
  if (s.format) out << "format = " << *s.format << '\n';
  for (const auto& [name, expr] : s.bindings) out << name << " = " << expr << '\n';
  return out.str();
}

Session load_session(const SessionFile& file) {
  Session s;
  s.file = file;
  s.tower = FieldTower::make(file.tower);
  for (const auto& [name, text] : file.bindings) s.values.insert_or_assign(name, parse_ore(s.tower, text, s.values));
  return s;
}

}  // namespace orealg
