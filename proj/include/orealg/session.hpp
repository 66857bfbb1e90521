#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orealg/field_tower.hpp"
#include "orealg/ore_poly.hpp"

namespace orealg {

/// A session file: tower header, options, then named polynomial bindings.
///
///   # comment
///   base = F3                  (or Q)
///   layer rational x
///   layer pinsep u x^2 + 1     (u^p = alpha, characteristic p only)
///   delta x = 1
///   bound = 6
///   seed = 1
///   format = json              (or text)
///   f = t^2 - x
struct SessionFile {
  TowerDescription tower;
  std::vector<std::pair<std::string, std::string>> bindings;  // name -> expression text
  std::optional<unsigned> bound;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;

  bool operator==(const SessionFile&) const = default;
};

/// SyntaxError with the line and column of the first problem; TypeError for
/// header combinations the tower cannot have (a p-th root layer over Q).
SessionFile parse_session(std::string_view text);

/// Canonical text; parse_session(print_session(s)) == s.
std::string print_session(const SessionFile& s);

struct Session {
  SessionFile file;
  TowerPtr tower;
  Bindings values;
};

/// Builds the tower and evaluates the bindings in order (later bindings may
/// use earlier names).
Session load_session(const SessionFile& file);

}  // namespace orealg
