#pragma once

// Session configuration files: INI-style sections with tuple literals for Z
// elements and the polynomial grammar for coefficients.
//
//   [root_datum]  preset = GL2 | type, rank, dim, simple_roots, simple_coroots, omega_translation
//   [extension]   preset = split | nonsplit | custom, z_orders, action.sN, omega_action,
//                 mu.sN, braid.sI.sJ, twist.sN, omega_power
//   [parameters]  ring, mode = generic | explicit, c.sN = "(t): poly ; ..."
//   [bounds]      class_size, sigma_cache, move_budget, omega_window, samples,
//                 check_length, max_length, seed
//   [output]      format = text | json | latex

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "prohecke/center.hpp"
#include "prohecke/cover.hpp"
#include "prohecke/hecke.hpp"
#include "prohecke/weyl.hpp"

namespace prohecke {

struct IniValue {
  std::string text;
  int line = 0;
  int column = 0;  // of the first character of the value
};

// section -> key -> value, in file order within a section.
struct IniDocument {
  std::map<std::string, std::vector<std::pair<std::string, IniValue>>> sections;

  const IniValue* find(const std::string& section, const std::string& key) const;
};

// Throws ParseError with the line and column of the offending text.
IniDocument parse_ini(std::string_view text);

struct Bounds {
  std::size_t class_size = 1000000;
  std::size_t sigma_cache = 1 << 16;
  int move_budget = 64;
  int omega_window = 1;
  int samples = 200;
  int check_length = 4;
  int max_length = 4;
  std::uint64_t seed = 1;
};

struct SessionConfig {
  RootDatumSpec root;
  // Extension settings are kept unresolved until the root datum exists.
  IniDocument doc;
  Ring ring;
  bool generic_parameters = true;
  Bounds bounds;
  std::string format = "text";
  // Canonical "section.key=value" listing used for hashing.
  std::string canonical;
};

SessionConfig parse_config(std::string_view text);
SessionConfig load_config(const std::string& path);

// FNV-1a, 64 bit, as 16 hex digits.
std::string content_hash(std::string_view text);

struct Session {
  SessionConfig config;
  std::shared_ptr<const RootDatum> rd;
  std::shared_ptr<const Extension> ext;
  std::shared_ptr<const ParameterSystem> params;
  std::shared_ptr<const HeckeAlgebra> H;
  std::shared_ptr<const Center> center;
};

// Builds every object; all configuration errors surface here as ConfigError
// (ParseError when a position is known).
Session open_session(SessionConfig config);

// "(0): c0 ; (1): c1 + 2"
GroupAlgebraValue parse_group_algebra(const AbelianGroup& z, const Ring& ring, std::string_view text);

}  // namespace prohecke
