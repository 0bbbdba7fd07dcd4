#include "prohecke/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "prohecke/errors.hpp"

namespace prohecke {

namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail_at(const IniValue& v, const std::string& what) { throw ParseError(what, v.line, v.column); }

// Re-raise errors from value sub-parsers at the value's position.
template <class F>
auto at(const IniValue& v, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    int col = v.column + std::max(0, e.column() - 1);
    std::string msg = e.what();
    if (e.line() > 0) msg = msg.substr(msg.find(": ") + 2);
    throw ParseError(msg, v.line, col);
  } catch (const ConfigError& e) {
    throw ParseError(e.what(), v.line, v.column);
  }
}

std::int64_t parse_int(const IniValue& v) {
  std::string_view s = trim_view(v.text);
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail_at(v, "expected an integer, got '" + v.text + "'");
  return out;
}

std::int64_t parse_nonneg(const IniValue& v) {
  std::int64_t x = parse_int(v);
  if (x < 0) fail_at(v, "expected a nonnegative integer");
  return x;
}

// "(1,0), (0,1)" -> {{1,0},{0,1}}; a bare "3, 3" is one tuple.
std::vector<std::vector<std::int64_t>> parse_tuples(const IniValue& v) {
  std::vector<std::vector<std::int64_t>> out;
  const std::string& s = v.text;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto number = [&]() -> std::int64_t {
    skip();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::int64_t x = 0;
    const char* b = s.data() + start + (s[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(b, s.data() + pos, x);
    if (ec != std::errc() || ptr != s.data() + pos || pos == start)
      throw ParseError("expected an integer", v.line, v.column + static_cast<int>(start));
    return x;
  };
  skip();
  if (pos < s.size() && s[pos] != '(') {
    std::vector<std::int64_t> row;
    for (;;) {
      row.push_back(number());
      skip();
      if (pos == s.size()) break;
      if (s[pos] != ',') throw ParseError("expected ','", v.line, v.column + static_cast<int>(pos));
      ++pos;
    }
    out.push_back(row);
    return out;
  }
  while (pos < s.size()) {
    skip();
    if (s[pos] != '(') throw ParseError("expected '('", v.line, v.column + static_cast<int>(pos));
    ++pos;
    std::vector<std::int64_t> row;
    skip();
    if (pos < s.size() && s[pos] == ')') {
      ++pos;
    } else {
      for (;;) {
        row.push_back(number());
        skip();
        if (pos < s.size() && s[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < s.size() && s[pos] == ')') {
          ++pos;
          break;
        }
        throw ParseError("expected ',' or ')'", v.line, v.column + static_cast<int>(pos));
      }
    }
    out.push_back(row);
    skip();
    if (pos < s.size()) {
      if (s[pos] != ',') throw ParseError("expected ',' between tuples", v.line, v.column + static_cast<int>(pos));
      ++pos;
    }
  }
  return out;
}

// "s3" -> 3
int parse_generator(std::string_view name, const IniValue& where) {
  if (name.size() < 2 || name[0] != 's') fail_at(where, "expected a generator name sN, got '" + std::string(name) + "'");
  int i = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), i);
  if (ec != std::errc() || ptr != name.data() + name.size())
    fail_at(where, "expected a generator name sN, got '" + std::string(name) + "'");
  return i;
}

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"root_datum", {"preset", "label", "type", "rank", "dim", "simple_roots", "simple_coroots", "omega_translation"}},
      {"extension", {"preset", "z_orders", "omega_action", "omega_power"}},
      {"parameters", {"ring", "mode"}},
      {"bounds",
       {"class_size", "sigma_cache", "move_budget", "omega_window", "samples", "check_length", "max_length", "seed"}},
      {"output", {"format"}},
  };
  return keys;
}

bool is_prefixed_key(const std::string& section, const std::string& key) {
  auto starts = [&](std::string_view p) { return key.rfind(p, 0) == 0 && key.size() > p.size(); };
  if (section == "extension") return starts("action.") || starts("mu.") || starts("braid.") || starts("twist.");
  if (section == "parameters") return starts("c.");
  return false;
}

RootDatumSpec root_from(const IniDocument& doc) {
  auto get = [&](const char* key) { return doc.find("root_datum", key); };
  if (!doc.sections.count("root_datum")) throw ParseError("missing [root_datum] section", 1, 1);
  if (const IniValue* p = get("preset")) {
    for (const char* k : {"type", "rank", "dim", "simple_roots", "simple_coroots", "omega_translation"})
      if (const IniValue* other = get(k)) fail_at(*other, std::string("'") + k + "' cannot be combined with a preset");
    return at(*p, [&] { return preset_root_datum(std::string(trim_view(p->text))); });
  }
  RootDatumSpec s;
  for (const char* k : {"type", "rank", "simple_roots", "simple_coroots"})
    if (!get(k)) throw ParseError(std::string("[root_datum] needs '") + k + "' or a preset", 1, 1);
  std::string_view type = trim_view(get("type")->text);
  if (type.size() != 1 || !std::isupper(static_cast<unsigned char>(type[0])))
    fail_at(*get("type"), "type must be a single letter A-G");
  s.type = type[0];
  s.rank = static_cast<int>(parse_int(*get("rank")));
  s.dim = get("dim") ? static_cast<int>(parse_int(*get("dim"))) : s.rank;
  s.label = get("label") ? std::string(trim_view(get("label")->text)) : std::string(type) + std::to_string(s.rank);
  s.simple_roots = parse_tuples(*get("simple_roots"));
  s.simple_coroots = parse_tuples(*get("simple_coroots"));
  for (const char* k : {"simple_roots", "simple_coroots"}) {
    const auto& rows = std::string(k) == "simple_roots" ? s.simple_roots : s.simple_coroots;
    if (static_cast<int>(rows.size()) != s.rank) fail_at(*get(k), std::string(k) + " needs one tuple per simple root");
    for (const auto& r : rows)
      if (static_cast<int>(r.size()) != s.dim) fail_at(*get(k), std::string(k) + " tuples must have dim entries");
  }
  if (const IniValue* om = get("omega_translation")) {
    auto rows = parse_tuples(*om);
    if (rows.size() != 1 || static_cast<int>(rows[0].size()) != s.dim)
      fail_at(*om, "omega_translation must be a single tuple with dim entries");
    s.omega_translation = rows[0];
  }
  return s;
}

ExtensionSpec extension_from(const IniDocument& doc, const RootDatum& rd, const Bounds& bounds) {
  const int n = rd.num_affine();
  auto get = [&](const char* key) { return doc.find("extension", key); };
  std::string preset = "split";
  if (const IniValue* p = get("preset")) preset = std::string(trim_view(p->text));
  std::vector<std::int64_t> orders = {3};
  if (const IniValue* zo = get("z_orders")) {
    auto rows = parse_tuples(*zo);
    if (rows.size() != 1) fail_at(*zo, "z_orders must be a list of integers");
    orders = rows[0];
    for (auto o : orders)
      if (o < 0) fail_at(*zo, "group orders must be nonnegative (0 for an infinite cyclic factor)");
    if (orders.size() > kMaxZRank) fail_at(*zo, "Z may have at most " + std::to_string(kMaxZRank) + " factors");
  }

  ExtensionSpec spec;
  if (preset == "split" || preset == "custom") {
    spec = split_extension(rd, orders);
    if (preset == "custom") spec.label = "custom";
  } else if (preset == "nonsplit") {
    if (get("z_orders")) fail_at(*get("z_orders"), "the nonsplit preset fixes Z = Z/4");
    spec = nonsplit_extension(rd);
  } else {
    fail_at(*get("preset"), "unknown extension preset '" + preset + "' (known: split, nonsplit, custom)");
  }
  AbelianGroup z(spec.z_orders);
  const std::size_t k = z.rank();

  auto zelem = [&](const IniValue& v) { return at(v, [&] { return z.normalize(z.parse(std::string(trim_view(v.text)))); }); };
  auto matrix = [&](const IniValue& v) {
    auto rows = parse_tuples(v);
    if (rows.size() != k) fail_at(v, "action matrices need " + std::to_string(k) + " rows");
    ZAutomorphism a;
    for (std::size_t i = 0; i < k; ++i) {
      if (rows[i].size() != k) fail_at(v, "action matrix rows need " + std::to_string(k) + " entries");
      for (std::size_t j = 0; j < k; ++j) a.m[i][j] = rows[i][j];
    }
    return a;
  };
  auto generator = [&](std::string_view name, const IniValue& v) {
    int i = parse_generator(name, v);
    if (i < 0 || i >= n) fail_at(v, "generator s" + std::to_string(i) + " does not exist (s0..s" + std::to_string(n - 1) + ")");
    return i;
  };

  static const std::vector<std::pair<std::string, IniValue>> none;
  auto found = doc.sections.find("extension");
  for (const auto& [key, v] : found == doc.sections.end() ? none : found->second) {
    auto dot = key.find('.');
    std::string head = key.substr(0, dot);
    std::string rest = dot == std::string::npos ? "" : key.substr(dot + 1);
    if (head == "action") {
      spec.action[generator(rest, v)] = matrix(v);
    } else if (head == "mu") {
      spec.mu[generator(rest, v)] = zelem(v);
    } else if (head == "twist") {
      if (!rd.has_omega()) fail_at(v, "twists need a nontrivial Omega");
      spec.omega_twist[generator(rest, v)] = zelem(v);
    } else if (head == "braid") {
      auto d2 = rest.find('.');
      if (d2 == std::string::npos) fail_at(v, "braid keys look like braid.sI.sJ");
      int i = generator(rest.substr(0, d2), v), j = generator(rest.substr(d2 + 1), v);
      if (i == j) fail_at(v, "braid defects need two distinct generators");
      if (rd.coxeter_m(i, j) == 0) fail_at(v, "s" + std::to_string(i) + " and s" + std::to_string(j) + " satisfy no braid relation");
      ZElem d = zelem(v);
      // d_{j,i} = -d_{i,j}
      if (i > j) {
        std::swap(i, j);
        d = z.neg(d);
      }
      spec.braid[{i, j}] = d;
    } else if (key == "omega_action") {
      if (!rd.has_omega()) fail_at(v, "omega_action needs a nontrivial Omega");
      spec.omega_action = matrix(v);
    } else if (key == "omega_power") {
      if (!rd.has_omega() || rd.omega_order() == 0) fail_at(v, "omega_power needs a finite nontrivial Omega");
      spec.omega_power_defect = zelem(v);
    }
  }
  spec.sigma_cache_limit = bounds.sigma_cache;
  spec.move_budget_factor = bounds.move_budget;
  return spec;
}

}  // namespace

const IniValue* IniDocument::find(const std::string& section, const std::string& key) const {
  auto it = sections.find(section);
  if (it == sections.end()) return nullptr;
  for (const auto& [k, v] : it->second)
    if (k == key) return &v;
  return nullptr;
}

IniDocument parse_ini(std::string_view text) {
  IniDocument doc;
  std::string section;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    const std::size_t line_start = pos;
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    // Comments start with '#' or ';' at the beginning of a line, or with " #".
    std::string_view body = line;
    std::size_t first = body.find_first_not_of(" \t");
    if (first == std::string_view::npos || body[first] == '#' || body[first] == ';') {
      if (end == text.size()) break;
      continue;
    }
    if (auto hash = body.find(" #"); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim_view(body);
    int col = static_cast<int>(first) + 1;
    if (body.front() == '[') {
      if (body.back() != ']') throw ParseError("unterminated section header", line_no, col);
      section = std::string(trim_view(body.substr(1, body.size() - 2)));
      if (!known_keys().count(section)) throw ParseError("unknown section [" + section + "]", line_no, col);
      if (doc.sections.count(section)) throw ParseError("duplicate section [" + section + "]", line_no, col);
      doc.sections[section];
    } else {
      auto eq = body.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no, col);
      if (section.empty()) throw ParseError("key outside of any section", line_no, col);
      std::string key(trim_view(body.substr(0, eq)));
      if (key.empty()) throw ParseError("empty key", line_no, col);
      if (!known_keys().at(section).count(key) && !is_prefixed_key(section, key))
        throw ParseError("unknown key '" + key + "' in [" + section + "]", line_no, col);
      if (doc.find(section, key)) throw ParseError("duplicate key '" + key + "'", line_no, col);
      std::string_view raw = body.substr(eq + 1);
      std::size_t lead = raw.find_first_not_of(" \t");
      IniValue v;
      v.text = std::string(trim_view(raw));
      v.line = line_no;
      v.column = static_cast<int>(body.data() - text.data() - line_start) + static_cast<int>(eq) + 2 +
                 static_cast<int>(lead == std::string_view::npos ? 0 : lead);
      if (v.text.empty()) throw ParseError("empty value for '" + key + "'", line_no, v.column);
      doc.sections[section].emplace_back(std::move(key), std::move(v));
    }
    if (end == text.size()) break;
  }
  return doc;
}

SessionConfig parse_config(std::string_view text) {
  SessionConfig cfg;
  cfg.doc = parse_ini(text);
  const IniDocument& doc = cfg.doc;
  cfg.root = root_from(doc);

  if (const IniValue* v = doc.find("parameters", "ring"))
    cfg.ring = at(*v, [&] { return Ring::parse(v->text); });
  else
    cfg.ring = Ring::parse("polynomial");
  std::string mode = "generic";
  if (const IniValue* v = doc.find("parameters", "mode")) {
    mode = v->text;
    if (mode != "generic" && mode != "explicit") fail_at(*v, "mode must be 'generic' or 'explicit'");
  }
  cfg.generic_parameters = mode == "generic";
  if (doc.sections.count("parameters"))
    for (const auto& [key, v] : doc.sections.at("parameters"))
      if (key.rfind("c.", 0) == 0 && cfg.generic_parameters)
        fail_at(v, "explicit c values need mode = explicit");
  if (!cfg.generic_parameters) {
    bool any = false;
    if (doc.sections.count("parameters"))
      for (const auto& [key, v] : doc.sections.at("parameters")) any |= key.rfind("c.", 0) == 0;
    if (!any) throw ParseError("mode = explicit needs at least one c.sN entry", doc.find("parameters", "mode")->line, 1);
  }

  Bounds& b = cfg.bounds;
  auto bound = [&](const char* key, auto& field) {
    if (const IniValue* v = doc.find("bounds", key)) field = static_cast<std::remove_reference_t<decltype(field)>>(parse_nonneg(*v));
  };
  bound("class_size", b.class_size);
  bound("sigma_cache", b.sigma_cache);
  bound("move_budget", b.move_budget);
  bound("omega_window", b.omega_window);
  bound("samples", b.samples);
  bound("check_length", b.check_length);
  bound("max_length", b.max_length);
  bound("seed", b.seed);
  if (b.move_budget < 1)
    fail_at(*doc.find("bounds", "move_budget"), "move_budget must be positive");

  if (const IniValue* v = doc.find("output", "format")) {
    cfg.format = v->text;
    if (cfg.format != "text" && cfg.format != "json" && cfg.format != "latex")
      fail_at(*v, "format must be text, json or latex");
  }

  std::ostringstream canon;
  for (const auto& [section, entries] : doc.sections) {
    std::vector<std::pair<std::string, std::string>> kv;
    for (const auto& [k, v] : entries) kv.emplace_back(k, v.text);
    std::sort(kv.begin(), kv.end());
    for (const auto& [k, v] : kv) canon << section << '.' << k << '=' << v << '\n';
  }
  cfg.canonical = canon.str();
  return cfg;
}

SessionConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string content_hash(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

GroupAlgebraValue parse_group_algebra(const AbelianGroup& z, const Ring& ring, std::string_view text) {
  GroupAlgebraValue out(&z, ring.modulus);
  std::string_view rest = text;
  std::size_t offset = 0;
  while (true) {
    std::size_t semi = rest.find(';');
    std::string_view part = rest.substr(0, semi);
    std::size_t colon = part.find(':');
    int col = static_cast<int>(offset) + 1;
    if (colon == std::string_view::npos) throw ParseError("expected '(t): coefficient'", 1, col);
    ZElem t;
    try {
      t = z.normalize(z.parse(std::string(trim_view(part.substr(0, colon)))));
    } catch (const ConfigError& e) {
      throw ParseError(e.what(), 1, col);
    }
    Poly c;
    try {
      c = parse_poly(trim_view(part.substr(colon + 1)), ring.modulus);
      ring.check(c);
    } catch (const ConfigError& e) {
      throw ParseError(e.what(), 1, col + static_cast<int>(colon) + 1);
    }
    out.add_term(t, c);
    if (semi == std::string_view::npos) break;
    rest = rest.substr(semi + 1);
    offset += semi + 1;
  }
  return out;
}

Session open_session(SessionConfig config) {
  Session s;
  const IniDocument& doc = config.doc;
  const IniValue* root_where = doc.find("root_datum", "preset");
  if (!root_where) root_where = doc.find("root_datum", "type");
  try {
    s.rd = std::make_shared<const RootDatum>(config.root);
  } catch (const ParseError&) {
    throw;
  } catch (const ConfigError& e) {
    throw ParseError(std::string("[root_datum] ") + e.what(), root_where ? root_where->line : 1, 1);
  }

  ExtensionSpec spec = extension_from(doc, *s.rd, config.bounds);
  try {
    s.ext = std::make_shared<const Extension>(s.rd, spec);
  } catch (const ParseError&) {
    throw;
  } catch (const ConfigError& e) {
    const IniValue* where = doc.find("extension", "preset");
    throw ParseError(std::string("[extension] ") + e.what(), where ? where->line : 1, 1);
  }

  if (config.generic_parameters) {
    const IniValue* where = doc.find("parameters", "mode");
    try {
      s.params = std::make_shared<const ParameterSystem>(
          ParameterSystem::generic(s.ext, config.ring, std::max(2, config.bounds.check_length + 2)));
    } catch (const ConfigError& e) {
      throw ParseError(std::string("[parameters] ") + e.what(), where ? where->line : 1, 1);
    }
  } else {
    std::map<int, GroupAlgebraValue> given;
    for (const auto& [key, v] : doc.sections.at("parameters")) {
      if (key.rfind("c.", 0) != 0) continue;
      int i = parse_generator(key.substr(2), v);
      if (i < 0 || i >= s.rd->num_affine()) fail_at(v, "generator s" + std::to_string(i) + " does not exist");
      given[i] = at(v, [&] { return parse_group_algebra(s.ext->z(), config.ring, v.text); });
    }
    try {
      s.params = std::make_shared<const ParameterSystem>(s.ext, config.ring, given);
    } catch (const ConfigError& e) {
      throw ParseError(std::string("[parameters] ") + e.what(), doc.find("parameters", "mode")->line, 1);
    }
  }
  s.H = std::make_shared<const HeckeAlgebra>(s.params);
  s.center = std::make_shared<const Center>(s.H, config.bounds.class_size);
  s.config = std::move(config);
  return s;
}

}  // namespace prohecke
