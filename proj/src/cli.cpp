#include "prohecke/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "prohecke/config.hpp"
#include "prohecke/emit.hpp"
#include "prohecke/errors.hpp"

namespace prohecke {

namespace {

namespace fs = std::filesystem;

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string config;
  std::string format;
  std::string cache_dir;
  int max_length = -1;
  bool max_length_given = false;
  std::string class_selector;
  std::string input;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string output_format(const Options& o, const Session& s) {
  std::string f = o.format.empty() ? s.config.format : o.format;
  if (f != "text" && f != "json" && f != "latex") throw UsageError("unknown format '" + f + "'");
  return f;
}

std::string cache_directory(const Options& o) {
  if (!o.cache_dir.empty()) return o.cache_dir;
  if (const char* env = std::getenv("PROHECKE_CACHE_DIR"); env && *env) return env;
  return {};
}

std::string join_projection(const Session& s, const ConjClass& C) {
  std::string out = "{";
  for (std::size_t i = 0; i < C.projection.size(); ++i) {
    if (i) out += ", ";
    out += s.rd->format(C.projection[i]);
  }
  return out + "}";
}

int cmd_validate(const Session& s, std::ostream& out) {
  const RootDatum& rd = *s.rd;
  bool ok = true;
  out << "PASS root datum " << rd.spec().label << ": rank " << rd.rank() << ", dim " << rd.dim() << ", "
      << rd.num_affine() << " affine generators\n";
  CheckReport ext = s.ext->check_consistency(s.config.bounds.samples, s.config.bounds.seed);
  for (const auto& line : ext.lines) out << line << '\n';
  ok &= ext.ok;
  CheckReport par = s.params->check(s.config.bounds.check_length);
  for (const auto& line : par.lines) out << line << '\n';
  ok &= par.ok;
  out << (ok ? "validation passed\n" : "validation failed\n");
  return ok ? kExitOk : kExitValidation;
}

int cmd_classes(const Session& s, const Options& o, std::ostream& out) {
  if (o.max_length < 0) throw UsageError("--max-length must be nonnegative");
  auto classes = s.center->classes(o.max_length, s.config.bounds.omega_window);
  const std::string format = output_format(o, s);
  if (format == "json") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const ConjClass& C = classes[i];
      std::vector<std::string> proj;
      for (const auto& x : C.projection) proj.push_back(s.rd->format(x));
      doc.push_back({{"index", i},
                     {"seed", s.ext->format(C.seed)},
                     {"size", C.elements.size()},
                     {"lambda0", s.rd->format(C.lambda0)},
                     {"projection", proj},
                     {"adm", s.center->adm(C).size()}});
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const ConjClass& C = classes[i];
    out << '[' << i << "] seed=" << s.ext->format(C.seed) << " size=" << C.elements.size()
        << " lambda0=" << s.rd->format(C.lambda0) << " adm=" << s.center->adm(C).size()
        << " pi=" << join_projection(s, C) << '\n';
  }
  return kExitOk;
}

ConjClass resolve_class(const Session& s, const Options& o) {
  const std::string& sel = o.class_selector;
  bool index = !sel.empty() && std::all_of(sel.begin(), sel.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (index) {
    int bound = o.max_length_given ? o.max_length : s.config.bounds.max_length;
    if (bound < 0) throw UsageError("--max-length must be nonnegative");
    auto classes = s.center->classes(bound, s.config.bounds.omega_window);
    std::size_t i = std::stoull(sel);
    if (i >= classes.size())
      throw UsageError("class index " + sel + " out of range: " + std::to_string(classes.size()) +
                       " classes with translation length <= " + std::to_string(bound));
    return classes[i];
  }
  W1Element seed;
  try {
    seed = s.ext->parse(sel);
  } catch (const ConfigError& e) {
    throw UsageError(std::string("bad class selector: ") + e.what());
  }
  return s.center->conj_class(seed);
}

int cmd_center(const Session& s, const Options& o, std::ostream& out, std::ostream& err) {
  ConjClass C = resolve_class(s, o);
  const std::string format = output_format(o, s);
  const std::string config_hash = content_hash(s.config.canonical);
  const std::string seed_text = s.ext->format(C.seed);

  HeckeElement h;
  bool cached = false;
  fs::path cache_file;
  if (std::string dir = cache_directory(o); !dir.empty()) {
    cache_file = fs::path(dir) / (content_hash(s.config.canonical + "\n" + seed_text) + ".hc");
    if (fs::exists(cache_file)) {
      try {
        h = parse_text(*s.H, read_file(cache_file.string()));
        cached = true;
      } catch (const Error& e) {
        err << "warning: ignoring unreadable cache entry " << cache_file.string() << ": " << e.what() << '\n';
      }
    }
  }
  if (!cached) {
    h = s.center->h_C(C);
    if (auto fail = s.center->centrality_failure(h))
      throw ConsistencyError("computed element for the class of " + seed_text + " is not central: " + *fail +
                             " (the extension data is probably inconsistent)");
    if (!cache_file.empty()) {
      std::error_code ec;
      fs::create_directories(cache_file.parent_path(), ec);
      fs::path tmp = cache_file;
      tmp += ".tmp";
      {
        std::ofstream f(tmp, std::ios::binary);
        f << emit_text(*s.H, h);
      }
      fs::rename(tmp, cache_file, ec);
      if (ec) err << "warning: could not write cache entry " << cache_file.string() << '\n';
    }
  }

  if (format == "json") {
    out << emit_json(*s.H, h,
                     {{"config_hash", config_hash},
                      {"class_seed", seed_text},
                      {"lambda0", s.rd->format(C.lambda0)},
                      {"class_size", std::to_string(C.elements.size())},
                      {"adm", std::to_string(s.center->adm(C).size())},
                      {"ring", s.H->ring().name()}});
  } else if (format == "latex") {
    out << emit_latex(*s.H, h);
  } else {
    out << "# class " << seed_text << " size=" << C.elements.size() << " adm=" << s.center->adm(C).size()
        << " config=" << config_hash << '\n';
    out << emit_text(*s.H, h);
  }
  return kExitOk;
}

int cmd_express(const Session& s, const Options& o, std::ostream& out) {
  std::string text = read_file(o.input);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  HeckeElement h = first != std::string::npos && text[first] == '{' ? parse_json(*s.H, text) : parse_text(*s.H, text);
  auto coeffs = s.center->express_in_basis(h);
  const std::string format = output_format(o, s);
  if (format == "json") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& [C, a] : coeffs)
      doc.push_back({{"class_seed", s.ext->format(C.seed)}, {"lambda0", s.rd->format(C.lambda0)}, {"coeff", a.to_string()}});
    out << doc.dump(2) << '\n';
  } else {
    if (coeffs.empty()) out << "0\n";
    for (const auto& [C, a] : coeffs) {
      std::string c = a.to_string();
      if (a.terms().size() > 1) c = "(" + c + ")";
      out << c << " * h_C[" << s.ext->format(C.seed) << "]\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Central elements of pro-p Iwahori Hecke algebras at q = 0", "prohecke"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config, "session configuration file")->required()->check(CLI::ExistingFile);
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--cache-dir", o.cache_dir, "directory for cached central elements (or PROHECKE_CACHE_DIR)");

  auto* validate = app.add_subcommand("validate", "check the root datum, extension and parameters");
  auto* classes = app.add_subcommand("classes", "list finite conjugacy classes");
  classes->add_option("--max-length", o.max_length, "bound on the length of the dominant translation")->required();
  auto* center = app.add_subcommand("center", "compute the central element of a class");
  center->add_option("--class", o.class_selector, "class index from 'classes' or a seed like '(0); s0*s1*s0*s1'")
      ->required();
  auto* center_len = center->add_option("--max-length", o.max_length, "length bound used to resolve a class index");
  auto* express = app.add_subcommand("express", "expand a central element in the class basis");
  express->add_option("--input", o.input, "element file (text or JSON)")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  o.max_length_given = center_len->count() > 0;

  Session session;
  try {
    session = open_session(load_config(o.config));
  } catch (const ConfigError& e) {
    err << "config error: " << o.config << ":" << e.what() << '\n';
    return kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }

  try {
    if (*validate) return cmd_validate(session, out);
    if (*classes) return cmd_classes(session, o, out);
    if (*center) return cmd_center(session, o, out, err);
    if (*express) return cmd_express(session, o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotCentralError& e) {
    err << "not central: " << e.what() << '\n';
    return kExitComputation;
  } catch (const ParseError& e) {
    err << "input error: " << o.input << ":" << e.what() << '\n';
    return kExitValidation;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitUsage;
}

}  // namespace prohecke
