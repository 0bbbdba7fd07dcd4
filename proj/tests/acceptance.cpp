// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "oracles.hpp"
#include "prohecke/config.hpp"
#include "prohecke/emit.hpp"
#include "prohecke/errors.hpp"
#include "properties.hpp"

using namespace prohecke;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(s < 1 ? 2 : 3);
  os << s << " s";
  return os.str();
}

std::vector<std::string> preset_files() {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(PROHECKE_PRESET_DIR))
    if (e.path().extension() == ".ini") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

props::Setup setup_from(const Session& s, const std::string& label) {
  props::Setup out;
  out.rd = s.rd;
  out.ext = s.ext;
  out.params = s.params;
  out.H = s.H;
  out.center = s.center;
  out.label = label;
  return out;
}

struct Loaded {
  std::string name;
  Session session;
};

std::vector<Loaded> load_presets() {
  std::vector<Loaded> out;
  for (const auto& f : preset_files()) out.push_back({fs::path(f).stem().string(), open_session(load_config(f))});
  return out;
}

Session load(const std::string& name) {
  return open_session(load_config(std::string(PROHECKE_PRESET_DIR) + "/" + name + ".ini"));
}

// ---------------------------------------------------------------------------
// Closed formulas written as products of factors T[word] and c[word], where
// word is a W(1) word in the generator lifts and the summation variable t.

std::string substitute_t(const std::string& word, const std::string& t) {
  std::string out;
  std::size_t pos = 0;
  while (pos <= word.size()) {
    std::size_t end = word.find('*', pos);
    if (end == std::string::npos) end = word.size();
    std::string tok = word.substr(pos, end - pos);
    if (!out.empty()) out += '*';
    out += tok == "t" ? t : tok;
    pos = end + 1;
  }
  return out;
}

HeckeElement eval_term(const Session& s, const std::string& term, const ZElem& t) {
  const HeckeAlgebra& H = *s.H;
  const Extension& ext = *s.ext;
  std::istringstream in(term);
  std::string sign;
  in >> sign;
  HeckeElement acc = H.one();
  for (std::string f; in >> f;) {
    char kind = f[0];
    std::string word = substitute_t(f.substr(2, f.size() - 3), ext.z().format(t));
    W1Element g = ext.normalize_word(ext.parse_word(word));
    HeckeElement factor = kind == 'T' ? H.basis(g) : H.from_group_algebra(s.params->c_of(g));
    acc = H.mul(acc, factor);
  }
  return sign == "-" ? -acc : acc;
}

// sum over t in the fiber {t : lift*t in C} of the listed terms.
HeckeElement eval_formula(const Session& s, const ConjClass& C, const std::string& lift,
                          const std::vector<std::string>& terms) {
  std::unordered_set<W1Element, W1ElementHash> members(C.elements.begin(), C.elements.end());
  HeckeElement out = s.H->zero();
  for (const auto& t : s.ext->z().elements()) {
    W1Element lt = s.ext->normalize_word(s.ext->parse_word(lift + "*" + s.ext->z().format(t)));
    if (!members.count(lt)) continue;
    for (const auto& term : terms) out += eval_term(s, term, t);
  }
  return out;
}

const std::vector<std::string> kGl2C1 = {
    "+ T[s0*s1*s0*s1*t]",
    "+ T[s1*s0*s1*t*s0]",
    "- T[s0*s1*s0] c[s1*t]",
    "- c[s0] T[s1*s0*s1*t]",
    "+ c[s0] c[s1] T[s0*s1*t]",
    "+ c[s0] T[s1*s0] c[s1*t]",
    "- T[s0] c[s1] c[s0] c[s1*t]",
    "- c[s0] c[s1] c[s0] T[s1*t]",
    "+ c[s0] c[s1] c[s0] c[s1*t]",
};

const std::vector<std::string> kGl2C2 = {
    "+ T[s0*s1*s0*tau*t]",
    "+ T[s1*s0*s1*tau*tau^-1*s0*tau*t*s1^-1]",
    "- T[s0*s1] c[s0] T[tau*t]",
    "- c[s0] T[s1*s0*tau*t]",
    "+ c[s0] c[s1] T[s0*tau*t]",
    "+ c[s0] T[s1] c[s0] T[tau*t]",
    "- c[s0] c[s1] c[s0] T[tau*t]",
};

const std::vector<std::string> kSl3 = {
    "+ T[s0*s1*s2*s1*t]",
    "+ T[s1*t*s0*s1*s2]",
    "+ T[s2*s0*s1*s2*s1*t*s2^-1]",
    "+ T[s1*s2*s1*t*s0]",
    "+ T[s2*s1*t*s0*s1]",
    "+ T[s2^-1*s1*s2*s1*t*s0*s2]",
    "- c[s0] T[s1*s2*s1*t]",
    "- T[s1*t*s0*s1] c[s2]",
    "- T[s2*s0*s2] c[s1*s1^-1*s2^-1*s1*s2*s1*t*s2^-1]",
    "- T[s0*s1*s2] c[s1*t]",
    "- T[s0] c[s1] T[s2*s1*t]",
    "- T[s1*t*s0] c[s1] T[s2]",
    "- T[s1*s2] c[s1*t] T[s0]",
    "- c[s1] T[s2*s1*t*s0]",
    "- T[s2] c[s1*t] T[s0*s1]",
    "+ T[s0*s1] c[s2] c[s1*t]",
    "+ T[s0] c[s1] T[s2] c[s1*t]",
    "+ c[s0] T[s1*s2] c[s1*t]",
    "+ c[s0] c[s1] T[s2*s1*t]",
    "+ T[s1] c[s2] c[s1*t] T[s0]",
    "+ c[s1] T[s2] c[s1*t] T[s0]",
    "- T[s0] c[s1] c[s2] c[s1*t]",
    "- c[s0] c[s1] c[s2] T[s1*t]",
    "- c[s0] c[s1] T[s2] c[s1*t]",
    "+ c[s0] c[s1] c[s2] c[s1*t]",
};

struct Outcome {
  bool ok = true;
  std::string detail;
};

// For every seed over the given lift: compute h_C from scratch, emit it,
// and compare with the closed formula term for term.
Outcome check_formula(const std::vector<std::string>& presets, const std::string& lift,
                      const std::vector<std::string>& terms, double limit) {
  Outcome o;
  double worst = 0;
  int classes = 0;
  std::size_t adm = 0;
  for (const auto& name : presets) {
    Session s = load(name);
    std::set<std::vector<W1Element>> seen;
    for (const auto& t : s.ext->z().elements()) {
      W1Element seed = s.ext->normalize_word(s.ext->parse_word(lift + "*" + s.ext->z().format(t)));
      auto start = Clock::now();
      Center fresh(s.H, s.config.bounds.class_size);
      ConjClass C = fresh.conj_class(seed);
      if (!seen.insert(C.elements).second) continue;
      std::string emitted = emit_text(*s.H, fresh.h_C(C));
      double took = seconds_since(start);
      worst = std::max(worst, took);
      ++classes;
      adm = fresh.adm(C).size();
      std::string expected = emit_text(*s.H, eval_formula(s, C, lift, terms));
      if (emitted != expected) {
        o.ok = false;
        o.detail = name + ", class of " + s.ext->format(seed) + ": emitted element differs from the closed formula";
        return o;
      }
      if (adm != terms.size()) {
        o.ok = false;
        o.detail = name + ": |Adm| = " + std::to_string(adm) + ", expected " + std::to_string(terms.size());
        return o;
      }
      if (took > limit) {
        o.ok = false;
        o.detail = name + ": took " + fmt_seconds(took) + ", limit " + fmt_seconds(limit);
        return o;
      }
    }
  }
  o.detail = std::to_string(classes) + " classes, " + std::to_string(adm) + " group terms each, exact match; slowest " +
             fmt_seconds(worst) + " (limit " + fmt_seconds(limit) + ")";
  return o;
}

Outcome from_tally(const props::Tally& t, int min_instances, const std::string& what) {
  Outcome o;
  o.ok = t.failed == 0 && t.instances >= min_instances;
  std::ostringstream os;
  os << t.instances << " " << what << " (need >= " << min_instances << "), " << t.total << " checks, " << t.failed
     << " failed";
  if (t.failed) os << "; first: " << t.first_failure;
  o.detail = os.str();
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const std::string& title, const std::function<Outcome()>& run) {
    auto start = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << id << "] " << title << ": " << o.detail << " ["
              << fmt_seconds(seconds_since(start)) << "]" << std::endl;
  };

  report(1, "GL2 class over s0s1s0s1, closed formula", [] {
    return check_formula({"gl2_split", "gl2_nonsplit"}, "s0*s1*s0*s1", kGl2C1, 5.0);
  });
  report(2, "GL2 class over s0s1s0tau, closed formula", [] {
    return check_formula({"gl2_split", "gl2_nonsplit"}, "s0*s1*s0*tau", kGl2C2, 5.0);
  });
  report(3, "SL3 class over s0s1s2s1, closed formula", [] {
    return check_formula({"sl3_split", "sl3_nonsplit"}, "s0*s1*s2*s1", kSl3, 60.0);
  });

  report(4, "centrality of h_C, all preset classes with l(lambda0) <= 6", [] {
    Outcome o;
    int classes = 0, presets = 0;
    for (const auto& [name, s] : load_presets()) {
      ++presets;
      for (const auto& C : s.center->classes(6, s.config.bounds.omega_window)) {
        ++classes;
        if (auto fail = s.center->centrality_failure(s.center->h_C(C))) {
          o.ok = false;
          o.detail = name + ", class of " + s.ext->format(C.seed) + ": " + *fail;
          return o;
        }
      }
    }
    o.detail = std::to_string(classes) + " classes over " + std::to_string(presets) + " presets, all central";
    return o;
  });

  std::vector<props::Setup> setups;
  std::vector<Loaded> presets = load_presets();
  for (const auto& p : presets) setups.push_back(setup_from(p.session, p.name));

  report(5, "r_{v,w} independent of mask, reduced word and lifts", [&] {
    std::mt19937_64 rng(5);
    props::Tally t;
    for (const auto& S : setups) t += props::operator_independence(S, rng, 25, 8);
    return from_tally(t, 200, "(v,w) pairs with l(w) <= 8");
  });

  report(6, "composition and left/right module identities", [&] {
    std::mt19937_64 rng(6);
    props::Tally comp, left, right;
    for (const auto& S : setups) {
      comp += props::composition(S, rng, 25, 8);
      left += props::module_property(S, rng, 25, true, 6);
      right += props::module_property(S, rng, 25, false, 6);
    }
    Outcome a = from_tally(comp, 200, "compositions"), b = from_tally(left, 200, "left identities"),
            c = from_tally(right, 200, "right identities");
    return Outcome{a.ok && b.ok && c.ok, a.detail + "; " + b.detail + "; " + c.detail};
  });

  report(7, "h_w independent of the admissible lambda (exhaustive)", [&] {
    props::Tally t;
    for (const auto& S : setups)
      for (const auto& C : S.center->classes(6, 1)) t += props::h_w_independence(S, C);
    return from_tally(t, 1, "pairs (C, x)");
  });

  report(8, "supp_max structure and basis round trip", [&] {
    std::mt19937_64 rng(8);
    props::Tally t;
    for (const auto& S : setups) t += props::basis_round_trip(S, S.center->classes(4, 1), rng, 8);
    return from_tally(t, 50, "random combinations");
  });

  report(9, "oracles: Bruhat vs subwords, length vs Cayley BFS, W(1) associativity", [&] {
    Outcome o;
    long bruhat = 0, lengths = 0, triples = 0;
    for (const char* name : {"SL2", "SL3"}) {
      RootDatum rd(preset_root_datum(name));
      auto ball = oracle::cayley_ball(rd, 5);
      for (const auto& [w, d] : ball) {
        auto word = rd.canonical_reduced_word(w);
        auto below = oracle::subword_products(rd, word.letters, word.omega);
        for (const auto& [v, dv] : ball) {
          ++bruhat;
          if (rd.bruhat_leq(v, w) != (below.count(v) > 0)) {
            o.ok = false;
            o.detail = std::string(name) + ": Bruhat order disagrees at " + rd.format(v) + " <= " + rd.format(w);
            return o;
          }
        }
      }
    }
    for (const auto& n : root_datum_preset_names()) {
      RootDatum rd(preset_root_datum(n));
      for (const auto& [w, d] : oracle::cayley_ball(rd, 8)) {
        ++lengths;
        if (rd.length(w) != d) {
          o.ok = false;
          o.detail = n + ": length of " + rd.format(w) + " is not " + std::to_string(d);
          return o;
        }
      }
    }
    std::mt19937_64 rng(9);
    for (const auto& S : setups) {
      const Extension& ext = *S.ext;
      for (int k = 0; k < 10000; ++k) {
        W1Element a = props::random_lift(ext, oracle::random_element(*S.rd, rng, 8), rng);
        W1Element b = props::random_lift(ext, oracle::random_element(*S.rd, rng, 8), rng);
        W1Element c = props::random_lift(ext, oracle::random_element(*S.rd, rng, 8), rng);
        ++triples;
        if (ext.mul(ext.mul(a, b), c) != ext.mul(a, ext.mul(b, c))) {
          o.ok = false;
          o.detail = S.label + ": (ab)c != a(bc) for a = " + ext.format(a) + ", b = " + ext.format(b) +
                     ", c = " + ext.format(c);
          return o;
        }
      }
    }
    o.detail = std::to_string(bruhat) + " Bruhat pairs, " + std::to_string(lengths) + " lengths, " +
               std::to_string(triples) + " triples over " + std::to_string(setups.size()) + " extensions; all agree";
    return o;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures;
}
