#pragma once

// Randomized property checks shared by the unit tests and the acceptance
// binary. Each check returns a Tally; callers decide how many instances to run.

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "prohecke/center.hpp"
#include "prohecke/cover.hpp"
#include "prohecke/hecke.hpp"
#include "prohecke/rop.hpp"

namespace props {

using namespace prohecke;

struct Tally {
  int instances = 0;  // random instances drawn; each may record several checks
  int total = 0;
  int failed = 0;
  std::string first_failure;

  void record(bool ok, const std::function<std::string()>& what) {
    ++total;
    if (!ok) {
      if (failed == 0) first_failure = what();
      ++failed;
    }
  }
  bool ok() const { return failed == 0 && total > 0; }
  Tally& operator+=(const Tally& o) {
    if (failed == 0 && o.failed > 0) first_failure = o.first_failure;
    instances += o.instances;
    total += o.total;
    failed += o.failed;
    return *this;
  }
};

struct Setup {
  std::shared_ptr<const RootDatum> rd;
  std::shared_ptr<const Extension> ext;
  std::shared_ptr<const ParameterSystem> params;
  std::shared_ptr<const HeckeAlgebra> H;
  std::shared_ptr<const Center> center;
  std::string label;
};

inline Setup make_setup(const std::string& preset, bool nonsplit) {
  Setup s;
  s.rd = std::make_shared<const RootDatum>(preset_root_datum(preset));
  s.ext = std::make_shared<const Extension>(s.rd, nonsplit ? nonsplit_extension(*s.rd) : split_extension(*s.rd, {3}));
  s.params = std::make_shared<const ParameterSystem>(ParameterSystem::generic(s.ext, Ring::parse("polynomial")));
  s.H = std::make_shared<const HeckeAlgebra>(s.params);
  s.center = std::make_shared<const Center>(s.H);
  s.label = preset + (nonsplit ? "/nonsplit" : "/split");
  return s;
}

inline std::vector<Setup> all_setups() {
  std::vector<Setup> out;
  for (const char* p : {"SL2", "GL2", "SL3", "GL3"})
    for (bool ns : {false, true}) out.push_back(make_setup(p, ns));
  return out;
}

// A reduced word of w chosen by stripping random left descents.
inline ReducedWord random_reduced_word(const RootDatum& rd, const WeylElement& w, std::mt19937_64& rng) {
  ReducedWord word;
  WeylElement cur = w;
  while (rd.length(cur) > 0) {
    std::vector<int> desc;
    for (int i = 0; i < rd.num_affine(); ++i)
      if (rd.is_left_descent(i, cur)) desc.push_back(i);
    int i = desc[std::uniform_int_distribution<std::size_t>(0, desc.size() - 1)(rng)];
    word.letters.push_back(i);
    cur = rd.multiply(rd.simple(i), cur);
  }
  word.omega = rd.omega_exponent(w);
  return word;
}

// Every reduced word of w.
inline std::vector<std::vector<int>> all_reduced_words(const RootDatum& rd, const WeylElement& w) {
  if (rd.length(w) == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = 0; i < rd.num_affine(); ++i)
    if (rd.is_left_descent(i, w))
      for (auto tail : all_reduced_words(rd, rd.multiply(rd.simple(i), w))) {
        tail.insert(tail.begin(), i);
        out.push_back(std::move(tail));
      }
  return out;
}

// A random v <= w: product of a random subword of a reduced word.
inline WeylElement random_below(const RootDatum& rd, const WeylElement& w, std::mt19937_64& rng) {
  ReducedWord word = rd.canonical_reduced_word(w);
  std::vector<bool> mask(word.letters.size());
  for (std::size_t k = 0; k < mask.size(); ++k) mask[k] = rng() & 1;
  return evaluate_mask(rd, word, mask);
}

inline ZElem random_z(const Extension& ext, std::mt19937_64& rng) {
  ZElem t;
  for (std::size_t g = 0; g < ext.z().rank(); ++g) t.e[g] = std::uniform_int_distribution<int>(0, 11)(rng);
  return ext.z().normalize(t);
}

inline W1Element random_lift(const Extension& ext, const WeylElement& w, std::mt19937_64& rng) {
  return W1Element{random_z(ext, rng), w};
}

// T_{w~} written as T_t * prod T_{lifts[k]} * T_{omega_lift}: returns t.
inline ZElem prefix_for(const Extension& ext, const W1Element& wt, const std::vector<W1Element>& lifts,
                        const W1Element& omega_lift) {
  W1Element p = ext.identity();
  for (const auto& l : lifts) p = ext.mul(p, l);
  p = ext.mul(p, omega_lift);
  return ext.z().sub(wt.z, p.z);
}

// r_{v,w}(T_{w~}) is independent of the non-decreasing mask, of the reduced
// word of w, and of the chosen generator lifts.
inline Tally operator_independence(const Setup& S, std::mt19937_64& rng, int pairs, int max_length = 8,
                                   std::size_t max_words = 1000) {
  Tally tally;
  const RootDatum& rd = *S.rd;
  const Extension& ext = *S.ext;
  const HeckeAlgebra& H = *S.H;
  for (int n = 0; n < pairs; ++n) {
    WeylElement w = oracle::random_element(rd, rng, max_length);
    if (rd.length(w) > max_length) continue;
    WeylElement v = random_below(rd, w, rng);
    W1Element wt = random_lift(ext, w, rng);
    ++tally.instances;
    HeckeElement expect = r_apply(H, v, w, H.basis(wt));
    auto describe = [&] { return S.label + ": v = " + rd.format(v) + ", w = " + rd.format(w); };

    const std::int64_t k = rd.omega_exponent(w);
    W1Element om = ext.lift(rd.omega_power(k));
    auto words = all_reduced_words(rd, w);
    if (words.size() > max_words) words.resize(max_words);
    for (const auto& letters : words) {
      ReducedWord word{letters, k};
      std::vector<W1Element> lifts;
      for (int i : letters) lifts.push_back(ext.generator(i));
      ZElem t = prefix_for(ext, wt, lifts, om);
      for (const auto& mask : all_non_decreasing_masks(rd, v, word))
        tally.record(r_apply_word(H, t, lifts, om, mask) == expect, describe);
    }
    // Retwisted lifts s~ u_s and tau~^k u.
    ReducedWord word = random_reduced_word(rd, w, rng);
    std::vector<W1Element> lifts;
    for (int i : word.letters) lifts.push_back(ext.mul_z(ext.generator(i), random_z(ext, rng)));
    W1Element om2 = ext.mul_z(om, random_z(ext, rng));
    ZElem t = prefix_for(ext, wt, lifts, om2);
    Subexpression sub = find_subexpression(rd, v, word);
    tally.record(r_apply_word(H, t, lifts, om2, sub.mask) == expect, [&] { return describe() + " (retwisted lifts)"; });
  }
  return tally;
}

// r_{u,v} r_{v,w} = r_{u,w}.
inline Tally composition(const Setup& S, std::mt19937_64& rng, int instances, int max_length = 7) {
  Tally tally;
  const RootDatum& rd = *S.rd;
  const HeckeAlgebra& H = *S.H;
  for (int n = 0; n < instances; ++n) {
    WeylElement w = oracle::random_element(rd, rng, max_length);
    WeylElement v = random_below(rd, w, rng);
    WeylElement u = random_below(rd, v, rng);
    HeckeElement h = H.basis(random_lift(*S.ext, w, rng));
    ++tally.instances;
    tally.record(r_apply(H, u, v, r_apply(H, v, w, h)) == r_apply(H, u, w, h), [&] {
      return S.label + ": u = " + rd.format(u) + ", v = " + rd.format(v) + ", w = " + rd.format(w);
    });
  }
  return tally;
}

// T_u r_{v,w}(T_w) = r_{uv,uw}(T_{uw}) and the right-handed version, for
// length-additive u.
inline Tally module_property(const Setup& S, std::mt19937_64& rng, int instances, bool left, int max_length = 6) {
  Tally tally;
  const RootDatum& rd = *S.rd;
  const Extension& ext = *S.ext;
  const HeckeAlgebra& H = *S.H;
  int tries = 0;
  while (tally.total < instances && tries++ < instances * 200) {
    WeylElement w = oracle::random_element(rd, rng, max_length);
    WeylElement u = oracle::random_element(rd, rng, 3);
    WeylElement v = random_below(rd, w, rng);
    WeylElement uv = left ? rd.multiply(u, v) : rd.multiply(v, u);
    WeylElement uw = left ? rd.multiply(u, w) : rd.multiply(w, u);
    if (rd.length(uv) != rd.length(u) + rd.length(v) || rd.length(uw) != rd.length(u) + rd.length(w)) continue;
    W1Element ut = random_lift(ext, u, rng), wt = random_lift(ext, w, rng);
    ++tally.instances;
    HeckeElement lhs, rhs;
    if (left) {
      lhs = H.left_mul_basis(ut, r_apply(H, v, w, H.basis(wt)));
      rhs = r_apply(H, uv, uw, H.basis(ext.mul(ut, wt)));
    } else {
      lhs = H.right_mul_basis(r_apply(H, v, w, H.basis(wt)), ut);
      rhs = r_apply(H, uv, uw, H.basis(ext.mul(wt, ut)));
    }
    tally.record(lhs == rhs, [&] {
      return S.label + (left ? " left" : " right") + ": u = " + rd.format(u) + ", v = " + rd.format(v) +
             ", w = " + rd.format(w);
    });
  }
  return tally;
}

// h_w computed from every admissible lambda in pi(C) agrees.
inline Tally h_w_independence(const Setup& S, const ConjClass& C) {
  Tally tally;
  const RootDatum& rd = *S.rd;
  const Center& Z = *S.center;
  for (const auto& x : Z.adm(C)) {
    ++tally.instances;
    HeckeElement ref = Z.h_w(C, x);
    for (const auto& lambda : C.projection)
      if (rd.bruhat_leq(x, lambda))
        tally.record(Z.h_w_via(C, x, lambda) == ref, [&] {
          return S.label + ": x = " + rd.format(x) + " via " + rd.format(lambda) + " (class over " +
                 rd.format(C.lambda0) + ")";
        });
  }
  return tally;
}

// Random combinations of up to three h_C: supp_max is a union of classes in
// Lambda(1) with constant coefficients, and the basis expansion round-trips.
inline Tally basis_round_trip(const Setup& S, const std::vector<ConjClass>& classes, std::mt19937_64& rng,
                              int instances) {
  Tally tally;
  const Center& Z = *S.center;
  const HeckeAlgebra& H = *S.H;
  const RootDatum& rd = *S.rd;
  std::uniform_int_distribution<std::size_t> pick(0, classes.size() - 1);
  std::uniform_int_distribution<int> coef(-4, 4), count(1, 3);
  for (int n = 0; n < instances; ++n) {
    ++tally.instances;
    std::map<std::size_t, Poly> chosen;
    for (int k = count(rng); k > 0; --k) {
      int a = coef(rng);
      if (a == 0) a = 1;
      Poly p = H.ring().constant(a);
      if (rng() % 3 == 0) p = p * Poly::variable("r", H.ring().modulus);
      chosen[pick(rng)] = p;
    }
    HeckeElement h = H.zero();
    for (const auto& [i, a] : chosen) h += Z.h_C(classes[i]).scaled(a);
    auto describe = [&] { return S.label + ": combination of " + std::to_string(chosen.size()) + " classes"; };
    if (h.is_zero()) {
      tally.record(false, describe);
      continue;
    }
    bool ok = true;
    auto top = H.supp_max(h);
    for (const auto& g : top) {
      if (!rd.is_translation(g.w)) {
        ok = false;
        break;
      }
      for (const auto& e : Z.conj_class(g).elements)
        if (!(h.coeff(e) == h.coeff(g))) ok = false;
    }
    auto got = Z.express_in_basis(h);
    std::map<W1Element, Poly> expect, actual;
    for (const auto& [i, a] : chosen) expect.emplace(classes[i].seed, a);
    for (const auto& [C, a] : got) actual.emplace(C.seed, a);
    tally.record(ok && expect == actual, describe);
  }
  return tally;
}

}  // namespace props
