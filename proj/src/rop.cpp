#include "prohecke/rop.hpp"

#include "prohecke/errors.hpp"

namespace prohecke {

WeylElement evaluate_mask(const RootDatum& rd, const ReducedWord& word, const std::vector<bool>& mask) {
  if (mask.size() != word.letters.size()) throw DomainError("mask length does not match the word");
  WeylElement cur = rd.identity();
  for (std::size_t k = 0; k < mask.size(); ++k)
    if (mask[k]) cur = rd.multiply(cur, rd.simple(word.letters[k]));
  return rd.multiply(cur, rd.omega_power(word.omega));
}

bool is_non_decreasing(const RootDatum& rd, const ReducedWord& word, const std::vector<bool>& mask) {
  int kept = 0;
  for (bool b : mask) kept += b;
  return rd.length(evaluate_mask(rd, word, mask)) == kept;
}

Subexpression find_subexpression(const RootDatum& rd, const WeylElement& v, const ReducedWord& word) {
  const std::size_t n = word.letters.size();
  // suffix[k] = s_{i_k} ... s_{i_n} tau^omega
  std::vector<WeylElement> suffix(n + 1);
  suffix[n] = rd.omega_power(word.omega);
  for (std::size_t k = n; k-- > 0;) suffix[k] = rd.multiply(rd.simple(word.letters[k]), suffix[k + 1]);
  if (!rd.bruhat_leq(v, suffix[0])) throw OrderError(rd.format(v) + " is not below " + rd.format(suffix[0]));

  const int lv = rd.length(v);
  Subexpression out{word, std::vector<bool>(n, false)};
  WeylElement cur = rd.identity();
  int lcur = 0;
  for (std::size_t k = 0; k < n; ++k) {
    WeylElement cand = rd.multiply(cur, rd.simple(word.letters[k]));
    if (rd.length(cand) != lcur + 1) continue;
    WeylElement rest = rd.multiply(rd.inverse(cand), v);
    if (lcur + 1 + rd.length(rest) != lv) continue;
    if (!rd.bruhat_leq(rest, suffix[k + 1])) continue;
    out.mask[k] = true;
    cur = cand;
    ++lcur;
  }
  if (rd.multiply(cur, suffix[n]) != v) throw ConsistencyError("subexpression search failed for " + rd.format(v));
  return out;
}

std::vector<std::vector<bool>> all_non_decreasing_masks(const RootDatum& rd, const WeylElement& v,
                                                        const ReducedWord& word) {
  const std::size_t n = word.letters.size();
  if (n > 20) throw ResourceError("too many letters for exhaustive mask enumeration");
  std::vector<std::vector<bool>> out;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    std::vector<bool> mask(n);
    for (std::size_t k = 0; k < n; ++k) mask[k] = bits >> k & 1;
    if (evaluate_mask(rd, word, mask) == v && is_non_decreasing(rd, word, mask)) out.push_back(std::move(mask));
  }
  return out;
}

HeckeElement r_apply_word(const HeckeAlgebra& H, const ZElem& t, const std::vector<W1Element>& lifts,
                          const W1Element& omega_lift, const std::vector<bool>& mask) {
  if (lifts.size() != mask.size()) throw DomainError("mask length does not match the word");
  const Extension& ext = H.extension();
  const ParameterSystem& params = H.params();
  HeckeElement cur = H.basis(ext.from_z(t));
  for (std::size_t k = 0; k < lifts.size(); ++k) {
    if (mask[k]) {
      cur = H.right_mul_basis(cur, lifts[k]);
    } else {
      GroupAlgebraValue c = params.c_of(lifts[k]);
      HeckeElement next = H.zero();
      for (const auto& [u, cu] : c.coeffs()) next -= H.right_mul_basis(cur, ext.from_z(u)).scaled(cu);
      cur = std::move(next);
    }
  }
  return H.right_mul_basis(cur, omega_lift);
}

HeckeElement r_apply(const HeckeAlgebra& H, const WeylElement& v, const WeylElement& w, const HeckeElement& h) {
  const Extension& ext = H.extension();
  const RootDatum& rd = ext.root_datum();
  ReducedWord word = rd.canonical_reduced_word(w);
  Subexpression sub = find_subexpression(rd, v, word);
  std::vector<W1Element> lifts;
  for (int i : word.letters) lifts.push_back(ext.generator(i));
  W1Element omega_lift = ext.lift(rd.omega_power(word.omega));
  HeckeElement out = H.zero();
  for (const auto& [a, coef] : h.terms()) {
    if (a.w != w) throw DomainError("r_apply needs an element supported over " + rd.format(w));
    out += r_apply_word(H, a.z, lifts, omega_lift, sub.mask).scaled(coef);
  }
  return out;
}

}  // namespace prohecke
