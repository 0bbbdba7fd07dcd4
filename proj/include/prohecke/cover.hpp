#pragma once

// The extension 1 -> Z -> W(1) -> W -> 1.
//
// Elements are pairs (z, w) standing for z * L(w), where L(w) is the product
// of the generator lifts along canonical_reduced_word(w) followed by
// tau~^k. The extension is given by generator-level data:
//   s~_i t s~_i^-1          = A_i(t)
//   tau~ t tau~^-1          = A_tau(t)
//   s~_i^2                  = mu_i
//   (s~_i s~_j ...)_m       = d_ij (s~_j s~_i ...)_m        (i < j, m finite)
//   tau~ s~_i tau~^-1       = z_i s~_{pi(i)}
//   tau~^n                  = e                              (Omega of order n)
// Products are computed by right-multiplying with one generator at a time
// and rewriting the resulting reduced word into canonical form with braid
// moves, collecting defects on the way.

#include <cstdint>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "prohecke/rings.hpp"
#include "prohecke/weyl.hpp"
#include "prohecke/zgroup.hpp"

namespace prohecke {

struct W1Element {
  ZElem z;
  WeylElement w;

  friend bool operator==(const W1Element&, const W1Element&) = default;
  friend auto operator<=>(const W1Element&, const W1Element&) = default;
};

struct W1ElementHash {
  std::size_t operator()(const W1Element& a) const noexcept {
    return WeylElementHash{}(a.w) * 0x9e3779b97f4a7c15ull ^ ZElemHash{}(a.z);
  }
};

struct ExtensionSpec {
  std::string label;
  std::vector<std::int64_t> z_orders;
  std::vector<ZAutomorphism> action;  // one per affine generator
  ZAutomorphism omega_action = ZAutomorphism::identity();
  std::vector<ZElem> mu;              // one per affine generator
  std::map<std::pair<int, int>, ZElem> braid;  // keyed by (i, j), i < j
  std::vector<ZElem> omega_twist;     // one per affine generator
  ZElem omega_power_defect;
  std::size_t sigma_cache_limit = 1 << 16;
  int move_budget_factor = 64;
};

// All defects zero, trivial action.
ExtensionSpec split_extension(const RootDatum& rd, std::vector<std::int64_t> z_orders = {3});
// Z = Z/4, every generator acts by inversion, s~^2 = 2 for every s.
ExtensionSpec nonsplit_extension(const RootDatum& rd);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> lines;

  void pass(const std::string& what) { lines.push_back("PASS " + what); }
  void fail(const std::string& what) {
    ok = false;
    lines.push_back("FAIL " + what);
  }
};

// One letter of a W(1) word.
struct Token {
  enum class Kind { S, SInv, Tau, TauInv, Z };
  Kind kind = Kind::S;
  int index = 0;  // generator index for S, SInv
  ZElem z;        // for Z
};

class Extension {
 public:
  // Validates that the action matrices define an action of W on Z and that
  // mu, e are fixed where required. Throws ConfigError naming the relation.
  Extension(std::shared_ptr<const RootDatum> rd, ExtensionSpec spec);

  const RootDatum& root_datum() const noexcept { return *rd_; }
  std::shared_ptr<const RootDatum> root_datum_ptr() const noexcept { return rd_; }
  const AbelianGroup& z() const noexcept { return z_; }
  const ExtensionSpec& spec() const noexcept { return spec_; }

  // The automorphism t -> w~ t w~^-1.
  ZAutomorphism phi(const WeylElement& w) const;
  ZElem act(const WeylElement& w, const ZElem& t) const;
  GroupAlgebraValue ga_act(const WeylElement& w, const GroupAlgebraValue& a) const;

  W1Element identity() const { return W1Element{}; }
  W1Element lift(const WeylElement& w) const { return W1Element{ZElem{}, w}; }
  W1Element from_z(const ZElem& t) const { return W1Element{z_.normalize(t), WeylElement{}}; }
  W1Element generator(int i) const { return lift(rd_->simple(i)); }
  W1Element omega_generator() const { return lift(rd_->omega()); }

  W1Element mul(const W1Element& a, const W1Element& b) const;
  W1Element mul_s(const W1Element& a, int i) const;
  W1Element mul_s_inverse(const W1Element& a, int i) const;
  W1Element mul_tau(const W1Element& a, int sign) const;
  W1Element mul_z(const W1Element& a, const ZElem& t) const;
  W1Element inverse(const W1Element& a) const;
  W1Element conjugate(const W1Element& g, const W1Element& x) const;
  // Z-part of L(v) L(w) L(vw)^-1.
  ZElem sigma(const WeylElement& v, const WeylElement& w) const;
  W1Element normalize_word(const std::vector<Token>& word) const;
  int length(const W1Element& a) const { return rd_->length(a.w); }

  // The c value attached to the lift `target` of a simple reflection, given
  // c for the canonical lift of s_base.
  GroupAlgebraValue derive_parameter(const GroupAlgebraValue& c_base, int base, const W1Element& target) const;
  // Some x in W with x s_from x^-1 = s_to, if one exists.
  std::optional<WeylElement> conjugator(int from, int to) const;

  // Random sampling of associativity and braid-path independence.
  CheckReport check_consistency(int samples, std::uint64_t seed) const;

  // "(z); word"
  std::string format(const W1Element& a) const;
  W1Element parse(std::string_view text) const;

  // Lifts a word of generator tokens given as text: "s0*s1^-1*tau*(1)".
  std::vector<Token> parse_word(std::string_view text) const;

 private:
  struct Info {
    ReducedWord word;
    ZAutomorphism phi;
    ZAutomorphism phi_inv;
  };
  struct Step {
    ZElem delta;
    WeylElement next;
  };

  const Info& info(const WeylElement& w) const;
  Step step(const WeylElement& aff, int j) const;
  std::pair<ZElem, int> shift(std::int64_t k, int j) const;
  ZAutomorphism omega_phi_power(std::int64_t k) const;
  ZElem braid_defect(int first, int second) const;
  ZAutomorphism word_phi(const std::vector<int>& letters, std::size_t from, std::size_t to) const;
  ZElem bring_to_front(std::vector<int>& word, std::size_t pos, int x, long& budget) const;
  ZElem transform(std::vector<int> from, const std::vector<int>& to) const;

  std::shared_ptr<const RootDatum> rd_;
  ExtensionSpec spec_;
  AbelianGroup z_;
  std::vector<ZAutomorphism> action_inv_;
  ZAutomorphism omega_inv_;

  mutable std::shared_mutex info_mutex_;
  mutable std::unordered_map<WeylElement, Info, WeylElementHash> info_cache_;

  struct StepKey {
    WeylElement w;
    int j;
    friend bool operator==(const StepKey&, const StepKey&) = default;
  };
  struct StepKeyHash {
    std::size_t operator()(const StepKey& k) const noexcept { return WeylElementHash{}(k.w) * 31 + k.j; }
  };
  mutable std::shared_mutex step_mutex_;
  mutable std::unordered_map<StepKey, Step, StepKeyHash> step_cache_;

  mutable std::mutex shift_mutex_;
  mutable std::map<std::pair<std::int64_t, int>, std::pair<ZElem, int>> shift_cache_;

  // LRU memo of sigma(v, w).
  struct PairKey {
    WeylElement v, w;
    friend bool operator==(const PairKey&, const PairKey&) = default;
  };
  struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const noexcept {
      return WeylElementHash{}(k.v) * 0x100000001b3ull ^ WeylElementHash{}(k.w);
    }
  };
  mutable std::mutex sigma_mutex_;
  mutable std::list<std::pair<PairKey, ZElem>> sigma_lru_;
  mutable std::unordered_map<PairKey, std::list<std::pair<PairKey, ZElem>>::iterator, PairKeyHash> sigma_index_;

  mutable std::mutex conj_mutex_;
  mutable std::map<std::pair<int, int>, std::optional<WeylElement>> conj_cache_;
};

}  // namespace prohecke
