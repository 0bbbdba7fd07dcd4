#pragma once

// Extended affine Weyl groups W = Lambda x| W_0 = W^aff x| Omega.
//
// Lambda is the ambient lattice Z^d; the finite Weyl group acts on it by
// integer matrices generated by the simple reflections
//   s_i(x) = x - <x, alpha_i> alpha_i^vee,
// where the simple roots alpha_i are integer functionals on Z^d and the simple
// coroots are vectors of Z^d. Central directions (d > rank) are allowed: they
// carry no roots and contribute nothing to length.
//
// Omega is either trivial or generated by a single length-zero element tau;
// Lambda / Q^vee must then be cyclic and generated by the class of tau.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prohecke {

inline constexpr std::size_t kMaxDim = 6;
inline constexpr int kMaxRank = 4;

using Coweight = std::array<std::int64_t, kMaxDim>;
using Matrix = std::array<std::array<std::int64_t, kMaxDim>, kMaxDim>;

// t^lambda * u with u an index into the enumerated finite Weyl group.
struct WeylElement {
  Coweight lambda{};
  std::uint16_t u = 0;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull ^ w.u;
    for (auto v : w.lambda) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
    return h;
  }
};

// s_{letters[0]} ... s_{letters[n-1]} tau^omega.
struct ReducedWord {
  std::vector<int> letters;
  std::int64_t omega = 0;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
};

struct RootDatumSpec {
  std::string label;
  char type = 'A';
  int rank = 1;
  int dim = 1;
  std::vector<std::vector<std::int64_t>> simple_roots;    // rank rows of length dim
  std::vector<std::vector<std::int64_t>> simple_coroots;  // rank rows of length dim
  // Translation part of the Omega generator; its finite part is the unique
  // u in W_0 making t^lambda u length zero.
  std::optional<std::vector<std::int64_t>> omega_translation;
  std::string omega_name = "tau";
};

// SL2, GL2, SL3, GL3.
RootDatumSpec preset_root_datum(std::string_view name);
std::vector<std::string> root_datum_preset_names();

// Standard Cartan matrix A[i][j] = <alpha_j, alpha_i^vee> in Bourbaki numbering.
std::vector<std::vector<std::int64_t>> cartan_matrix(char type, int rank);

class RootDatum {
 public:
  explicit RootDatum(const RootDatumSpec& spec);

  const RootDatumSpec& spec() const noexcept { return spec_; }
  int rank() const noexcept { return rank_; }
  int dim() const noexcept { return dim_; }
  // Number of affine simple reflections s_0, ..., s_rank.
  int num_affine() const noexcept { return rank_ + 1; }
  const std::string& omega_name() const noexcept { return spec_.omega_name; }

  // --- finite Weyl group -------------------------------------------------
  std::size_t w0_size() const noexcept { return w0_mats_.size(); }
  const Matrix& w0_matrix(std::uint16_t u) const { return w0_mats_.at(u); }
  std::uint16_t w0_mul(std::uint16_t a, std::uint16_t b) const { return w0_mul_[a * w0_size() + b]; }
  std::uint16_t w0_inverse(std::uint16_t u) const { return w0_inv_.at(u); }
  int w0_length(std::uint16_t u) const { return w0_len_.at(u); }
  // Shortlex-minimal reduced word in the finite simple reflections 1..rank.
  const std::vector<int>& w0_word(std::uint16_t u) const { return w0_word_.at(u); }
  std::uint16_t w0_simple(int i) const { return w0_simple_.at(i - 1); }

  // --- roots ---------------------------------------------------------------
  std::size_t num_positive_roots() const noexcept { return pos_roots_.size(); }
  const std::vector<std::int64_t>& positive_root(std::size_t k) const { return pos_roots_.at(k); }
  const std::vector<std::int64_t>& highest_root() const noexcept { return theta_; }
  const std::vector<std::int64_t>& highest_coroot() const noexcept { return theta_vee_; }
  std::int64_t pair(const Coweight& lambda, const std::vector<std::int64_t>& functional) const;

  // --- affine group --------------------------------------------------------
  WeylElement identity() const { return WeylElement{}; }
  WeylElement simple(int i) const { return affine_simple_.at(i); }
  WeylElement translation(const Coweight& lambda) const { return WeylElement{lambda, 0}; }
  WeylElement translation(const std::vector<std::int64_t>& lambda) const;
  WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& a) const;
  WeylElement conjugate(const WeylElement& g, const WeylElement& x) const;
  // u(lambda).
  Coweight apply(std::uint16_t u, const Coweight& lambda) const;
  bool is_translation(const WeylElement& w) const noexcept { return w.u == 0; }

  bool has_omega() const noexcept { return has_omega_; }
  // Order of tau; 0 when Omega is infinite cyclic, 1 when Omega is trivial.
  std::int64_t omega_order() const noexcept { return omega_order_; }
  WeylElement omega() const { return tau_; }
  WeylElement omega_power(std::int64_t k) const;
  // Reduces an Omega exponent into canonical range.
  std::int64_t normalize_omega(std::int64_t k) const;
  // The k with w in W^aff tau^k.
  std::int64_t omega_exponent(const WeylElement& w) const;
  // Index j with tau^k s_i tau^-k = s_j.
  int omega_conjugate(int i, std::int64_t k) const;
  // Order of s_i s_j in W^aff; 0 for infinity.
  int coxeter_m(int i, int j) const { return coxeter_.at(i).at(j); }

  int length(const WeylElement& w) const;
  bool is_left_descent(int i, const WeylElement& w) const;
  bool is_right_descent(int i, const WeylElement& w) const;

  ReducedWord canonical_reduced_word(const WeylElement& w) const;
  WeylElement evaluate(const ReducedWord& word) const;
  WeylElement evaluate_letters(const std::vector<int>& letters) const;

  bool bruhat_leq(const WeylElement& v, const WeylElement& w) const;
  // All v <= w, sorted by key_less.
  std::vector<WeylElement> lower_cone(const WeylElement& w) const;

  bool is_dominant(const Coweight& lambda) const;
  // (t^lambda0, u) with u t^lambda u^-1 = t^lambda0 dominant; u is the
  // shortlex-minimal such element. Throws DomainError for non-translations.
  std::pair<WeylElement, std::uint16_t> dominant_representative(const WeylElement& t) const;
  // The W-conjugacy class of a translation (its W_0-orbit), sorted.
  std::vector<WeylElement> translation_conjugacy_class(const WeylElement& t) const;

  // Canonical order: length, Omega exponent, translation, finite index.
  bool key_less(const WeylElement& a, const WeylElement& b) const;

  // "s0*s1*tau", "tau^-1", "1".
  std::string format(const WeylElement& w) const;
  std::string format(const ReducedWord& word) const;
  // Accepts s<i>, tau, tau^k, t(a,b,...) and 1 joined by '*'.
  WeylElement parse(std::string_view text) const;

  std::string format_coweight(const Coweight& lambda) const;

 private:
  void build_roots();
  void build_w0();
  void build_affine();
  void build_omega();
  bool in_coroot_lattice(const Coweight& lambda) const;

  RootDatumSpec spec_;
  int rank_ = 0;
  int dim_ = 0;

  // All roots: positives first, then their negatives in the same order.
  std::vector<std::vector<std::int64_t>> roots_;
  std::vector<std::vector<std::int64_t>> root_coeffs_;  // in simple-root coordinates
  std::vector<std::vector<std::int64_t>> pos_roots_;
  std::map<std::vector<std::int64_t>, std::size_t> root_index_;
  std::vector<std::int64_t> theta_;
  std::vector<std::int64_t> theta_vee_;
  std::size_t theta_index_ = 0;
  std::vector<std::size_t> simple_root_index_;
  // D <p0, beta> for every root beta; D = scale_.
  std::vector<std::int64_t> base_pairing_;
  std::int64_t scale_ = 1;

  std::vector<Matrix> w0_mats_;
  std::vector<std::uint16_t> w0_mul_;
  std::vector<std::uint16_t> w0_inv_;
  std::vector<int> w0_len_;
  std::vector<std::vector<int>> w0_word_;
  std::vector<std::uint16_t> w0_simple_;
  // root_perm_[u * roots + k]: index of roots_[k] o U.
  std::vector<std::uint32_t> root_perm_;

  std::vector<WeylElement> affine_simple_;
  std::vector<std::vector<int>> coxeter_;

  bool has_omega_ = false;
  WeylElement tau_;
  std::int64_t omega_order_ = 1;
  std::vector<int> omega_perm_;       // tau s_i tau^-1 = s_{omega_perm_[i]}
  std::vector<std::int64_t> omega_char_;  // Omega exponent of each basis vector
};

}  // namespace prohecke
