#pragma once

// Finitely generated abelian groups Z = Z/n_1 x ... x Z/n_k (n_i = 0 encodes
// an infinite cyclic factor) and their automorphisms.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace prohecke {

inline constexpr std::size_t kMaxZRank = 4;

// An element of Z as an exponent tuple. Unused trailing slots stay zero so
// that plain member-wise comparison is equality.
struct ZElem {
  std::array<std::int64_t, kMaxZRank> e{};

  friend bool operator==(const ZElem&, const ZElem&) = default;
  friend auto operator<=>(const ZElem&, const ZElem&) = default;
};

struct ZElemHash {
  std::size_t operator()(const ZElem& z) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto v : z.e) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
    return h;
  }
};

// Integer matrix acting on exponent tuples: z'_i = sum_j m[i][j] z_j.
struct ZAutomorphism {
  std::array<std::array<std::int64_t, kMaxZRank>, kMaxZRank> m{};

  static ZAutomorphism identity();
  friend bool operator==(const ZAutomorphism&, const ZAutomorphism&) = default;
};

class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<std::int64_t> orders);

  std::size_t rank() const noexcept { return orders_.size(); }
  const std::vector<std::int64_t>& orders() const noexcept { return orders_; }
  bool is_finite() const noexcept;
  // Number of elements; only meaningful when is_finite().
  std::size_t size() const;

  ZElem zero() const { return ZElem{}; }
  ZElem generator(std::size_t i) const;
  ZElem make(const std::vector<std::int64_t>& exps) const;
  ZElem normalize(ZElem z) const;

  ZElem add(const ZElem& a, const ZElem& b) const;
  ZElem sub(const ZElem& a, const ZElem& b) const;
  ZElem neg(const ZElem& a) const;
  ZElem scale(const ZElem& a, std::int64_t k) const;

  // All elements in lexicographic exponent order (finite groups only).
  std::vector<ZElem> elements() const;

  ZElem apply(const ZAutomorphism& phi, const ZElem& z) const;
  // (a o b)(z) = a(b(z)), entries reduced modulo the row order.
  ZAutomorphism compose(const ZAutomorphism& a, const ZAutomorphism& b) const;
  // Reduce entries so that equal automorphisms compare equal.
  ZAutomorphism normalize(ZAutomorphism a) const;
  bool is_identity(const ZAutomorphism& a) const;
  // True when the matrix defines a bijective endomorphism of Z. Checked by
  // finite-order search; free factors require a finite-order action.
  ZAutomorphism inverse(const ZAutomorphism& a) const;
  // Well-definedness: m[i][j] * n_j must vanish modulo n_i.
  bool is_well_defined(const ZAutomorphism& a) const;

  // "(1,0,2)"; the empty tuple "()" for the trivial group.
  std::string format(const ZElem& z) const;
  ZElem parse(const std::string& text) const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<std::int64_t> orders_;
};

}  // namespace prohecke
