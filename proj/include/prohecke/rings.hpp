#pragma once

// Exact coefficient rings and the group algebra R[Z].
//
// Every coefficient in the library is a Poly: a sparse multivariate
// polynomial with int64 coefficients, optionally reduced modulo m. The
// "Integer" and "IntegerMod(m)" rings are the constant polynomials of the
// corresponding polynomial ring; the Ring descriptor records which one a
// configuration selected so that indeterminates can be rejected there.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prohecke/zgroup.hpp"

namespace prohecke {

using VarId = std::uint32_t;

// Process-wide registry of indeterminate names. Thread-safe.
VarId intern_variable(std::string_view name);
const std::string& variable_name(VarId id);

// Product of indeterminates, factors sorted by VarId, exponents >= 1.
struct Monomial {
  std::vector<std::pair<VarId, std::uint32_t>> factors;

  bool is_one() const noexcept { return factors.empty(); }
  std::uint32_t degree() const noexcept;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

class Poly {
 public:
  using Term = std::pair<Monomial, std::int64_t>;

  Poly() = default;
  // Constant polynomial; modulus 0 means coefficients in Z.
  explicit Poly(std::int64_t c, std::int64_t modulus = 0);
  static Poly variable(std::string_view name, std::int64_t modulus = 0);
  static Poly from_terms(std::vector<Term> terms, std::int64_t modulus = 0);

  std::int64_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  // Constant term (0 if absent).
  std::int64_t constant_term() const noexcept;
  const std::vector<Term>& terms() const noexcept { return terms_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(std::int64_t k) const;

  friend bool operator==(const Poly&, const Poly&) = default;

  // Canonical text: monomials ordered by (names lexicographically, then
  // exponents), descending degree first; e.g. "c0*x^2*y + 3".
  std::string to_string() const;
  // Sign of every coefficient: +1 if all positive, -1 if all negative,
  // 0 otherwise (including zero).
  int uniform_sign() const noexcept;

 private:
  void check_same_ring(const Poly& o) const;
  void canonicalize();

  std::vector<Term> terms_;  // sorted by Monomial, no zero coefficients
  std::int64_t modulus_ = 0;
};

// Parse the polynomial grammar: sums of terms, each a product of integer
// literals and NAME or NAME^k factors, with optional parentheses.
Poly parse_poly(std::string_view text, std::int64_t modulus = 0);

// Which exact ring the coefficients live in.
struct Ring {
  enum class Kind { Integer, IntegerMod, Polynomial };
  Kind kind = Kind::Polynomial;
  std::int64_t modulus = 0;

  Poly constant(std::int64_t c) const { return Poly(c, modulus); }
  Poly zero() const { return Poly(0, modulus); }
  Poly one() const { return Poly(1, modulus); }
  // Throws ConfigError if the value does not belong to this ring.
  void check(const Poly& p) const;
  std::string name() const;
  static Ring parse(std::string_view text);

  friend bool operator==(const Ring&, const Ring&) = default;
};

// Finitely supported map Z -> R.
class GroupAlgebraValue {
 public:
  GroupAlgebraValue() = default;
  GroupAlgebraValue(const AbelianGroup* group, std::int64_t modulus) : group_(group), modulus_(modulus) {}

  static GroupAlgebraValue basis(const AbelianGroup* group, const ZElem& t, const Poly& coeff);

  const AbelianGroup* group() const noexcept { return group_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  const std::map<ZElem, Poly>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Poly coeff(const ZElem& t) const;

  void add_term(const ZElem& t, const Poly& c);
  GroupAlgebraValue scaled(const Poly& k) const;
  // Right translation by u: sum c(t) (t u).
  GroupAlgebraValue translated(const ZElem& u) const;
  // Applies an automorphism of Z termwise.
  GroupAlgebraValue mapped(const ZAutomorphism& phi) const;

  friend bool operator==(const GroupAlgebraValue& a, const GroupAlgebraValue& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  const AbelianGroup* group_ = nullptr;
  std::int64_t modulus_ = 0;
  std::map<ZElem, Poly> coeffs_;  // no zero values
};

GroupAlgebraValue ga_add(const GroupAlgebraValue& a, const GroupAlgebraValue& b);
GroupAlgebraValue ga_mul(const GroupAlgebraValue& a, const GroupAlgebraValue& b);

}  // namespace prohecke
