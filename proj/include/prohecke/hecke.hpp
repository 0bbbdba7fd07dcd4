#pragma once

// The algebra H_R(0, c) with basis T_w, w in W(1):
//   T_a T_b = T_ab            when lengths add,
//   T_s^2   = c_s T_s         for lifts s of affine simple reflections,
// with c_s in R[Z] acting through T_t, t in Z.

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "prohecke/cover.hpp"
#include "prohecke/rings.hpp"

namespace prohecke {

class ParameterSystem {
 public:
  // Values of c for canonical generator lifts, keyed by generator index.
  // Each conjugacy orbit of simple reflections needs at least one entry;
  // the smallest given index of an orbit determines the rest.
  ParameterSystem(std::shared_ptr<const Extension> ext, Ring ring, std::map<int, GroupAlgebraValue> given);

  // One indeterminate per orbit of Z under the constraints that c must
  // satisfy; named c<base>_<k>. Requires a finite Z and a polynomial ring.
  static ParameterSystem generic(std::shared_ptr<const Extension> ext, Ring ring, int sample_length = 6);

  const Extension& extension() const noexcept { return *ext_; }
  std::shared_ptr<const Extension> extension_ptr() const noexcept { return ext_; }
  const Ring& ring() const noexcept { return ring_; }
  const std::vector<std::vector<int>>& orbits() const noexcept { return orbits_; }

  // c for the canonical lift of s_j.
  const GroupAlgebraValue& c(int j) const { return c_.at(j); }
  // c for an arbitrary lift (z, s_j).
  GroupAlgebraValue c_of(const W1Element& lift) const;

  // Transport of c along conjugation, sampled over elements of length at
  // most max_length, and agreement with explicitly given values.
  CheckReport check(int max_length) const;

 private:
  void derive_all();

  std::shared_ptr<const Extension> ext_;
  Ring ring_;
  std::map<int, GroupAlgebraValue> given_;
  std::vector<std::vector<int>> orbits_;
  std::vector<int> orbit_of_;
  std::vector<GroupAlgebraValue> c_;
};

class HeckeElement {
 public:
  using Map = std::unordered_map<W1Element, Poly, W1ElementHash>;

  HeckeElement() = default;
  explicit HeckeElement(std::int64_t modulus) : modulus_(modulus) {}

  std::int64_t modulus() const noexcept { return modulus_; }
  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Poly coeff(const W1Element& w) const;

  void add_term(const W1Element& w, const Poly& c);
  HeckeElement scaled(const Poly& k) const;

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  HeckeElement operator-() const { return scaled(Poly(-1, modulus_)); }
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.terms_ == b.terms_; }

 private:
  std::int64_t modulus_ = 0;
  Map terms_;
};

class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(std::shared_ptr<const ParameterSystem> params);

  const ParameterSystem& params() const noexcept { return *params_; }
  std::shared_ptr<const ParameterSystem> params_ptr() const noexcept { return params_; }
  const Extension& extension() const noexcept { return params_->extension(); }
  const RootDatum& root_datum() const noexcept { return extension().root_datum(); }
  const Ring& ring() const noexcept { return params_->ring(); }

  HeckeElement zero() const { return HeckeElement(ring().modulus); }
  HeckeElement basis(const W1Element& w) const;
  HeckeElement basis(const W1Element& w, const Poly& coeff) const;
  HeckeElement one() const { return basis(W1Element{}); }
  // sum_t a(t) T_t.
  HeckeElement from_group_algebra(const GroupAlgebraValue& a) const;

  // T_a T_g for g a lift of a generator or of a length-zero element.
  HeckeElement mul_basis_right_gen(const W1Element& a, const W1Element& g) const;
  HeckeElement mul(const HeckeElement& x, const HeckeElement& y) const;
  HeckeElement right_mul_basis(const HeckeElement& x, const W1Element& b) const;
  HeckeElement left_mul_basis(const W1Element& b, const HeckeElement& x) const;
  HeckeElement right_mul_generator(const HeckeElement& x, int j) const;
  HeckeElement left_mul_generator(int j, const HeckeElement& x) const;

  // g . T_x = T_{g x g^-1}, extended linearly.
  HeckeElement bullet(const W1Element& g, const HeckeElement& h) const;

  // Support elements of maximal length, in canonical order.
  std::vector<W1Element> supp_max(const HeckeElement& h) const;
  std::vector<std::pair<W1Element, Poly>> sorted_terms(const HeckeElement& h) const;
  // Length, Omega part, translation, finite part, Z exponents.
  bool key_less(const W1Element& a, const W1Element& b) const;

 private:
  template <class F>
  HeckeElement relabel(const HeckeElement& x, F&& f) const;

  std::shared_ptr<const ParameterSystem> params_;
};

}  // namespace prohecke
