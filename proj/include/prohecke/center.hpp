#pragma once

// Finite conjugacy classes C of W(1), admissible sets, and the central
// elements h_C = sum_{w in Adm(C)} h_w.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prohecke/hecke.hpp"
#include "prohecke/rop.hpp"

namespace prohecke {

struct ConjClass {
  std::vector<W1Element> elements;      // canonical order
  std::vector<WeylElement> projection;  // pi(C): dominant first, then canonical order
  WeylElement lambda0;                  // the dominant element of pi(C)
  W1Element seed;                       // first element of C over lambda0

  friend bool operator==(const ConjClass& a, const ConjClass& b) { return a.elements == b.elements; }
};

class Center {
 public:
  explicit Center(std::shared_ptr<const HeckeAlgebra> H, std::size_t class_bound = 1000000);

  const HeckeAlgebra& algebra() const noexcept { return *H_; }

  // Closure of {seed} under conjugation by generator lifts, tau~^{+-1} and
  // Z generators. Throws InfiniteClassError unless seed lies over a
  // translation.
  ConjClass conj_class(const W1Element& seed) const;
  std::vector<WeylElement> adm(const ConjClass& C) const;

  HeckeElement h_lambda(const ConjClass& C, const WeylElement& lambda) const;
  HeckeElement h_w(const ConjClass& C, const WeylElement& w) const;
  // r_{w,lambda}(h_lambda) for an explicit lambda in pi(C) above w.
  HeckeElement h_w_via(const ConjClass& C, const WeylElement& w, const WeylElement& lambda) const;
  HeckeElement h_C(const ConjClass& C) const;

  // A description of the first generator g with T_g h != h T_g, if any.
  std::optional<std::string> centrality_failure(const HeckeElement& h) const;
  bool is_central(const HeckeElement& h) const { return !centrality_failure(h); }

  // Classes whose dominant translation has length at most max_length and,
  // when Omega is infinite, Omega exponent within [-omega_window, omega_window].
  std::vector<ConjClass> classes(int max_length, int omega_window = 1) const;

  // Coefficients of a central element in the basis {h_C}, largest classes
  // first. Throws NotCentralError for non-central input.
  std::vector<std::pair<ConjClass, Poly>> express_in_basis(const HeckeElement& h) const;

 private:
  std::shared_ptr<const HeckeAlgebra> H_;
  std::size_t class_bound_;
  mutable std::mutex memo_mutex_;
  mutable std::map<W1Element, HeckeElement> memo_;
};

}  // namespace prohecke
