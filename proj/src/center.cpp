#include "prohecke/center.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "prohecke/errors.hpp"

namespace prohecke {

Center::Center(std::shared_ptr<const HeckeAlgebra> H, std::size_t class_bound)
    : H_(std::move(H)), class_bound_(class_bound) {}

ConjClass Center::conj_class(const W1Element& seed) const {
  const Extension& ext = H_->extension();
  const RootDatum& rd = ext.root_datum();
  const AbelianGroup& z = ext.z();
  if (!rd.is_translation(seed.w))
    throw InfiniteClassError("the class of " + ext.format(seed) + " is infinite: it does not lie over a translation");

  std::vector<std::pair<W1Element, W1Element>> conj;  // (g, g^-1)
  auto add = [&](const W1Element& g) { conj.emplace_back(g, ext.inverse(g)); };
  for (int i = 0; i < rd.num_affine(); ++i) add(ext.generator(i));
  if (rd.has_omega()) {
    add(ext.omega_generator());
    add(ext.inverse(ext.omega_generator()));
  }
  for (std::size_t g = 0; g < z.rank(); ++g) {
    add(ext.from_z(z.generator(g)));
    add(ext.from_z(z.neg(z.generator(g))));
  }

  std::unordered_set<W1Element, W1ElementHash> seen{seed};
  std::deque<W1Element> queue{seed};
  while (!queue.empty()) {
    W1Element x = queue.front();
    queue.pop_front();
    for (const auto& [g, gi] : conj) {
      W1Element y = ext.mul(ext.mul(g, x), gi);
      if (seen.insert(y).second) {
        if (seen.size() > class_bound_)
          throw ResourceError("conjugacy class of " + ext.format(seed) + " exceeds " + std::to_string(class_bound_) +
                              " elements");
        queue.push_back(y);
      }
    }
  }

  ConjClass C;
  C.elements.assign(seen.begin(), seen.end());
  std::sort(C.elements.begin(), C.elements.end(), [&](const auto& a, const auto& b) { return H_->key_less(a, b); });
  std::set<WeylElement> proj;
  for (const auto& e : C.elements) proj.insert(e.w);
  C.projection.assign(proj.begin(), proj.end());
  auto dominant = [&](const WeylElement& w) { return rd.is_dominant(w.lambda); };
  std::sort(C.projection.begin(), C.projection.end(), [&](const auto& a, const auto& b) {
    if (dominant(a) != dominant(b)) return dominant(a);
    return rd.key_less(a, b);
  });
  C.lambda0 = C.projection.front();
  if (!dominant(C.lambda0)) throw ConsistencyError("no dominant element in the projection of a class");
  for (const auto& e : C.elements)
    if (e.w == C.lambda0) {
      C.seed = e;
      break;
    }
  return C;
}

std::vector<WeylElement> Center::adm(const ConjClass& C) const {
  const RootDatum& rd = H_->root_datum();
  std::set<WeylElement> all;
  for (const auto& lambda : C.projection)
    for (const auto& w : rd.lower_cone(lambda)) all.insert(w);
  std::vector<WeylElement> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return rd.key_less(a, b); });
  return out;
}

HeckeElement Center::h_lambda(const ConjClass& C, const WeylElement& lambda) const {
  HeckeElement h = H_->zero();
  for (const auto& e : C.elements)
    if (e.w == lambda) h.add_term(e, H_->ring().one());
  if (h.is_zero()) throw DomainError(H_->root_datum().format(lambda) + " is not in the projection of the class");
  return h;
}

HeckeElement Center::h_w_via(const ConjClass& C, const WeylElement& w, const WeylElement& lambda) const {
  const RootDatum& rd = H_->root_datum();
  if (!rd.bruhat_leq(w, lambda)) throw OrderError(rd.format(w) + " is not below " + rd.format(lambda));
  if (w == lambda) return h_lambda(C, lambda);
  return r_apply(*H_, w, lambda, h_lambda(C, lambda));
}

HeckeElement Center::h_w(const ConjClass& C, const WeylElement& w) const {
  const RootDatum& rd = H_->root_datum();
  for (const auto& lambda : C.projection)
    if (lambda == w) return h_lambda(C, lambda);
  for (const auto& lambda : C.projection)
    if (rd.bruhat_leq(w, lambda)) return h_w_via(C, w, lambda);
  throw DomainError(rd.format(w) + " is not admissible for the class");
}

HeckeElement Center::h_C(const ConjClass& C) const {
  {
    std::lock_guard lock(memo_mutex_);
    auto it = memo_.find(C.seed);
    if (it != memo_.end()) return it->second;
  }
  HeckeElement h = H_->zero();
  for (const auto& w : adm(C)) h += h_w(C, w);
  std::lock_guard lock(memo_mutex_);
  memo_.emplace(C.seed, h);
  return h;
}

std::optional<std::string> Center::centrality_failure(const HeckeElement& h) const {
  const Extension& ext = H_->extension();
  const RootDatum& rd = ext.root_datum();
  std::vector<W1Element> gens;
  for (int i = 0; i < rd.num_affine(); ++i) gens.push_back(ext.generator(i));
  if (rd.has_omega()) {
    gens.push_back(ext.omega_generator());
    gens.push_back(ext.inverse(ext.omega_generator()));
  }
  for (std::size_t g = 0; g < ext.z().rank(); ++g) gens.push_back(ext.from_z(ext.z().generator(g)));
  for (const auto& g : gens)
    if (!(H_->left_mul_basis(g, h) == H_->right_mul_basis(h, g)))
      return "T[" + ext.format(g) + "] does not commute with the element";
  return std::nullopt;
}

std::vector<ConjClass> Center::classes(int max_length, int omega_window) const {
  const Extension& ext = H_->extension();
  const RootDatum& rd = ext.root_datum();
  const AbelianGroup& z = ext.z();
  if (max_length < 0) throw DomainError("length bound must be nonnegative");
  if (!z.is_finite()) throw DomainError("class enumeration needs a finite Z");
  const bool window = rd.has_omega() && rd.omega_order() == 0;

  // Lattice points with bounded translation length (and Omega exponent),
  // reached by unit and coroot steps.
  std::vector<Coweight> steps;
  for (int a = 0; a < rd.dim(); ++a) {
    Coweight e{};
    e[a] = 1;
    steps.push_back(e);
  }
  for (const auto& cv : rd.spec().simple_coroots) {
    Coweight e{};
    for (int a = 0; a < rd.dim(); ++a) e[a] = cv[a];
    steps.push_back(e);
  }
  auto inside = [&](const Coweight& l) {
    WeylElement t = rd.translation(l);
    if (rd.length(t) > max_length) return false;
    if (window) {
      std::int64_t k = rd.omega_exponent(t);
      if (k < -omega_window || k > omega_window) return false;
    }
    return true;
  };
  std::set<Coweight> region{Coweight{}};
  std::deque<Coweight> queue{Coweight{}};
  while (!queue.empty()) {
    Coweight l = queue.front();
    queue.pop_front();
    for (const auto& s : steps)
      for (int sign : {1, -1}) {
        Coweight n = l;
        for (int a = 0; a < rd.dim(); ++a) n[a] += sign * s[a];
        if (region.count(n) || !inside(n)) continue;
        region.insert(n);
        if (region.size() > 200000) throw ResourceError("translation region too large; lower the bounds");
        queue.push_back(n);
      }
  }
  std::vector<WeylElement> dominant;
  for (const auto& l : region)
    if (rd.is_dominant(l)) dominant.push_back(rd.translation(l));
  std::sort(dominant.begin(), dominant.end(), [&](const auto& a, const auto& b) { return rd.key_less(a, b); });

  std::vector<ConjClass> out;
  std::unordered_set<W1Element, W1ElementHash> covered;
  for (const auto& lambda : dominant)
    for (const auto& t : z.elements()) {
      W1Element seed{t, lambda};
      if (covered.count(seed)) continue;
      ConjClass C = conj_class(seed);
      covered.insert(C.elements.begin(), C.elements.end());
      out.push_back(std::move(C));
    }
  return out;
}

std::vector<std::pair<ConjClass, Poly>> Center::express_in_basis(const HeckeElement& h) const {
  if (auto fail = centrality_failure(h)) throw NotCentralError("element is not central: " + *fail);
  const Extension& ext = H_->extension();
  std::vector<std::pair<ConjClass, Poly>> out;
  HeckeElement rest = h;
  for (int guard = 0; !rest.is_zero(); ++guard) {
    if (guard > 100000) throw ResourceError("basis expansion did not terminate");
    W1Element g = H_->supp_max(rest).front();
    Poly a = rest.coeff(g);
    ConjClass C;
    try {
      C = conj_class(g);
    } catch (const InfiniteClassError&) {
      throw NotCentralError("maximal term " + ext.format(g) + " does not lie over a translation");
    }
    for (const auto& e : C.elements)
      if (!(rest.coeff(e) == a))
        throw NotCentralError("coefficients of maximal terms are not constant on the class of " + ext.format(g));
    rest -= h_C(C).scaled(a);
    out.emplace_back(std::move(C), a);
  }
  return out;
}

}  // namespace prohecke
