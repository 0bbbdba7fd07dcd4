#include "prohecke/hecke.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "prohecke/errors.hpp"

namespace prohecke {

namespace {

std::vector<std::vector<int>> reflection_orbits(const Extension& ext) {
  const int na = ext.root_datum().num_affine();
  std::vector<int> orbit(na, -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < na; ++i) {
    if (orbit[i] >= 0) continue;
    orbit[i] = static_cast<int>(out.size());
    out.push_back({i});
    for (int j = i + 1; j < na; ++j)
      if (orbit[j] < 0 && ext.conjugator(i, j)) {
        orbit[j] = orbit[i];
        out.back().push_back(j);
      }
  }
  return out;
}

// Elements of W reachable by at most max_length generator steps (affine
// simple reflections and tau^{+-1}), breadth first.
std::vector<WeylElement> ball(const RootDatum& rd, int max_length, std::size_t cap = 20000) {
  std::vector<WeylElement> gens;
  for (int i = 0; i < rd.num_affine(); ++i) gens.push_back(rd.simple(i));
  if (rd.has_omega()) {
    gens.push_back(rd.omega());
    gens.push_back(rd.inverse(rd.omega()));
  }
  std::set<WeylElement> seen{rd.identity()};
  std::vector<WeylElement> out{rd.identity()};
  std::deque<std::pair<WeylElement, int>> queue{{rd.identity(), 0}};
  while (!queue.empty() && out.size() < cap) {
    auto [x, d] = queue.front();
    queue.pop_front();
    if (d == max_length) continue;
    for (const auto& g : gens) {
      WeylElement n = rd.multiply(g, x);
      if (seen.insert(n).second) {
        out.push_back(n);
        queue.emplace_back(n, d + 1);
      }
    }
  }
  return out;
}

std::string orbit_name(const std::vector<int>& orbit) {
  std::string s = "{";
  for (std::size_t k = 0; k < orbit.size(); ++k) s += (k ? "," : "") + std::string("s") + std::to_string(orbit[k]);
  return s + "}";
}

}  // namespace

// ---------------------------------------------------------------------------
// parameters

ParameterSystem::ParameterSystem(std::shared_ptr<const Extension> ext, Ring ring,
                                 std::map<int, GroupAlgebraValue> given)
    : ext_(std::move(ext)), ring_(ring) {
  const AbelianGroup& z = ext_->z();
  const int na = ext_->root_datum().num_affine();
  for (const auto& [j, v] : given) {
    if (j < 0 || j >= na) throw ConfigError("parameter given for s" + std::to_string(j) + ", which does not exist");
    GroupAlgebraValue c(&z, ring_.modulus);
    for (const auto& [t, coef] : v.coeffs()) {
      ring_.check(coef);
      c.add_term(z.normalize(t), coef);
    }
    given_.emplace(j, std::move(c));
  }
  orbits_ = reflection_orbits(*ext_);
  orbit_of_.assign(na, -1);
  for (std::size_t o = 0; o < orbits_.size(); ++o)
    for (int j : orbits_[o]) orbit_of_[j] = static_cast<int>(o);
  derive_all();
}

void ParameterSystem::derive_all() {
  c_.assign(ext_->root_datum().num_affine(), GroupAlgebraValue(&ext_->z(), ring_.modulus));
  for (const auto& orbit : orbits_) {
    int source = -1;
    for (int j : orbit)
      if (given_.count(j)) {
        source = j;
        break;
      }
    if (source < 0) throw ConfigError("no value of c given for the orbit " + orbit_name(orbit));
    const GroupAlgebraValue& base = given_.at(source);
    for (int j : orbit) c_[j] = j == source ? base : ext_->derive_parameter(base, source, ext_->generator(j));
  }
}

GroupAlgebraValue ParameterSystem::c_of(const W1Element& lift) const {
  const RootDatum& rd = ext_->root_datum();
  for (int j = 0; j < rd.num_affine(); ++j)
    if (rd.simple(j) == lift.w) return c_[j].translated(ext_->act(lift.w, lift.z));
  throw DomainError("c requested for " + ext_->format(lift) + ", which does not lift a simple reflection");
}

ParameterSystem ParameterSystem::generic(std::shared_ptr<const Extension> ext, Ring ring, int sample_length) {
  if (ring.kind != Ring::Kind::Polynomial) throw ConfigError("symbolic parameters need a polynomial ring");
  const AbelianGroup& z = ext->z();
  if (!z.is_finite()) throw ConfigError("symbolic parameters need a finite Z; give c explicitly");
  const RootDatum& rd = ext->root_datum();
  const auto elems = z.elements();
  std::map<ZElem, std::size_t> index;
  for (std::size_t k = 0; k < elems.size(); ++k) index[elems[k]] = k;

  std::vector<WeylElement> sample = ball(rd, sample_length);
  std::map<int, GroupAlgebraValue> given;
  for (const auto& orbit : reflection_orbits(*ext)) {
    const int b = orbit.front();
    const WeylElement s = rd.simple(b);
    std::vector<std::size_t> parent(elems.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](std::size_t a, std::size_t c) {
      a = find(a);
      c = find(c);
      if (a != c) parent[std::max(a, c)] = std::min(a, c);
    };
    // x s x^-1 = s forces c(t) = c(x(t) - v) with x~ s~ x~^-1 = s~ v.
    auto constrain = [&](const ZAutomorphism& phi, const W1Element& y) {
      ZElem v = ext->act(s, y.z);
      for (const auto& t : elems) unite(index.at(t), index.at(z.sub(z.apply(phi, t), v)));
    };
    for (const auto& x : sample)
      if (rd.conjugate(x, s) == s) constrain(ext->phi(x), ext->conjugate(ext->lift(x), ext->generator(b)));
    for (std::size_t g = 0; g < z.rank(); ++g)
      constrain(ZAutomorphism::identity(), ext->conjugate(ext->from_z(z.generator(g)), ext->generator(b)));

    std::map<std::size_t, int> var;
    GroupAlgebraValue c(&z, ring.modulus);
    for (std::size_t k = 0; k < elems.size(); ++k) {
      auto root = find(k);
      auto it = var.emplace(root, static_cast<int>(var.size())).first;
      c.add_term(elems[k], Poly::variable("c" + std::to_string(b) + "_" + std::to_string(it->second), ring.modulus));
    }
    given.emplace(b, std::move(c));
  }
  return ParameterSystem(std::move(ext), ring, std::move(given));
}

CheckReport ParameterSystem::check(int max_length) const {
  CheckReport rep;
  const RootDatum& rd = ext_->root_datum();
  const AbelianGroup& z = ext_->z();
  bool ok = true;
  for (const auto& [j, v] : given_)
    if (!(v == c_[j])) {
      ok = false;
      rep.fail("c for s" + std::to_string(j) + " is " + v.to_string() + " but transporting along conjugation gives " +
               c_[j].to_string() + " (c_{x s x^-1} = x(c_s) is violated)");
    }
  if (ok) rep.pass("given parameters agree with their conjugation orbits");

  ok = true;
  auto sample = ball(rd, max_length);
  for (const auto& orbit : orbits_) {
    const int b = orbit.front();
    const WeylElement s = rd.simple(b);
    for (const auto& x : sample) {
      WeylElement target = rd.conjugate(x, s);
      bool simple = false;
      for (int j : orbit) simple = simple || rd.simple(j) == target;
      if (!simple) continue;
      W1Element y = ext_->conjugate(ext_->lift(x), ext_->generator(b));
      GroupAlgebraValue lhs = ext_->ga_act(x, c_[b]), rhs = c_of(y);
      if (!(lhs == rhs)) {
        ok = false;
        rep.fail("x = " + rd.format(x) + " conjugates s" + std::to_string(b) + " to " + ext_->format(y) +
                 " but x(c) = " + lhs.to_string() + " differs from c of the conjugate " + rhs.to_string() +
                 " (c_{x s x^-1} = x(c_s) is violated)");
        break;
      }
    }
    for (std::size_t g = 0; g < z.rank() && ok; ++g) {
      W1Element y = ext_->conjugate(ext_->from_z(z.generator(g)), ext_->generator(b));
      if (!(c_of(y) == c_[b])) {
        ok = false;
        rep.fail("conjugating s" + std::to_string(b) + " by the Z generator " + z.format(z.generator(g)) +
                 " changes c (c_{s t} = c_s t is violated)");
      }
    }
  }
  if (ok) rep.pass("parameters are compatible with conjugation up to length " + std::to_string(max_length));
  return rep;
}

// ---------------------------------------------------------------------------
// elements

Poly HeckeElement::coeff(const W1Element& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Poly(0, modulus_) : it->second;
}

void HeckeElement::add_term(const W1Element& w, const Poly& c) {
  if (c.is_zero()) return;
  if (c.modulus() != modulus_) throw ConfigError("ring mismatch in Hecke element");
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement HeckeElement::scaled(const Poly& k) const {
  HeckeElement r(modulus_);
  for (const auto& [w, c] : terms_) r.add_term(w, c * k);
  return r;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (o.modulus_ != modulus_) throw ConfigError("ring mismatch in Hecke element");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  if (o.modulus_ != modulus_) throw ConfigError("ring mismatch in Hecke element");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

// ---------------------------------------------------------------------------
// algebra

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const ParameterSystem> params) : params_(std::move(params)) {}

HeckeElement HeckeAlgebra::basis(const W1Element& w) const { return basis(w, ring().one()); }

HeckeElement HeckeAlgebra::basis(const W1Element& w, const Poly& coeff) const {
  HeckeElement r = zero();
  r.add_term(w, coeff);
  return r;
}

HeckeElement HeckeAlgebra::from_group_algebra(const GroupAlgebraValue& a) const {
  HeckeElement r = zero();
  for (const auto& [t, c] : a.coeffs()) r.add_term(extension().from_z(t), c);
  return r;
}

template <class F>
HeckeElement HeckeAlgebra::relabel(const HeckeElement& x, F&& f) const {
  HeckeElement r(x.modulus());
  for (const auto& [a, c] : x.terms()) r.add_term(f(a), c);
  return r;
}

HeckeElement HeckeAlgebra::right_mul_generator(const HeckeElement& x, int j) const {
  const Extension& ext = extension();
  const RootDatum& rd = root_datum();
  const GroupAlgebraValue& c = params_->c(j);
  const WeylElement s = rd.simple(j);
  HeckeElement r(x.modulus());
  for (const auto& [a, coef] : x.terms()) {
    if (!rd.is_right_descent(j, a.w)) {
      r.add_term(ext.mul_s(a, j), coef);
    } else {
      for (const auto& [t, ct] : c.coeffs()) r.add_term(ext.mul_z(a, ext.act(s, t)), coef * ct);
    }
  }
  return r;
}

HeckeElement HeckeAlgebra::left_mul_generator(int j, const HeckeElement& x) const {
  const Extension& ext = extension();
  const RootDatum& rd = root_datum();
  const AbelianGroup& z = ext.z();
  const GroupAlgebraValue& c = params_->c(j);
  const W1Element g = ext.generator(j);
  HeckeElement r(x.modulus());
  for (const auto& [a, coef] : x.terms()) {
    if (!rd.is_left_descent(j, a.w)) {
      r.add_term(ext.mul(g, a), coef);
    } else {
      for (const auto& [t, ct] : c.coeffs()) r.add_term(W1Element{z.add(t, a.z), a.w}, coef * ct);
    }
  }
  return r;
}

HeckeElement HeckeAlgebra::mul_basis_right_gen(const W1Element& a, const W1Element& g) const {
  const RootDatum& rd = root_datum();
  const Extension& ext = extension();
  if (rd.length(g.w) == 0) return basis(ext.mul(a, g));
  for (int j = 0; j < rd.num_affine(); ++j)
    if (rd.simple(j) == g.w) return right_mul_generator(basis(ext.mul_z(a, g.z)), j);
  throw DomainError(ext.format(g) + " is not a generator lift");
}

HeckeElement HeckeAlgebra::right_mul_basis(const HeckeElement& x, const W1Element& b) const {
  const Extension& ext = extension();
  HeckeElement cur = b.z == ZElem{} ? x : relabel(x, [&](const W1Element& a) { return ext.mul_z(a, b.z); });
  ReducedWord word = root_datum().canonical_reduced_word(b.w);
  for (int j : word.letters) cur = right_mul_generator(cur, j);
  if (word.omega != 0) {
    const int sign = word.omega < 0 ? -1 : 1;
    const std::int64_t n = word.omega < 0 ? -word.omega : word.omega;
    cur = relabel(cur, [&](W1Element a) {
      for (std::int64_t k = 0; k < n; ++k) a = ext.mul_tau(a, sign);
      return a;
    });
  }
  return cur;
}

HeckeElement HeckeAlgebra::left_mul_basis(const W1Element& b, const HeckeElement& x) const {
  const Extension& ext = extension();
  const RootDatum& rd = root_datum();
  ReducedWord word = rd.canonical_reduced_word(b.w);
  HeckeElement cur = x;
  if (word.omega != 0) {
    W1Element om = ext.lift(rd.omega_power(word.omega));
    cur = relabel(cur, [&](const W1Element& a) { return ext.mul(om, a); });
  }
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) cur = left_mul_generator(*it, cur);
  if (b.z != ZElem{}) {
    const AbelianGroup& z = ext.z();
    cur = relabel(cur, [&](const W1Element& a) { return W1Element{z.add(b.z, a.z), a.w}; });
  }
  return cur;
}

HeckeElement HeckeAlgebra::mul(const HeckeElement& x, const HeckeElement& y) const {
  HeckeElement r = zero();
  for (const auto& [b, coef] : y.terms()) r += right_mul_basis(x, b).scaled(coef);
  return r;
}

HeckeElement HeckeAlgebra::bullet(const W1Element& g, const HeckeElement& h) const {
  const Extension& ext = extension();
  W1Element gi = ext.inverse(g);
  return relabel(h, [&](const W1Element& a) { return ext.mul(ext.mul(g, a), gi); });
}

bool HeckeAlgebra::key_less(const W1Element& a, const W1Element& b) const {
  if (a.w != b.w) return root_datum().key_less(a.w, b.w);
  return a.z < b.z;
}

std::vector<std::pair<W1Element, Poly>> HeckeAlgebra::sorted_terms(const HeckeElement& h) const {
  std::vector<std::pair<W1Element, Poly>> out(h.terms().begin(), h.terms().end());
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return key_less(x.first, y.first); });
  return out;
}

std::vector<W1Element> HeckeAlgebra::supp_max(const HeckeElement& h) const {
  if (h.is_zero()) throw DomainError("supp_max of the zero element");
  const RootDatum& rd = root_datum();
  int best = -1;
  std::vector<W1Element> out;
  for (const auto& [a, c] : h.terms()) {
    int l = rd.length(a.w);
    if (l > best) {
      best = l;
      out.clear();
    }
    if (l == best) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return key_less(x, y); });
  return out;
}

}  // namespace prohecke
