#include "prohecke/cover.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "prohecke/errors.hpp"

namespace prohecke {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

ExtensionSpec split_extension(const RootDatum& rd, std::vector<std::int64_t> z_orders) {
  ExtensionSpec spec;
  spec.label = "split";
  spec.z_orders = std::move(z_orders);
  spec.action.assign(rd.num_affine(), ZAutomorphism::identity());
  spec.mu.assign(rd.num_affine(), ZElem{});
  spec.omega_twist.assign(rd.num_affine(), ZElem{});
  return spec;
}

ExtensionSpec nonsplit_extension(const RootDatum& rd) {
  ExtensionSpec spec;
  spec.label = "nonsplit";
  spec.z_orders = {4};
  ZAutomorphism inv = ZAutomorphism::identity();
  inv.m[0][0] = -1;
  spec.action.assign(rd.num_affine(), inv);
  spec.omega_action = inv;
  ZElem two;
  two.e[0] = 2;
  spec.mu.assign(rd.num_affine(), two);
  spec.omega_twist.assign(rd.num_affine(), ZElem{});
  return spec;
}

Extension::Extension(std::shared_ptr<const RootDatum> rd, ExtensionSpec spec)
    : rd_(std::move(rd)), spec_(std::move(spec)), z_(spec_.z_orders) {
  const int na = rd_->num_affine();
  auto sized = [&](auto& v, const auto& fill, const char* what) {
    if (v.empty()) v.assign(na, fill);
    if (static_cast<int>(v.size()) != na)
      throw ConfigError(std::string(what) + " must have one entry per affine generator (" + std::to_string(na) + ")");
  };
  sized(spec_.action, ZAutomorphism::identity(), "action");
  sized(spec_.mu, ZElem{}, "mu");
  sized(spec_.omega_twist, ZElem{}, "omega twist");
  if (spec_.sigma_cache_limit == 0) spec_.sigma_cache_limit = 1;
  if (spec_.move_budget_factor <= 0) throw ConfigError("move budget factor must be positive");

  for (int i = 0; i < na; ++i) {
    auto& a = spec_.action[i];
    if (!z_.is_well_defined(a)) throw ConfigError("action of s" + std::to_string(i) + " is not well defined on Z");
    a = z_.normalize(a);
    action_inv_.push_back(z_.inverse(a));
    spec_.mu[i] = z_.normalize(spec_.mu[i]);
    spec_.omega_twist[i] = z_.normalize(spec_.omega_twist[i]);
  }
  if (!z_.is_well_defined(spec_.omega_action)) throw ConfigError("action of tau is not well defined on Z");
  spec_.omega_action = z_.normalize(spec_.omega_action);
  omega_inv_ = z_.inverse(spec_.omega_action);
  spec_.omega_power_defect = z_.normalize(spec_.omega_power_defect);
  for (auto& [key, d] : spec_.braid) {
    auto [i, j] = key;
    if (i < 0 || j >= na || i >= j)
      throw ConfigError("braid defect key (" + std::to_string(i) + "," + std::to_string(j) + ") must satisfy 0 <= i < j < " +
                        std::to_string(na));
    if (rd_->coxeter_m(i, j) == 0)
      throw ConfigError("braid defect given for s" + std::to_string(i) + ", s" + std::to_string(j) +
                        " whose product has infinite order");
    d = z_.normalize(d);
  }

  auto name = [](int i) { return "s" + std::to_string(i); };
  for (int i = 0; i < na; ++i) {
    const auto& a = spec_.action[i];
    if (!z_.is_identity(z_.compose(a, a))) throw ConfigError("relation " + name(i) + "^2 = 1 fails for the action on Z");
    if (z_.apply(a, spec_.mu[i]) != spec_.mu[i])
      throw ConfigError("mu of " + name(i) + " is not fixed by the action of " + name(i));
    for (int j = i + 1; j < na; ++j) {
      int m = rd_->coxeter_m(i, j);
      if (m == 0) continue;
      ZAutomorphism p = z_.compose(a, spec_.action[j]), acc = ZAutomorphism::identity();
      for (int k = 0; k < m; ++k) acc = z_.compose(acc, p);
      if (!z_.is_identity(acc))
        throw ConfigError("braid relation (" + name(i) + name(j) + ")^" + std::to_string(m) +
                          " = 1 fails for the action on Z");
    }
  }
  if (rd_->has_omega()) {
    const auto& t = spec_.omega_action;
    for (int i = 0; i < na; ++i) {
      int j = rd_->omega_conjugate(i, 1);
      if (z_.compose(z_.compose(t, spec_.action[i]), omega_inv_) != spec_.action[j])
        throw ConfigError("relation tau " + name(i) + " tau^-1 = " + name(j) + " fails for the action on Z");
    }
    std::int64_t n = rd_->omega_order();
    if (n > 0) {
      ZAutomorphism acc = ZAutomorphism::identity();
      for (std::int64_t k = 0; k < n; ++k) acc = z_.compose(acc, t);
      if (!z_.is_identity(acc)) throw ConfigError("relation tau^" + std::to_string(n) + " = 1 fails for the action on Z");
      if (z_.apply(t, spec_.omega_power_defect) != spec_.omega_power_defect)
        throw ConfigError("tau^" + std::to_string(n) + " is not fixed by the action of tau");
    } else if (spec_.omega_power_defect != ZElem{}) {
      throw ConfigError("omega power defect given but Omega is infinite");
    }
  } else {
    for (const auto& z : spec_.omega_twist)
      if (z != ZElem{}) throw ConfigError("omega twists given but Omega is trivial");
    if (spec_.omega_power_defect != ZElem{}) throw ConfigError("omega power defect given but Omega is trivial");
  }
}

// ---------------------------------------------------------------------------
// action

ZAutomorphism Extension::omega_phi_power(std::int64_t k) const {
  ZAutomorphism acc = ZAutomorphism::identity();
  const ZAutomorphism& base = k < 0 ? omega_inv_ : spec_.omega_action;
  for (std::int64_t n = k < 0 ? -k : k; n > 0; --n) acc = z_.compose(acc, base);
  return acc;
}

ZAutomorphism Extension::word_phi(const std::vector<int>& letters, std::size_t from, std::size_t to) const {
  ZAutomorphism acc = ZAutomorphism::identity();
  for (std::size_t k = from; k < to; ++k) acc = z_.compose(acc, spec_.action[letters[k]]);
  return acc;
}

const Extension::Info& Extension::info(const WeylElement& w) const {
  {
    std::shared_lock lock(info_mutex_);
    auto it = info_cache_.find(w);
    if (it != info_cache_.end()) return it->second;
  }
  Info inf;
  inf.word = rd_->canonical_reduced_word(w);
  const auto& L = inf.word.letters;
  inf.phi = z_.compose(word_phi(L, 0, L.size()), omega_phi_power(inf.word.omega));
  ZAutomorphism inv = omega_phi_power(-inf.word.omega);
  for (auto it = L.rbegin(); it != L.rend(); ++it) inv = z_.compose(inv, action_inv_[*it]);
  inf.phi_inv = inv;
  std::unique_lock lock(info_mutex_);
  return info_cache_.emplace(w, std::move(inf)).first->second;
}

ZAutomorphism Extension::phi(const WeylElement& w) const { return info(w).phi; }

ZElem Extension::act(const WeylElement& w, const ZElem& t) const { return z_.apply(info(w).phi, t); }

GroupAlgebraValue Extension::ga_act(const WeylElement& w, const GroupAlgebraValue& a) const {
  return a.mapped(info(w).phi);
}

// ---------------------------------------------------------------------------
// braid rewriting

ZElem Extension::braid_defect(int first, int second) const {
  auto key = first < second ? std::pair{first, second} : std::pair{second, first};
  auto it = spec_.braid.find(key);
  if (it == spec_.braid.end()) return ZElem{};
  return first < second ? it->second : z_.neg(it->second);
}

// Rewrites word[pos:] so that it starts with x; returns d with
// lift(old word[pos:]) = d * lift(new word[pos:]).
ZElem Extension::bring_to_front(std::vector<int>& word, std::size_t pos, int x, long& budget) const {
  if (pos >= word.size()) throw ConsistencyError("braid rewriting ran past the end of a word");
  const int y = word[pos];
  if (y == x) return ZElem{};
  const int m = rd_->coxeter_m(x, y);
  if (m == 0 || pos + m > word.size())
    throw ConsistencyError("s" + std::to_string(x) + " is not a left descent during braid rewriting");
  ZElem d{};
  for (int k = 1; k < m; ++k) {
    int want = (k % 2 == 1) ? x : y;
    ZElem dk = bring_to_front(word, pos + k, want, budget);
    d = z_.add(d, z_.apply(word_phi(word, pos, pos + k), dk));
  }
  d = z_.add(d, braid_defect(y, x));
  for (int k = 0; k < m; ++k) word[pos + k] = (k % 2 == 0) ? x : y;
  if (--budget < 0) throw ConsistencyError("braid move budget exhausted");
  return d;
}

// d with lift(from) = d * lift(to); both reduced words of one element.
ZElem Extension::transform(std::vector<int> from, const std::vector<int>& to) const {
  if (from.size() != to.size()) throw ConsistencyError("words of different length in braid rewriting");
  long budget = static_cast<long>(spec_.move_budget_factor) * static_cast<long>(from.size() * from.size() + 1);
  ZElem d{};
  for (std::size_t k = 0; k < to.size(); ++k) {
    ZElem dk = bring_to_front(from, k, to[k], budget);
    d = z_.add(d, z_.apply(word_phi(to, 0, k), dk));
  }
  return d;
}

// L(aff) s~_j = delta * L(next), aff in W^aff.
Extension::Step Extension::step(const WeylElement& aff, int j) const {
  StepKey key{aff, j};
  {
    std::shared_lock lock(step_mutex_);
    auto it = step_cache_.find(key);
    if (it != step_cache_.end()) return it->second;
  }
  Step st;
  st.next = rd_->multiply(aff, rd_->simple(j));
  const auto& from = info(aff).word.letters;
  const auto& target = info(st.next).word.letters;
  if (target.size() > from.size()) {
    std::vector<int> w = from;
    w.push_back(j);
    st.delta = transform(std::move(w), target);
  } else {
    std::vector<int> to = target;
    to.push_back(j);
    ZElem d = transform(from, to);
    st.delta = z_.add(d, z_.apply(info(st.next).phi, spec_.mu[j]));
  }
  std::unique_lock lock(step_mutex_);
  step_cache_.emplace(key, st);
  return st;
}

// tau~^k s~_j = Z' s~_j' tau~^k.
std::pair<ZElem, int> Extension::shift(std::int64_t k, int j) const {
  if (k == 0) return {ZElem{}, j};
  {
    std::lock_guard lock(shift_mutex_);
    auto it = shift_cache_.find({k, j});
    if (it != shift_cache_.end()) return it->second;
  }
  std::pair<ZElem, int> r;
  if (k > 0) {
    auto [z1, j1] = shift(k - 1, rd_->omega_conjugate(j, 1));
    r = {z_.add(z_.apply(omega_phi_power(k - 1), spec_.omega_twist[j]), z1), j1};
  } else {
    int jp = rd_->omega_conjugate(j, -1);
    auto [z1, j1] = shift(k + 1, jp);
    r = {z_.add(z_.apply(omega_phi_power(k), z_.neg(spec_.omega_twist[jp])), z1), j1};
  }
  std::lock_guard lock(shift_mutex_);
  shift_cache_.emplace(std::pair{k, j}, r);
  return r;
}

// ---------------------------------------------------------------------------
// group law

W1Element Extension::mul_z(const W1Element& a, const ZElem& t) const {
  return W1Element{z_.add(a.z, act(a.w, z_.normalize(t))), a.w};
}

W1Element Extension::mul_s(const W1Element& a, int i) const {
  if (i < 0 || i >= rd_->num_affine()) throw DomainError("generator s" + std::to_string(i) + " out of range");
  std::int64_t k = rd_->omega_exponent(a.w);
  WeylElement aff = k == 0 ? a.w : rd_->multiply(a.w, rd_->omega_power(-k));
  auto [zs, jp] = shift(k, i);
  ZElem z = z_.add(a.z, z_.apply(info(aff).phi, zs));
  Step st = step(aff, jp);
  z = z_.add(z, st.delta);
  WeylElement w = k == 0 ? st.next : rd_->multiply(st.next, rd_->omega_power(k));
  return W1Element{z, w};
}

W1Element Extension::mul_s_inverse(const W1Element& a, int i) const {
  return mul_z(mul_s(a, i), z_.neg(spec_.mu[i]));
}

W1Element Extension::mul_tau(const W1Element& a, int sign) const {
  if (!rd_->has_omega()) throw DomainError("Omega is trivial; there is no tau");
  std::int64_t k = rd_->omega_exponent(a.w);
  WeylElement aff = k == 0 ? a.w : rd_->multiply(a.w, rd_->omega_power(-k));
  std::int64_t n = rd_->omega_order();
  std::int64_t kk = k + (sign < 0 ? -1 : 1);
  ZElem z = a.z;
  if (n > 0 && kk == n) {
    kk = 0;
    z = z_.add(z, z_.apply(info(aff).phi, spec_.omega_power_defect));
  } else if (n > 0 && kk < 0) {
    kk = n - 1;
    z = z_.add(z, z_.apply(info(aff).phi, z_.neg(spec_.omega_power_defect)));
  }
  return W1Element{z, rd_->multiply(aff, rd_->omega_power(kk))};
}

ZElem Extension::sigma(const WeylElement& v, const WeylElement& w) const {
  PairKey key{v, w};
  {
    std::lock_guard lock(sigma_mutex_);
    auto it = sigma_index_.find(key);
    if (it != sigma_index_.end()) {
      sigma_lru_.splice(sigma_lru_.begin(), sigma_lru_, it->second);
      return it->second->second;
    }
  }
  W1Element cur = lift(v);
  const auto& word = info(w).word;
  for (int i : word.letters) cur = mul_s(cur, i);
  for (std::int64_t k = 0; k < (word.omega < 0 ? -word.omega : word.omega); ++k) cur = mul_tau(cur, word.omega < 0 ? -1 : 1);
  std::lock_guard lock(sigma_mutex_);
  if (!sigma_index_.count(key)) {
    sigma_lru_.emplace_front(key, cur.z);
    sigma_index_[key] = sigma_lru_.begin();
    while (sigma_lru_.size() > spec_.sigma_cache_limit) {
      sigma_index_.erase(sigma_lru_.back().first);
      sigma_lru_.pop_back();
    }
  }
  return cur.z;
}

W1Element Extension::mul(const W1Element& a, const W1Element& b) const {
  ZElem z = z_.add(a.z, act(a.w, b.z));
  z = z_.add(z, sigma(a.w, b.w));
  return W1Element{z, rd_->multiply(a.w, b.w)};
}

W1Element Extension::inverse(const W1Element& a) const {
  WeylElement wi = rd_->inverse(a.w);
  ZElem s = sigma(a.w, wi);
  return W1Element{z_.neg(act(wi, z_.add(a.z, s))), wi};
}

W1Element Extension::conjugate(const W1Element& g, const W1Element& x) const {
  return mul(mul(g, x), inverse(g));
}

W1Element Extension::normalize_word(const std::vector<Token>& word) const {
  W1Element cur = identity();
  for (const auto& t : word) {
    switch (t.kind) {
      case Token::Kind::S: cur = mul_s(cur, t.index); break;
      case Token::Kind::SInv: cur = mul_s_inverse(cur, t.index); break;
      case Token::Kind::Tau: cur = mul_tau(cur, 1); break;
      case Token::Kind::TauInv: cur = mul_tau(cur, -1); break;
      case Token::Kind::Z: cur = mul_z(cur, t.z); break;
    }
  }
  return cur;
}

// ---------------------------------------------------------------------------
// parameters

std::optional<WeylElement> Extension::conjugator(int from, int to) const {
  {
    std::lock_guard lock(conj_mutex_);
    auto it = conj_cache_.find({from, to});
    if (it != conj_cache_.end()) return it->second;
  }
  const WeylElement s = rd_->simple(from), target = rd_->simple(to);
  std::optional<WeylElement> found;
  std::set<WeylElement> seen{rd_->identity()};
  std::deque<std::pair<WeylElement, int>> queue{{rd_->identity(), 0}};
  const int max_depth = 2 * rd_->num_affine() + 4;
  std::vector<WeylElement> gens;
  for (int i = 0; i < rd_->num_affine(); ++i) gens.push_back(rd_->simple(i));
  if (rd_->has_omega()) {
    gens.push_back(rd_->omega());
    gens.push_back(rd_->inverse(rd_->omega()));
  }
  while (!queue.empty() && seen.size() < 20000) {
    auto [x, d] = queue.front();
    queue.pop_front();
    if (rd_->conjugate(x, s) == target) {
      found = x;
      break;
    }
    if (d == max_depth) continue;
    for (const auto& g : gens) {
      WeylElement n = rd_->multiply(g, x);
      if (seen.insert(n).second) queue.emplace_back(n, d + 1);
    }
  }
  std::lock_guard lock(conj_mutex_);
  conj_cache_[{from, to}] = found;
  return found;
}

GroupAlgebraValue Extension::derive_parameter(const GroupAlgebraValue& c_base, int base,
                                              const W1Element& target) const {
  int j = -1;
  for (int i = 0; i < rd_->num_affine(); ++i)
    if (rd_->simple(i) == target.w) j = i;
  if (j < 0) throw DomainError("parameter requested for " + format(target) + ", which does not lift a simple reflection");
  auto x = conjugator(base, j);
  if (!x) throw DomainError("s" + std::to_string(j) + " is not conjugate to s" + std::to_string(base));
  W1Element xl = lift(*x);
  W1Element y = conjugate(xl, generator(base));  // (u, s_j)
  GroupAlgebraValue c = ga_act(*x, c_base);
  ZElem t = z_.sub(target.z, y.z);
  return c.translated(z_.apply(spec_.action[j], t));
}

// ---------------------------------------------------------------------------
// consistency sampling

CheckReport Extension::check_consistency(int samples, std::uint64_t seed) const {
  CheckReport rep;
  std::mt19937_64 rng(seed);
  const int na = rd_->num_affine();

  std::vector<W1Element> gens;
  for (int i = 0; i < na; ++i) gens.push_back(generator(i));
  if (rd_->has_omega()) {
    gens.push_back(omega_generator());
    gens.push_back(inverse(omega_generator()));
  }
  for (std::size_t g = 0; g < z_.rank(); ++g) gens.push_back(from_z(z_.generator(g)));

  auto random_element = [&](int max_letters) {
    std::uniform_int_distribution<int> len(0, max_letters);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    W1Element cur = identity();
    for (int k = len(rng); k > 0; --k) cur = mul(cur, gens[pick(rng)]);
    return cur;
  };

  auto check_triple = [&](const W1Element& a, const W1Element& b, const W1Element& c) {
    W1Element l = mul(mul(a, b), c), r = mul(a, mul(b, c));
    if (l != r) {
      rep.fail("associativity: a = " + format(a) + ", b = " + format(b) + ", c = " + format(c) + ": (ab)c = " +
               format(l) + " but a(bc) = " + format(r));
      return false;
    }
    return true;
  };

  // Squares of conjugated generators must match.
  bool twist_ok = true;
  if (rd_->has_omega()) {
    for (int i = 0; i < na; ++i) {
      int j = rd_->omega_conjugate(i, 1);
      const ZElem& z = spec_.omega_twist[i];
      ZElem lhs = z_.apply(spec_.omega_action, spec_.mu[i]);
      ZElem rhs = z_.add(z_.add(z, z_.apply(spec_.action[j], z)), spec_.mu[j]);
      if (lhs != rhs) {
        rep.fail("twist relation: tau mu(s" + std::to_string(i) + ") tau^-1 = " + z_.format(lhs) +
                 " but (z s" + std::to_string(j) + ")^2 = " + z_.format(rhs));
        twist_ok = false;
      }
    }
  }
  if (twist_ok) rep.pass("twisted squares of generators agree");

  bool structured_ok = true;
  std::vector<W1Element> shorts;
  for (const auto& a : gens)
    for (const auto& b : gens) shorts.push_back(mul(a, b));
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      for (const auto& c : shorts)
        if (!check_triple(a, b, c)) {
          structured_ok = false;
          break;
        }
      if (!structured_ok) break;
    }
    if (!structured_ok) break;
  }
  // Alternating braid products conjugated by every generator.
  for (int i = 0; i < na && structured_ok; ++i)
    for (int j = i + 1; j < na && structured_ok; ++j) {
      int m = rd_->coxeter_m(i, j);
      if (m == 0) continue;
      W1Element p = identity(), q = identity();
      for (int k = 0; k < m; ++k) {
        p = mul_s(p, k % 2 ? j : i);
        q = mul_s(q, k % 2 ? i : j);
      }
      for (const auto& g : gens)
        for (const auto& c : gens)
          if (structured_ok && (!check_triple(g, p, c) || !check_triple(g, q, c) || !check_triple(p, g, q)))
            structured_ok = false;
    }
  if (structured_ok) rep.pass("associativity on generator triples and braid words");

  bool random_ok = true;
  for (int k = 0; k < samples && random_ok; ++k) {
    W1Element a = random_element(6), b = random_element(6), c = random_element(6);
    if (!check_triple(a, b, c)) random_ok = false;
    if (random_ok && mul(a, inverse(a)) != identity()) {
      rep.fail("inverse: a = " + format(a) + " times its inverse is " + format(mul(a, inverse(a))));
      random_ok = false;
    }
  }
  if (random_ok) rep.pass("associativity and inverses on " + std::to_string(samples) + " random triples");
  return rep;
}

// ---------------------------------------------------------------------------
// text

std::string Extension::format(const W1Element& a) const { return z_.format(a.z) + "; " + rd_->format(a.w); }

W1Element Extension::parse(std::string_view text) const {
  std::string s = trim(text);
  auto semi = s.find(';');
  if (semi != std::string::npos) {
    ZElem z = z_.parse(trim(std::string_view(s).substr(0, semi)));
    WeylElement w = rd_->parse(trim(std::string_view(s).substr(semi + 1)));
    return W1Element{z_.normalize(z), w};
  }
  return normalize_word(parse_word(s));
}

std::vector<Token> Extension::parse_word(std::string_view text) const {
  std::vector<Token> out;
  std::string s = trim(text);
  if (s.empty()) throw ParseError("empty W(1) word", 0, 0);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    // Z elements may contain '*'-free commas, so split at top-level '*' only.
    std::size_t end = pos;
    int depth = 0;
    while (end < s.size() && (depth > 0 || s[end] != '*')) {
      if (s[end] == '(') ++depth;
      if (s[end] == ')') --depth;
      ++end;
    }
    std::string tok = trim(std::string_view(s).substr(pos, end - pos));
    if (tok.empty()) throw ParseError("empty factor in W(1) word '" + s + "'", 0, 0);
    std::int64_t power = 1;
    std::string head = tok;
    auto caret = tok.find('^');
    if (caret != std::string::npos && tok[0] != '(') {
      head = trim(std::string_view(tok).substr(0, caret));
      try {
        std::size_t used = 0;
        std::string ps = trim(std::string_view(tok).substr(caret + 1));
        power = std::stoll(ps, &used);
        if (used != ps.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError("bad exponent in '" + tok + "'", 0, 0);
      }
    }
    if (head == "1") {
    } else if (head[0] == '(') {
      out.push_back(Token{Token::Kind::Z, 0, z_.normalize(z_.parse(head))});
    } else if (head == rd_->omega_name()) {
      for (std::int64_t k = 0; k < (power < 0 ? -power : power); ++k)
        out.push_back(Token{power < 0 ? Token::Kind::TauInv : Token::Kind::Tau, 0, {}});
    } else if (head.size() >= 2 && head[0] == 's' &&
               std::all_of(head.begin() + 1, head.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      int i = std::stoi(head.substr(1));
      if (i >= rd_->num_affine()) throw ParseError("generator " + head + " out of range", 0, 0);
      for (std::int64_t k = 0; k < (power < 0 ? -power : power); ++k)
        out.push_back(Token{power < 0 ? Token::Kind::SInv : Token::Kind::S, i, {}});
    } else {
      throw ParseError("unknown factor '" + tok + "' in W(1) word", 0, 0);
    }
    if (end >= s.size()) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace prohecke
