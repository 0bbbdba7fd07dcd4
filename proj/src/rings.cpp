#include "prohecke/rings.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "prohecke/errors.hpp"

namespace prohecke {

// ---------------------------------------------------------------------------
// variables

namespace {

struct VariableRegistry {
  std::shared_mutex mutex;
  std::unordered_map<std::string, VarId> ids;
  std::deque<std::string> names;  // deque: references stay valid on growth
};

VariableRegistry& registry() {
  static VariableRegistry r;
  return r;
}

bool valid_name(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

VarId intern_variable(std::string_view name) {
  if (!valid_name(name)) throw ConfigError("invalid indeterminate name '" + std::string(name) + "'");
  auto& r = registry();
  {
    std::shared_lock lock(r.mutex);
    auto it = r.ids.find(std::string(name));
    if (it != r.ids.end()) return it->second;
  }
  std::unique_lock lock(r.mutex);
  auto [it, inserted] = r.ids.emplace(std::string(name), static_cast<VarId>(r.names.size()));
  if (inserted) r.names.emplace_back(name);
  return it->second;
}

const std::string& variable_name(VarId id) {
  auto& r = registry();
  std::shared_lock lock(r.mutex);
  return r.names.at(id);
}

// ---------------------------------------------------------------------------
// checked integer arithmetic

namespace {

std::int64_t reduce(__int128 v, std::int64_t m) {
  if (m == 0) {
    if (v > INT64_MAX || v < INT64_MIN) throw ArithmeticError("integer coefficient overflow");
    return static_cast<std::int64_t>(v);
  }
  v %= m;
  if (v < 0) v += m;
  return static_cast<std::int64_t>(v);
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

std::uint32_t Monomial::degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& f : factors) d += f.second;
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors.reserve(a.factors.size() + b.factors.size());
  auto i = a.factors.begin();
  auto j = b.factors.begin();
  while (i != a.factors.end() || j != b.factors.end()) {
    if (j == b.factors.end() || (i != a.factors.end() && i->first < j->first)) {
      r.factors.push_back(*i++);
    } else if (i == a.factors.end() || j->first < i->first) {
      r.factors.push_back(*j++);
    } else {
      r.factors.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::int64_t c, std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 0) throw ConfigError("modulus must be positive");
  c = reduce(c, modulus);
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

Poly Poly::variable(std::string_view name, std::int64_t modulus) {
  Monomial m;
  m.factors.emplace_back(intern_variable(name), 1);
  return from_terms({{std::move(m), 1}}, modulus);
}

Poly Poly::from_terms(std::vector<Term> terms, std::int64_t modulus) {
  Poly p;
  p.modulus_ = modulus;
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void Poly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second = reduce(static_cast<__int128>(out.back().second) + t.second, modulus_);
    } else {
      out.emplace_back(std::move(t.first), reduce(t.second, modulus_));
    }
    if (out.back().second == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

std::int64_t Poly::constant_term() const noexcept {
  if (!terms_.empty() && terms_[0].first.is_one()) return terms_[0].second;
  return 0;
}

void Poly::check_same_ring(const Poly& o) const {
  if (modulus_ != o.modulus_)
    throw ConfigError("ring mismatch: modulus " + std::to_string(modulus_) + " vs " + std::to_string(o.modulus_));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = reduce(-static_cast<__int128>(t.second), modulus_);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_ring(o);
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      auto c = reduce(static_cast<__int128>(i->second) + j->second, modulus_);
      if (c != 0) out.emplace_back(std::move(i->first), c);
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_ring(b);
  if (a.terms_.empty() || b.terms_.empty()) return Poly(0, a.modulus_);
  std::map<Monomial, __int128> acc;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      auto& slot = acc[ma * mb];
      slot += static_cast<__int128>(ca) * cb;
      if (a.modulus_ != 0) slot %= a.modulus_;
    }
  Poly r;
  r.modulus_ = a.modulus_;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    auto v = reduce(c, a.modulus_);
    if (v != 0) r.terms_.emplace_back(m, v);
  }
  return r;
}

Poly Poly::scaled(std::int64_t k) const { return *this * Poly(k, modulus_); }

int Poly::uniform_sign() const noexcept {
  if (terms_.empty()) return 0;
  bool pos = true, neg = true;
  for (const auto& t : terms_) {
    if (t.second > 0) neg = false;
    if (t.second < 0) pos = false;
  }
  return pos ? 1 : (neg ? -1 : 0);
}

namespace {

using NamedFactors = std::vector<std::pair<std::string, std::uint32_t>>;

NamedFactors named(const Monomial& m) {
  NamedFactors f;
  for (const auto& [id, e] : m.factors) f.emplace_back(variable_name(id), e);
  std::sort(f.begin(), f.end());
  return f;
}

// Lexicographic on names, larger exponent first; constants last.
bool print_before(const NamedFactors& a, const NamedFactors& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i].first != b[i].first) return a[i].first < b[i].first;
    if (a[i].second != b[i].second) return a[i].second > b[i].second;
  }
  return a.size() > b.size();
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<NamedFactors, std::int64_t>> rows;
  rows.reserve(terms_.size());
  for (const auto& [m, c] : terms_) rows.emplace_back(named(m), c);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return print_before(a.first, b.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [f, c] : rows) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (mag != 1 || f.empty()) {
      os << mag;
      need_star = true;
    }
    for (const auto& [name, e] : f) {
      if (need_star) os << '*';
      os << name;
      if (e != 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// polynomial parser

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::int64_t modulus) : text_(text), modulus_(modulus) {}

  Poly parse() {
    Poly p = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " in polynomial '" + std::string(text_) + "'", 1, static_cast<int>(pos_) + 1);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly sum() {
    skip();
    Poly acc(0, modulus_);
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    Poly t = product();
    acc += negate ? -t : t;
    while (true) {
      if (eat('+')) acc += product();
      else if (eat('-')) acc -= product();
      else break;
    }
    return acc;
  }

  Poly product() {
    Poly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  std::uint32_t exponent() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    return static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  Poly factor() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    Poly base;
    if (c == '(') {
      ++pos_;
      base = sum();
      if (!eat(')')) fail("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::int64_t v;
      try {
        v = std::stoll(std::string(text_.substr(start, pos_ - start)));
      } catch (const std::out_of_range&) {
        fail("integer literal out of range");
      }
      base = Poly(v, modulus_);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      base = Poly::variable(text_.substr(start, pos_ - start), modulus_);
    } else if (c == '-') {
      ++pos_;
      return -factor();
    } else {
      fail("unexpected character '" + std::string(1, c) + "'");
    }
    if (eat('^')) {
      auto e = exponent();
      Poly r(1, modulus_);
      for (std::uint32_t i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  std::string_view text_;
  std::int64_t modulus_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::int64_t modulus) { return PolyParser(text, modulus).parse(); }

// ---------------------------------------------------------------------------
// Ring

void Ring::check(const Poly& p) const {
  if (p.modulus() != modulus) throw ConfigError("value " + p.to_string() + " does not belong to ring " + name());
  if (kind != Kind::Polynomial && !p.is_constant())
    throw ConfigError("indeterminates are not allowed in ring " + name() + ": " + p.to_string());
}

std::string Ring::name() const {
  switch (kind) {
    case Kind::Integer: return "integer";
    case Kind::IntegerMod: return "mod:" + std::to_string(modulus);
    case Kind::Polynomial: return modulus == 0 ? "polynomial" : "polynomial:" + std::to_string(modulus);
  }
  return "?";
}

Ring Ring::parse(std::string_view text) {
  std::string t(text);
  auto mod_of = [&](std::size_t from) -> std::int64_t {
    std::int64_t m;
    try {
      m = std::stoll(t.substr(from));
    } catch (const std::exception&) {
      throw ConfigError("bad modulus in ring '" + t + "'");
    }
    if (m < 2) throw ConfigError("modulus must be at least 2 in ring '" + t + "'");
    return m;
  };
  if (t == "integer") return Ring{Kind::Integer, 0};
  if (t == "polynomial") return Ring{Kind::Polynomial, 0};
  if (t.rfind("mod:", 0) == 0) return Ring{Kind::IntegerMod, mod_of(4)};
  if (t.rfind("polynomial:", 0) == 0) return Ring{Kind::Polynomial, mod_of(11)};
  throw ConfigError("unknown ring '" + t + "' (expected integer, mod:M, polynomial, polynomial:M)");
}

// ---------------------------------------------------------------------------
// GroupAlgebraValue

GroupAlgebraValue GroupAlgebraValue::basis(const AbelianGroup* group, const ZElem& t, const Poly& coeff) {
  GroupAlgebraValue v(group, coeff.modulus());
  v.add_term(t, coeff);
  return v;
}

Poly GroupAlgebraValue::coeff(const ZElem& t) const {
  auto it = coeffs_.find(t);
  return it == coeffs_.end() ? Poly(0, modulus_) : it->second;
}

void GroupAlgebraValue::add_term(const ZElem& t, const Poly& c) {
  if (c.modulus() != modulus_) throw ConfigError("ring mismatch in group algebra");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

GroupAlgebraValue GroupAlgebraValue::scaled(const Poly& k) const {
  GroupAlgebraValue r(group_, modulus_);
  for (const auto& [t, c] : coeffs_) r.add_term(t, c * k);
  return r;
}

GroupAlgebraValue GroupAlgebraValue::translated(const ZElem& u) const {
  GroupAlgebraValue r(group_, modulus_);
  for (const auto& [t, c] : coeffs_) r.add_term(group_->add(t, u), c);
  return r;
}

GroupAlgebraValue GroupAlgebraValue::mapped(const ZAutomorphism& phi) const {
  GroupAlgebraValue r(group_, modulus_);
  for (const auto& [t, c] : coeffs_) r.add_term(group_->apply(phi, t), c);
  return r;
}

std::string GroupAlgebraValue::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : coeffs_) {
    if (!first) os << " ; ";
    first = false;
    os << group_->format(t) << ": " << c.to_string();
  }
  return os.str();
}

namespace {

void check_compatible(const GroupAlgebraValue& a, const GroupAlgebraValue& b) {
  if (a.group() != b.group() && !(a.group() && b.group() && *a.group() == *b.group()))
    throw ConfigError("group algebra values over different groups Z");
  if (a.modulus() != b.modulus()) throw ConfigError("group algebra values over different rings");
}

}  // namespace

GroupAlgebraValue ga_add(const GroupAlgebraValue& a, const GroupAlgebraValue& b) {
  check_compatible(a, b);
  GroupAlgebraValue r = a;
  for (const auto& [t, c] : b.coeffs()) r.add_term(t, c);
  return r;
}

GroupAlgebraValue ga_mul(const GroupAlgebraValue& a, const GroupAlgebraValue& b) {
  check_compatible(a, b);
  GroupAlgebraValue r(a.group(), a.modulus());
  for (const auto& [t, c] : a.coeffs())
    for (const auto& [u, d] : b.coeffs()) r.add_term(a.group()->add(t, u), c * d);
  return r;
}

}  // namespace prohecke
