#include "prohecke/zgroup.hpp"

#include <sstream>

#include "prohecke/errors.hpp"

namespace prohecke {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("Z exponent overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("Z exponent overflow");
  return r;
}

std::int64_t reduce(std::int64_t v, std::int64_t order) {
  if (order == 0) return v;
  v %= order;
  return v < 0 ? v + order : v;
}

}  // namespace

ZAutomorphism ZAutomorphism::identity() {
  ZAutomorphism a;
  for (std::size_t i = 0; i < kMaxZRank; ++i) a.m[i][i] = 1;
  return a;
}

AbelianGroup::AbelianGroup(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
  if (orders_.size() > kMaxZRank)
    throw ConfigError("Z may have at most " + std::to_string(kMaxZRank) + " cyclic factors");
  for (auto n : orders_)
    if (n < 0) throw ConfigError("cyclic factor orders must be nonnegative (0 = infinite)");
}

bool AbelianGroup::is_finite() const noexcept {
  for (auto n : orders_)
    if (n == 0) return false;
  return true;
}

std::size_t AbelianGroup::size() const {
  std::size_t s = 1;
  for (auto n : orders_) s *= static_cast<std::size_t>(n);
  return s;
}

ZElem AbelianGroup::generator(std::size_t i) const {
  ZElem z;
  z.e[i] = 1;
  return normalize(z);
}

ZElem AbelianGroup::make(const std::vector<std::int64_t>& exps) const {
  if (exps.size() != orders_.size())
    throw ConfigError("Z element has " + std::to_string(exps.size()) + " coordinates, expected " +
                      std::to_string(orders_.size()));
  ZElem z;
  for (std::size_t i = 0; i < exps.size(); ++i) z.e[i] = exps[i];
  return normalize(z);
}

ZElem AbelianGroup::normalize(ZElem z) const {
  for (std::size_t i = 0; i < kMaxZRank; ++i)
    z.e[i] = i < orders_.size() ? reduce(z.e[i], orders_[i]) : 0;
  return z;
}

ZElem AbelianGroup::add(const ZElem& a, const ZElem& b) const {
  ZElem z;
  for (std::size_t i = 0; i < orders_.size(); ++i) z.e[i] = reduce(checked_add(a.e[i], b.e[i]), orders_[i]);
  return z;
}

ZElem AbelianGroup::neg(const ZElem& a) const {
  ZElem z;
  for (std::size_t i = 0; i < orders_.size(); ++i) z.e[i] = reduce(-a.e[i], orders_[i]);
  return z;
}

ZElem AbelianGroup::sub(const ZElem& a, const ZElem& b) const { return add(a, neg(b)); }

ZElem AbelianGroup::scale(const ZElem& a, std::int64_t k) const {
  ZElem z;
  for (std::size_t i = 0; i < orders_.size(); ++i) z.e[i] = reduce(checked_mul(a.e[i], k), orders_[i]);
  return z;
}

std::vector<ZElem> AbelianGroup::elements() const {
  if (!is_finite()) throw DomainError("cannot enumerate an infinite group Z");
  std::vector<ZElem> out;
  out.reserve(size());
  ZElem cur;
  while (true) {
    out.push_back(cur);
    std::size_t i = orders_.size();
    while (i > 0) {
      --i;
      if (++cur.e[i] < orders_[i]) break;
      cur.e[i] = 0;
      if (i == 0) return out;
    }
    if (orders_.empty()) return out;
  }
}

ZElem AbelianGroup::apply(const ZAutomorphism& phi, const ZElem& z) const {
  ZElem r;
  const auto k = orders_.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < k; ++j) acc = checked_add(acc, checked_mul(phi.m[i][j], z.e[j]));
    r.e[i] = reduce(acc, orders_[i]);
  }
  return r;
}

ZAutomorphism AbelianGroup::compose(const ZAutomorphism& a, const ZAutomorphism& b) const {
  ZAutomorphism c;
  const auto k = orders_.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::int64_t acc = 0;
      for (std::size_t l = 0; l < k; ++l) acc = checked_add(acc, checked_mul(a.m[i][l], b.m[l][j]));
      c.m[i][j] = acc;
    }
  return normalize(c);
}

ZAutomorphism AbelianGroup::normalize(ZAutomorphism a) const {
  const auto k = orders_.size();
  for (std::size_t i = 0; i < kMaxZRank; ++i)
    for (std::size_t j = 0; j < kMaxZRank; ++j) {
      if (i >= k || j >= k) {
        a.m[i][j] = (i == j) ? 1 : 0;
        continue;
      }
      a.m[i][j] = reduce(a.m[i][j], orders_[i]);
    }
  return a;
}

bool AbelianGroup::is_identity(const ZAutomorphism& a) const {
  return normalize(a) == ZAutomorphism::identity();
}

bool AbelianGroup::is_well_defined(const ZAutomorphism& a) const {
  const auto k = orders_.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (orders_[i] == 0 && orders_[j] != 0 && a.m[i][j] != 0) return false;
      if (orders_[i] != 0 && reduce(checked_mul(a.m[i][j], orders_[j]), orders_[i]) != 0) return false;
    }
  return true;
}

ZAutomorphism AbelianGroup::inverse(const ZAutomorphism& a) const {
  ZAutomorphism power = normalize(a);
  ZAutomorphism prev = ZAutomorphism::identity();
  for (int k = 1; k <= 256; ++k) {
    if (is_identity(power)) return normalize(prev);
    prev = power;
    power = compose(power, a);
  }
  throw ConfigError("automorphism of Z does not have finite order (or is not invertible)");
}

std::string AbelianGroup::format(const ZElem& z) const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) os << ',';
    os << z.e[i];
  }
  os << ')';
  return os.str();
}

ZElem AbelianGroup::parse(const std::string& text) const {
  std::vector<std::int64_t> exps;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '(') throw ParseError("expected '(' in Z element '" + text + "'", 0, 0);
  ++i;
  skip();
  if (i < text.size() && text[i] == ')') {
    ++i;
  } else {
    while (true) {
      skip();
      std::size_t used = 0;
      long long v;
      try {
        v = std::stoll(text.substr(i), &used);
      } catch (const std::exception&) {
        throw ParseError("bad integer in Z element '" + text + "'", 0, 0);
      }
      exps.push_back(v);
      i += used;
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or ')' in Z element '" + text + "'", 0, 0);
    }
  }
  skip();
  if (i != text.size()) throw ParseError("trailing characters in Z element '" + text + "'", 0, 0);
  return make(exps);
}

}  // namespace prohecke
