#include "prohecke/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "prohecke/errors.hpp"

namespace prohecke {

namespace {

Matrix identity_matrix() {
  Matrix m{};
  for (std::size_t i = 0; i < kMaxDim; ++i) m[i][i] = 1;
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, int d) {
  Matrix c{};
  for (std::size_t i = 0; i < kMaxDim; ++i) c[i][i] = 1;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      std::int64_t acc = 0;
      for (int k = 0; k < d; ++k) acc += a[i][k] * b[k][j];
      c[i][j] = acc;
    }
  return c;
}

Coweight checked_axpy(const Coweight& a, const Coweight& b) {
  Coweight r{};
  for (std::size_t i = 0; i < kMaxDim; ++i)
    if (__builtin_add_overflow(a[i], b[i], &r[i])) throw ArithmeticError("translation coordinate overflow");
  return r;
}

std::int64_t det(std::vector<std::vector<std::int64_t>> m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::int64_t dot(const std::vector<std::int64_t>& f, const std::vector<std::int64_t>& v) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * v[i];
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// presets and Cartan matrices

std::vector<std::vector<std::int64_t>> cartan_matrix(char type, int rank) {
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  auto bad = [&] {
    return ConfigError(std::string("unsupported Cartan type ") + type + std::to_string(rank) + " (rank must be <= " +
                       std::to_string(kMaxRank) + ")");
  };
  if (rank < 1 || rank > kMaxRank) throw bad();
  std::vector<std::vector<std::int64_t>> a(rank, std::vector<std::int64_t>(rank, 0));
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  auto edge = [&](int i, int j, std::int64_t aij, std::int64_t aji) {
    a[i][j] = aij;
    a[j][i] = aji;
  };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < rank; ++i) edge(i, i + 1, -1, -1);
      break;
    case 'B':
      if (rank < 2) throw bad();
      for (int i = 0; i + 2 < rank; ++i) edge(i, i + 1, -1, -1);
      edge(rank - 2, rank - 1, -1, -2);
      break;
    case 'C':
      if (rank < 2) throw bad();
      for (int i = 0; i + 2 < rank; ++i) edge(i, i + 1, -1, -1);
      edge(rank - 2, rank - 1, -2, -1);
      break;
    case 'D':
      if (rank != 4) throw bad();
      edge(0, 1, -1, -1);
      edge(1, 2, -1, -1);
      edge(1, 3, -1, -1);
      break;
    case 'F':
      if (rank != 4) throw bad();
      edge(0, 1, -1, -1);
      edge(1, 2, -1, -2);
      edge(2, 3, -1, -1);
      break;
    case 'G':
      if (rank != 2) throw bad();
      edge(0, 1, -3, -1);
      break;
    default:
      throw bad();
  }
  return a;
}

std::vector<std::string> root_datum_preset_names() { return {"SL2", "GL2", "SL3", "GL3"}; }

RootDatumSpec preset_root_datum(std::string_view name) {
  RootDatumSpec s;
  s.label = std::string(name);
  s.type = 'A';
  if (name == "SL2") {
    s.rank = 1;
    s.dim = 1;
    s.simple_roots = {{2}};
    s.simple_coroots = {{1}};
  } else if (name == "GL2") {
    s.rank = 1;
    s.dim = 2;
    s.simple_roots = {{1, -1}};
    s.simple_coroots = {{1, -1}};
    s.omega_translation = std::vector<std::int64_t>{1, 0};
  } else if (name == "SL3") {
    s.rank = 2;
    s.dim = 2;
    s.simple_roots = {{2, -1}, {-1, 2}};
    s.simple_coroots = {{1, 0}, {0, 1}};
  } else if (name == "GL3") {
    s.rank = 2;
    s.dim = 3;
    s.simple_roots = {{1, -1, 0}, {0, 1, -1}};
    s.simple_coroots = {{1, -1, 0}, {0, 1, -1}};
    s.omega_translation = std::vector<std::int64_t>{1, 0, 0};
  } else {
    throw ConfigError("unknown root datum preset '" + std::string(name) + "' (known: SL2, GL2, SL3, GL3)");
  }
  return s;
}

// ---------------------------------------------------------------------------
// construction

RootDatum::RootDatum(const RootDatumSpec& spec) : spec_(spec), rank_(spec.rank), dim_(spec.dim) {
  if (rank_ < 1 || rank_ > kMaxRank) throw ConfigError("rank must lie in 1.." + std::to_string(kMaxRank));
  if (dim_ < rank_ || dim_ > static_cast<int>(kMaxDim))
    throw ConfigError("dimension must lie in rank.." + std::to_string(kMaxDim));
  if (static_cast<int>(spec_.simple_roots.size()) != rank_ || static_cast<int>(spec_.simple_coroots.size()) != rank_)
    throw ConfigError("expected " + std::to_string(rank_) + " simple roots and coroots");
  for (int i = 0; i < rank_; ++i)
    if (static_cast<int>(spec_.simple_roots[i].size()) != dim_ ||
        static_cast<int>(spec_.simple_coroots[i].size()) != dim_)
      throw ConfigError("simple root/coroot " + std::to_string(i + 1) + " must have " + std::to_string(dim_) +
                        " coordinates");
  if (spec_.omega_name.empty() || !std::isalpha(static_cast<unsigned char>(spec_.omega_name[0])) ||
      (spec_.omega_name[0] == 's' && spec_.omega_name.size() > 1 &&
       std::isdigit(static_cast<unsigned char>(spec_.omega_name[1]))) ||
      spec_.omega_name == "t")
    throw ConfigError("invalid Omega generator name '" + spec_.omega_name + "'");

  auto expected = cartan_matrix(spec_.type, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      auto got = dot(spec_.simple_roots[j], spec_.simple_coroots[i]);
      if (got != expected[i][j])
        throw ConfigError("Cartan matrix mismatch for type " + std::string(1, spec_.type) + std::to_string(rank_) +
                          ": <alpha_" + std::to_string(j + 1) + ", alpha_" + std::to_string(i + 1) +
                          "^vee> = " + std::to_string(got) + ", expected " + std::to_string(expected[i][j]));
    }
  build_roots();
  build_w0();
  build_affine();
  build_omega();
}

void RootDatum::build_roots() {
  struct Root {
    std::vector<std::int64_t> f, coeff, coroot;
  };
  std::map<std::vector<std::int64_t>, Root> found;
  std::deque<std::vector<std::int64_t>> queue;
  for (int i = 0; i < rank_; ++i) {
    Root r{spec_.simple_roots[i], std::vector<std::int64_t>(rank_, 0), spec_.simple_coroots[i]};
    r.coeff[i] = 1;
    if (found.emplace(r.f, r).second) queue.push_back(r.f);
  }
  while (!queue.empty()) {
    Root b = found.at(queue.front());
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      const auto& ai = spec_.simple_roots[i];
      const auto& ci = spec_.simple_coroots[i];
      std::int64_t k = dot(b.f, ci);
      std::int64_t kk = dot(ai, b.coroot);
      Root n = b;
      for (int a = 0; a < dim_; ++a) {
        n.f[a] -= k * ai[a];
        n.coroot[a] -= kk * ci[a];
      }
      n.coeff[i] -= k;
      if (found.emplace(n.f, n).second) {
        queue.push_back(n.f);
        if (found.size() > 2000) throw ConfigError("root system is not finite");
      }
    }
  }
  std::vector<Root> pos;
  for (auto& [f, r] : found) {
    bool nonneg = std::all_of(r.coeff.begin(), r.coeff.end(), [](auto c) { return c >= 0; });
    bool nonpos = std::all_of(r.coeff.begin(), r.coeff.end(), [](auto c) { return c <= 0; });
    if (!nonneg && !nonpos) throw ConfigError("root with mixed-sign coefficients; simple roots are not a base");
    if (nonneg) pos.push_back(r);
  }
  if (pos.size() * 2 != found.size()) throw ConfigError("root system is not symmetric");
  auto height = [](const Root& r) { return std::accumulate(r.coeff.begin(), r.coeff.end(), std::int64_t{0}); };
  std::sort(pos.begin(), pos.end(), [&](const Root& a, const Root& b) {
    auto ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a.coeff > b.coeff;
  });
  const std::size_t np = pos.size();
  roots_.clear();
  root_coeffs_.clear();
  std::vector<std::vector<std::int64_t>> coroots;
  for (const auto& r : pos) {
    roots_.push_back(r.f);
    root_coeffs_.push_back(r.coeff);
    coroots.push_back(r.coroot);
  }
  for (std::size_t k = 0; k < np; ++k) {
    auto f = roots_[k];
    auto c = root_coeffs_[k];
    for (auto& x : f) x = -x;
    for (auto& x : c) x = -x;
    roots_.push_back(f);
    root_coeffs_.push_back(c);
  }
  pos_roots_.assign(roots_.begin(), roots_.begin() + static_cast<std::ptrdiff_t>(np));
  for (std::size_t k = 0; k < roots_.size(); ++k) root_index_[roots_[k]] = k;

  theta_index_ = np - 1;
  if (np >= 2 && height(pos[np - 1]) == height(pos[np - 2])) throw ConfigError("root system is not irreducible");
  theta_ = roots_[theta_index_];
  theta_vee_ = coroots[theta_index_];
  for (int i = 0; i < rank_; ++i) simple_root_index_.push_back(root_index_.at(spec_.simple_roots[i]));

  // D <p0, beta> with <p0, alpha_j> = 1 / ((r+1) m_j).
  const auto& m = root_coeffs_[theta_index_];
  std::int64_t l = 1;
  for (auto mj : m) l = std::lcm(l, mj);
  scale_ = (rank_ + 1) * l;
  base_pairing_.resize(roots_.size());
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    std::int64_t acc = 0;
    for (int j = 0; j < rank_; ++j) acc += root_coeffs_[k][j] * (scale_ / ((rank_ + 1) * m[j]));
    base_pairing_[k] = acc;
  }
}

void RootDatum::build_w0() {
  std::vector<Matrix> gens;
  for (int i = 0; i < rank_; ++i) {
    Matrix s = identity_matrix();
    for (int a = 0; a < dim_; ++a)
      for (int b = 0; b < dim_; ++b) s[a][b] -= spec_.simple_coroots[i][a] * spec_.simple_roots[i][b];
    gens.push_back(s);
  }
  std::map<Matrix, std::uint16_t> index;
  std::vector<std::vector<std::uint16_t>> right;  // right[u][i] = u s_i
  w0_mats_ = {identity_matrix()};
  w0_word_ = {{}};
  index[w0_mats_[0]] = 0;
  for (std::size_t q = 0; q < w0_mats_.size(); ++q) {
    right.emplace_back(rank_, 0);
    for (int i = 0; i < rank_; ++i) {
      Matrix m = mat_mul(w0_mats_[q], gens[i], dim_);
      auto it = index.find(m);
      if (it == index.end()) {
        if (w0_mats_.size() >= 60000) throw ConfigError("finite Weyl group too large");
        auto id = static_cast<std::uint16_t>(w0_mats_.size());
        index.emplace(m, id);
        w0_mats_.push_back(m);
        auto word = w0_word_[q];
        word.push_back(i + 1);
        w0_word_.push_back(std::move(word));
        right[q][i] = id;
      } else {
        right[q][i] = it->second;
      }
    }
  }
  const std::size_t n = w0_mats_.size();
  w0_len_.resize(n);
  for (std::size_t u = 0; u < n; ++u) w0_len_[u] = static_cast<int>(w0_word_[u].size());
  w0_mul_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::uint16_t cur = static_cast<std::uint16_t>(a);
      for (int letter : w0_word_[b]) cur = right[cur][letter - 1];
      w0_mul_[a * n + b] = cur;
    }
  w0_inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (w0_mul_[a * n + b] == 0) {
        w0_inv_[a] = static_cast<std::uint16_t>(b);
        break;
      }
  w0_simple_.clear();
  for (int i = 0; i < rank_; ++i) w0_simple_.push_back(right[0][i]);

  const std::size_t nr = roots_.size();
  root_perm_.assign(n * nr, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t k = 0; k < nr; ++k) {
      std::vector<std::int64_t> f(dim_, 0);
      for (int b = 0; b < dim_; ++b)
        for (int a = 0; a < dim_; ++a) f[b] += roots_[k][a] * w0_mats_[u][a][b];
      root_perm_[u * nr + k] = static_cast<std::uint32_t>(root_index_.at(f));
    }
}

void RootDatum::build_affine() {
  Matrix st = identity_matrix();
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b) st[a][b] -= theta_vee_[a] * theta_[b];
  auto it = std::find(w0_mats_.begin(), w0_mats_.end(), st);
  if (it == w0_mats_.end()) throw ConfigError("reflection in the highest root is missing from W_0");
  WeylElement s0;
  for (int a = 0; a < dim_; ++a) s0.lambda[a] = theta_vee_[a];
  s0.u = static_cast<std::uint16_t>(it - w0_mats_.begin());
  affine_simple_ = {s0};
  for (int i = 1; i <= rank_; ++i) affine_simple_.push_back(WeylElement{{}, w0_simple(i)});

  const int na = num_affine();
  coxeter_.assign(na, std::vector<int>(na, 1));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      if (i == j) continue;
      WeylElement p = multiply(affine_simple_[i], affine_simple_[j]);
      WeylElement cur = p;
      int m = 0;
      for (int k = 1; k <= 12; ++k) {
        if (cur == identity()) {
          m = k;
          break;
        }
        cur = multiply(cur, p);
      }
      coxeter_[i][j] = m;
    }
}

bool RootDatum::in_coroot_lattice(const Coweight& lambda) const {
  // Solve A^T c = (<lambda, alpha_i>)_i by Cramer, then check exactness.
  std::vector<std::vector<std::int64_t>> at(rank_, std::vector<std::int64_t>(rank_));
  std::vector<std::int64_t> rhs(rank_);
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) at[i][j] = dot(spec_.simple_roots[i], spec_.simple_coroots[j]);
    rhs[i] = pair(lambda, spec_.simple_roots[i]);
  }
  const std::int64_t d = det(at);
  Coweight rebuilt{};
  for (int j = 0; j < rank_; ++j) {
    auto m = at;
    for (int i = 0; i < rank_; ++i) m[i][j] = rhs[i];
    std::int64_t num = det(m);
    if (num % d != 0) return false;
    std::int64_t c = num / d;
    for (int a = 0; a < dim_; ++a) rebuilt[a] += c * spec_.simple_coroots[j][a];
  }
  return rebuilt == lambda;
}

void RootDatum::build_omega() {
  const int na = num_affine();
  omega_perm_.resize(na);
  std::iota(omega_perm_.begin(), omega_perm_.end(), 0);
  omega_char_.assign(dim_, 0);
  tau_ = identity();
  if (!spec_.omega_translation) {
    has_omega_ = false;
    omega_order_ = 1;
    for (int a = 0; a < dim_; ++a) {
      Coweight e{};
      e[a] = 1;
      if (!in_coroot_lattice(e))
        throw ConfigError("Lambda is larger than the coroot lattice; an Omega generator is required");
    }
    return;
  }
  has_omega_ = true;
  const auto& lt = *spec_.omega_translation;
  if (static_cast<int>(lt.size()) != dim_)
    throw ConfigError("Omega translation must have " + std::to_string(dim_) + " coordinates");
  Coweight lam{};
  for (int a = 0; a < dim_; ++a) lam[a] = lt[a];
  bool ok = false;
  for (std::size_t u = 0; u < w0_size(); ++u) {
    WeylElement cand{lam, static_cast<std::uint16_t>(u)};
    if (length(cand) == 0) {
      tau_ = cand;
      ok = true;
      break;
    }
  }
  if (!ok) throw ConfigError("no length-zero element of W has translation part " + format_coweight(lam));

  WeylElement p = identity();
  for (std::size_t k = 0; k < w0_size(); ++k) p = multiply(p, tau_);
  if (p == identity()) {
    WeylElement cur = tau_;
    omega_order_ = 1;
    while (cur != identity()) {
      cur = multiply(cur, tau_);
      ++omega_order_;
    }
  } else {
    omega_order_ = 0;
  }
  if (omega_order_ == 1) throw ConfigError("Omega generator is the identity; omit it instead");

  for (int a = 0; a < dim_; ++a) {
    Coweight e{};
    e[a] = 1;
    bool found = false;
    const std::int64_t lo = omega_order_ == 0 ? -256 : 0;
    const std::int64_t hi = omega_order_ == 0 ? 256 : omega_order_ - 1;
    for (std::int64_t k = lo; k <= hi && !found; ++k) {
      Coweight diff = e;
      for (int b = 0; b < dim_; ++b) diff[b] -= k * lam[b];
      if (in_coroot_lattice(diff)) {
        omega_char_[a] = k;
        found = true;
      }
    }
    if (!found) throw ConfigError("Lambda / Q^vee is not generated by the Omega generator");
  }

  const WeylElement tinv = inverse(tau_);
  for (int i = 0; i < na; ++i) {
    WeylElement c = multiply(multiply(tau_, affine_simple_[i]), tinv);
    auto it = std::find(affine_simple_.begin(), affine_simple_.end(), c);
    if (it == affine_simple_.end()) throw ConfigError("Omega generator does not normalize S^aff");
    omega_perm_[i] = static_cast<int>(it - affine_simple_.begin());
  }
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      if (coxeter_[i][j] != coxeter_[omega_perm_[i]][omega_perm_[j]])
        throw ConfigError("Omega action does not preserve the Coxeter matrix");
}

// ---------------------------------------------------------------------------
// group law

std::int64_t RootDatum::pair(const Coweight& lambda, const std::vector<std::int64_t>& functional) const {
  std::int64_t acc = 0;
  for (int a = 0; a < dim_; ++a) acc += lambda[a] * functional[a];
  return acc;
}

WeylElement RootDatum::translation(const std::vector<std::int64_t>& lambda) const {
  if (static_cast<int>(lambda.size()) != dim_)
    throw ConfigError("translation must have " + std::to_string(dim_) + " coordinates");
  WeylElement w;
  for (int a = 0; a < dim_; ++a) w.lambda[a] = lambda[a];
  return w;
}

Coweight RootDatum::apply(std::uint16_t u, const Coweight& lambda) const {
  if (u == 0) return lambda;
  const Matrix& m = w0_mats_[u];
  Coweight r{};
  for (int a = 0; a < dim_; ++a) {
    std::int64_t acc = 0;
    for (int b = 0; b < dim_; ++b) acc += m[a][b] * lambda[b];
    r[a] = acc;
  }
  return r;
}

WeylElement RootDatum::multiply(const WeylElement& a, const WeylElement& b) const {
  return WeylElement{checked_axpy(a.lambda, apply(a.u, b.lambda)), w0_mul(a.u, b.u)};
}

WeylElement RootDatum::inverse(const WeylElement& a) const {
  std::uint16_t ui = w0_inverse(a.u);
  Coweight l = apply(ui, a.lambda);
  for (auto& x : l) x = -x;
  return WeylElement{l, ui};
}

WeylElement RootDatum::conjugate(const WeylElement& g, const WeylElement& x) const {
  return multiply(multiply(g, x), inverse(g));
}

WeylElement RootDatum::omega_power(std::int64_t k) const {
  WeylElement base = k < 0 ? inverse(tau_) : tau_;
  std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  WeylElement r = identity();
  while (n) {
    if (n & 1) r = multiply(r, base);
    base = multiply(base, base);
    n >>= 1;
  }
  return r;
}

std::int64_t RootDatum::normalize_omega(std::int64_t k) const {
  if (omega_order_ == 0) return k;
  k %= omega_order_;
  return k < 0 ? k + omega_order_ : k;
}

std::int64_t RootDatum::omega_exponent(const WeylElement& w) const {
  if (!has_omega_) return 0;
  std::int64_t k = 0;
  for (int a = 0; a < dim_; ++a) k += w.lambda[a] * omega_char_[a];
  return normalize_omega(k);
}

int RootDatum::omega_conjugate(int i, std::int64_t k) const {
  if (!has_omega_) return i;
  // The permutation has order dividing na!; reduce k by its cycle length.
  int cur = i;
  int cycle = 1;
  for (int j = omega_perm_[i]; j != i; j = omega_perm_[j]) ++cycle;
  k %= cycle;
  if (k < 0) k += cycle;
  for (std::int64_t s = 0; s < k; ++s) cur = omega_perm_[cur];
  return cur;
}

// ---------------------------------------------------------------------------
// length, descents

int RootDatum::length(const WeylElement& w) const {
  const std::size_t np = pos_roots_.size();
  const std::size_t nr = roots_.size();
  std::int64_t total = 0;
  for (std::size_t k = 0; k < np; ++k) {
    std::int64_t p = pair(w.lambda, roots_[k]);
    if (root_perm_[w.u * nr + k] >= np) p -= 1;
    total += p < 0 ? -p : p;
  }
  return static_cast<int>(total);
}

bool RootDatum::is_left_descent(int i, const WeylElement& w) const {
  const std::size_t nr = roots_.size();
  if (i == 0) {
    std::int64_t v = scale_ * pair(w.lambda, theta_) + base_pairing_[root_perm_[w.u * nr + theta_index_]];
    return v > scale_;
  }
  std::size_t k = simple_root_index_.at(i - 1);
  std::int64_t v = scale_ * pair(w.lambda, roots_[k]) + base_pairing_[root_perm_[w.u * nr + k]];
  return v < 0;
}

bool RootDatum::is_right_descent(int i, const WeylElement& w) const { return is_left_descent(i, inverse(w)); }

// ---------------------------------------------------------------------------
// words

ReducedWord RootDatum::canonical_reduced_word(const WeylElement& w) const {
  ReducedWord word;
  WeylElement cur = w;
  const int na = num_affine();
  while (true) {
    int found = -1;
    for (int i = 0; i < na; ++i)
      if (is_left_descent(i, cur)) {
        found = i;
        break;
      }
    if (found < 0) break;
    word.letters.push_back(found);
    cur = multiply(affine_simple_[found], cur);
  }
  word.omega = omega_exponent(cur);
  return word;
}

WeylElement RootDatum::evaluate_letters(const std::vector<int>& letters) const {
  WeylElement cur = identity();
  for (int i : letters) {
    if (i < 0 || i >= num_affine()) throw DomainError("letter s" + std::to_string(i) + " out of range");
    cur = multiply(cur, affine_simple_[i]);
  }
  return cur;
}

WeylElement RootDatum::evaluate(const ReducedWord& word) const {
  return multiply(evaluate_letters(word.letters), omega_power(word.omega));
}

// ---------------------------------------------------------------------------
// Bruhat order

bool RootDatum::bruhat_leq(const WeylElement& v, const WeylElement& w) const {
  if (omega_exponent(v) != omega_exponent(w)) return false;
  WeylElement a = v, b = w;
  int la = length(a), lb = length(b);
  const int na = num_affine();
  while (true) {
    if (la > lb) return false;
    if (lb == 0) return a == b;
    if (la == lb) return a == b;
    int s = -1;
    for (int i = 0; i < na; ++i)
      if (is_left_descent(i, b)) {
        s = i;
        break;
      }
    b = multiply(affine_simple_[s], b);
    --lb;
    if (is_left_descent(s, a)) {
      a = multiply(affine_simple_[s], a);
      --la;
    }
  }
}

std::vector<WeylElement> RootDatum::lower_cone(const WeylElement& w) const {
  ReducedWord word = canonical_reduced_word(w);
  std::unordered_set<WeylElement, WeylElementHash> cone{identity()};
  for (int letter : word.letters) {
    std::vector<WeylElement> add;
    add.reserve(cone.size());
    for (const auto& e : cone) add.push_back(multiply(e, affine_simple_[letter]));
    cone.insert(add.begin(), add.end());
  }
  WeylElement om = omega_power(word.omega);
  std::vector<WeylElement> out;
  out.reserve(cone.size());
  for (const auto& e : cone) out.push_back(multiply(e, om));
  std::sort(out.begin(), out.end(), [this](const auto& a, const auto& b) { return key_less(a, b); });
  return out;
}

// ---------------------------------------------------------------------------
// dominance, classes

bool RootDatum::is_dominant(const Coweight& lambda) const {
  for (int i = 0; i < rank_; ++i)
    if (pair(lambda, spec_.simple_roots[i]) < 0) return false;
  return true;
}

std::pair<WeylElement, std::uint16_t> RootDatum::dominant_representative(const WeylElement& t) const {
  if (!is_translation(t)) throw DomainError("dominant_representative expects a translation, got " + format(t));
  for (std::size_t u = 0; u < w0_size(); ++u) {
    Coweight l = apply(static_cast<std::uint16_t>(u), t.lambda);
    if (is_dominant(l)) return {translation(l), static_cast<std::uint16_t>(u)};
  }
  throw DomainError("no dominant conjugate found");
}

std::vector<WeylElement> RootDatum::translation_conjugacy_class(const WeylElement& t) const {
  if (!is_translation(t)) throw InfiniteClassError("conjugacy class of " + format(t) + " is infinite");
  std::set<WeylElement> seen;
  for (std::size_t u = 0; u < w0_size(); ++u) seen.insert(translation(apply(static_cast<std::uint16_t>(u), t.lambda)));
  std::vector<WeylElement> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [this](const auto& a, const auto& b) { return key_less(a, b); });
  return out;
}

bool RootDatum::key_less(const WeylElement& a, const WeylElement& b) const {
  int la = length(a), lb = length(b);
  if (la != lb) return la < lb;
  auto oa = omega_exponent(a), ob = omega_exponent(b);
  if (oa != ob) return oa < ob;
  if (a.lambda != b.lambda) return a.lambda < b.lambda;
  return a.u < b.u;
}

// ---------------------------------------------------------------------------
// text

std::string RootDatum::format_coweight(const Coweight& lambda) const {
  std::ostringstream os;
  os << '(';
  for (int a = 0; a < dim_; ++a) {
    if (a) os << ',';
    os << lambda[a];
  }
  os << ')';
  return os.str();
}

std::string RootDatum::format(const ReducedWord& word) const {
  std::ostringstream os;
  bool first = true;
  for (int i : word.letters) {
    if (!first) os << '*';
    first = false;
    os << 's' << i;
  }
  if (word.omega != 0) {
    if (!first) os << '*';
    first = false;
    os << spec_.omega_name;
    if (word.omega != 1) os << '^' << word.omega;
  }
  if (first) return "1";
  return os.str();
}

std::string RootDatum::format(const WeylElement& w) const { return format(canonical_reduced_word(w)); }

WeylElement RootDatum::parse(std::string_view text) const {
  WeylElement cur = identity();
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(msg + " in element '" + std::string(text) + "'", 1, static_cast<int>(pos) + 1);
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto integer = [&]() -> std::int64_t {
    skip();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw fail("expected integer");
    return std::stoll(std::string(text.substr(start, pos - start)));
  };
  auto power = [&](const WeylElement& base) {
    skip();
    std::int64_t k = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      k = integer();
    }
    WeylElement b = k < 0 ? inverse(base) : base;
    WeylElement r = identity();
    for (std::int64_t n = 0; n < (k < 0 ? -k : k); ++n) r = multiply(r, b);
    return r;
  };
  skip();
  if (pos == text.size()) throw fail("empty element");
  while (true) {
    skip();
    if (pos >= text.size()) throw fail("expected factor");
    WeylElement factor;
    if (text[pos] == '1' && (pos + 1 == text.size() || text[pos + 1] == '*' ||
                             std::isspace(static_cast<unsigned char>(text[pos + 1])))) {
      ++pos;
      factor = identity();
    } else if (text.substr(pos, 2) == "t(") {
      pos += 2;
      std::vector<std::int64_t> v;
      skip();
      if (pos < text.size() && text[pos] != ')') {
        while (true) {
          v.push_back(integer());
          skip();
          if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
          }
          break;
        }
      }
      skip();
      if (pos >= text.size() || text[pos] != ')') throw fail("expected ')'");
      ++pos;
      if (static_cast<int>(v.size()) != dim_) throw fail("translation needs " + std::to_string(dim_) + " coordinates");
      factor = power(translation(v));
    } else if (text[pos] == 's' && pos + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
      ++pos;
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      int i = std::stoi(std::string(text.substr(start, pos - start)));
      if (i < 0 || i >= num_affine()) throw fail("no generator s" + std::to_string(i));
      factor = power(affine_simple_[i]);
    } else if (text.substr(pos, spec_.omega_name.size()) == spec_.omega_name) {
      if (!has_omega_) throw fail("this root datum has no Omega generator");
      pos += spec_.omega_name.size();
      factor = power(tau_);
    } else {
      throw fail("unexpected character '" + std::string(1, text[pos]) + "'");
    }
    cur = multiply(cur, factor);
    skip();
    if (pos == text.size()) break;
    if (text[pos] != '*') throw fail("expected '*'");
    ++pos;
  }
  return cur;
}

}  // namespace prohecke
