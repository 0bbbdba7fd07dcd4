#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "prohecke/errors.hpp"
#include "prohecke/weyl.hpp"

using namespace prohecke;

namespace {

RootDatum make(const char* name) { return RootDatum(preset_root_datum(name)); }

}  // namespace

TEST_CASE("presets build with the expected finite Weyl groups") {
  CHECK(make("SL2").w0_size() == 2);
  CHECK(make("GL2").w0_size() == 2);
  CHECK(make("SL3").w0_size() == 6);
  CHECK(make("GL3").w0_size() == 6);
  CHECK(make("SL3").num_positive_roots() == 3);
  CHECK_FALSE(make("SL3").has_omega());
  CHECK(make("GL2").omega_order() == 0);
}

TEST_CASE("other Cartan types load from explicit data") {
  // B2 in the standard orthonormal coordinates.
  RootDatumSpec b2;
  b2.type = 'B';
  b2.rank = 2;
  b2.dim = 2;
  b2.simple_roots = {{1, -1}, {0, 1}};
  b2.simple_coroots = {{1, -1}, {0, 2}};
  b2.omega_translation = std::vector<std::int64_t>{1, 0};
  RootDatum rd(b2);
  CHECK(rd.w0_size() == 8);
  CHECK(rd.num_positive_roots() == 4);
  CHECK(rd.omega_order() == 2);
  CHECK(rd.length(rd.omega()) == 0);

  RootDatumSpec g2;
  g2.type = 'G';
  g2.rank = 2;
  g2.dim = 2;
  g2.simple_roots = {{2, -1}, {-3, 2}};
  g2.simple_coroots = {{1, 0}, {0, 1}};
  RootDatum g(g2);
  CHECK(g.w0_size() == 12);
  CHECK(g.coxeter_m(1, 2) == 6);
}

TEST_CASE("root datum validation rejects bad input") {
  RootDatumSpec s = preset_root_datum("SL3");
  s.type = 'B';
  CHECK_THROWS_AS(RootDatum{s}, ConfigError);
  RootDatumSpec gl = preset_root_datum("GL2");
  gl.omega_translation.reset();
  CHECK_THROWS_AS(RootDatum{gl}, ConfigError);
  RootDatumSpec r5 = preset_root_datum("SL3");
  r5.rank = 5;
  CHECK_THROWS_AS(RootDatum{r5}, ConfigError);
}

TEST_CASE("multiply: identity, inverse, and s0 s1 in A1~") {
  RootDatum rd = make("SL2");
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    WeylElement a = oracle::random_element(rd, rng, 8);
    CHECK(rd.multiply(a, rd.identity()) == a);
    CHECK(rd.multiply(a, rd.inverse(a)) == rd.identity());
  }
  WeylElement s0s1 = rd.multiply(rd.simple(0), rd.simple(1));
  CHECK(rd.is_translation(s0s1));
  CHECK(s0s1.lambda[0] == 1);
  CHECK(rd.length(s0s1) == 2);
}

TEST_CASE("length examples") {
  RootDatum sl2 = make("SL2");
  CHECK(sl2.length(sl2.identity()) == 0);
  CHECK(sl2.length(sl2.parse("s0*s1*s0*s1")) == 4);
  RootDatum gl2 = make("GL2");
  CHECK(gl2.length(gl2.omega()) == 0);
  CHECK(gl2.length(gl2.parse("tau^-3")) == 0);
}

TEST_CASE("left descents") {
  RootDatum rd = make("SL2");
  CHECK_FALSE(rd.is_left_descent(0, rd.identity()));
  CHECK_FALSE(rd.is_left_descent(1, rd.identity()));
  CHECK(rd.is_left_descent(0, rd.parse("s0*s1")));
  CHECK_FALSE(rd.is_left_descent(1, rd.parse("s0*s1*s0*s1")));
  CHECK(rd.length(rd.multiply(rd.simple(1), rd.parse("s0*s1*s0*s1"))) == 5);
}

TEST_CASE("length agrees with Cayley graph distance up to 8") {
  for (const char* name : {"SL2", "SL3", "GL2", "GL3"}) {
    RootDatum rd = make(name);
    auto ball = oracle::cayley_ball(rd, 8);
    for (const auto& [w, d] : ball) {
      CHECK(rd.length(w) == d);
      if (rd.has_omega()) {
        CHECK(rd.length(rd.multiply(w, rd.omega())) == d);
        CHECK(rd.length(rd.multiply(rd.omega_power(-1), w)) == d);
      }
      for (int i = 0; i < rd.num_affine(); ++i) {
        bool desc = rd.length(rd.multiply(rd.simple(i), w)) < d;
        CHECK(rd.is_left_descent(i, w) == desc);
      }
    }
  }
}

TEST_CASE("canonical reduced words") {
  RootDatum sl2 = make("SL2");
  CHECK(sl2.canonical_reduced_word(sl2.identity()).letters.empty());
  CHECK(sl2.canonical_reduced_word(sl2.parse("s0*s1")).letters == std::vector<int>{0, 1});
  RootDatum gl2 = make("GL2");
  ReducedWord w = gl2.canonical_reduced_word(gl2.parse("s1*tau"));
  CHECK(w.letters == std::vector<int>{1});
  CHECK(w.omega == 1);
  CHECK(gl2.format(gl2.parse("s1*tau")) == "s1*tau");
  CHECK(gl2.format(gl2.parse("tau*s1")) == "s0*tau");
  CHECK(gl2.format(gl2.identity()) == "1");
  CHECK(gl2.format(gl2.omega_power(-1)) == "tau^-1");

  std::mt19937_64 rng(5);
  for (const char* name : {"SL3", "GL3", "GL2"}) {
    RootDatum rd = make(name);
    for (int k = 0; k < 200; ++k) {
      WeylElement x = oracle::random_element(rd, rng, 12);
      ReducedWord word = rd.canonical_reduced_word(x);
      CHECK(rd.evaluate(word) == x);
      CHECK(static_cast<int>(word.letters.size()) == rd.length(x));
      CHECK(rd.parse(rd.format(x)) == x);
    }
  }
}

TEST_CASE("omega permutes the affine generators") {
  RootDatum gl2 = make("GL2");
  CHECK(gl2.omega_conjugate(0, 1) == 1);
  CHECK(gl2.omega_conjugate(1, 1) == 0);
  CHECK(gl2.conjugate(gl2.omega(), gl2.simple(1)) == gl2.simple(0));
  RootDatum gl3 = make("GL3");
  for (int i = 0; i < 3; ++i)
    CHECK(gl3.conjugate(gl3.omega(), gl3.simple(i)) == gl3.simple(gl3.omega_conjugate(i, 1)));
}

TEST_CASE("bruhat order examples") {
  RootDatum gl2 = make("GL2");
  CHECK(gl2.bruhat_leq(gl2.identity(), gl2.parse("s0*s1*s0")));
  CHECK(gl2.bruhat_leq(gl2.parse("s0*s1"), gl2.parse("s0*s1*s0*s1")));
  CHECK_FALSE(gl2.bruhat_leq(gl2.parse("s0"), gl2.parse("s0*tau")));
  CHECK_FALSE(gl2.bruhat_leq(gl2.parse("s0*s1*s0"), gl2.parse("s0*s1")));
}

TEST_CASE("bruhat order agrees with subword enumeration") {
  for (const char* name : {"SL2", "SL3"}) {
    RootDatum rd = make(name);
    auto ball = oracle::cayley_ball(rd, 5);
    std::vector<WeylElement> elems;
    for (const auto& [w, d] : ball) elems.push_back(w);
    for (const auto& w : elems) {
      auto word = rd.canonical_reduced_word(w);
      auto below = oracle::subword_products(rd, word.letters, word.omega);
      for (const auto& v : elems) CHECK(rd.bruhat_leq(v, w) == (below.count(v) > 0));
    }
  }
}

TEST_CASE("lower cones from the GL2 and SL3 examples") {
  RootDatum gl2 = make("GL2");
  CHECK(gl2.lower_cone(gl2.identity()).size() == 1);
  auto c1 = gl2.lower_cone(gl2.parse("s0*s1*s0*s1"));
  CHECK(c1.size() == 8);  // Adm(C1) adds s1s0s1s0
  auto c2 = gl2.lower_cone(gl2.parse("s0*s1*s0*tau"));
  CHECK(c2.size() == 6);  // Adm(C2) adds s1s0s1tau
  for (const auto& v : c2) CHECK(gl2.omega_exponent(v) == 1);

  RootDatum sl3 = make("SL3");
  auto x = sl3.parse("s0*s1*s2*s1");
  std::set<WeylElement> adm;
  for (const auto& l : sl3.translation_conjugacy_class(x))
    for (const auto& v : sl3.lower_cone(l)) adm.insert(v);
  CHECK(adm.size() == 25);
}

TEST_CASE("lower cone is independent of the reduced word") {
  RootDatum rd = make("SL3");
  // s1 s2 s1 = s2 s1 s2.
  auto a = oracle::subword_products(rd, {0, 1, 2, 1}, 0);
  auto b = oracle::subword_products(rd, {0, 2, 1, 2}, 0);
  CHECK(a == b);
  auto cone = rd.lower_cone(rd.parse("s0*s1*s2*s1"));
  CHECK(std::set<WeylElement>(cone.begin(), cone.end()) == a);
}

TEST_CASE("Bruhat lifting property") {
  RootDatum rd = make("GL3");
  std::mt19937_64 rng(17);
  auto mn = [&](const WeylElement& a, const WeylElement& b) { return rd.length(a) < rd.length(b) ? a : b; };
  auto mx = [&](const WeylElement& a, const WeylElement& b) { return rd.length(a) < rd.length(b) ? b : a; };
  int tested = 0;
  while (tested < 300) {
    WeylElement y = oracle::random_element(rd, rng, 7);
    auto cone = rd.lower_cone(y);
    std::uniform_int_distribution<std::size_t> pick(0, cone.size() - 1);
    WeylElement x = cone[pick(rng)];
    for (int s = 0; s < rd.num_affine(); ++s) {
      WeylElement sx = rd.multiply(rd.simple(s), x), sy = rd.multiply(rd.simple(s), y);
      CHECK(rd.bruhat_leq(mn(x, sx), mn(y, sy)));
      CHECK(rd.bruhat_leq(mx(x, sx), mx(y, sy)));
      WeylElement xs = rd.multiply(x, rd.simple(s)), ys = rd.multiply(y, rd.simple(s));
      CHECK(rd.bruhat_leq(mn(x, xs), mn(y, ys)));
      CHECK(rd.bruhat_leq(mx(x, xs), mx(y, ys)));
    }
    ++tested;
  }
}

TEST_CASE("dominant representatives and translation classes") {
  RootDatum gl2 = make("GL2");
  auto [d, u] = gl2.dominant_representative(gl2.translation(std::vector<std::int64_t>{0, 1}));
  CHECK(d == gl2.translation(std::vector<std::int64_t>{1, 0}));
  CHECK(gl2.w0_word(u) == std::vector<int>{1});
  auto [z, u0] = gl2.dominant_representative(gl2.identity());
  CHECK(z == gl2.identity());
  CHECK(u0 == 0);
  CHECK_THROWS_AS(gl2.dominant_representative(gl2.simple(1)), DomainError);
  CHECK(gl2.translation_conjugacy_class(gl2.translation(std::vector<std::int64_t>{1, 0})).size() == 2);
  CHECK_THROWS_AS(gl2.translation_conjugacy_class(gl2.simple(0)), InfiniteClassError);

  RootDatum sl3 = make("SL3");
  auto cls = sl3.translation_conjugacy_class(sl3.parse("s0*s1*s2*s1"));
  std::set<std::string> names;
  for (const auto& l : cls) names.insert(sl3.format(l));
  // Each listed element is one of the six expected elements, up to the choice of reduced word.
  std::set<WeylElement> expected;
  for (const char* w : {"s0*s1*s2*s1", "s1*s0*s1*s2", "s2*s0*s2*s1", "s1*s2*s1*s0", "s2*s1*s0*s1", "s1*s2*s0*s2"})
    expected.insert(sl3.parse(w));
  CHECK(std::set<WeylElement>(cls.begin(), cls.end()) == expected);
}

TEST_CASE("element parser errors carry positions") {
  RootDatum gl2 = make("GL2");
  CHECK_THROWS_AS(gl2.parse("s0*x"), ParseError);
  CHECK_THROWS_AS(gl2.parse("s7"), ParseError);
  CHECK_THROWS_AS(make("SL3").parse("tau"), ParseError);
  CHECK(gl2.parse("t(1,0)") == gl2.multiply(gl2.omega(), gl2.simple(1)));
}
