#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "prohecke/errors.hpp"
#include "prohecke/hecke.hpp"
#include "properties.hpp"

using namespace prohecke;

namespace {

HeckeElement random_element_h(const props::Setup& S, std::mt19937_64& rng, int terms, int max_letters) {
  HeckeElement h = S.H->zero();
  for (int k = 0; k < terms; ++k) {
    W1Element a = props::random_lift(*S.ext, oracle::random_element(*S.rd, rng, max_letters), rng);
    h.add_term(a, S.H->ring().constant(std::uniform_int_distribution<int>(-3, 3)(rng)));
  }
  return h;
}

// Product computed by expanding the left factor into generators, acting on
// the right factor from the left.
HeckeElement mul_via_left(const props::Setup& S, const HeckeElement& x, const HeckeElement& y) {
  HeckeElement out = S.H->zero();
  for (const auto& [a, ca] : x.terms()) out += S.H->left_mul_basis(a, y).scaled(ca);
  return out;
}

}  // namespace

TEST_CASE("quadratic relation T_s^2 = c_s T_s") {
  for (const auto& S : props::all_setups()) {
    for (int j = 0; j < S.rd->num_affine(); ++j) {
      W1Element s = S.ext->generator(j);
      HeckeElement sq = S.H->mul(S.H->basis(s), S.H->basis(s));
      HeckeElement expect = S.H->zero();
      for (const auto& [t, ct] : S.params->c(j).coeffs()) expect.add_term(S.ext->mul(S.ext->from_z(t), s), ct);
      CHECK_MESSAGE(sq == expect, S.label << " s" << j);
      // c_s T_s = T_s c_s when c_s is transported correctly.
      HeckeElement right = S.H->zero();
      for (const auto& [t, ct] : S.params->c(j).coeffs()) right.add_term(S.ext->mul(s, S.ext->from_z(t)), ct);
      CHECK_MESSAGE(sq == right, S.label << " s" << j);
    }
  }
}

TEST_CASE("length-additive products are basis elements") {
  std::mt19937_64 rng(11);
  for (const auto& S : props::all_setups()) {
    const RootDatum& rd = *S.rd;
    for (int n = 0; n < 100; ++n) {
      WeylElement a = oracle::random_element(rd, rng, 5), b = oracle::random_element(rd, rng, 5);
      if (rd.length(rd.multiply(a, b)) != rd.length(a) + rd.length(b)) continue;
      W1Element at = props::random_lift(*S.ext, a, rng), bt = props::random_lift(*S.ext, b, rng);
      CHECK(S.H->mul(S.H->basis(at), S.H->basis(bt)) == S.H->basis(S.ext->mul(at, bt)));
    }
  }
}

TEST_CASE("multiplication is associative and agrees with left expansion") {
  std::mt19937_64 rng(12);
  for (const auto& S : props::all_setups()) {
    for (int n = 0; n < 25; ++n) {
      HeckeElement x = random_element_h(S, rng, 2, 4), y = random_element_h(S, rng, 2, 4),
                   z = random_element_h(S, rng, 2, 4);
      CHECK_MESSAGE(S.H->mul(S.H->mul(x, y), z) == S.H->mul(x, S.H->mul(y, z)), S.label);
      CHECK_MESSAGE(S.H->mul(x, y) == mul_via_left(S, x, y), S.label);
    }
  }
}

TEST_CASE("products along different reduced words agree") {
  std::mt19937_64 rng(13);
  for (const auto& S : props::all_setups()) {
    const RootDatum& rd = *S.rd;
    for (int n = 0; n < 40; ++n) {
      WeylElement w = oracle::random_element(rd, rng, 6);
      ReducedWord word = props::random_reduced_word(rd, w, rng);
      std::vector<Token> tokens;
      HeckeElement prod = S.H->one();
      for (int i : word.letters) {
        tokens.push_back(Token{Token::Kind::S, i, {}});
        prod = S.H->right_mul_generator(prod, i);
      }
      W1Element om = S.ext->lift(rd.omega_power(word.omega));
      prod = S.H->right_mul_basis(prod, om);
      W1Element expect = S.ext->mul(S.ext->normalize_word(tokens), om);
      CHECK_MESSAGE(prod == S.H->basis(expect), S.label << " " << rd.format(w));
    }
  }
}

TEST_CASE("Z acts through translations") {
  auto S = props::make_setup("GL2", true);
  std::mt19937_64 rng(14);
  for (int n = 0; n < 30; ++n) {
    W1Element a = props::random_lift(*S.ext, oracle::random_element(*S.rd, rng, 5), rng);
    ZElem t = props::random_z(*S.ext, rng);
    CHECK(S.H->right_mul_basis(S.H->basis(a), S.ext->from_z(t)) == S.H->basis(S.ext->mul_z(a, t)));
    CHECK(S.H->left_mul_basis(S.ext->from_z(t), S.H->basis(a)) ==
          S.H->basis(S.ext->mul(S.ext->from_z(t), a)));
  }
}

TEST_CASE("bullet action is conjugation on the basis") {
  auto S = props::make_setup("SL3", true);
  std::mt19937_64 rng(15);
  for (int n = 0; n < 30; ++n) {
    W1Element g = props::random_lift(*S.ext, oracle::random_element(*S.rd, rng, 4), rng);
    W1Element x = props::random_lift(*S.ext, oracle::random_element(*S.rd, rng, 4), rng);
    CHECK(S.H->bullet(g, S.H->basis(x)) == S.H->basis(S.ext->conjugate(g, x)));
  }
}

TEST_CASE("supp_max picks maximal length in canonical order") {
  auto S = props::make_setup("GL2", false);
  const Extension& ext = *S.ext;
  HeckeElement h = S.H->zero();
  W1Element a = ext.mul(ext.generator(0), ext.generator(1));
  W1Element b = ext.mul(ext.generator(1), ext.generator(0));
  W1Element c = ext.generator(0);
  h.add_term(a, S.H->ring().one());
  h.add_term(b, S.H->ring().constant(2));
  h.add_term(c, S.H->ring().constant(5));
  auto top = S.H->supp_max(h);
  REQUIRE(top.size() == 2);
  CHECK(S.H->key_less(top[0], top[1]));
  CHECK_THROWS_AS(S.H->supp_max(S.H->zero()), DomainError);
}

TEST_CASE("generic parameters satisfy the transport constraints") {
  for (const auto& S : props::all_setups()) {
    CheckReport rep = S.params->check(5);
    CHECK_MESSAGE(rep.ok, S.label);
  }
  // GL2 split over Z/3: both reflections are conjugate, so there is one source.
  auto S = props::make_setup("GL2", false);
  CHECK(S.params->orbits().size() == 1);
  CHECK(S.params->c(1) == S.ext->derive_parameter(S.params->c(0), 0, S.ext->generator(1)));
  CHECK(S.params->c(0).to_string().find("c0_0") != std::string::npos);
}

TEST_CASE("parameter violations are reported") {
  auto rd = std::make_shared<const RootDatum>(preset_root_datum("GL2"));
  auto ext = std::make_shared<const Extension>(rd, split_extension(*rd, {3}));
  Ring ring = Ring::parse("polynomial");
  const AbelianGroup* z = &ext->z();

  // Both reflections given with unrelated values.
  std::map<int, GroupAlgebraValue> given;
  given[0] = GroupAlgebraValue::basis(z, z->parse("(0)"), Poly::variable("a"));
  given[1] = GroupAlgebraValue::basis(z, z->parse("(1)"), Poly::variable("b"));
  ParameterSystem bad(ext, ring, given);
  CheckReport rep = bad.check(3);
  CHECK_FALSE(rep.ok);

  // A consistent single source passes.
  given.erase(1);
  ParameterSystem good(ext, ring, given);
  CHECK(good.check(4).ok);

  // The non-split extension inverts Z, so c_s(t) = c_s(-t) is forced.
  auto ns = std::make_shared<const Extension>(rd, nonsplit_extension(*rd));
  const AbelianGroup* zn = &ns->z();
  std::map<int, GroupAlgebraValue> one_sided;
  one_sided[0] = GroupAlgebraValue::basis(zn, zn->parse("(1)"), Poly::variable("a"));
  ParameterSystem asym(ns, ring, one_sided);
  CHECK_FALSE(asym.check(4).ok);
}

TEST_CASE("explicit integer parameters") {
  auto rd = std::make_shared<const RootDatum>(preset_root_datum("SL2"));
  auto ext = std::make_shared<const Extension>(rd, split_extension(*rd, {}));
  Ring ring = Ring::parse("integer");
  const AbelianGroup* z = &ext->z();
  std::map<int, GroupAlgebraValue> given;
  given[0] = GroupAlgebraValue::basis(z, ZElem{}, ring.constant(-1));
  given[1] = GroupAlgebraValue::basis(z, ZElem{}, ring.constant(-1));
  auto params = std::make_shared<const ParameterSystem>(ext, ring, given);
  HeckeAlgebra H(params);
  // 0-Hecke algebra: T_s^2 = -T_s.
  W1Element s = ext->generator(0);
  CHECK(H.mul(H.basis(s), H.basis(s)) == H.basis(s, ring.constant(-1)));
  CHECK(params->check(4).ok);
}
