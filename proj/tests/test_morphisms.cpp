#include "britton/morphisms.hpp"
#include "britton/rng.hpp"

#include "doctest.h"

using namespace britton;

namespace {
const Tower& tower() {
  static const Tower t;
  return t;
}
}  // namespace

TEST_CASE("well-definedness certification") {
  const Tower& t = tower();

  Hom psi = psi_endomorphism();
  const Certificate cert = check_well_defined(t, psi);
  CHECK(cert.verdict);
  CHECK(cert.evidence.size() == 10);
  CHECK(psi.verified);

  // t -> t c^-1 instance of the t-shift family
  Hom rho{Level::H2, Level::H2, {}, false};
  rho.images['b'] = Word::parse("b");
  rho.images['c'] = Word::parse("c");
  rho.images['s'] = Word::parse("s");
  rho.images['t'] = Word::parse("t c^-1");
  CHECK(check_well_defined(t, rho).verdict);

  // b -> c fails on the relator b^2 (image c^2 != 1)
  Hom bad{Level::H2, Level::H2, {}, false};
  bad.images['b'] = Word::parse("c");
  bad.images['c'] = Word::parse("c");
  bad.images['s'] = Word::parse("s");
  bad.images['t'] = Word::parse("t");
  const Certificate bad_cert = check_well_defined(t, bad);
  CHECK_FALSE(bad_cert.verdict);
  CHECK_FALSE(bad.verified);
  CHECK_FALSE(bad_cert.evidence.front().pass);  // relator b^2 comes first

  // missing images and out-of-alphabet images are rejected up front
  Hom incomplete{Level::H0, Level::H0, {{'b', Word::parse("b")}}, false};
  CHECK_THROWS_AS(check_well_defined(t, incomplete), DomainError);
  Hom escape{Level::H0,
             Level::H0,
             {{'b', Word::parse("b")}, {'c', Word::parse("s")}},
             false};
  CHECK_THROWS_AS(check_well_defined(t, escape), DomainError);
}

TEST_CASE("application") {
  const Tower& t = tower();
  Hom psi = psi_endomorphism();
  check_well_defined(t, psi);

  CHECK(apply_hom(psi, Word::parse("c^3")) == Word::parse("c^9"));
  CHECK(t.wp_is_trivial(Level::G, apply_hom(psi, Word::parse("c^3"))));
  CHECK(apply_hom(psi, Word::parse("t^-1 a t")) == Word::parse("t^-1 s t"));

  const Hom id = identity_hom(t, Level::G);
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const Word w = random_reduced_word_up_to(rng, "bcstefauvxy", 10);
    CHECK(apply_hom(id, w) == w);
  }

  Hom unchecked = psi_endomorphism();
  CHECK_THROWS_AS(apply_hom(unchecked, Word::parse("b")), DomainError);
}

TEST_CASE("functoriality of application") {
  const Tower& t = tower();
  Hom psi = psi_endomorphism();
  check_well_defined(t, psi);
  Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    const Word w1 = random_reduced_word_up_to(rng, "bcstefauvxy", 8);
    const Word w2 = random_reduced_word_up_to(rng, "bcstefauvxy", 8);
    CHECK(t.wp_equal(Level::G, apply_hom(psi, w1 * w2),
                     apply_hom(psi, w1) * apply_hom(psi, w2)));
    CHECK(t.wp_equal(Level::G, apply_hom(psi, w1.inverse()),
                     apply_hom(psi, w1).inverse()));
  }
}

TEST_CASE("verified maps respect equality") {
  const Tower& t = tower();
  Hom psi = psi_endomorphism();
  check_well_defined(t, psi);
  Rng rng(23);
  const Presentation& pres = t.presentation(Level::G);
  for (int i = 0; i < 40; ++i) {
    const Word w = random_reduced_word_up_to(rng, pres.generators, 8);
    const Word& r = pres.relators[rng.below(pres.relators.size())];
    const Word z = random_reduced_word_up_to(rng, pres.generators, 4);
    const Word w2 = w * z * r * z.inverse();  // equal to w in G
    REQUIRE(t.wp_equal(Level::G, w, w2));
    CHECK(t.wp_equal(Level::G, apply_hom(psi, w), apply_hom(psi, w2)));
  }
}

TEST_CASE("composition") {
  const Tower& t = tower();
  auto [rho, rho_inv] = pair_b_shift(1);
  check_well_defined(t, rho);
  check_well_defined(t, rho_inv);

  const Hom both = compose(rho, rho_inv);
  for (char g : {'b', 'c', 's', 't'})
    CHECK(t.wp_equal(Level::H2, both.images.at(g), Word::power(g, 1)));

  const Hom id = identity_hom(t, Level::H2);
  const Hom same = compose(rho, id);
  for (char g : {'b', 'c', 's', 't'})
    CHECK(t.wp_equal(Level::H2, same.images.at(g), rho.images.at(g)));

  // associativity on generator images
  auto [tau, tau_inv] = pair_c_power(4);
  check_well_defined(t, tau);
  check_well_defined(t, tau_inv);
  const Hom left = compose(compose(rho, tau), rho_inv);
  const Hom right = compose(rho, compose(tau, rho_inv));
  for (char g : {'b', 'c', 's', 't'})
    CHECK(t.wp_equal(Level::H2, left.images.at(g), right.images.at(g)));

  Hom k_level = identity_hom(t, Level::K);
  CHECK_THROWS_AS(compose(rho, k_level), DomainError);
}

TEST_CASE("inverse pairs") {
  const Tower& t = tower();

  auto [rho, rho_inv] = pair_t_shift(Word::parse("c"));
  check_well_defined(t, rho);
  check_well_defined(t, rho_inv);
  CHECK(is_inverse_pair(t, rho, rho_inv));

  // k = 4, k' = 7: 28 = 1 mod 9
  auto [tau, tau_inv] = pair_c_power(4);
  CHECK(tau.images.at('c') == Word::parse("c^7"));
  check_well_defined(t, tau);
  check_well_defined(t, tau_inv);
  CHECK(is_inverse_pair(t, tau, tau_inv));

  // k = 2 mod 3 branch inverts s
  auto [tau2, tau2_inv] = pair_c_power(2);
  CHECK(tau2.images.at('s') == Word::parse("s^-1"));
  CHECK(tau2.images.at('c') == Word::parse("c^5"));

  Hom psi = psi_endomorphism();
  check_well_defined(t, psi);
  CHECK_FALSE(is_inverse_pair(t, psi, psi));

  const Hom id = identity_hom(t, Level::H2);
  CHECK(is_inverse_pair(t, id, id));

  CHECK_THROWS_AS(pair_c_power(3), DomainError);
  CHECK_THROWS_AS(pair_t_shift(Word::parse("t")), DomainError);
}

TEST_CASE("non-Hopfian certificate") {
  const Tower& t = tower();
  Hom psi = psi_endomorphism();
  check_well_defined(t, psi);
  REQUIRE(psi.verified);

  const Certificate cert = certify_non_hopfian(
      t, psi, psi_kernel_witness(), psi_surjectivity_witnesses());
  CHECK(cert.verdict);
  CHECK(cert.evidence.size() == 2 + 11);

  // a corrupted witness fails and the failing check names the generator
  auto witnesses = psi_surjectivity_witnesses();
  witnesses['u'] = Word::parse("x c e c e^-1 x^-1 a");
  const Certificate bad =
      certify_non_hopfian(t, psi, psi_kernel_witness(), witnesses);
  CHECK_FALSE(bad.verdict);
  bool found = false;
  for (const auto& item : bad.evidence)
    if (!item.pass) {
      CHECK(item.name == "surjectivity witness for u");
      found = true;
    }
  CHECK(found);

  auto missing = psi_surjectivity_witnesses();
  missing.erase('c');
  CHECK_THROWS_AS(certify_non_hopfian(t, psi, psi_kernel_witness(), missing),
                  DomainError);
}
