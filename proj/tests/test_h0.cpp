#include "britton/h0.hpp"

#include "doctest.h"

using namespace britton;

namespace {
const H0Elem kId{};
const H0Elem kB{1, 0};
const H0Elem kC{0, 1};
}  // namespace

TEST_CASE("group axioms over all 18 elements") {
  const auto& all = h0_all_elements();
  REQUIRE(all.size() == 18);

  // unique identity
  int identities = 0;
  for (const auto& x : all)
    if (h0_mul(x, kId) == x && h0_mul(kId, x) == x && x.is_identity())
      ++identities;
  CHECK(identities == 1);

  // inverses
  for (const auto& x : all) {
    CHECK(h0_mul(x, h0_inv(x)).is_identity());
    CHECK(h0_mul(h0_inv(x), x).is_identity());
  }

  // associativity, all 18^3 triples
  for (const auto& x : all)
    for (const auto& y : all)
      for (const auto& z : all)
        CHECK(h0_mul(h0_mul(x, y), z) == h0_mul(x, h0_mul(y, z)));
}

TEST_CASE("defining relations and canonical products") {
  CHECK(h0_mul(kB, kB).is_identity());
  CHECK(h0_mul(h0_c_pow(4), h0_c_pow(5)).is_identity());
  // c * b = b c^-1 = (1, 8)
  CHECK(h0_mul(kC, kB) == H0Elem{1, 8});
  // b^-1 c b c = 1
  CHECK(h0_eval(Word::parse("b^-1 c b c")).is_identity());
  CHECK(h0_eval(Word::parse("c^9")).is_identity());
  CHECK(h0_eval(Word()).is_identity());
  CHECK_THROWS_AS(h0_eval(Word::parse("s")), DomainError);
}

TEST_CASE("phi is the order-3 automorphism b -> b c^-3") {
  CHECK(h0_phi(kB, 1) == h0_eval(Word::parse("b c^-3")));
  CHECK(h0_phi(kC, 5) == kC);
  CHECK(h0_phi(kB, 3) == kB);

  const auto& all = h0_all_elements();

  // phi^3 = id and phi^-1 phi = id, elementwise
  for (const auto& x : all) {
    CHECK(h0_phi(x, 3) == x);
    CHECK(h0_phi(h0_phi(x, 1), -1) == x);
  }

  // multiplicative and bijective
  std::vector<bool> hit(18, false);
  for (const auto& x : all) {
    const H0Elem y = h0_phi(x, 1);
    hit[y.flip * 9 + y.rot] = true;
    for (const auto& z : all)
      CHECK(h0_phi(h0_mul(x, z), 1) == h0_mul(h0_phi(x, 1), h0_phi(z, 1)));
  }
  for (bool b : hit) CHECK(b);
}

TEST_CASE("c^3 has order 3, commutes with c, and is inverted by b") {
  const H0Elem c3 = h0_c_pow(3);
  CHECK(h0_mul(h0_mul(c3, c3), c3).is_identity());
  CHECK_FALSE(h0_mul(c3, c3).is_identity());
  CHECK(h0_mul(c3, kC) == h0_mul(kC, c3));
  // b c^3 b^-1 = c^-3 (not central)
  CHECK(h0_mul(h0_mul(kB, c3), h0_inv(kB)) == h0_c_pow(-3));
}

TEST_CASE("canonical words round trip") {
  for (const auto& x : h0_all_elements()) CHECK(h0_eval(h0_to_word(x)) == x);
}
