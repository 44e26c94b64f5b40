#include "britton/rng.hpp"
#include "britton/targets.hpp"
#include "britton/tower.hpp"

#include "doctest.h"

using namespace britton;

namespace {
const Tower& tower() {
  static const Tower t;
  return t;
}
}  // namespace

TEST_CASE("free product syllable normal forms") {
  const auto& h = tower().h();
  // c^3 != 1 in H2 and e != 1 in F(e,f): four syllables
  CHECK(h.syllable_length(h.eval(Word::parse("c^3 e c^3 e^-1"))) == 4);
  CHECK(h.is_trivial(Word::parse("e s s^-1 e^-1")));

  const auto& ha = tower().ha();
  // [b]_H [a]_<a> [c b^-1]_H
  CHECK(ha.syllable_length(ha.eval(Word::parse("b a c b^-1"))) == 3);
  CHECK(ha.syllable_length(ha.eval(Word::parse("a c"))) == 2);

  // boundary merges cascade: c^9 dies in H, then a a^-1, then b b^-1
  CHECK(ha.is_trivial(Word::parse("b a c^9 a^-1 b^-1")));
  CHECK(ha.syllable_length(ha.eval(Word::parse("b a c^3 a^-1 b^-1"))) == 5);

  CHECK_THROWS_AS(FreeProductSolver("bad", {&tower().h2(), &tower().h1()}),
                  DomainError);
}

TEST_CASE("Britton reduction at H2") {
  const auto& h2 = tower().h2();
  CHECK(h2.equal_words(Word::parse("t^-1 s t"), Word::parse("s^3")));
  CHECK(h2.equal_words(Word::parse("t s^3 t^-1"), Word::parse("s")));

  // t^-1 b t is reduced (b is not in <s>), hence nontrivial
  const Element e = h2.eval(Word::parse("t^-1 b t"));
  CHECK(HnnSolver::tail_length(e) == 2);
  CHECK_FALSE(h2.is_identity(e));

  // nested pinches collapse: t^-2 s t^2 = s^9
  CHECK(h2.equal_words(Word::parse("t^-2 s t^2"), Word::parse("s^9")));

  // ascending pinch only on multiples of 3: t s t^-1 stays reduced
  CHECK(HnnSolver::tail_length(h2.eval(Word::parse("t s t^-1"))) == 2);
}

TEST_CASE("exponent growth is exact: t^-k s t^k = s^(3^k)") {
  const auto& h2 = tower().h2();
  for (int k = 1; k <= 40; ++k) {
    const Word w = Word::power('t', -k) * Word::parse("s") * Word::power('t', k);
    const Element e = h2.eval(w);
    REQUIRE(HnnSolver::tail_length(e) == 0);
    const auto& head = h2.head_of(e).as<H1Elem>();
    CHECK(head.tail.is_identity());
    CHECK(head.shift == pow(Int(3), k));
  }
}

TEST_CASE("cyclic membership oracles") {
  const Tower& t = tower();
  CHECK(t.subgroup_member(OracleId::S3InH1, Word::parse("s^6")) == Int(2));
  CHECK_FALSE(
      t.subgroup_member(OracleId::SInH1, Word::parse("s^2 b")).has_value());
  CHECK(t.subgroup_member(OracleId::SInH1, Word::parse("s^7")) == Int(7));
  // (b a c b^-1)^2 = b (a c)^2 b^-1
  CHECK(t.subgroup_member(OracleId::BacbInHa,
                          Word::parse("b a c a c b^-1")) == Int(2));
  CHECK(t.subgroup_member(OracleId::AInHa, Word::parse("a^5")) == Int(5));
  CHECK(t.subgroup_member(OracleId::TstInHa, Word::parse("t s^4 t^-1")) ==
        Int(4));
  CHECK_FALSE(
      t.subgroup_member(OracleId::TstInHa, Word::parse("t s t^-1 a")).has_value());
  CHECK_FALSE(
      t.subgroup_member(OracleId::UInK, Word::parse("v u v^-1")).has_value());
  CHECK(t.subgroup_member(OracleId::CeInK,
                          Word::parse("c^3 e c^3 e^-1").pow(3)) == Int(3));
  CHECK(t.subgroup_member(OracleId::CfInK,
                          Word::parse("c^3 f c^3 f^-1").pow(-2)) == Int(-2));

  // identity is the 0-th power for every oracle
  for (OracleId id : kAllOracles)
    CHECK(t.subgroup_member(id, Word()) == Int(0));

  // oracle consistency: gen^n recognized with exponent n for |n| <= 10
  for (OracleId id : kAllOracles) {
    const CyclicOracle& o = t.oracle(id);
    for (int n = -10; n <= 10; ++n) {
      const auto got = o.exponent_of(o.owner->pow(o.generator, n));
      REQUIRE(got.has_value());
      CHECK(*got == n);
    }
  }
}

TEST_CASE("target groups") {
  SUBCASE("Zq semidirect with q = 2 is Z2 x Z") {
    const auto zq = make_target_zq_semidirect(2);
    CHECK(zq->is_trivial(Word::parse("s^2")));
    CHECK_FALSE(zq->is_trivial(Word::parse("s")));
    // 3 = 1 mod 2 makes the action trivial: s and t commute
    CHECK(zq->equal_words(Word::parse("s t"), Word::parse("t s")));
    CHECK_FALSE(zq->is_trivial(Word::parse("t^10")));
    CHECK_THROWS_AS(make_target_zq_semidirect(6), DomainError);
    CHECK_THROWS_AS(make_target_zq_semidirect(1), DomainError);
  }

  SUBCASE("Zq semidirect twist: t^-1 s t = s^3") {
    const auto zq = make_target_zq_semidirect(5);
    CHECK(zq->equal_words(Word::parse("t^-1 s t"), Word::parse("s^3")));
    CHECK_FALSE(zq->equal_words(Word::parse("s t"), Word::parse("t s")));
  }

  SUBCASE("Z3 * Z") {
    const auto z3z = make_target_z3_free_z();
    const auto* fp = dynamic_cast<const FreeProductSolver*>(z3z.solver);
    REQUIRE(fp != nullptr);
    const Element e = fp->eval(Word::parse("c t c t^-1"));
    CHECK(fp->syllable_length(e) == 4);
    CHECK_FALSE(fp->is_identity(e));
    CHECK(fp->is_trivial(Word::parse("c^3")));
  }

  SUBCASE("Z2 cube") {
    const auto cube = make_target_z2cube();
    CHECK(cube->is_trivial(Word::parse("b^2")));
    CHECK(cube->is_trivial(Word::parse("b s t b s t")));
    CHECK_FALSE(cube->is_trivial(Word::parse("b s t")));
  }
}

TEST_CASE("solver laws on random words at every level") {
  const Tower& t = tower();
  Rng rng(417);
  for (Level level : kAllLevels) {
    const Solver& solver = t.solver(level);
    const std::string letters = t.presentation(level).generators;
    for (int i = 0; i < 200; ++i) {
      const Word w1 = random_reduced_word_up_to(rng, letters, 10);
      const Word w2 = random_reduced_word_up_to(rng, letters, 10);
      const Element e1 = solver.eval(w1);
      const Element e2 = solver.eval(w2);
      // eval is a homomorphism
      CHECK(solver.equal(solver.eval(w1 * w2), solver.mul(e1, e2)));
      // inverse law
      CHECK(solver.is_identity(solver.mul(e1, solver.inv(e1))));
      // serialization round trip
      CHECK(solver.equal(solver.eval(solver.to_word(e1)), e1));
    }
  }
}
