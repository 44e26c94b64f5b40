#include "britton/rng.hpp"
#include "britton/tower.hpp"

#include "doctest.h"

using namespace britton;

namespace {
const Tower& tower() {
  static const Tower t;
  return t;
}

// Insert conjugated relators of `level` at random positions; the result
// represents the same element.
Word insert_relator_conjugates(Rng& rng, const Tower& t, Level level,
                               const Word& w) {
  const Presentation& pres = t.presentation(level);
  if (pres.relators.empty()) return w;
  Word out;
  const auto& runs = w.runs();
  const std::size_t cut = rng.below(runs.size() + 1);
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i == cut) {
      const Word& r = pres.relators[rng.below(pres.relators.size())];
      const Word z =
          random_reduced_word_up_to(rng, pres.generators, 4);
      const Word conj = z * (rng.coin() ? r : r.inverse()) * z.inverse();
      out = out * conj;
    }
    out = out * Word({runs[i]});
  }
  if (cut == runs.size()) {
    const Word& r = pres.relators[rng.below(pres.relators.size())];
    out = out * r;
  }
  return out;
}
}  // namespace

TEST_CASE("level names") {
  CHECK(level_from_name("H2") == Level::H2);
  CHECK(level_from_name("ha") == Level::Ha);
  CHECK(level_from_name("Fef") == Level::Fef);
  CHECK_FALSE(level_from_name("q").has_value());
}

TEST_CASE("H1 as semidirect product satisfies the extension relators") {
  const auto& h1 = tower().h1();
  for (const Word& r : tower().presentation(Level::H1).relators)
    CHECK(h1.is_trivial(r));
  // b = (b c^-3) c^3: conjugation by s is onto H0
  CHECK(h1.equal_words(Word::parse("b"), Word::parse("b c^-3 c^3")));
  CHECK(h1.equal_words(Word::parse("s^-1 b s"), Word::parse("b c^-3")));
}

TEST_CASE("defining relators vanish at their levels and at G") {
  const Tower& t = tower();
  for (Level level : kAllLevels)
    for (const Word& r : t.presentation(level).relators)
      CHECK(t.wp_is_trivial(level, r));
  CHECK(t.presentation(Level::G).relators.size() == 10);
}

TEST_CASE("word problem spot checks") {
  const Tower& t = tower();
  CHECK(t.wp_is_trivial(Level::H2, Word::parse("t^-1 s t s^-3")));
  CHECK(t.wp_is_trivial(Level::K, Word::parse("u^-1 b a c b^-1 u a^-1")));
  CHECK(t.wp_is_trivial(Level::G,
                        Word::parse("x^-1 u x e c^-3 e^-1 c^-3")));
  CHECK_FALSE(t.wp_is_trivial(Level::G, Word::parse("c^3")));
  CHECK(t.wp_is_trivial(Level::G, Word::parse("c^9")));
  CHECK(t.wp_is_trivial(Level::H2, Word::parse("s^-3 b s^3 b^-1")));
  CHECK(t.wp_is_trivial(Level::H0, Word()));

  CHECK_FALSE(t.wp_equal(Level::Ha, Word::parse("b a c b^-1"),
                         Word::parse("a c")));
  CHECK(t.wp_equal(Level::H2, Word::parse("t^-1 s t"), Word::parse("s^3")));
  CHECK(t.wp_equal(Level::H, Word::parse("b s b"), Word::parse("s c^3")));

  // s^3 is central in H1
  Rng rng(99);
  for (int i = 0; i < 50; ++i) {
    const Word w = random_reduced_word_up_to(rng, "bcs", 8);
    CHECK(t.wp_equal(Level::H1, w * Word::parse("s^3"),
                     Word::parse("s^3") * w));
  }
}

TEST_CASE("alphabet discipline: no silent promotion") {
  const Tower& t = tower();
  CHECK_THROWS_AS(t.wp_is_trivial(Level::H2, Word::parse("e")), DomainError);
  CHECK_THROWS_AS(t.wp_is_trivial(Level::H0, Word::parse("s")), DomainError);
  CHECK_THROWS_AS(t.wp_is_trivial(Level::K, Word::parse("x")), DomainError);
  CHECK_THROWS_AS(t.wp_is_trivial(Level::Fef, Word::parse("b")), DomainError);
}

TEST_CASE("H0 embeds in G: 18 canonical elements stay distinct") {
  const Tower& t = tower();
  const auto& all = h0_all_elements();
  int comparisons = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      CHECK_FALSE(t.wp_equal(Level::G, h0_to_word(all[i]), h0_to_word(all[j])));
      ++comparisons;
    }
  CHECK(comparisons == 153);
}

TEST_CASE("oracle generators have infinite order") {
  const Tower& t = tower();
  for (OracleId id : kAllOracles) {
    const CyclicOracle& o = t.oracle(id);
    Element p = o.owner->identity();
    for (int n = 1; n <= 20; ++n) {
      p = o.owner->mul(p, o.generator);
      CHECK_FALSE(o.owner->is_identity(p));
    }
  }
}

TEST_CASE("level embedding on random words") {
  const Tower& t = tower();
  // (lower, higher) pairs along the containment chain
  const std::vector<std::pair<Level, Level>> chain = {
      {Level::H0, Level::H1}, {Level::H1, Level::H2}, {Level::H2, Level::H},
      {Level::Fef, Level::H}, {Level::H, Level::Ha},  {Level::Ha, Level::K},
      {Level::K, Level::G},   {Level::H0, Level::G},  {Level::H1, Level::G}};
  Rng rng(513);
  for (const auto& [lo, hi] : chain) {
    const std::string letters = t.presentation(lo).generators;
    for (int i = 0; i < 100; ++i) {
      Word w = random_reduced_word_up_to(rng, letters, 8);
      // half the samples are made trivial-prone by relator insertion
      if (rng.coin()) w = insert_relator_conjugates(rng, t, lo, w);
      CHECK(t.wp_is_trivial(lo, w) == t.wp_is_trivial(hi, w));
    }
  }
}

TEST_CASE("relator-conjugate insertion preserves equality and letter sums") {
  const Tower& t = tower();
  Rng rng(2724);
  const std::string g_letters = t.presentation(Level::G).generators;
  for (int i = 0; i < 60; ++i) {
    const Word w = random_reduced_word_up_to(rng, g_letters, 8);
    const Word w2 = insert_relator_conjugates(rng, t, Level::G, w);
    CHECK(t.wp_equal(Level::G, w, w2));
    // at G, every relator has zero exponent sum in t, x and y
    for (char sym : {'t', 'x', 'y'})
      CHECK(w.exponent_sum(sym) == w2.exponent_sum(sym));
  }
  // u- and v-sums are invariant at K but not at G (the x-relator carries a
  // bare u, the y-relator a bare v); likewise a-sums hold at H*<a> only
  // (the v-relator of K has a-sum 1)
  CHECK(t.presentation(Level::G).relators[8].exponent_sum('u') == 1);
  CHECK(t.presentation(Level::G).relators[9].exponent_sum('v') == 1);
  CHECK(t.presentation(Level::K).relators[7].exponent_sum('a') == 1);
  for (int i = 0; i < 60; ++i) {
    const Word w = random_reduced_word_up_to(rng, "bcstefauv", 8);
    const Word w2 = insert_relator_conjugates(rng, t, Level::K, w);
    for (char sym : {'u', 'v'})
      CHECK(w.exponent_sum(sym) == w2.exponent_sum(sym));
  }
  for (int i = 0; i < 60; ++i) {
    const Word w = random_reduced_word_up_to(rng, "bcstefa", 8);
    const Word w2 = insert_relator_conjugates(rng, t, Level::Ha, w);
    CHECK(w.exponent_sum('a') == w2.exponent_sum('a'));
  }
}

TEST_CASE("subgroup membership spot checks") {
  const Tower& t = tower();
  CHECK(t.subgroup_member(OracleId::AInHa, Word::parse("a^5")) == Int(5));
  CHECK(t.subgroup_member(OracleId::TstInHa, Word::parse("t s^4 t^-1")) ==
        Int(4));
  CHECK_FALSE(
      t.subgroup_member(OracleId::UInK, Word::parse("v u v^-1")).has_value());
  CHECK(t.subgroup_member(OracleId::UInK, Word::parse("u^-3")) == Int(-3));
  CHECK(t.subgroup_member(OracleId::VInK, Word::parse("v^2")) == Int(2));
  // <s>-membership needs a trivial H0 tail
  CHECK_FALSE(
      t.subgroup_member(OracleId::SInH1, Word::parse("s^2 b")).has_value());
  // pure s-powers reach the <s^3> oracle only on multiples of 3
  CHECK_FALSE(
      t.subgroup_member(OracleId::S3InH1, Word::parse("s^4")).has_value());
}
