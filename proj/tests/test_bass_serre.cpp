#include "britton/bass_serre.hpp"
#include "britton/rng.hpp"

#include "doctest.h"

using namespace britton;

namespace {
const Tower& tower() {
  static const Tower t;
  return t;
}
}  // namespace

TEST_CASE("coset equality") {
  const BassSerreTree tree(tower());
  CHECK(tree.vertex_equal(Word(), Word::parse("s^5 b c^2")));
  CHECK_FALSE(tree.vertex_equal(Word(), Word::parse("t")));
  CHECK(tree.edge_equal(Word(), Word::parse("s^3")));
  CHECK_FALSE(tree.edge_equal(Word(), Word::parse("b")));
  // s t H1 = t H1 since t^-1 s t = s^3
  CHECK(tree.vertex_equal(Word::parse("s t"), Word::parse("t")));
}

TEST_CASE("canonical labels agree with coset equality") {
  const Tower& t = tower();
  const BassSerreTree tree(t);
  Rng rng(31);
  std::vector<Word> words;
  for (int i = 0; i < 60; ++i)
    words.push_back(random_reduced_word_up_to(rng, "bcst", 7));
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i; j < words.size(); ++j) {
      CHECK((tree.vertex_label(words[i]) == tree.vertex_label(words[j])) ==
            tree.vertex_equal(words[i], words[j]));
      CHECK((tree.edge_label(words[i]) == tree.edge_label(words[j])) ==
            tree.edge_equal(words[i], words[j]));
    }
}

TEST_CASE("balls") {
  const BassSerreTree tree(tower());

  const auto b0 = tree.ball(0);
  CHECK(b0.vertices.size() == 1);
  CHECK(b0.edges.empty());

  const auto b1 = tree.ball(1);
  CHECK(b1.vertices.size() == 73);
  CHECK(b1.edges.size() == 72);
  CHECK(b1.degree(0) == 72);
  CHECK(b1.is_tree());

  const auto b2 = tree.ball(2);
  CHECK(b2.vertices.size() == 1 + 72 + 72 * 71);
  CHECK(b2.edges.size() == b2.vertices.size() - 1);
  CHECK(b2.is_tree());
  // interior vertices see their whole neighborhood
  for (int v = 1; v <= 72; ++v) CHECK(b2.degree(v) == 72);

  CHECK_THROWS_AS(tree.ball(3), BudgetError);
}

TEST_CASE("the base edge joins H1 and t H1") {
  const BassSerreTree tree(tower());
  const auto b1 = tree.ball(1);
  bool found = false;
  for (const auto& e : b1.edges)
    if (e.label == tree.edge_label(Word())) {
      found = true;
      CHECK(e.near == 0);
      CHECK(b1.vertices[e.far].label == tree.vertex_label(Word::parse("t")));
    }
  CHECK(found);
}

TEST_CASE("action on vertices and edges") {
  const BassSerreTree tree(tower());
  CHECK(tree.fixes_vertex(Word::parse("s"), Word()));
  CHECK(tree.fixes_vertex(Word::parse("s"), Word::parse("t")));
  CHECK_FALSE(tree.fixes_edge(Word::parse("s"), Word::parse("t^-1")));
  CHECK(tree.fixes_edge(Word::parse("s^3"), Word::parse("t^-1")));
  CHECK(tree.fixes_edge(Word::parse("s"), Word()));
  CHECK_FALSE(tree.fixes_vertex(Word::parse("t"), Word()));

  // the action is well-defined on cosets
  const Tower& t = tower();
  Rng rng(77);
  for (int i = 0; i < 40; ++i) {
    const Word g = random_reduced_word_up_to(rng, "bcst", 5);
    const Word x = random_reduced_word_up_to(rng, "bcst", 5);
    // y = x * h1-element represents the same vertex
    const Word y = x * random_reduced_word_up_to(rng, "bcs", 4);
    REQUIRE(tree.vertex_equal(x, y));
    CHECK(tree.vertex_equal(g * x, g * y));
  }
}

TEST_CASE("dot output") {
  const BassSerreTree tree(tower());
  const std::string dot = tree.to_dot(tree.ball(1));
  CHECK(dot.find("graph bass_serre_ball") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
}
