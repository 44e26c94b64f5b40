#pragma once

#include "britton/free_product.hpp"
#include "britton/h0.hpp"
#include "britton/hnn.hpp"
#include "britton/targets.hpp"

#include <array>
#include <memory>
#include <optional>

namespace britton {

/// The fixed tower of groups:
///   H0 = <b, c | b^2 = c^9 = 1, b^-1 c b = c^-1>
///   H1 = <H0, s | s^-1 b s = b c^-3, s^-1 c s = c>
///   H2 = <H1, t | t^-1 s t = s^3>
///   Fef = <e, f | >
///   H  = H2 * Fef
///   Ha = H * <a>
///   K  = <Ha, u, v | u^-1 (b a c b^-1) u = a, v^-1 a v = t s t^-1>
///   G  = <K, x, y | x^-1 u x = c^3 e c^3 e^-1, y^-1 v y = c^3 f c^3 f^-1>
enum class Level { H0, H1, H2, Fef, H, Ha, K, G };

inline constexpr std::array<Level, 8> kAllLevels = {
    Level::H0, Level::H1, Level::H2, Level::Fef,
    Level::H,  Level::Ha, Level::K,  Level::G};

std::string level_name(Level level);
std::optional<Level> level_from_name(std::string_view name);

struct Presentation {
  std::string generators;       // in tower order
  std::vector<Word> relators;   // freely reduced relator words
};

/// Solver for H0 as canonical pairs.
class H0Solver final : public Solver {
 public:
  H0Solver() : Solver("H0", "bc") {}

  Element identity() const override { return Element::wrap(H0Elem{}); }
  Element mul(const Element& x, const Element& y) const override {
    return Element::wrap(h0_mul(x.as<H0Elem>(), y.as<H0Elem>()));
  }
  Element inv(const Element& x) const override {
    return Element::wrap(h0_inv(x.as<H0Elem>()));
  }
  bool is_identity(const Element& x) const override {
    return x.as<H0Elem>().is_identity();
  }
  Word to_word(const Element& x) const override {
    return h0_to_word(x.as<H0Elem>());
  }
  Element eval_run(char sym, const Int& exp) const override {
    return Element::wrap(sym == 'b' ? h0_b_pow(exp) : h0_c_pow(exp));
  }
};

/// An element of H1 = H0 x| Z in the unique form s^shift * tail. Both
/// associated subgroups of the s-extension are all of H0 (b = (b c^-3) c^3
/// shows the image of conjugation is still <b c^-3, c> = H0), so the
/// extension is a semidirect product with canonical pairs and O(1)
/// equality. The extension relators are re-checked in tests.
struct H1Elem {
  Int shift;    // s-exponent, arbitrary precision
  H0Elem tail;

  bool is_identity() const { return shift == 0 && tail.is_identity(); }
};

class H1Solver final : public Solver {
 public:
  H1Solver() : Solver("H1", "bcs") {}

  Element identity() const override { return Element::wrap(H1Elem{0, {}}); }
  Element mul(const Element& x, const Element& y) const override {
    // (s^n h)(s^m h') = s^(n+m) phi^m(h) h'
    const auto& a = x.as<H1Elem>();
    const auto& b = y.as<H1Elem>();
    return Element::wrap(
        H1Elem{a.shift + b.shift, h0_mul(h0_phi(a.tail, b.shift), b.tail)});
  }
  Element inv(const Element& x) const override {
    const auto& a = x.as<H1Elem>();
    return Element::wrap(H1Elem{-a.shift, h0_phi(h0_inv(a.tail), -a.shift)});
  }
  bool is_identity(const Element& x) const override {
    return x.as<H1Elem>().is_identity();
  }
  Word to_word(const Element& x) const override {
    const auto& a = x.as<H1Elem>();
    return Word::power('s', a.shift) * h0_to_word(a.tail);
  }
  Element eval_run(char sym, const Int& exp) const override {
    if (sym == 's') return Element::wrap(H1Elem{exp, {}});
    return Element::wrap(
        H1Elem{0, sym == 'b' ? h0_b_pow(exp) : h0_c_pow(exp)});
  }
};

/// The nine built-in cyclic membership oracles.
enum class OracleId {
  SInH1,      // <s>   in H1, shift-tail
  S3InH1,     // <s^3> in H1, shift-tail
  AInHa,      // <a>   in H*<a>, a-exponent sum + verify
  BacbInHa,   // <b a c b^-1> in H*<a>, a-exponent sum + verify
  TstInHa,    // <t s t^-1>   in H*<a>, conjugate transport through t
  UInK,       // <u> in K, u-exponent sum + verify
  VInK,       // <v> in K, v-exponent sum + verify
  CeInK,      // <c^3 e c^3 e^-1> in K, syllable pattern + verify
  CfInK,      // <c^3 f c^3 f^-1> in K, syllable pattern + verify
};

inline constexpr std::array<OracleId, 9> kAllOracles = {
    OracleId::SInH1, OracleId::S3InH1, OracleId::AInHa,
    OracleId::BacbInHa, OracleId::TstInHa, OracleId::UInK,
    OracleId::VInK, OracleId::CeInK, OracleId::CfInK};

/// Builds every level once and answers word-problem queries. Construction
/// wires the combinator stack:
///   H2 = hnn(H1, t: A=<s>, B=<s^3>)
///   H  = free_product(H2, Fef); Ha = free_product(H, <a>)
///   K  = hnn(Ha, u: A=<b a c b^-1>, B=<a>; v: A=<a>, B=<t s t^-1>)
///   G  = hnn(K, x: A=<u>, B=<c^3 e c^3 e^-1>; y: A=<v>, B=<c^3 f c^3 f^-1>)
/// Immutable after construction; queries are pure and thread-safe.
class Tower {
 public:
  Tower();

  const Solver& solver(Level level) const;
  const Presentation& presentation(Level level) const;
  const CyclicOracle& oracle(OracleId id) const;
  static std::string oracle_name(OracleId id);
  Level oracle_level(OracleId id) const;

  bool wp_is_trivial(Level level, const Word& w) const {
    return solver(level).is_trivial(w);
  }
  bool wp_equal(Level level, const Word& w1, const Word& w2) const {
    return solver(level).equal_words(w1, w2);
  }
  /// Exponent n with w = gen^n at the oracle's own level, or nullopt.
  std::optional<Int> subgroup_member(OracleId id, const Word& w) const;

  const H0Solver& h0() const { return *h0_; }
  const H1Solver& h1() const { return *h1_; }
  const HnnSolver& h2() const { return *h2_; }
  const FreeGroupSolver& fef() const { return *fef_; }
  const FreeProductSolver& h() const { return *h_; }
  const FreeProductSolver& ha() const { return *ha_; }
  const HnnSolver& k() const { return *k_; }
  const HnnSolver& g() const { return *g_; }

 private:
  void build_oracles();
  void build_presentations();

  std::unique_ptr<H0Solver> h0_;
  std::unique_ptr<H1Solver> h1_;
  std::unique_ptr<HnnSolver> h2_;
  std::unique_ptr<FreeGroupSolver> fef_;
  std::unique_ptr<FreeProductSolver> h_;
  std::unique_ptr<ZSolver> za_;
  std::unique_ptr<FreeProductSolver> ha_;
  std::unique_ptr<HnnSolver> k_;
  std::unique_ptr<HnnSolver> g_;

  std::array<CyclicOracle, 9> oracles_;
  std::array<Presentation, 8> presentations_;
};

}  // namespace britton
