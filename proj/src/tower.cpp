#include "britton/tower.hpp"

#include <algorithm>
#include <cctype>

namespace britton {

std::string level_name(Level level) {
  switch (level) {
    case Level::H0: return "h0";
    case Level::H1: return "h1";
    case Level::H2: return "h2";
    case Level::Fef: return "fef";
    case Level::H: return "h";
    case Level::Ha: return "ha";
    case Level::K: return "k";
    case Level::G: return "g";
  }
  return "?";
}

std::optional<Level> level_from_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (Level level : kAllLevels)
    if (lower == level_name(level)) return level;
  return std::nullopt;
}

std::string Tower::oracle_name(OracleId id) {
  switch (id) {
    case OracleId::SInH1: return "s";
    case OracleId::S3InH1: return "s^3";
    case OracleId::AInHa: return "a";
    case OracleId::BacbInHa: return "b a c b^-1";
    case OracleId::TstInHa: return "t s t^-1";
    case OracleId::UInK: return "u";
    case OracleId::VInK: return "v";
    case OracleId::CeInK: return "c^3 e c^3 e^-1";
    case OracleId::CfInK: return "c^3 f c^3 f^-1";
  }
  return "?";
}

Level Tower::oracle_level(OracleId id) const {
  switch (id) {
    case OracleId::SInH1:
    case OracleId::S3InH1: return Level::H1;
    case OracleId::AInHa:
    case OracleId::BacbInHa:
    case OracleId::TstInHa: return Level::Ha;
    default: return Level::K;
  }
}

namespace {

// Signed total of <a>-syllable exponents; a homomorphism invariant of
// H*<a> since no relator of H*<a> contains the letter a.
Int a_exponent_sum(const Element& x) {
  Int sum = 0;
  for (const auto& syl : FreeProductSolver::syllables(x))
    if (syl.factor == 1) sum += syl.elem.as<Int>();
  return sum;
}

// Verified power oracle: candidate exponent from an invariant statistic,
// sealed by a solver equality check.
std::optional<Int> verify_power(const Solver& solver, const Element& gen,
                                const Element& x, const Int& candidate) {
  if (abs(candidate) > 100'000) return std::nullopt;
  if (solver.equal(x, solver.pow(gen, candidate))) return candidate;
  return std::nullopt;
}

}  // namespace

Tower::Tower() {
  h0_ = std::make_unique<H0Solver>();
  h1_ = std::make_unique<H1Solver>();

  // <s> and <s^3> in H1: membership is tail-freeness of the canonical pair.
  CyclicOracle s_in_h1{"s", Word::parse("s"), h1_->eval_run('s', 1), h1_.get(),
                       [](const Element& x) -> std::optional<Int> {
                         const auto& e = x.as<H1Elem>();
                         if (!e.tail.is_identity()) return std::nullopt;
                         return e.shift;
                       }};
  CyclicOracle s3_in_h1{"s^3", Word::parse("s^3"), h1_->eval_run('s', 3),
                        h1_.get(),
                        [](const Element& x) -> std::optional<Int> {
                          const auto& e = x.as<H1Elem>();
                          if (!e.tail.is_identity()) return std::nullopt;
                          if (e.shift % 3 != 0) return std::nullopt;
                          return e.shift / 3;
                        }};
  oracles_[0] = s_in_h1;
  oracles_[1] = s3_in_h1;

  h2_ = std::make_unique<HnnSolver>(
      "H2", h1_.get(), std::vector<StableLetter>{{'t', s_in_h1, s3_in_h1}});

  fef_ = std::make_unique<FreeGroupSolver>("F(e,f)", "ef");
  h_ = std::make_unique<FreeProductSolver>(
      "H", std::vector<const Solver*>{h2_.get(), fef_.get()});
  za_ = std::make_unique<ZSolver>("<a>", 'a');
  ha_ = std::make_unique<FreeProductSolver>(
      "H*<a>", std::vector<const Solver*>{h_.get(), za_.get()});

  const FreeProductSolver* ha = ha_.get();
  const HnnSolver* h2 = h2_.get();

  CyclicOracle a_in_ha{"a", Word::parse("a"), ha_->eval_run('a', 1), ha,
                       [ha](const Element& x) {
                         return verify_power(*ha, ha->eval_run('a', 1), x,
                                             a_exponent_sum(x));
                       }};
  const Element bacb = ha_->eval(Word::parse("b a c b^-1"));
  CyclicOracle bacb_in_ha{"b a c b^-1", Word::parse("b a c b^-1"), bacb, ha,
                          [ha, bacb](const Element& x) {
                            return verify_power(*ha, bacb, x,
                                                a_exponent_sum(x));
                          }};
  // <t s t^-1>: x must be a pure H2 element whose conjugate t^-1 x t is a
  // pure s-power; the shift is the exponent (t-conjugation is injective,
  // so no extra verification is needed).
  CyclicOracle tst_in_ha{
      "t s t^-1", Word::parse("t s t^-1"),
      ha_->eval(Word::parse("t s t^-1")), ha,
      [h2](const Element& x) -> std::optional<Int> {
        const auto& syls = FreeProductSolver::syllables(x);
        if (syls.empty()) return Int(0);
        if (syls.size() != 1 || syls[0].factor != 0) return std::nullopt;
        const auto& hsyls = FreeProductSolver::syllables(syls[0].elem);
        if (hsyls.size() != 1 || hsyls[0].factor != 0) return std::nullopt;
        const Element conj = h2->mul(
            h2->mul(h2->eval_run('t', -1), hsyls[0].elem), h2->eval_run('t', 1));
        if (HnnSolver::tail_length(conj) != 0) return std::nullopt;
        const auto& head = h2->head_of(conj).as<H1Elem>();
        if (!head.tail.is_identity()) return std::nullopt;
        return head.shift;
      }};
  oracles_[2] = a_in_ha;
  oracles_[3] = bacb_in_ha;
  oracles_[4] = tst_in_ha;

  k_ = std::make_unique<HnnSolver>(
      "K", ha_.get(),
      std::vector<StableLetter>{{'u', bacb_in_ha, a_in_ha},
                                {'v', a_in_ha, tst_in_ha}});

  const HnnSolver* k = k_.get();
  auto stable_sum_oracle = [k](std::string name, char letter) {
    const Element gen = k->eval_run(letter, 1);
    return CyclicOracle{std::move(name), Word::power(letter, 1), gen, k,
                        [k, gen, letter](const Element& x) {
                          return verify_power(
                              *k, gen, x, k->letter_exponent_sum(x, letter));
                        }};
  };
  oracles_[5] = stable_sum_oracle("u", 'u');
  oracles_[6] = stable_sum_oracle("v", 'v');

  // <c^3 e c^3 e^-1> and <c^3 f c^3 f^-1>: the n-th power of the generator
  // is a pure H element of exactly 4|n| syllables (adjacent H2/F(e,f)
  // blocks never merge), so the syllable count determines |n|.
  auto quad_syllable_oracle = [k](const std::string& text) {
    const Word gw = Word::parse(text);
    const Element gen = k->eval(gw);
    return CyclicOracle{
        text, gw, gen, k,
        [k, gen](const Element& x) -> std::optional<Int> {
          const auto& e = x.as<HnnElem>();
          if (!e.tail.empty()) return std::nullopt;
          const auto& syls = FreeProductSolver::syllables(e.head);
          if (syls.empty()) return Int(0);
          if (syls.size() != 1 || syls[0].factor != 0) return std::nullopt;
          const std::size_t len =
              FreeProductSolver::syllables(syls[0].elem).size();
          if (len % 4 != 0) return std::nullopt;
          const Int n = len / 4;
          if (k->equal(x, k->pow(gen, n))) return n;
          if (k->equal(x, k->pow(gen, -n))) return -n;
          return std::nullopt;
        }};
  };
  oracles_[7] = quad_syllable_oracle("c^3 e c^3 e^-1");
  oracles_[8] = quad_syllable_oracle("c^3 f c^3 f^-1");

  g_ = std::make_unique<HnnSolver>(
      "G", k_.get(),
      std::vector<StableLetter>{{'x', oracles_[5], oracles_[7]},
                                {'y', oracles_[6], oracles_[8]}});

  build_presentations();
}

void Tower::build_presentations() {
  auto rel = [](const char* text) { return Word::parse(text); };
  const std::vector<Word> h0_rels = {rel("b^2"), rel("c^9"),
                                     rel("b^-1 c b c")};
  std::vector<Word> h1_rels = h0_rels;
  h1_rels.push_back(rel("s^-1 b s c^3 b^-1"));
  h1_rels.push_back(rel("s^-1 c s c^-1"));
  std::vector<Word> h2_rels = h1_rels;
  h2_rels.push_back(rel("t^-1 s t s^-3"));
  std::vector<Word> k_rels = h2_rels;
  k_rels.push_back(rel("u^-1 b a c b^-1 u a^-1"));
  k_rels.push_back(rel("v^-1 a v t s^-1 t^-1"));
  std::vector<Word> g_rels = k_rels;
  g_rels.push_back(rel("x^-1 u x e c^-3 e^-1 c^-3"));
  g_rels.push_back(rel("y^-1 v y f c^-3 f^-1 c^-3"));

  presentations_[0] = {"bc", h0_rels};
  presentations_[1] = {"bcs", h1_rels};
  presentations_[2] = {"bcst", h2_rels};
  presentations_[3] = {"ef", {}};
  presentations_[4] = {"bcstef", h2_rels};
  presentations_[5] = {"bcstefa", h2_rels};
  presentations_[6] = {"bcstefauv", k_rels};
  presentations_[7] = {"bcstefauvxy", g_rels};
}

const Solver& Tower::solver(Level level) const {
  switch (level) {
    case Level::H0: return *h0_;
    case Level::H1: return *h1_;
    case Level::H2: return *h2_;
    case Level::Fef: return *fef_;
    case Level::H: return *h_;
    case Level::Ha: return *ha_;
    case Level::K: return *k_;
    case Level::G: return *g_;
  }
  throw DomainError("unknown level");
}

const Presentation& Tower::presentation(Level level) const {
  return presentations_[static_cast<std::size_t>(level)];
}

const CyclicOracle& Tower::oracle(OracleId id) const {
  return oracles_[static_cast<std::size_t>(id)];
}

std::optional<Int> Tower::subgroup_member(OracleId id, const Word& w) const {
  const CyclicOracle& o = oracle(id);
  return o.exponent_of(o.owner->eval(w));
}

}  // namespace britton
