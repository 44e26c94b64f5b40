#pragma once

#include "britton/solver.hpp"

#include <vector>

namespace britton {

/// A reduced Britton word over an HNN extension of `base`: head * prod of
/// letter^sign * coefficient. Reduced means no subword L^-1 g L with
/// g in A(L) and no L g L^-1 with g in B(L); by Britton's lemma such a
/// word with nonempty tail is never the identity.
struct HnnElem {
  struct Syllable {
    int letter;  // index into the solver's stable letters
    int sign;    // +1 or -1
    Element coef;
  };
  Element head;
  std::vector<Syllable> tail;
};

/// One stable letter with its associated-subgroup oracles, realizing the
/// relation sym^-1 * A.gen * sym = B.gen. Oracle exponents are relative to
/// the oracle's own generator, so pinch transport preserves the exponent:
/// sym^-1 A.gen^n sym = B.gen^n.
struct StableLetter {
  char sym;
  CyclicOracle a;  // subgroup A, pinched by L^-1 g L
  CyclicOracle b;  // subgroup B, pinched by L g L^-1
};

/// HNN extension of a base solver with one or more stable letters.
/// Multiplication concatenates and re-reduces by stack-based pinch
/// elimination; triviality is empty tail + trivial head.
class HnnSolver final : public Solver {
 public:
  HnnSolver(std::string name, const Solver* base,
            std::vector<StableLetter> letters);

  Element identity() const override;
  Element mul(const Element& x, const Element& y) const override;
  Element inv(const Element& x) const override;
  bool is_identity(const Element& x) const override;
  Word to_word(const Element& x) const override;
  Element eval_run(char sym, const Int& exp) const override;

  const Solver& base() const { return *base_; }
  const StableLetter& stable_letter(int i) const { return letters_[i]; }
  int stable_letter_index(char sym) const;  // -1 when not a stable letter

  /// Number of stable-letter occurrences in the reduced form.
  static std::size_t tail_length(const Element& x) {
    return x.as<HnnElem>().tail.size();
  }
  /// Signed count of one stable letter in the reduced form. Invariant on
  /// equality classes whenever every relator has zero sum in that letter.
  Int letter_exponent_sum(const Element& x, char sym) const;

  /// The base-group element of a tail-free reduced form.
  Element head_of(const Element& x) const;

 private:
  struct Builder {
    const HnnSolver* owner;
    Element head;
    std::vector<HnnElem::Syllable> tail;

    void push_base(const Element& g);
    void push_stable(int letter, int sign);
    void push_element(const Element& x);
    Element take();
  };

  const Solver* base_;
  std::vector<StableLetter> letters_;
};

}  // namespace britton
