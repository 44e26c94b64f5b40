#pragma once

#include "britton/solver.hpp"

#include <vector>

namespace britton {

/// Syllable normal form for a free product: an alternating sequence of
/// (factor index, nontrivial factor element); adjacent syllables come from
/// distinct factors and the empty sequence is the identity.
struct FpElem {
  struct Syllable {
    int factor;
    Element elem;
  };
  std::vector<Syllable> syllables;
};

/// Free product of solvers with disjoint letter sets. The word problem is
/// decided by the normal form theorem: a product is trivial iff its
/// syllable sequence is empty.
class FreeProductSolver final : public Solver {
 public:
  FreeProductSolver(std::string name,
                    std::vector<const Solver*> factors);

  Element identity() const override { return Element::wrap(FpElem{}); }
  Element mul(const Element& x, const Element& y) const override;
  Element inv(const Element& x) const override;
  bool is_identity(const Element& x) const override;
  Word to_word(const Element& x) const override;
  Element eval_run(char sym, const Int& exp) const override;

  int factor_count() const { return static_cast<int>(factors_.size()); }
  const Solver& factor(int i) const { return *factors_[i]; }
  int factor_of_letter(char sym) const;  // -1 when unowned

  std::size_t syllable_length(const Element& x) const {
    return x.as<FpElem>().syllables.size();
  }
  static const std::vector<FpElem::Syllable>& syllables(const Element& x) {
    return x.as<FpElem>().syllables;
  }

  /// Wraps a nontrivial factor element as a one-syllable product element
  /// (the identity if the factor element is trivial).
  Element embed(int factor, const Element& x) const;

 private:
  void append(std::vector<FpElem::Syllable>& acc, int factor,
              const Element& e) const;

  std::vector<const Solver*> factors_;
};

}  // namespace britton
