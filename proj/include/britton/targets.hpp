#pragma once

#include "britton/finite_group.hpp"
#include "britton/free_product.hpp"
#include "britton/solver.hpp"

#include <map>
#include <memory>

namespace britton {

/// Free group on a set of letters; elements are the reduced words
/// themselves.
class FreeGroupSolver final : public Solver {
 public:
  FreeGroupSolver(std::string name, std::string letters)
      : Solver(std::move(name), std::move(letters)) {}

  Element identity() const override { return Element::wrap(Word{}); }
  Element mul(const Element& x, const Element& y) const override {
    return Element::wrap(x.as<Word>() * y.as<Word>());
  }
  Element inv(const Element& x) const override {
    return Element::wrap(x.as<Word>().inverse());
  }
  bool is_identity(const Element& x) const override {
    return x.as<Word>().empty();
  }
  Word to_word(const Element& x) const override { return x.as<Word>(); }
  Element eval_run(char sym, const Int& exp) const override {
    return Element::wrap(Word::power(sym, exp));
  }
};

/// Infinite cyclic group on one letter; elements are exponents.
class ZSolver final : public Solver {
 public:
  ZSolver(std::string name, char letter)
      : Solver(std::move(name), std::string(1, letter)), letter_(letter) {}

  Element identity() const override { return Element::wrap(Int(0)); }
  Element mul(const Element& x, const Element& y) const override {
    return Element::wrap(Int(x.as<Int>() + y.as<Int>()));
  }
  Element inv(const Element& x) const override {
    return Element::wrap(Int(-x.as<Int>()));
  }
  bool is_identity(const Element& x) const override {
    return x.as<Int>() == 0;
  }
  Word to_word(const Element& x) const override {
    return Word::power(letter_, x.as<Int>());
  }
  Element eval_run(char, const Int& exp) const override {
    return Element::wrap(exp);
  }

 private:
  char letter_;
};

/// Cyclic group of order n on one letter.
class ZnSolver final : public Solver {
 public:
  ZnSolver(std::string name, char letter, int n);

  Element identity() const override { return Element::wrap(int{0}); }
  Element mul(const Element& x, const Element& y) const override {
    return Element::wrap(int{(x.as<int>() + y.as<int>()) % n_});
  }
  Element inv(const Element& x) const override {
    return Element::wrap(int{(n_ - x.as<int>()) % n_});
  }
  bool is_identity(const Element& x) const override {
    return x.as<int>() == 0;
  }
  Word to_word(const Element& x) const override {
    return Word::power(letter_, x.as<int>());
  }
  Element eval_run(char, const Int& exp) const override;

 private:
  char letter_;
  int n_;
};

/// Z2 x Z2 x Z2 with the letters b, s, t as the three unit bits.
class Z2CubeSolver final : public Solver {
 public:
  Z2CubeSolver() : Solver("Z2^3", "bst") {}

  Element identity() const override { return Element::wrap(int{0}); }
  Element mul(const Element& x, const Element& y) const override {
    return Element::wrap(int{x.as<int>() ^ y.as<int>()});
  }
  Element inv(const Element& x) const override { return x; }
  bool is_identity(const Element& x) const override {
    return x.as<int>() == 0;
  }
  Word to_word(const Element& x) const override;
  Element eval_run(char sym, const Int& exp) const override;
};

/// Z_q x| Z with the 3-twisted product
/// (k, m)(k', m') = (k 3^{m'} + k' mod q, m + m'); requires gcd(q, 3) = 1
/// so that the twist is invertible. Letters: s = (1,0), t = (0,1).
class ZqSemidirectSolver final : public Solver {
 public:
  struct Elem {
    int k;
    Int m;
  };

  explicit ZqSemidirectSolver(int q);

  Element identity() const override { return Element::wrap(Elem{0, 0}); }
  Element mul(const Element& x, const Element& y) const override;
  Element inv(const Element& x) const override;
  bool is_identity(const Element& x) const override {
    const auto& e = x.as<Elem>();
    return e.k == 0 && e.m == 0;
  }
  Word to_word(const Element& x) const override;
  Element eval_run(char sym, const Int& exp) const override;

  int q() const { return q_; }

 private:
  int pow3(const Int& m) const;  // 3^m mod q, any sign of m

  int q_;
  int inv3_;  // 3^-1 mod q
};

/// A finite group given by an explicit table; letters map to elements.
class TableSolver final : public Solver {
 public:
  TableSolver(FiniteGroupTable table, std::map<char, int> generator_images);

  Element identity() const override {
    return Element::wrap(int{table_.identity});
  }
  Element mul(const Element& x, const Element& y) const override {
    return Element::wrap(int{table_.mulv(x.as<int>(), y.as<int>())});
  }
  Element inv(const Element& x) const override {
    return Element::wrap(int{table_.invv(x.as<int>())});
  }
  bool is_identity(const Element& x) const override {
    return x.as<int>() == table_.identity;
  }
  Word to_word(const Element& x) const override;
  Element eval_run(char sym, const Int& exp) const override;

  const FiniteGroupTable& table() const { return table_; }

 private:
  FiniteGroupTable table_;
  std::map<char, int> gens_;
};

/// An owning bundle for a target group built from several solvers
/// (e.g. Z3 * Z assembled from two cyclic factors).
struct TargetGroup {
  std::vector<std::shared_ptr<Solver>> owned;
  const Solver* solver = nullptr;

  const Solver& operator*() const { return *solver; }
  const Solver* operator->() const { return solver; }
};

TargetGroup make_target_z(std::string name, char letter);
TargetGroup make_target_zn(std::string name, char letter, int n);
TargetGroup make_target_z2cube();
TargetGroup make_target_zq_semidirect(int q);
/// Z3 * Z with letters c (order 3) and t (infinite order).
TargetGroup make_target_z3_free_z();
TargetGroup make_target_table(FiniteGroupTable table,
                              std::map<char, int> generator_images);

}  // namespace britton
