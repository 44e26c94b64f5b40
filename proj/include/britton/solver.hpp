#pragma once

#include "britton/words.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <typeinfo>

namespace britton {

/// Immutable, type-erased group element. Each Solver defines its own
/// payload type; cross-solver mixing is a programming error and throws.
class Element {
 public:
  Element() = default;

  template <class T>
  static Element wrap(T value) {
    Element e;
    e.p_ = std::make_shared<Model<T>>(std::move(value));
    return e;
  }

  template <class T>
  const T& as() const {
    auto* m = dynamic_cast<const Model<T>*>(p_.get());
    if (m == nullptr)
      throw DomainError("element payload type mismatch across solvers");
    return m->value;
  }

  bool empty() const { return p_ == nullptr; }

 private:
  struct Concept {
    virtual ~Concept() = default;
  };
  template <class T>
  struct Model final : Concept {
    T value;
    explicit Model(T v) : value(std::move(v)) {}
  };

  std::shared_ptr<const Concept> p_;
};

/// A group with solvable word problem over a subset of the generator
/// alphabet. eval is a homomorphism from freely reduced words to elements;
/// equality is decided as is_identity(x^-1 y).
class Solver {
 public:
  Solver(std::string name, std::string letters)
      : name_(std::move(name)), letters_(std::move(letters)) {}
  virtual ~Solver() = default;

  const std::string& name() const { return name_; }

  /// Letters this solver accepts, as a string of symbols.
  const std::string& letters() const { return letters_; }
  bool owns_letter(char c) const {
    return letters_.find(c) != std::string::npos;
  }

  virtual Element identity() const = 0;
  virtual Element mul(const Element& x, const Element& y) const = 0;
  virtual Element inv(const Element& x) const = 0;
  virtual bool is_identity(const Element& x) const = 0;

  /// A representative word for the element (canonical at levels that have
  /// canonical forms; otherwise a reduced representative).
  virtual Word to_word(const Element& x) const = 0;

  /// Evaluates one maximal run sym^exp.
  virtual Element eval_run(char sym, const Int& exp) const = 0;

  Element eval(const Word& w) const;
  Element pow(const Element& x, const Int& n) const;
  bool equal(const Element& x, const Element& y) const;
  bool is_trivial(const Word& w) const { return is_identity(eval(w)); }
  bool equal_words(const Word& w1, const Word& w2) const {
    return equal(eval(w1), eval(w2));
  }

 private:
  std::string name_;
  std::string letters_;
};

/// Membership oracle for a cyclic subgroup <g> of a solver's group.
/// exponent_of returns n with x = g^n, or nullopt when x is not in <g>.
/// Soundness: a returned n always satisfies x = g^n in the ambient solver
/// (each strategy ends with, or is equivalent to, an equality check).
struct CyclicOracle {
  std::string name;
  Word generator_word;
  Element generator;                 // generator_word evaluated in `owner`
  const Solver* owner = nullptr;
  std::function<std::optional<Int>(const Element&)> exponent_of;

  std::optional<Int> member(const Element& x) const { return exponent_of(x); }
};

}  // namespace britton
