#include "britton/free_product.hpp"

#include <set>

namespace britton {

namespace {

std::string joined_letters(const std::vector<const Solver*>& factors) {
  std::string all;
  std::set<char> seen;
  for (const auto* f : factors)
    for (char c : f->letters()) {
      if (seen.count(c))
        throw DomainError(std::string("free product factors overlap on '") +
                          c + "'");
      seen.insert(c);
      all += c;
    }
  return all;
}

}  // namespace

FreeProductSolver::FreeProductSolver(std::string name,
                                     std::vector<const Solver*> factors)
    : Solver(std::move(name), joined_letters(factors)),
      factors_(std::move(factors)) {}

int FreeProductSolver::factor_of_letter(char sym) const {
  for (int i = 0; i < factor_count(); ++i)
    if (factors_[i]->owns_letter(sym)) return i;
  return -1;
}

void FreeProductSolver::append(std::vector<FpElem::Syllable>& acc, int factor,
                               const Element& e) const {
  if (factors_[factor]->is_identity(e)) return;
  if (!acc.empty() && acc.back().factor == factor) {
    Element merged = factors_[factor]->mul(acc.back().elem, e);
    acc.pop_back();
    if (!factors_[factor]->is_identity(merged))
      acc.push_back({factor, std::move(merged)});
    return;
  }
  acc.push_back({factor, e});
}

Element FreeProductSolver::mul(const Element& x, const Element& y) const {
  std::vector<FpElem::Syllable> acc = x.as<FpElem>().syllables;
  for (const auto& syl : y.as<FpElem>().syllables)
    append(acc, syl.factor, syl.elem);
  return Element::wrap(FpElem{std::move(acc)});
}

Element FreeProductSolver::inv(const Element& x) const {
  const auto& syls = x.as<FpElem>().syllables;
  std::vector<FpElem::Syllable> acc;
  acc.reserve(syls.size());
  for (auto it = syls.rbegin(); it != syls.rend(); ++it)
    acc.push_back({it->factor, factors_[it->factor]->inv(it->elem)});
  return Element::wrap(FpElem{std::move(acc)});
}

bool FreeProductSolver::is_identity(const Element& x) const {
  return x.as<FpElem>().syllables.empty();
}

Word FreeProductSolver::to_word(const Element& x) const {
  Word w;
  for (const auto& syl : x.as<FpElem>().syllables)
    w = w * factors_[syl.factor]->to_word(syl.elem);
  return w;
}

Element FreeProductSolver::eval_run(char sym, const Int& exp) const {
  const int f = factor_of_letter(sym);
  if (f < 0)
    throw DomainError(std::string("letter '") + sym +
                      "' is not in the alphabet of " + name());
  return embed(f, factors_[f]->eval_run(sym, exp));
}

Element FreeProductSolver::embed(int factor, const Element& x) const {
  std::vector<FpElem::Syllable> acc;
  append(acc, factor, x);
  return Element::wrap(FpElem{std::move(acc)});
}

}  // namespace britton
