#include "britton/hnn.hpp"

namespace britton {

namespace {

const Int kMaxStableRun = 100'000;

std::string joined_letters(const Solver* base,
                           const std::vector<StableLetter>& letters) {
  std::string all = base->letters();
  for (const auto& sl : letters) {
    if (all.find(sl.sym) != std::string::npos)
      throw DomainError(std::string("stable letter '") + sl.sym +
                        "' collides with the base alphabet");
    all += sl.sym;
  }
  return all;
}

}  // namespace

HnnSolver::HnnSolver(std::string name, const Solver* base,
                     std::vector<StableLetter> letters)
    : Solver(std::move(name), joined_letters(base, letters)),
      base_(base),
      letters_(std::move(letters)) {}

int HnnSolver::stable_letter_index(char sym) const {
  for (int i = 0; i < static_cast<int>(letters_.size()); ++i)
    if (letters_[i].sym == sym) return i;
  return -1;
}

void HnnSolver::Builder::push_base(const Element& g) {
  if (tail.empty())
    head = owner->base_->mul(head, g);
  else
    tail.back().coef = owner->base_->mul(tail.back().coef, g);
}

void HnnSolver::Builder::push_stable(int letter, int sign) {
  if (!tail.empty() && tail.back().letter == letter &&
      tail.back().sign == -sign) {
    const StableLetter& sl = owner->letters_[letter];
    const Element& middle = tail.back().coef;
    // sign=+1 closes L^-1 g L (g must lie in A); sign=-1 closes L g L^-1.
    const CyclicOracle& test = sign > 0 ? sl.a : sl.b;
    const CyclicOracle& image = sign > 0 ? sl.b : sl.a;
    if (auto n = test.exponent_of(middle)) {
      Element transported = owner->base_->pow(image.generator, *n);
      tail.pop_back();
      push_base(transported);
      return;
    }
  }
  tail.push_back({letter, sign, owner->base_->identity()});
}

void HnnSolver::Builder::push_element(const Element& x) {
  const auto& e = x.as<HnnElem>();
  push_base(e.head);
  for (const auto& syl : e.tail) {
    push_stable(syl.letter, syl.sign);
    push_base(syl.coef);
  }
}

Element HnnSolver::Builder::take() {
  return Element::wrap(HnnElem{std::move(head), std::move(tail)});
}

Element HnnSolver::identity() const {
  return Element::wrap(HnnElem{base_->identity(), {}});
}

Element HnnSolver::mul(const Element& x, const Element& y) const {
  const auto& xe = x.as<HnnElem>();
  Builder b{this, xe.head, xe.tail};
  b.push_element(y);
  return b.take();
}

Element HnnSolver::inv(const Element& x) const {
  const auto& e = x.as<HnnElem>();
  if (e.tail.empty())
    return Element::wrap(HnnElem{base_->inv(e.head), {}});
  const std::size_t n = e.tail.size();
  HnnElem r;
  r.head = base_->inv(e.tail[n - 1].coef);
  r.tail.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& syl = e.tail[n - 1 - i];
    const Element& prev = (n - 1 - i == 0) ? e.head : e.tail[n - 2 - i].coef;
    r.tail.push_back({syl.letter, -syl.sign, base_->inv(prev)});
  }
  return Element::wrap(std::move(r));  // inverse of reduced is reduced
}

bool HnnSolver::is_identity(const Element& x) const {
  const auto& e = x.as<HnnElem>();
  return e.tail.empty() && base_->is_identity(e.head);
}

Word HnnSolver::to_word(const Element& x) const {
  const auto& e = x.as<HnnElem>();
  Word w = base_->to_word(e.head);
  for (const auto& syl : e.tail)
    w = w * Word::power(letters_[syl.letter].sym, syl.sign) *
        base_->to_word(syl.coef);
  return w;
}

Element HnnSolver::eval_run(char sym, const Int& exp) const {
  const int li = stable_letter_index(sym);
  if (li < 0) {
    if (!base_->owns_letter(sym))
      throw DomainError(std::string("letter '") + sym +
                        "' is not in the alphabet of " + name());
    return Element::wrap(HnnElem{base_->eval_run(sym, exp), {}});
  }
  if (abs(exp) > kMaxStableRun)
    throw BudgetError("stable-letter power too large to materialize: " +
                      exp.str());
  HnnElem r{base_->identity(), {}};
  const int sign = exp > 0 ? 1 : -1;
  for (Int i = 0; i < abs(exp); ++i)
    r.tail.push_back({li, sign, base_->identity()});
  return Element::wrap(std::move(r));
}

Int HnnSolver::letter_exponent_sum(const Element& x, char sym) const {
  const int li = stable_letter_index(sym);
  if (li < 0)
    throw DomainError(std::string("'") + sym + "' is not a stable letter of " +
                      name());
  Int sum = 0;
  for (const auto& syl : x.as<HnnElem>().tail)
    if (syl.letter == li) sum += syl.sign;
  return sum;
}

Element HnnSolver::head_of(const Element& x) const {
  const auto& e = x.as<HnnElem>();
  if (!e.tail.empty())
    throw DomainError("reduced form has stable letters; no base head");
  return e.head;
}

}  // namespace britton
