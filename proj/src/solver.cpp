#include "britton/solver.hpp"

namespace britton {

Element Solver::eval(const Word& w) const {
  for (const auto& r : w.runs())
    if (!owns_letter(r.sym))
      throw DomainError(std::string("letter '") + r.sym +
                        "' is not in the alphabet of " + name());
  Element acc = identity();
  for (const auto& r : w.runs()) acc = mul(acc, eval_run(r.sym, r.exp));
  return acc;
}

Element Solver::pow(const Element& x, const Int& n) const {
  if (n == 0) return identity();
  Element base = n > 0 ? x : inv(x);
  Int k = abs(n);
  Element acc = identity();
  while (k > 0) {
    if ((k & 1) != 0) acc = mul(acc, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return acc;
}

bool Solver::equal(const Element& x, const Element& y) const {
  return is_identity(mul(inv(x), y));
}

}  // namespace britton
