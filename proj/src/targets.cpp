#include "britton/targets.hpp"

#include <numeric>

namespace britton {

ZnSolver::ZnSolver(std::string name, char letter, int n)
    : Solver(std::move(name), std::string(1, letter)), letter_(letter), n_(n) {
  if (n < 1) throw DomainError("cyclic order must be >= 1");
}

Element ZnSolver::eval_run(char, const Int& exp) const {
  Int r = exp % n_;
  if (r < 0) r += n_;
  return Element::wrap(static_cast<int>(r));
}

Word Z2CubeSolver::to_word(const Element& x) const {
  const int m = x.as<int>();
  Word w;
  if (m & 1) w = w * Word::power('b', 1);
  if (m & 2) w = w * Word::power('s', 1);
  if (m & 4) w = w * Word::power('t', 1);
  return w;
}

Element Z2CubeSolver::eval_run(char sym, const Int& exp) const {
  if (exp % 2 == 0) return identity();
  switch (sym) {
    case 'b': return Element::wrap(int{1});
    case 's': return Element::wrap(int{2});
    case 't': return Element::wrap(int{4});
    default:
      throw DomainError(std::string("letter '") + sym +
                        "' is not in the alphabet of " + name());
  }
}

ZqSemidirectSolver::ZqSemidirectSolver(int q)
    : Solver("Z" + std::to_string(q) + "x|Z", "st"), q_(q) {
  if (q < 2) throw DomainError("q must be >= 2");
  if (std::gcd(q, 3) != 1) throw DomainError("q must be coprime to 3");
  // 3^-1 mod q by scanning (q is small).
  inv3_ = -1;
  for (int x = 0; x < q; ++x)
    if ((3 * x) % q == 1) {
      inv3_ = x;
      break;
    }
}

int ZqSemidirectSolver::pow3(const Int& m) const {
  const int base = m >= 0 ? (3 % q_) : inv3_;
  Int k = abs(m);
  // exponents repeat with the multiplicative order of 3 mod q
  int ord = 1, x = base;
  while (x != 1 % q_) {
    x = (x * base) % q_;
    ++ord;
  }
  int r = static_cast<int>(k % ord);
  int acc = 1 % q_;
  for (int i = 0; i < r; ++i) acc = (acc * base) % q_;
  return acc;
}

Element ZqSemidirectSolver::mul(const Element& x, const Element& y) const {
  const auto& a = x.as<Elem>();
  const auto& b = y.as<Elem>();
  const int k = (a.k * pow3(b.m) + b.k) % q_;
  return Element::wrap(Elem{k, a.m + b.m});
}

Element ZqSemidirectSolver::inv(const Element& x) const {
  const auto& a = x.as<Elem>();
  const int k = ((-a.k * pow3(-a.m)) % q_ + q_) % q_;
  return Element::wrap(Elem{k, -a.m});
}

Word ZqSemidirectSolver::to_word(const Element& x) const {
  // (k, m) = t^m s^k under the product law: (0,m)(k,0) = (k, m).
  const auto& e = x.as<Elem>();
  return Word::power('t', e.m) * Word::power('s', e.k);
}

Element ZqSemidirectSolver::eval_run(char sym, const Int& exp) const {
  if (sym == 's') {
    Int r = exp % q_;
    if (r < 0) r += q_;
    return Element::wrap(Elem{static_cast<int>(r), 0});
  }
  if (sym == 't') return Element::wrap(Elem{0, exp});
  throw DomainError(std::string("letter '") + sym +
                    "' is not in the alphabet of " + name());
}

TableSolver::TableSolver(FiniteGroupTable table,
                         std::map<char, int> generator_images)
    : Solver(table.name,
             [&generator_images] {
               std::string s;
               for (const auto& [c, _] : generator_images) s += c;
               return s;
             }()),
      table_(std::move(table)),
      gens_(std::move(generator_images)) {
  for (const auto& [c, v] : gens_)
    if (v < 0 || v >= table_.order)
      throw DomainError(std::string("generator image for '") + c +
                        "' out of range");
}

Word TableSolver::to_word(const Element& x) const {
  // No canonical word over the letters; report the element label via a
  // dedicated channel instead. Identity serializes to the empty word.
  if (is_identity(x)) return Word();
  throw DomainError("table elements have no word representative");
}

Element TableSolver::eval_run(char sym, const Int& exp) const {
  auto it = gens_.find(sym);
  if (it == gens_.end())
    throw DomainError(std::string("letter '") + sym +
                      "' is not in the alphabet of " + name());
  return Element::wrap(int{table_.powv(it->second, exp)});
}

TargetGroup make_target_z(std::string name, char letter) {
  TargetGroup t;
  t.owned.push_back(std::make_shared<ZSolver>(std::move(name), letter));
  t.solver = t.owned.back().get();
  return t;
}

TargetGroup make_target_zn(std::string name, char letter, int n) {
  TargetGroup t;
  t.owned.push_back(std::make_shared<ZnSolver>(std::move(name), letter, n));
  t.solver = t.owned.back().get();
  return t;
}

TargetGroup make_target_z2cube() {
  TargetGroup t;
  t.owned.push_back(std::make_shared<Z2CubeSolver>());
  t.solver = t.owned.back().get();
  return t;
}

TargetGroup make_target_zq_semidirect(int q) {
  TargetGroup t;
  t.owned.push_back(std::make_shared<ZqSemidirectSolver>(q));
  t.solver = t.owned.back().get();
  return t;
}

TargetGroup make_target_z3_free_z() {
  TargetGroup t;
  auto z3 = std::make_shared<ZnSolver>("Z3", 'c', 3);
  auto z = std::make_shared<ZSolver>("Z", 't');
  auto fp = std::make_shared<FreeProductSolver>(
      "Z3*Z", std::vector<const Solver*>{z3.get(), z.get()});
  t.owned = {z3, z, fp};
  t.solver = fp.get();
  return t;
}

TargetGroup make_target_table(FiniteGroupTable table,
                              std::map<char, int> generator_images) {
  TargetGroup t;
  t.owned.push_back(std::make_shared<TableSolver>(std::move(table),
                                                  std::move(generator_images)));
  t.solver = t.owned.back().get();
  return t;
}

}  // namespace britton
