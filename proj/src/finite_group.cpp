#include "britton/finite_group.hpp"

#include <algorithm>
#include <map>

namespace britton {

namespace {

void validate(FiniteGroupTable& t) {
  const int n = t.order;
  if (n <= 0 || static_cast<int>(t.mul.size()) != n)
    throw DomainError("table '" + t.name + "': bad dimensions");
  for (const auto& row : t.mul) {
    if (static_cast<int>(row.size()) != n)
      throw DomainError("table '" + t.name + "': ragged row");
    for (int v : row)
      if (v < 0 || v >= n)
        throw DomainError("table '" + t.name + "': entry out of range");
  }

  int id = -1;
  for (int e = 0; e < n && id < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n; ++a)
      if (t.mul[e][a] != a || t.mul[a][e] != a) {
        ok = false;
        break;
      }
    if (ok) id = e;
  }
  if (id < 0) throw DomainError("table '" + t.name + "': no identity");
  t.identity = id;

  t.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (t.mul[a][b] == id && t.mul[b][a] == id) {
        t.inverse[a] = b;
        break;
      }
    if (t.inverse[a] < 0)
      throw DomainError("table '" + t.name + "': element without inverse");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]])
          throw DomainError("table '" + t.name + "': not associative");

  t.element_order.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != id) {
      x = t.mul[x][a];
      ++k;
    }
    t.element_order[a] = k;
  }

  if (t.labels.empty())
    for (int a = 0; a < n; ++a) t.labels.push_back("g" + std::to_string(a));
}

}  // namespace

FiniteGroupTable FiniteGroupTable::from_mul_table(
    std::string name, std::vector<std::vector<int>> mul) {
  FiniteGroupTable t;
  t.name = std::move(name);
  t.order = static_cast<int>(mul.size());
  t.mul = std::move(mul);
  validate(t);
  return t;
}

FiniteGroupTable FiniteGroupTable::from_permutations(
    std::string name, const std::vector<std::vector<int>>& generators) {
  if (generators.empty())
    throw DomainError("permutation group needs at least one generator");
  const std::size_t deg = generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != deg) throw DomainError("permutation degree mismatch");
    std::vector<int> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < deg; ++i)
      if (sorted[i] != static_cast<int>(i))
        throw DomainError("not a permutation of 0.." + std::to_string(deg - 1));
  }

  std::vector<int> id(deg);
  for (std::size_t i = 0; i < deg; ++i) id[i] = static_cast<int>(i);

  auto compose = [&](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(deg);
    for (std::size_t i = 0; i < deg; ++i) r[i] = p[q[i]];
    return r;
  };

  // Orbit closure under right multiplication by the generators.
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      auto next = compose(elems[i], g);
      if (index.emplace(next, static_cast<int>(elems.size())).second)
        elems.push_back(next);
      if (elems.size() > 100'000)
        throw BudgetError("permutation closure exceeds 100000 elements");
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a][b] = index.at(compose(elems[a], elems[b]));
  return from_mul_table(std::move(name), std::move(mul));
}

int FiniteGroupTable::powv(int a, const Int& k) const {
  const int m = element_order[a];
  Int r = k % m;
  if (r < 0) r += m;
  int acc = identity;
  for (int i = 0; i < static_cast<int>(r); ++i) acc = mul[acc][a];
  return acc;
}

FiniteGroupTable direct_product(const std::string& name,
                                const FiniteGroupTable& a,
                                const FiniteGroupTable& b) {
  const int n = a.order * b.order;
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  auto enc = [&](int x, int y) { return x * b.order + y; };
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          mul[enc(x1, y1)][enc(x2, y2)] =
              enc(a.mulv(x1, x2), b.mulv(y1, y2));
  return FiniteGroupTable::from_mul_table(name, std::move(mul));
}

FiniteGroupTable cyclic_group(const std::string& name, int n) {
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  return FiniteGroupTable::from_mul_table(name, std::move(mul));
}

}  // namespace britton
