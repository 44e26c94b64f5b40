#pragma once

#include "britton/words.hpp"

#include <string>
#include <vector>

namespace britton {

/// A finite group as an explicit multiplication table. Validated on
/// construction: identity, inverses, associativity.
struct FiniteGroupTable {
  std::string name;
  int order = 0;
  std::vector<std::vector<int>> mul;
  int identity = 0;
  std::vector<int> inverse;
  std::vector<int> element_order;
  std::vector<std::string> labels;

  static FiniteGroupTable from_mul_table(std::string name,
                                         std::vector<std::vector<int>> mul);

  /// Closes a set of permutations (one-line notation, 0-based images of
  /// 0..n-1) under composition and returns the resulting group table.
  static FiniteGroupTable from_permutations(
      std::string name, const std::vector<std::vector<int>>& generators);

  int mulv(int a, int b) const { return mul[a][b]; }
  int invv(int a) const { return inverse[a]; }
  int powv(int a, const Int& k) const;
  int ord(int a) const { return element_order[a]; }
};

/// Direct product with pair-encoded elements (a-major order).
FiniteGroupTable direct_product(const std::string& name,
                                const FiniteGroupTable& a,
                                const FiniteGroupTable& b);

FiniteGroupTable cyclic_group(const std::string& name, int n);

}  // namespace britton
