#pragma once

#include "britton/morphisms.hpp"

#include <optional>

namespace britton {

/// One homomorphism H2 -> P as the images of b, c, s, t.
struct HomImages {
  int b, c, s, t;
  bool operator==(const HomImages& o) const {
    return b == o.b && c == o.c && s == o.s && t == o.t;
  }
  bool operator<(const HomImages& o) const {
    return std::tie(b, c, s, t) < std::tie(o.b, o.c, o.s, o.t);
  }
};

struct HomSearchResult {
  std::string target_name;
  int target_order = 0;
  std::vector<HomImages> homs;  // sorted

  struct Stats {
    int order_im_s;
    int im_c3;
    bool c3_is_identity;
  };
  std::vector<Stats> stats;  // parallel to homs
};

/// All homomorphisms from the b,c,s,t presentation into the target, by
/// pruned backtracking (each relator constrains the next image choice).
/// Every emitted tuple is re-verified against all relators by an
/// independent word evaluator.
HomSearchResult enumerate_homs(const FiniteGroupTable& target);

/// No-pruning reference scan over all |P|^4 tuples.
HomSearchResult enumerate_homs_brute(const FiniteGroupTable& target);

/// The finite-quotient collapse chain, asserted for every found hom:
/// ord(S) = ord(S^3); gcd(ord(S), 3) = 1; B^-1 S B = S C^3;
/// (S C^3)^m = 1 and S, C commute, so (C^3)^m = 1; (C^3)^3 = 1;
/// hence C^3 = 1. Any failing step names the hom and the step.
Certificate check_remark_argument(const FiniteGroupTable& target,
                                  const HomSearchResult& result);

/// Structured quotient checks: the quotient map is well-defined, kills its
/// designated normal generators, and the target refutes the relevant
/// generation bound (not 2-generated / not cyclic).
Certificate check_quotient_z2cube(const Tower& t);
Certificate check_quotient_zq(const Tower& t, int q);
Certificate check_quotient_z3_free_z(const Tower& t);

/// Built-in scan targets: trivial, z2, z3, z9, z18, d9, s3, s4, z2cube,
/// z3xz9.
const std::vector<FiniteGroupTable>& builtin_targets();
std::optional<FiniteGroupTable> builtin_target(std::string_view name);

/// Loads a JSON target file: {"name": ..., "table": [[...]]} or
/// {"name": ..., "permutations": {"g": [one-line images], ...}}.
FiniteGroupTable load_target_file(const std::string& path);

}  // namespace britton
