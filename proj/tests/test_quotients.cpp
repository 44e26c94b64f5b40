#include "britton/quotients.hpp"

#include "doctest.h"

#include <cstdio>
#include <fstream>

using namespace britton;

namespace {
const Tower& tower() {
  static const Tower t;
  return t;
}
}  // namespace

TEST_CASE("built-in targets validate and have the right orders") {
  const std::vector<std::pair<std::string, int>> expected = {
      {"trivial", 1}, {"z2", 2},  {"z3", 3},     {"z9", 9},    {"z18", 18},
      {"d9", 18},     {"s3", 6},  {"s4", 24},    {"z2cube", 8},
      {"z3xz9", 27}};
  for (const auto& [name, order] : expected) {
    const auto p = builtin_target(name);
    REQUIRE(p.has_value());
    CHECK(p->order == order);
  }
  CHECK_FALSE(builtin_target("nope").has_value());
}

TEST_CASE("hom counts match the hand-derived values") {
  // every count is cross-checked below against the unpruned scan
  const std::vector<std::pair<std::string, std::size_t>> expected = {
      {"trivial", 1}, {"z2", 8},   {"z3", 3},     {"z9", 9},   {"z18", 72},
      {"d9", 540},    {"s3", 72},  {"s4", 1104},  {"z2cube", 512},
      {"z3xz9", 27}};
  for (const auto& [name, count] : expected) {
    const auto p = builtin_target(name);
    const HomSearchResult pruned = enumerate_homs(*p);
    CHECK(pruned.homs.size() == count);
    if (p->order <= 24) {
      const HomSearchResult brute = enumerate_homs_brute(*p);
      CHECK(brute.homs == pruned.homs);
    }
  }
}

TEST_CASE("every hom kills c^3") {
  for (const auto& p : builtin_targets()) {
    const HomSearchResult r = enumerate_homs(p);
    for (const auto& s : r.stats) {
      CHECK(s.c3_is_identity);
      CHECK(s.order_im_s % 3 != 0);
    }
    CHECK(check_remark_argument(p, r).verdict);
  }
}

TEST_CASE("d9 admits no hom restricting to the identity on H0") {
  const auto d9 = builtin_target("d9");
  const HomSearchResult r = enumerate_homs(*d9);
  // d9 encodes (flip, rot) as flip*9 + rot: b = 9, c = 1
  for (const auto& im : r.homs) CHECK_FALSE((im.b == 9 && im.c == 1));
}

TEST_CASE("named quotient certificates") {
  const Tower& t = tower();
  CHECK(check_quotient_z2cube(t).verdict);
  CHECK(check_quotient_zq(t, 2).verdict);
  CHECK(check_quotient_zq(t, 4).verdict);
  CHECK(check_quotient_z3_free_z(t).verdict);
  CHECK_THROWS_AS(check_quotient_zq(t, 3), DomainError);
}

TEST_CASE("the naive Z3*Z map is obstructed by the dihedral relator") {
  // the obstruction check must itself be listed and pass
  const Certificate cert = check_quotient_z3_free_z(tower());
  REQUIRE_FALSE(cert.evidence.empty());
  CHECK(cert.evidence.front().name == "naive map H2 -> Z3*Z is obstructed");
  CHECK(cert.evidence.front().pass);
}

TEST_CASE("target files load from JSON") {
  const std::string table_path = "/tmp/britton_test_target_table.json";
  {
    std::ofstream out(table_path);
    out << R"({"name": "z4", "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]})";
  }
  const FiniteGroupTable z4 = load_target_file(table_path);
  CHECK(z4.order == 4);
  CHECK(z4.name == "z4");
  const HomSearchResult r = enumerate_homs(z4);
  CHECK(r.homs == enumerate_homs_brute(z4).homs);
  std::remove(table_path.c_str());

  const std::string perm_path = "/tmp/britton_test_target_perm.json";
  {
    std::ofstream out(perm_path);
    out << R"({"name": "z3perm", "permutations": {"r": [1,2,0]}})";
  }
  const FiniteGroupTable z3p = load_target_file(perm_path);
  CHECK(z3p.order == 3);
  std::remove(perm_path.c_str());

  CHECK_THROWS_AS(load_target_file("/tmp/does_not_exist_477.json"),
                  DomainError);
}

TEST_CASE("invalid tables are rejected") {
  CHECK_THROWS_AS(FiniteGroupTable::from_mul_table(
                      "bad", {{0, 1}, {1, 1}}),  // not a Latin square
                  DomainError);
  CHECK_THROWS_AS(FiniteGroupTable::from_permutations("bad", {{0, 0, 1}}),
                  DomainError);
}
