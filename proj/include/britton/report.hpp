#pragma once

#include "britton/morphisms.hpp"

#include <json.hpp>

namespace britton {

using Json = nlohmann::ordered_json;

/// Deterministic JSON report: given identical flags and seed, the output
/// is byte-identical except for wall_time.
struct Report {
  std::string command;
  Json config = Json::object();
  std::vector<CheckItem> checks;
  std::uint64_t seed = 0;
  double wall_time = 0.0;

  void add(std::string name, std::string ref, bool pass,
           std::string detail = "");
  void absorb(const Certificate& cert);
  bool all_pass() const;
  int pass_count() const;
  int fail_count() const;
  Json to_json() const;
};

}  // namespace britton
