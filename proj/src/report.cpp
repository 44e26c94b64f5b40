#include "britton/report.hpp"

namespace britton {

void Report::add(std::string name, std::string ref, bool pass,
                 std::string detail) {
  checks.push_back({std::move(name), std::move(ref), pass, std::move(detail)});
}

void Report::absorb(const Certificate& cert) {
  for (const CheckItem& item : cert.evidence) checks.push_back(item);
}

bool Report::all_pass() const { return fail_count() == 0; }

int Report::pass_count() const {
  int n = 0;
  for (const auto& c : checks) n += c.pass ? 1 : 0;
  return n;
}

int Report::fail_count() const {
  return static_cast<int>(checks.size()) - pass_count();
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["config"] = config;
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json jc;
    jc["name"] = c.name;
    jc["ref"] = c.ref;
    jc["verdict"] = c.pass ? "pass" : "fail";
    jc["details"] = c.detail;
    arr.push_back(std::move(jc));
  }
  j["checks"] = std::move(arr);
  j["summary"] = {{"pass", pass_count()}, {"fail", fail_count()}};
  j["seed"] = seed;
  j["wall_time"] = wall_time;
  return j;
}

}  // namespace britton
