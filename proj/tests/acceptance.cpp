// Acceptance suite: every headline certificate at full scale, one
// pass/fail line per criterion. Exit status 0 iff everything passes.

#include "britton/cli.hpp"

#include <chrono>
#include <iostream>

using namespace britton;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

void line(int index, const std::string& label, bool pass,
          const std::string& detail) {
  if (!pass) ++failures;
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << index << ": "
            << label << " (" << detail << ")\n";
  std::cout.flush();
}

void explain_failures(const Certificate& cert) {
  for (const auto& item : cert.evidence)
    if (!item.pass)
      std::cout << "       failed: " << item.name << " [" << item.ref << "] "
                << item.detail << "\n";
}

}  // namespace

int main() {
  const Tower tower;
  const std::uint64_t seed = cli::default_seed();

  {  // 1. non-Hopfian certificate, exact, < 10 s
    const auto start = std::chrono::steady_clock::now();
    const Certificate cert = cli::nonhopfian_certificate(tower);
    const double elapsed = seconds_since(start);
    int relators = 0, witnesses = 0, kernel = 0;
    for (const auto& item : cert.evidence) {
      if (item.name.rfind("relator", 0) == 0) ++relators;
      if (item.name.rfind("surjectivity witness", 0) == 0) ++witnesses;
      if (item.name.rfind("kernel witness", 0) == 0) ++kernel;
    }
    const bool pass = cert.verdict && relators == 10 && witnesses == 11 &&
                      kernel == 2 && elapsed < 10.0;
    line(1, "non-Hopfian certificate", pass,
         std::to_string(relators) + " relators, " +
             std::to_string(witnesses) + " surjectivity witnesses, kernel "
             "witness c^3; " + std::to_string(elapsed) + " s");
    explain_failures(cert);
  }

  {  // 2. Britton/normal-form property suite, >= 10^4 words per level
    const Certificate cert =
        cli::property_suite(tower, {seed, 10000, 12});
    line(2, "normal-form property suite", cert.verdict,
         "10000 words per level, 4 laws, exponent growth k = 1..40");
    explain_failures(cert);
  }

  {  // 3. H0 embedding, 153 comparisons, exact
    const Certificate cert = cli::h0_embedding_check(tower);
    line(3, "H0 embeds in G", cert.verdict,
         cert.evidence.front().detail);
    explain_failures(cert);
  }

  {  // 4. finite-quotient scan, exact, < 60 s
    const auto start = std::chrono::steady_clock::now();
    const Certificate cert = cli::quotient_scan_suite(
        cli::resolve_targets({}, 30), /*brute_max_order=*/24);
    const double elapsed = seconds_since(start);
    const bool pass = cert.verdict && elapsed < 60.0;
    line(4, "finite-quotient scan kills c^3", pass,
         std::to_string(cli::resolve_targets({}, 30).size()) +
             " targets incl. z9, z18, d9; " + std::to_string(elapsed) +
             " s");
    explain_failures(cert);
  }

  {  // 5. automorphism-pair instances, conjugation grid, named quotients
    const Certificate pairs = cli::morphism_instance_suite(tower);
    const Certificate grid = cli::eq_grid_check(tower);
    const Certificate quotients = cli::named_quotient_suite(tower);
    const bool pass = pairs.verdict && grid.verdict && quotients.verdict;
    line(5, "inverse pairs, conjugation grid, named quotients", pass,
         std::to_string(pairs.evidence.size()) + " pair checks, " +
             std::to_string(grid.evidence.size()) + " grid cells, " +
             std::to_string(quotients.evidence.size()) +
             " quotient checks");
    explain_failures(pairs);
    explain_failures(grid);
    explain_failures(quotients);
  }

  {  // 6. elementary-subgroup sampling, defaults, < 3 min
    const auto start = std::chrono::steady_clock::now();
    SamplerConfig cfg;
    cfg.seed = seed;  // samples = 2000, max length 12, max n = 3
    const Certificate sampling = cli::elementary_suite(tower, cfg);
    const Certificate shorten = cli::shorten_move_suite(tower, seed, 500);
    const double elapsed = seconds_since(start);
    const bool pass = sampling.verdict && shorten.verdict && elapsed < 180.0;
    line(6, "elementary-subgroup sampling", pass,
         "2000 samples x 3 centers, shorten-move on 500 prefixed words; " +
             std::to_string(elapsed) + " s");
    explain_failures(sampling);
    explain_failures(shorten);
  }

  {  // 7. Bass-Serre ball, exact
    const Certificate cert = cli::bass_serre_suite(tower, 2);
    line(7, "Bass-Serre ball and stabilizers", cert.verdict,
         "degree 72, balls 1 and 2 are trees, stabilizer checks");
    explain_failures(cert);
  }

  if (failures == 0)
    std::cout << "acceptance: all 7 criteria pass\n";
  else
    std::cout << "acceptance: " << failures << " criteria FAILED\n";
  return failures == 0 ? 0 : 1;
}
