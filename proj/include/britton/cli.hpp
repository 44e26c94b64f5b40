#pragma once

#include "britton/bass_serre.hpp"
#include "britton/elementary.hpp"
#include "britton/quotients.hpp"
#include "britton/report.hpp"

namespace britton::cli {

/// Default seed; the BRITTON_SEED environment variable overrides it.
std::uint64_t default_seed();

struct PropertySuiteOptions {
  std::uint64_t seed = 20260810;
  int words_per_level = 10000;
  int max_word_length = 12;
};

/// Per-level law suite on random words: reduction idempotence, inverse
/// law, eval-homomorphism law, and triviality agreement with the parent
/// level, plus the exact exponent-growth grid t^-k s t^k = s^(3^k) for
/// k = 1..40.
Certificate property_suite(const Tower& t, const PropertySuiteOptions& opt);

/// The 18 canonical H0 elements stay pairwise distinct at level G.
Certificate h0_embedding_check(const Tower& t);

/// Well-definedness of psi plus the kernel and surjectivity witnesses.
/// `witnesses` overrides the built-in witness words when non-null.
Certificate nonhopfian_certificate(
    const Tower& t, const std::map<char, Word>* witnesses = nullptr);

/// Inverse-pair instances: b-shift pairs (m in -2..2), c-power pairs
/// (k in {1,2,4,5,7,8}), t-shift pairs (w in {c, s, b c^3, s c}), and the
/// negative control that psi is not self-inverse.
Certificate morphism_instance_suite(const Tower& t);

/// Truth-value grid for s^(-+3^p) b s^(+-3^p) = b c^-3 (true only at
/// p = 0 with the upper signs) and the auxiliary identities
/// s b s^-1 = b c^3 and s^(-+3^i) b s^(+-3^i) = b for i in {1,2}.
Certificate eq_grid_check(const Tower& t);

/// The three structured quotient checks: Z2^3, Z2 x| Z, Z3 * Z.
Certificate named_quotient_suite(const Tower& t);

/// Pruned hom scan over the given targets with the collapse-chain checks;
/// targets of order <= brute_max_order are re-scanned without pruning and
/// the hom sets must agree.
Certificate quotient_scan_suite(const std::vector<FiniteGroupTable>& targets,
                                int brute_max_order);

/// Sampling runs for the three centers ac, u, v.
Certificate elementary_suite(const Tower& t, const SamplerConfig& cfg);

/// Forced-prefix sampling for the shortening rewrites.
Certificate shorten_move_suite(const Tower& t, std::uint64_t seed,
                               int samples);

/// Ball assembly, tree checks, base degree, and stabilizer facts.
Certificate bass_serre_suite(const Tower& t, int radius);

Report cmd_wp(const Tower& t, const std::string& group,
              const std::string& word);
Report cmd_nf(const Tower& t, const std::string& group,
              const std::string& word);
Report cmd_hom_check(const Tower& t, const std::string& path);
Report cmd_certify_nonhopfian(const Tower& t,
                              const std::string& witness_file = "");
Report cmd_scan_quotients(const Tower& t,
                          const std::vector<std::string>& target_names,
                          int max_order);
Report cmd_elementary_search(const Tower& t, const std::string& group,
                             const std::string& center,
                             const SamplerConfig& cfg);
Report cmd_bass_serre_ball(const Tower& t, int radius,
                           const std::string& dot_path);

struct RunAllOptions {
  std::uint64_t seed = 20260810;
  int wp_samples = 10000;
  int wp_max_len = 12;
  std::vector<std::string> targets;  // empty = all built-ins
  int max_target_order = 30;
  int brute_max_order = 24;
  int samples = 2000;
  int max_word_length = 12;
  int max_n = 3;
  int shorten_samples = 500;
  int radius = 1;
};

/// Runs every sub-suite in order and emits one consolidated report.
Report cmd_run_all(const Tower& t, const RunAllOptions& opt);

/// Built-in names and/or JSON file paths; empty list means all built-ins.
std::vector<FiniteGroupTable> resolve_targets(
    const std::vector<std::string>& names, int max_order);

/// `key = value` lines: domain, codomain, and one line per generator.
Hom parse_hom_file(const std::string& path);
/// `gen = word` lines.
std::map<char, Word> parse_witness_file(const std::string& path);

}  // namespace britton::cli
