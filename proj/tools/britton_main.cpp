#include "britton/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

using namespace britton;

int emit(Report report, std::chrono::steady_clock::time_point started) {
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  std::cout << report.to_json().dump(2) << '\n';
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "britton - exact word-problem solvers and certificates for a fixed "
      "tower of HNN extensions and free products"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "write the JSON report to a file");

  std::string group = "g", word, center = "u", file_path;
  int radius = 1;
  std::string dot_path;
  std::vector<std::string> targets;
  int max_order = 30;
  britton::SamplerConfig sampler;
  britton::cli::RunAllOptions run_opts;

  auto* wp = app.add_subcommand("wp", "decide triviality of a word");
  wp->add_option("--group", group, "h0,h1,h2,fef,h,ha,k,g")->required();
  wp->add_option("word", word, "word in the wire grammar")->required();

  auto* nf = app.add_subcommand("nf", "reduced representative of a word");
  nf->add_option("--group", group, "h0,h1,h2,fef,h,ha,k,g")->required();
  nf->add_option("word", word, "word in the wire grammar")->required();

  auto* hom = app.add_subcommand("hom-check",
                                 "verify a generator map from a file");
  hom->add_option("file", file_path, "key = value lines")->required();

  std::string witness_file;
  auto* cert = app.add_subcommand("certify-nonhopfian",
                                  "the surjective-with-kernel certificate");
  cert->add_option("--witnesses", witness_file,
                   "override the built-in surjectivity witnesses");

  auto* scan = app.add_subcommand("scan-quotients",
                                  "exhaustive hom scans into finite targets");
  scan->add_option("--targets", targets,
                   "comma-separated built-in names or JSON files")
      ->delimiter(',');
  scan->add_option("--max-order", max_order, "largest admitted target order");

  auto* elem = app.add_subcommand("elementary-search",
                                  "sampling falsification for E(g) = <g>");
  elem->add_option("--group", group, "ha or k")->required();
  elem->add_option("--center", center, "ac, u, or v")->required();
  elem->add_option("--samples", sampler.samples, "sample count");
  elem->add_option("--max-n", sampler.max_n, "conjugation exponent bound");
  elem->add_option("--max-len", sampler.max_word_length,
                   "maximum sampled word length");
  std::uint64_t seed_flag = 0;
  bool seed_set = false;
  elem->add_option("--seed", seed_flag, "sampler seed")
      ->each([&seed_set](const std::string&) { seed_set = true; });

  auto* ball = app.add_subcommand("bass-serre-ball",
                                  "finite ball of the H2 tree");
  ball->add_option("--radius", radius, "ball radius (max 2)");
  ball->add_option("--out-dot", dot_path, "write DOT to a file");

  auto* runall =
      app.add_subcommand("run-all", "every certificate and suite in order");
  runall->add_option("--seed", seed_flag, "global seed")
      ->each([&seed_set](const std::string&) { seed_set = true; });
  runall->add_option("--wp-samples", run_opts.wp_samples,
                     "random words per level");
  runall->add_option("--wp-max-len", run_opts.wp_max_len,
                     "maximum property-suite word length");
  runall->add_option("--targets", run_opts.targets,
                     "quotient-scan targets (default: all built-ins)")
      ->delimiter(',');
  runall->add_option("--max-order", run_opts.max_target_order,
                     "largest admitted target order");
  runall->add_option("--samples", run_opts.samples,
                     "elementary-search samples per center");
  runall->add_option("--max-n", run_opts.max_n,
                     "conjugation exponent bound");
  runall->add_option("--max-len", run_opts.max_word_length,
                     "maximum sampled word length");
  runall->add_option("--radius", run_opts.radius, "ball radius (max 2)");

  CLI11_PARSE(app, argc, argv);

  const auto started = std::chrono::steady_clock::now();
  try {
    const Tower tower;
    const std::uint64_t seed =
        seed_set ? seed_flag : britton::cli::default_seed();

    if (*wp) return emit(britton::cli::cmd_wp(tower, group, word), out_path,
                         started);
    if (*nf) return emit(britton::cli::cmd_nf(tower, group, word), out_path,
                         started);
    if (*hom)
      return emit(britton::cli::cmd_hom_check(tower, file_path), out_path,
                  started);
    if (*cert)
      return emit(britton::cli::cmd_certify_nonhopfian(tower, witness_file),
                  out_path, started);
    if (*scan)
      return emit(britton::cli::cmd_scan_quotients(tower, targets, max_order),
                  out_path, started);
    if (*elem) {
      sampler.seed = seed;
      return emit(
          britton::cli::cmd_elementary_search(tower, group, center, sampler),
          out_path, started);
    }
    if (*ball)
      return emit(britton::cli::cmd_bass_serre_ball(tower, radius, dot_path),
                  out_path, started);
    if (*runall) {
      run_opts.seed = seed;
      return emit(britton::cli::cmd_run_all(tower, run_opts), out_path,
                  started);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
