#pragma once

#include "britton/tower.hpp"

#include <optional>

namespace britton {

struct SamplerConfig {
  std::uint64_t seed = 20260810;
  int samples = 2000;
  int max_word_length = 12;
  int max_n = 3;  // conjugation exponent bound
};

/// Sampling falsification run for the claim that the elementary closure
/// of the center g is exactly <g>: random f outside <g> must never satisfy
/// f g^n f^-1 = g^(+-n) for 1 <= n <= max_n. Supported centers: ac in
/// H*<a>, u and v in K.
struct ElementaryReport {
  Level level = Level::Ha;
  std::string center;
  SamplerConfig cfg;

  int sampled = 0;
  int skipped_in_center = 0;
  int conjugation_checks = 0;
  std::vector<std::string> violations;  // offending words; expected empty
  bool positive_controls_pass = false;
  bool cross_check_pass = true;
  std::string note;

  bool pass() const {
    return violations.empty() && positive_controls_pass && cross_check_pass;
  }
};

ElementaryReport elementary_search(const Tower& t, Level level,
                                   const Word& center,
                                   const SamplerConfig& cfg);

/// The two syllable-shortening rewrites on H*<a> words:
///   a h f1     ->  c^-1 h f1   (first syllable exactly a, second in H)
///   c^-1 a' f2 ->  a a' f2     (first syllable exactly c^-1, second in <a>)
/// Returns the rewritten word when a rewrite applies; nullopt otherwise.
/// Both moves strictly shorten the syllable length.
std::optional<Word> shorten_move(const Tower& t, const Word& f);

}  // namespace britton
