#pragma once

#include "britton/words.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace britton {

/// Deterministic random source. Draws go through modulo reduction rather
/// than std::uniform_int_distribution so that sequences are identical
/// across standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return (next() & 1) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Uniform-ish freely reduced word over `letters` of length exactly `len`
/// (first letter uniform over signed generators, each successive letter
/// uniform over the non-cancelling ones).
Word random_reduced_word(Rng& rng, const std::string& letters, int len);

/// Length drawn uniformly from 0..max_len.
Word random_reduced_word_up_to(Rng& rng, const std::string& letters,
                               int max_len);

}  // namespace britton
