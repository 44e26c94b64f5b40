#include "britton/rng.hpp"

namespace britton {

Word random_reduced_word(Rng& rng, const std::string& letters, int len) {
  const int n = static_cast<int>(letters.size());
  std::vector<Word::Run> runs;
  char prev_sym = 0;
  int prev_sign = 0;
  for (int i = 0; i < len; ++i) {
    // 2n signed letters; exclude the inverse of the previous letter.
    char sym;
    int sign;
    do {
      const int pick = rng.range(0, 2 * n - 1);
      sym = letters[pick % n];
      sign = pick < n ? 1 : -1;
    } while (sym == prev_sym && sign == -prev_sign);
    runs.push_back({sym, sign});
    prev_sym = sym;
    prev_sign = sign;
  }
  return Word(std::move(runs));
}

Word random_reduced_word_up_to(Rng& rng, const std::string& letters,
                               int max_len) {
  return random_reduced_word(rng, letters, rng.range(0, max_len));
}

}  // namespace britton
