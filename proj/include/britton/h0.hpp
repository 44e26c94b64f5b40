#pragma once

#include "britton/words.hpp"

namespace britton {

/// An element of the order-18 group <b, c | b^2 = c^9 = 1, b^-1 c b = c^-1>
/// in the canonical form b^flip c^rot. Exactly 18 values.
struct H0Elem {
  int flip = 0;  // 0 or 1
  int rot = 0;   // 0..8

  bool operator==(const H0Elem& o) const {
    return flip == o.flip && rot == o.rot;
  }
  bool operator!=(const H0Elem& o) const { return !(*this == o); }
  bool is_identity() const { return flip == 0 && rot == 0; }
};

/// Group product in canonical form, via c^k b = b c^-k.
H0Elem h0_mul(const H0Elem& x, const H0Elem& y);

H0Elem h0_inv(const H0Elem& x);

/// b-power (exponent mod 2), c-power (exponent mod 9).
H0Elem h0_b_pow(const Int& k);
H0Elem h0_c_pow(const Int& k);

/// Folds h0_mul over a word in {b, c}. Rejects other letters.
H0Elem h0_eval(const Word& w);

/// The automorphism phi: b -> b c^-3, c -> c, applied k times (k mod 3,
/// negative k applies the inverse). phi(h) = s^-1 h s once s exists.
H0Elem h0_phi(const H0Elem& h, const Int& k);

Word h0_to_word(const H0Elem& h);

/// The 18 elements in a fixed order (flip-major, rotation-minor).
const std::vector<H0Elem>& h0_all_elements();

}  // namespace britton
