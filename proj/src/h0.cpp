#include "britton/h0.hpp"

namespace britton {

namespace {

int mod9(const Int& k) {
  Int r = k % 9;
  if (r < 0) r += 9;
  return static_cast<int>(r);
}

}  // namespace

H0Elem h0_mul(const H0Elem& x, const H0Elem& y) {
  // (b^f c^r)(b^g c^q) = b^(f+g) c^(q + (-1)^g r)
  const int rot = y.flip ? (y.rot - x.rot) : (y.rot + x.rot);
  return H0Elem{x.flip ^ y.flip, ((rot % 9) + 9) % 9};
}

H0Elem h0_inv(const H0Elem& x) {
  if (x.flip) return x;  // b c^r is an involution
  return H0Elem{0, (9 - x.rot) % 9};
}

H0Elem h0_b_pow(const Int& k) { return H0Elem{static_cast<int>(abs(k) % 2), 0}; }

H0Elem h0_c_pow(const Int& k) { return H0Elem{0, mod9(k)}; }

H0Elem h0_eval(const Word& w) {
  H0Elem acc;
  for (const auto& r : w.runs()) {
    switch (r.sym) {
      case 'b':
        acc = h0_mul(acc, h0_b_pow(r.exp));
        break;
      case 'c':
        acc = h0_mul(acc, h0_c_pow(r.exp));
        break;
      default:
        throw DomainError(std::string("letter '") + r.sym +
                          "' is outside the {b,c} alphabet");
    }
  }
  return acc;
}

H0Elem h0_phi(const H0Elem& h, const Int& k) {
  // phi(b^f c^r) = b^f c^(r - 3f); phi^3 = id, so reduce k mod 3.
  Int k3 = k % 3;
  if (k3 < 0) k3 += 3;
  const int shift = 3 * static_cast<int>(k3) * h.flip;
  return H0Elem{h.flip, ((h.rot - shift) % 9 + 9) % 9};
}

Word h0_to_word(const H0Elem& h) {
  return Word::power('b', h.flip) * Word::power('c', h.rot);
}

const std::vector<H0Elem>& h0_all_elements() {
  static const std::vector<H0Elem> all = [] {
    std::vector<H0Elem> v;
    for (int f = 0; f < 2; ++f)
      for (int r = 0; r < 9; ++r) v.push_back(H0Elem{f, r});
    return v;
  }();
  return all;
}

}  // namespace britton
