#pragma once

#include "britton/tower.hpp"

#include <map>
#include <utility>

namespace britton {

struct CheckItem {
  std::string name;
  std::string ref;  // the mathematical fact this check verifies
  bool pass = false;
  std::string detail;
};

/// Machine-checked evidence bundle; the verdict is the conjunction of the
/// individual checks.
struct Certificate {
  std::string kind;
  std::vector<CheckItem> evidence;
  bool verdict = true;

  void add(std::string name, std::string ref, bool pass,
           std::string detail = "");
};

/// A homomorphism candidate given by generator images. Verification maps
/// every defining relator of the domain presentation through the images
/// and tests triviality in the codomain; apply() refuses unchecked maps.
struct Hom {
  Level domain;
  Level codomain;
  std::map<char, Word> images;
  bool verified = false;
};

Certificate check_well_defined(const Tower& t, Hom& h);

/// Generator-wise substitution, freely reduced. Requires h.verified.
Word apply_hom(const Hom& h, const Word& w);

/// outer after inner; verified by construction when both inputs are.
Hom compose(const Hom& outer, const Hom& inner);

Hom identity_hom(const Tower& t, Level level);

/// True iff both composites fix every generator of the level.
bool is_inverse_pair(const Tower& t, const Hom& h1, const Hom& h2);

/// Non-Hopfian certificate: (a) the kernel witness maps to the identity
/// yet is itself nontrivial; (b) every generator g has a witness word W
/// with h(W) = g. Requires a verified endomorphism of G.
Certificate certify_non_hopfian(const Tower& t, const Hom& h,
                                const Word& kernel_witness,
                                const std::map<char, Word>& surj_witnesses);

/// The surjective, non-injective endomorphism of G:
/// b->b, c->c^3, s->s^3, t->t, e->e, f->f, a->s, u->1, v->1, x->x, y->y.
Hom psi_endomorphism();
Word psi_kernel_witness();  // c^3
/// Witness words W_g with psi(W_g) = g for all eleven generators; the
/// derived ones pull a, c, u, v back through the u/v/x/y relations.
std::map<char, Word> psi_surjectivity_witnesses();

/// Inverse automorphism pairs of H2.
/// b -> b c^-m / b -> b c^m (fixing c, s, t).
std::pair<Hom, Hom> pair_b_shift(const Int& m);
/// c -> c^k' / c -> c^k with k k' = 1 mod 9; s is fixed when k = 1 mod 3
/// and inverted when k = 2 mod 3 (k must be coprime to 3).
std::pair<Hom, Hom> pair_c_power(int k);
/// t -> t w^-1 / t -> t w for a word w over H1's letters (s^3 is central
/// in H1, which makes both maps well-defined).
std::pair<Hom, Hom> pair_t_shift(const Word& w);

/// A generator-image map into an arbitrary solver (used for quotient
/// targets whose codomain is not a tower level).
struct GenMap {
  std::map<char, Word> images;
};

Word apply_map(const GenMap& m, const Word& w);
Certificate check_map_well_defined(const Presentation& domain,
                                   const Solver& codomain, const GenMap& m,
                                   const std::string& map_name);

}  // namespace britton
