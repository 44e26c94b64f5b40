#include "britton/morphisms.hpp"

namespace britton {

void Certificate::add(std::string name, std::string ref, bool pass,
                      std::string detail) {
  verdict = verdict && pass;
  evidence.push_back(
      {std::move(name), std::move(ref), pass, std::move(detail)});
}

namespace {

Word substitute(const std::map<char, Word>& images, const Word& w) {
  Word out;
  for (const auto& run : w.runs()) {
    auto it = images.find(run.sym);
    if (it == images.end())
      throw DomainError(std::string("no image for generator '") + run.sym +
                        "'");
    out = out * it->second.pow(run.exp);
  }
  return out;
}

void require_images_cover(const Tower& t, const Hom& h) {
  const Presentation& dom = t.presentation(h.domain);
  const Presentation& cod = t.presentation(h.codomain);
  for (char g : dom.generators)
    if (h.images.find(g) == h.images.end())
      throw DomainError(std::string("no image for generator '") + g + "'");
  for (const auto& [g, w] : h.images)
    for (const auto& run : w.runs())
      if (cod.generators.find(run.sym) == std::string::npos)
        throw DomainError(std::string("image of '") + g + "' uses letter '" +
                          run.sym + "' outside the codomain alphabet");
}

}  // namespace

Certificate check_well_defined(const Tower& t, Hom& h) {
  require_images_cover(t, h);
  Certificate cert;
  cert.kind = "well-defined";
  const Presentation& dom = t.presentation(h.domain);
  const Solver& cod = t.solver(h.codomain);
  for (const Word& r : dom.relators) {
    const Word image = substitute(h.images, r);
    const bool ok = cod.is_trivial(image);
    cert.add("relator " + r.str(), "image must be trivial: " + image.str(),
             ok);
  }
  h.verified = cert.verdict;
  return cert;
}

Word apply_hom(const Hom& h, const Word& w) {
  if (!h.verified)
    throw DomainError("refusing to apply an unverified generator map");
  return substitute(h.images, w);
}

Hom compose(const Hom& outer, const Hom& inner) {
  if (!outer.verified || !inner.verified)
    throw DomainError("compose requires verified maps");
  if (inner.codomain != outer.domain)
    throw DomainError("compose: level mismatch");
  Hom r;
  r.domain = inner.domain;
  r.codomain = outer.codomain;
  for (const auto& [g, w] : inner.images) r.images[g] = apply_hom(outer, w);
  // relators already die through inner, and outer maps equal words to
  // equal words, so the composite is well-defined
  r.verified = true;
  return r;
}

Hom identity_hom(const Tower& t, Level level) {
  Hom h{level, level, {}, true};
  for (char g : t.presentation(level).generators)
    h.images[g] = Word::power(g, 1);
  return h;
}

bool is_inverse_pair(const Tower& t, const Hom& h1, const Hom& h2) {
  if (!h1.verified || !h2.verified)
    throw DomainError("is_inverse_pair requires verified maps");
  if (h1.domain != h1.codomain || h2.domain != h2.codomain ||
      h1.domain != h2.domain)
    throw DomainError("is_inverse_pair requires endomorphisms of one level");
  const Level level = h1.domain;
  const Hom a = compose(h1, h2);
  const Hom b = compose(h2, h1);
  for (char g : t.presentation(level).generators) {
    const Word gen = Word::power(g, 1);
    if (!t.wp_equal(level, a.images.at(g), gen)) return false;
    if (!t.wp_equal(level, b.images.at(g), gen)) return false;
  }
  return true;
}

Certificate certify_non_hopfian(const Tower& t, const Hom& h,
                                const Word& kernel_witness,
                                const std::map<char, Word>& surj_witnesses) {
  if (!h.verified) throw DomainError("certificate needs a verified map");
  if (h.domain != Level::G || h.codomain != Level::G)
    throw DomainError("certificate is about endomorphisms of G");

  Certificate cert;
  cert.kind = "non-hopfian";

  const Word image = apply_hom(h, kernel_witness);
  cert.add("kernel witness maps to 1",
           "image " + image.str() + " must be trivial in G",
           t.wp_is_trivial(Level::G, image),
           kernel_witness.str() + " -> " + image.str());
  cert.add("kernel witness is nontrivial",
           kernel_witness.str() + " != 1 in G",
           !t.wp_is_trivial(Level::G, kernel_witness));

  for (char g : t.presentation(Level::G).generators) {
    auto it = surj_witnesses.find(g);
    if (it == surj_witnesses.end())
      throw DomainError(std::string("missing surjectivity witness for '") +
                        g + "'");
    const Word mapped = apply_hom(h, it->second);
    cert.add(std::string("surjectivity witness for ") + g,
             "psi(" + it->second.str() + ") = " + g,
             t.wp_equal(Level::G, mapped, Word::power(g, 1)));
  }
  return cert;
}

Hom psi_endomorphism() {
  Hom h;
  h.domain = Level::G;
  h.codomain = Level::G;
  h.images['b'] = Word::parse("b");
  h.images['c'] = Word::parse("c^3");
  h.images['s'] = Word::parse("s^3");
  h.images['t'] = Word::parse("t");
  h.images['e'] = Word::parse("e");
  h.images['f'] = Word::parse("f");
  h.images['a'] = Word::parse("s");
  h.images['u'] = Word();
  h.images['v'] = Word();
  h.images['x'] = Word::parse("x");
  h.images['y'] = Word::parse("y");
  return h;
}

Word psi_kernel_witness() { return Word::parse("c^3"); }

std::map<char, Word> psi_surjectivity_witnesses() {
  std::map<char, Word> w;
  for (char g : {'b', 't', 'e', 'f', 'x', 'y'}) w[g] = Word::power(g, 1);
  w['s'] = Word::parse("a");
  // u = x (c^3 e c^3 e^-1) x^-1 and psi triples the c-exponents
  w['u'] = Word::parse("x c e c e^-1 x^-1");
  w['v'] = Word::parse("y c f c f^-1 y^-1");
  // a = v (t s t^-1) v^-1 and psi(t a t^-1) = t s t^-1
  w['a'] = w['v'] * Word::parse("t a t^-1") * w['v'].inverse();
  // c = a^-1 b^-1 (u a u^-1) b, pulled back through the witnesses above
  w['c'] = w['a'].inverse() * Word::parse("b^-1") * w['u'] * w['a'] *
           w['u'].inverse() * Word::parse("b");
  return w;
}

namespace {

Hom h2_endo(Word b, Word c, Word s, Word t) {
  Hom h;
  h.domain = Level::H2;
  h.codomain = Level::H2;
  h.images['b'] = std::move(b);
  h.images['c'] = std::move(c);
  h.images['s'] = std::move(s);
  h.images['t'] = std::move(t);
  return h;
}

}  // namespace

std::pair<Hom, Hom> pair_b_shift(const Int& m) {
  return {h2_endo(Word::parse("b") * Word::power('c', -m), Word::parse("c"),
                  Word::parse("s"), Word::parse("t")),
          h2_endo(Word::parse("b") * Word::power('c', m), Word::parse("c"),
                  Word::parse("s"), Word::parse("t"))};
}

std::pair<Hom, Hom> pair_c_power(int k) {
  if (((k % 3) + 3) % 3 == 0)
    throw DomainError("c -> c^k needs k coprime to 3");
  int kp = -1;
  for (int i = 1; i < 9; ++i)
    if (((i * k) % 9 + 9) % 9 == 1) kp = i;
  if (kp < 0) throw DomainError("no inverse of k mod 9");
  // c^-3k' = c^-3 forces s -> s; c^-3k' = c^3 forces s -> s^-1
  const Word s_image =
      ((k % 3) + 3) % 3 == 1 ? Word::parse("s") : Word::parse("s^-1");
  return {h2_endo(Word::parse("b"), Word::power('c', kp), s_image,
                  Word::parse("t")),
          h2_endo(Word::parse("b"), Word::power('c', k), s_image,
                  Word::parse("t"))};
}

std::pair<Hom, Hom> pair_t_shift(const Word& w) {
  for (const auto& run : w.runs())
    if (std::string("bcs").find(run.sym) == std::string::npos)
      throw DomainError("t-shift word must lie in H1");
  return {h2_endo(Word::parse("b"), Word::parse("c"), Word::parse("s"),
                  Word::parse("t") * w.inverse()),
          h2_endo(Word::parse("b"), Word::parse("c"), Word::parse("s"),
                  Word::parse("t") * w)};
}

Word apply_map(const GenMap& m, const Word& w) { return substitute(m.images, w); }

Certificate check_map_well_defined(const Presentation& domain,
                                   const Solver& codomain, const GenMap& m,
                                   const std::string& map_name) {
  Certificate cert;
  cert.kind = "well-defined";
  for (char g : domain.generators)
    if (m.images.find(g) == m.images.end())
      throw DomainError(std::string("no image for generator '") + g + "'");
  for (const Word& r : domain.relators) {
    const Word image = apply_map(m, r);
    cert.add(map_name + ": relator " + r.str(),
             "image must be trivial: " + image.str(),
             codomain.is_trivial(image));
  }
  return cert;
}

}  // namespace britton
