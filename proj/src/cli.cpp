#include "britton/cli.hpp"

#include "britton/rng.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace britton::cli {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BRITTON_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw DomainError("BRITTON_SEED must be an unsigned integer");
    }
  }
  return 20260810;
}

namespace {

std::optional<Level> parent_level(Level level) {
  switch (level) {
    case Level::H0: return Level::H1;
    case Level::H1: return Level::H2;
    case Level::H2: return Level::H;
    case Level::Fef: return Level::H;
    case Level::H: return Level::Ha;
    case Level::Ha: return Level::K;
    case Level::K: return Level::G;
    case Level::G: return std::nullopt;
  }
  return std::nullopt;
}

Level parse_level(const std::string& group) {
  const auto level = level_from_name(group);
  if (!level)
    throw DomainError("unknown group '" + group +
                      "' (expected h0,h1,h2,fef,h,ha,k,g)");
  return *level;
}

}  // namespace

Certificate property_suite(const Tower& t, const PropertySuiteOptions& opt) {
  Certificate cert;
  cert.kind = "property-suite";
  Rng rng(opt.seed);
  for (Level level : kAllLevels) {
    const Solver& solver = t.solver(level);
    const std::string& letters = t.presentation(level).generators;
    const auto parent = parent_level(level);
    int idem_fail = 0, inv_fail = 0, hom_fail = 0, embed_fail = 0;
    for (int i = 0; i < opt.words_per_level; ++i) {
      const Word w1 =
          random_reduced_word_up_to(rng, letters, opt.max_word_length);
      const Word w2 =
          random_reduced_word_up_to(rng, letters, opt.max_word_length);
      const Element e1 = solver.eval(w1);
      if (!solver.equal(solver.eval(solver.to_word(e1)), e1)) ++idem_fail;
      if (!solver.is_identity(solver.mul(e1, solver.inv(e1)))) ++inv_fail;
      if (!solver.equal(solver.eval(w1 * w2),
                        solver.mul(e1, solver.eval(w2))))
        ++hom_fail;
      if (parent &&
          solver.is_identity(e1) != t.wp_is_trivial(*parent, w1))
        ++embed_fail;
    }
    const std::string n = std::to_string(opt.words_per_level);
    cert.add(solver.name() + ": reduction idempotence",
             "re-evaluating a reduced form reproduces the element",
             idem_fail == 0, n + " words, " + std::to_string(idem_fail) +
                                 " failures");
    cert.add(solver.name() + ": inverse law", "w w^-1 = 1", inv_fail == 0,
             n + " words, " + std::to_string(inv_fail) + " failures");
    cert.add(solver.name() + ": eval homomorphism",
             "eval(w1 w2) = eval(w1) eval(w2)", hom_fail == 0,
             n + " pairs, " + std::to_string(hom_fail) + " failures");
    if (parent)
      cert.add(solver.name() + ": embeds in " + t.solver(*parent).name(),
               "triviality agrees across the level embedding",
               embed_fail == 0,
               n + " words, " + std::to_string(embed_fail) + " failures");
  }

  bool growth_ok = true;
  for (int k = 1; k <= 40 && growth_ok; ++k) {
    const Word w =
        Word::power('t', -k) * Word::parse("s") * Word::power('t', k);
    const Element e = t.h2().eval(w);
    growth_ok = HnnSolver::tail_length(e) == 0;
    if (growth_ok) {
      const auto& head = t.h2().head_of(e).as<H1Elem>();
      growth_ok = head.tail.is_identity() && head.shift == pow(Int(3), k);
    }
  }
  cert.add("H2: exact exponent growth", "t^-k s t^k = s^(3^k) for k = 1..40",
           growth_ok, "arbitrary-precision shifts");
  return cert;
}

Certificate h0_embedding_check(const Tower& t) {
  Certificate cert;
  cert.kind = "h0-embedding";
  const auto& all = h0_all_elements();
  int comparisons = 0, collisions = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      ++comparisons;
      if (t.wp_equal(Level::G, h0_to_word(all[i]), h0_to_word(all[j])))
        ++collisions;
    }
  cert.add("H0 embeds in G",
           "the 18 canonical H0 elements are pairwise distinct in G",
           collisions == 0 && comparisons == 153,
           std::to_string(comparisons) + " comparisons, " +
               std::to_string(collisions) + " collisions");
  return cert;
}

Certificate nonhopfian_certificate(const Tower& t,
                                   const std::map<char, Word>* witnesses) {
  Hom psi = psi_endomorphism();
  Certificate wd = check_well_defined(t, psi);
  Certificate cert;
  cert.kind = "non-hopfian";
  cert.evidence = wd.evidence;
  cert.verdict = wd.verdict;
  if (!psi.verified) return cert;

  const std::map<char, Word> w =
      witnesses ? *witnesses : psi_surjectivity_witnesses();
  const Certificate main =
      certify_non_hopfian(t, psi, psi_kernel_witness(), w);
  for (const auto& item : main.evidence) cert.evidence.push_back(item);
  cert.verdict = cert.verdict && main.verdict;
  return cert;
}

Certificate morphism_instance_suite(const Tower& t) {
  Certificate cert;
  cert.kind = "inverse-pair-instances";

  for (int m = -2; m <= 2; ++m) {
    auto [rho, rho_inv] = pair_b_shift(m);
    const bool wd = check_well_defined(t, rho).verdict &&
                    check_well_defined(t, rho_inv).verdict;
    const bool inv_pair = wd && is_inverse_pair(t, rho, rho_inv);
    cert.add("b-shift pair m=" + std::to_string(m),
             "b -> b c^-m and b -> b c^m are mutually inverse automorphisms",
             wd && inv_pair);
  }

  for (int k : {1, 2, 4, 5, 7, 8}) {
    auto [tau, tau_inv] = pair_c_power(k);
    const bool wd = check_well_defined(t, tau).verdict &&
                    check_well_defined(t, tau_inv).verdict;
    const bool inv_pair = wd && is_inverse_pair(t, tau, tau_inv);
    cert.add("c-power pair k=" + std::to_string(k),
             "c -> c^k' and c -> c^k (k k' = 1 mod 9) are mutually inverse",
             wd && inv_pair,
             "s image: " + tau.images.at('s').str());
  }

  for (const char* wh : {"c", "s", "b c^3", "s c"}) {
    auto [rho, rho_inv] = pair_t_shift(Word::parse(wh));
    const bool wd = check_well_defined(t, rho).verdict &&
                    check_well_defined(t, rho_inv).verdict;
    const bool inv_pair = wd && is_inverse_pair(t, rho, rho_inv);
    cert.add(std::string("t-shift pair w=") + wh,
             "t -> t w^-1 and t -> t w are mutually inverse (s^3 is central "
             "in H1)",
             wd && inv_pair);
  }

  Hom psi = psi_endomorphism();
  check_well_defined(t, psi);
  cert.add("psi is not self-inverse",
           "psi^2 maps c to c^9 = 1, so (psi, psi) is not an inverse pair",
           psi.verified && !is_inverse_pair(t, psi, psi));

  Hom id = identity_hom(t, Level::H2);
  cert.add("identity pair", "(id, id) is an inverse pair",
           is_inverse_pair(t, id, id));
  return cert;
}

Certificate eq_grid_check(const Tower& t) {
  Certificate cert;
  cert.kind = "conjugation-grid";
  const Word bc_neg3 = Word::parse("b c^-3");
  for (int p = 0; p <= 3; ++p) {
    const Int e = pow(Int(3), p);
    const Word upper = Word::power('s', -e) * Word::parse("b") *
                       Word::power('s', e);
    const Word lower = Word::power('s', e) * Word::parse("b") *
                       Word::power('s', -e);
    const bool upper_holds = t.wp_equal(Level::H2, upper, bc_neg3);
    const bool lower_holds = t.wp_equal(Level::H2, lower, bc_neg3);
    cert.add("grid p=" + std::to_string(p) + ", upper sign",
             "s^-3^p b s^3^p = b c^-3 expected " +
                 std::string(p == 0 ? "true" : "false"),
             upper_holds == (p == 0));
    cert.add("grid p=" + std::to_string(p) + ", lower sign",
             "s^3^p b s^-3^p = b c^-3 expected false", !lower_holds);
  }
  cert.add("auxiliary identity", "s b s^-1 = b c^3",
           t.wp_equal(Level::H2, Word::parse("s b s^-1"),
                      Word::parse("b c^3")));
  for (int i = 1; i <= 2; ++i) {
    const Int e = pow(Int(3), i);
    const bool both =
        t.wp_equal(Level::H2,
                   Word::power('s', -e) * Word::parse("b") * Word::power('s', e),
                   Word::parse("b")) &&
        t.wp_equal(Level::H2,
                   Word::power('s', e) * Word::parse("b") * Word::power('s', -e),
                   Word::parse("b"));
    cert.add("auxiliary identity i=" + std::to_string(i),
             "s^-+3^i b s^+-3^i = b", both);
  }
  return cert;
}

Certificate named_quotient_suite(const Tower& t) {
  Certificate cert;
  cert.kind = "named-quotients";
  for (const Certificate& sub :
       {check_quotient_z2cube(t), check_quotient_zq(t, 2),
        check_quotient_z3_free_z(t)}) {
    for (const auto& item : sub.evidence) cert.evidence.push_back(item);
    cert.verdict = cert.verdict && sub.verdict;
  }
  return cert;
}

Certificate quotient_scan_suite(const std::vector<FiniteGroupTable>& targets,
                                int brute_max_order) {
  Certificate cert;
  cert.kind = "quotient-scan";
  for (const FiniteGroupTable& p : targets) {
    const HomSearchResult r = enumerate_homs(p);

    bool all_c3_trivial = true;
    bool all_gcd_ok = true;
    for (const auto& s : r.stats) {
      all_c3_trivial = all_c3_trivial && s.c3_is_identity;
      all_gcd_ok = all_gcd_ok && (s.order_im_s % 3 != 0);
    }
    cert.add(p.name + ": image of c^3",
             "every hom kills c^3 (100% of " +
                 std::to_string(r.homs.size()) + " homs)",
             all_c3_trivial);
    cert.add(p.name + ": order of image of s",
             "gcd(ord(im s), 3) = 1 for every hom", all_gcd_ok);

    const Certificate chain = check_remark_argument(p, r);
    for (const auto& item : chain.evidence) cert.evidence.push_back(item);
    cert.verdict = cert.verdict && chain.verdict;

    if (p.order <= brute_max_order) {
      const HomSearchResult brute = enumerate_homs_brute(p);
      cert.add(p.name + ": pruned scan = brute-force scan",
               "identical sorted hom lists",
               brute.homs == r.homs,
               std::to_string(r.homs.size()) + " homs");
    }
    if (p.name == "trivial")
      cert.add("trivial target admits exactly one hom", "hom count = 1",
               r.homs.size() == 1);
    if (p.name == "d9") {
      // d9 carries the H0 law with b = (1,0) -> 9, c = (0,1) -> 1; no hom
      // may restrict to the identity on H0
      bool none_identity = true;
      for (const auto& im : r.homs)
        if (im.b == 9 && im.c == 1) none_identity = false;
      cert.add("d9: no hom restricts to the identity on H0",
               "the image of c never has order 9", none_identity,
               std::to_string(r.homs.size()) + " homs");
    }
  }
  return cert;
}

Certificate elementary_suite(const Tower& t, const SamplerConfig& cfg) {
  Certificate cert;
  cert.kind = "elementary-sampling";
  const struct {
    Level level;
    const char* center;
  } runs[] = {{Level::Ha, "a c"}, {Level::K, "u"}, {Level::K, "v"}};
  int offset = 0;
  for (const auto& run : runs) {
    SamplerConfig c = cfg;
    c.seed = cfg.seed + offset++;
    const ElementaryReport r =
        elementary_search(t, run.level, Word::parse(run.center), c);
    std::ostringstream detail;
    detail << r.sampled << " sampled, " << r.skipped_in_center
           << " in the center subgroup, " << r.conjugation_checks
           << " conjugation checks, " << r.violations.size() << " violations";
    for (const auto& v : r.violations) detail << "; VIOLATION " << v;
    if (!r.note.empty()) detail << "; " << r.note;
    cert.add(std::string("center ") + run.center + " in " +
                 t.solver(run.level).name(),
             "f g^n f^-1 != g^(+-n) for every sampled f outside <g>",
             r.pass(), detail.str());
  }
  return cert;
}

Certificate shorten_move_suite(const Tower& t, std::uint64_t seed,
                               int samples) {
  Certificate cert;
  cert.kind = "shorten-move";
  Rng rng(seed);
  const auto& ha = t.ha();
  int applied = 0, failures = 0;
  for (int i = 0; i < samples; ++i) {
    Word f;
    if (i % 2 == 0) {
      // forced prefix a h ...
      Word h;
      do {
        h = random_reduced_word_up_to(rng, "bcstef", 4);
      } while (h.empty());
      f = Word::parse("a") * h * random_reduced_word_up_to(rng, "bcstefa", 6);
    } else {
      // forced prefix c^-1 a^j ...
      const int j = rng.coin() ? rng.range(1, 3) : -rng.range(1, 3);
      f = Word::parse("c^-1") * Word::power('a', j) *
          random_reduced_word_up_to(rng, "bcstefa", 6);
    }
    const auto moved = shorten_move(t, f);
    if (!moved) continue;
    ++applied;
    const auto before = ha.syllable_length(ha.eval(f));
    const auto after = ha.syllable_length(ha.eval(*moved));
    if (after >= before) ++failures;
  }
  cert.add("shortening is strict",
           "each applicable rewrite lowers the syllable length",
           failures == 0 && applied > samples / 2,
           std::to_string(applied) + " of " + std::to_string(samples) +
               " prefixed samples applicable, " + std::to_string(failures) +
               " non-decreasing");

  // worked instances of the two rewrites
  const auto m1 = shorten_move(t, Word::parse("a b s"));
  cert.add("rewrite a h f1 -> c^-1 h f1", "a b s -> c^-1 b s",
           m1.has_value() && t.wp_equal(Level::Ha, *m1, Word::parse("c^-1 b s")));
  const auto m2 = shorten_move(t, Word::parse("c^-1 a^2 b"));
  cert.add("rewrite c^-1 a' f2 -> a a' f2", "c^-1 a^2 b -> a^3 b",
           m2.has_value() && t.wp_equal(Level::Ha, *m2, Word::parse("a^3 b")));
  cert.add("no forbidden prefix", "b admits no rewrite",
           !shorten_move(t, Word::parse("b")).has_value());
  return cert;
}

Certificate bass_serre_suite(const Tower& t, int radius) {
  Certificate cert;
  cert.kind = "bass-serre";
  const BassSerreTree tree(t);

  const auto b0 = tree.ball(0);
  cert.add("ball(0)", "a single vertex with no edges",
           b0.vertices.size() == 1 && b0.edges.empty());

  const auto b1 = tree.ball(1);
  cert.add("base degree", "the base vertex has exactly 72 = 18 + 54 edges",
           b1.degree(0) == 72,
           std::to_string(b1.edges.size()) + " edges at radius 1");
  for (int r = 1; r <= radius; ++r) {
    const auto ball = tree.ball(r, std::max(radius, 2));
    cert.add("ball(" + std::to_string(r) + ") is a tree",
             "connected with |E| = |V| - 1", ball.is_tree(),
             std::to_string(ball.vertices.size()) + " vertices, " +
                 std::to_string(ball.edges.size()) + " edges");
  }

  // the edge <s> joins H1 and t H1
  bool base_edge_ok = false;
  for (const auto& e : b1.edges)
    if (e.label == tree.edge_label(Word())) {
      const auto& far = b1.vertices[e.far];
      base_edge_ok = e.near == 0 && far.label == tree.vertex_label(Word::parse("t"));
    }
  cert.add("edge <s> endpoints", "the edge <s> connects H1 and t H1",
           base_edge_ok);

  cert.add("s fixes the base vertex", "s lies in H1",
           tree.fixes_vertex(Word::parse("s"), Word()));
  cert.add("s fixes t H1", "t^-1 s t = s^3 lies in H1",
           tree.fixes_vertex(Word::parse("s"), Word::parse("t")));
  cert.add("s does not fix the edge t^-1 <s>",
           "t s t^-1 is not a power of s",
           !tree.fixes_edge(Word::parse("s"), Word::parse("t^-1")));
  cert.add("s^3 fixes the edge t^-1 <s>", "t s^3 t^-1 = s",
           tree.fixes_edge(Word::parse("s^3"), Word::parse("t^-1")));

  // h s h^-1 stabilizes the edge h <s> for each base-incident edge
  bool stab_ok = true;
  for (const H0Elem& h : h0_all_elements()) {
    const Word hw = h0_to_word(h);
    stab_ok = stab_ok &&
              tree.fixes_edge(hw * Word::parse("s") * hw.inverse(), hw);
  }
  cert.add("edge stabilizers at the base",
           "h s h^-1 fixes the edge h <s> for all 18 representatives",
           stab_ok);
  return cert;
}

Report cmd_wp(const Tower& t, const std::string& group,
              const std::string& word) {
  Report report;
  report.command = "wp";
  report.config = {{"group", group}, {"word", word}};
  const Level level = parse_level(group);
  const Word w = Word::parse(word);
  const bool trivial = t.wp_is_trivial(level, w);
  std::string detail = trivial ? "trivial" : "nontrivial";
  if (level == Level::H0 || level == Level::H1)
    detail += "; canonical form: " +
              t.solver(level).to_word(t.solver(level).eval(w)).str();
  report.add("word problem", "decide whether the word is the identity", true,
             detail);
  return report;
}

Report cmd_nf(const Tower& t, const std::string& group,
              const std::string& word) {
  Report report;
  report.command = "nf";
  report.config = {{"group", group}, {"word", word}};
  const Level level = parse_level(group);
  const Solver& solver = t.solver(level);
  report.add("normal form", "reduced representative word", true,
             solver.to_word(solver.eval(Word::parse(word))).str());
  return report;
}

namespace {

std::map<std::string, std::string> parse_key_value_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw DomainError("malformed line in " + path);
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

}  // namespace

Hom parse_hom_file(const std::string& path) {
  const auto kv = parse_key_value_file(path);
  Hom h;
  bool has_domain = false, has_codomain = false;
  for (const auto& [key, value] : kv) {
    if (key == "domain") {
      h.domain = parse_level(value);
      has_domain = true;
    } else if (key == "codomain") {
      h.codomain = parse_level(value);
      has_codomain = true;
    } else if (key.size() == 1 && is_generator_symbol(key[0])) {
      h.images[key[0]] = Word::parse(value);
    } else {
      throw DomainError("unknown key '" + key + "' in " + path);
    }
  }
  if (!has_domain || !has_codomain)
    throw DomainError("hom file needs domain and codomain lines");
  return h;
}

std::map<char, Word> parse_witness_file(const std::string& path) {
  const auto kv = parse_key_value_file(path);
  std::map<char, Word> w;
  for (const auto& [key, value] : kv) {
    if (key.size() != 1 || !is_generator_symbol(key[0]))
      throw DomainError("unknown key '" + key + "' in " + path);
    w[key[0]] = Word::parse(value);
  }
  return w;
}

Report cmd_hom_check(const Tower& t, const std::string& path) {
  Report report;
  report.command = "hom-check";
  report.config = {{"file", path}};
  Hom h = parse_hom_file(path);
  report.absorb(check_well_defined(t, h));
  return report;
}

Report cmd_certify_nonhopfian(const Tower& t,
                              const std::string& witness_file) {
  Report report;
  report.command = "certify-nonhopfian";
  report.config = {{"witnesses", witness_file.empty() ? "built-in"
                                                      : witness_file}};
  if (witness_file.empty()) {
    report.absorb(nonhopfian_certificate(t));
  } else {
    const auto witnesses = parse_witness_file(witness_file);
    report.absorb(nonhopfian_certificate(t, &witnesses));
  }
  return report;
}

std::vector<FiniteGroupTable> resolve_targets(
    const std::vector<std::string>& names, int max_order) {
  std::vector<FiniteGroupTable> out;
  if (names.empty()) {
    for (const auto& p : builtin_targets())
      if (p.order <= max_order) out.push_back(p);
    return out;
  }
  for (const auto& name : names) {
    if (auto p = builtin_target(name)) {
      out.push_back(std::move(*p));
      continue;
    }
    out.push_back(load_target_file(name));
    if (out.back().order > max_order)
      throw BudgetError("target " + out.back().name + " exceeds order cap " +
                        std::to_string(max_order));
  }
  return out;
}

Report cmd_scan_quotients(const Tower&,
                          const std::vector<std::string>& target_names,
                          int max_order) {
  Report report;
  report.command = "scan-quotients";
  Json names = Json::array();
  for (const auto& n : target_names) names.push_back(n);
  report.config = {{"targets", names}, {"max_order", max_order}};
  report.absorb(quotient_scan_suite(resolve_targets(target_names, max_order),
                                    /*brute_max_order=*/24));
  return report;
}

Report cmd_elementary_search(const Tower& t, const std::string& group,
                             const std::string& center,
                             const SamplerConfig& cfg) {
  Report report;
  report.command = "elementary-search";
  report.config = {{"group", group},
                   {"center", center},
                   {"samples", cfg.samples},
                   {"max_word_length", cfg.max_word_length},
                   {"max_n", cfg.max_n}};
  report.seed = cfg.seed;
  const Level level = parse_level(group);
  std::string center_word = center;
  if (center == "ac") center_word = "a c";
  const ElementaryReport r =
      elementary_search(t, level, Word::parse(center_word), cfg);
  std::ostringstream detail;
  detail << r.sampled << " sampled, " << r.skipped_in_center
         << " in the center subgroup, " << r.violations.size()
         << " violations";
  for (const auto& v : r.violations) detail << "; VIOLATION " << v;
  if (!r.note.empty()) detail << "; " << r.note;
  report.add("sampling falsification",
             "f g^n f^-1 != g^(+-n) for sampled f outside <g>", r.pass(),
             detail.str());
  return report;
}

Report cmd_bass_serre_ball(const Tower& t, int radius,
                           const std::string& dot_path) {
  Report report;
  report.command = "bass-serre-ball";
  report.config = {{"radius", radius}, {"out", dot_path}};
  const BassSerreTree tree(t);
  const auto ball = tree.ball(radius, std::max(radius, 2));
  report.add("ball construction",
             "BFS over coset representatives, deduplicated by canonical "
             "labels",
             true,
             std::to_string(ball.vertices.size()) + " vertices, " +
                 std::to_string(ball.edges.size()) + " edges");
  if (radius >= 1)
    report.add("tree check", "connected with |E| = |V| - 1", ball.is_tree());
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw DomainError("cannot write " + dot_path);
    out << tree.to_dot(ball);
    report.add("dot output", "graph written", true, dot_path);
  }
  return report;
}

Report cmd_run_all(const Tower& t, const RunAllOptions& opt) {
  Report report;
  report.command = "run-all";
  report.seed = opt.seed;
  Json targets = Json::array();
  for (const auto& n : opt.targets) targets.push_back(n);
  report.config = {{"wp_samples", opt.wp_samples},
                   {"wp_max_len", opt.wp_max_len},
                   {"targets", targets},
                   {"max_target_order", opt.max_target_order},
                   {"samples", opt.samples},
                   {"max_word_length", opt.max_word_length},
                   {"max_n", opt.max_n},
                   {"shorten_samples", opt.shorten_samples},
                   {"radius", opt.radius}};

  report.absorb(property_suite(
      t, {opt.seed, opt.wp_samples, opt.wp_max_len}));
  report.absorb(h0_embedding_check(t));
  report.absorb(nonhopfian_certificate(t));
  report.absorb(morphism_instance_suite(t));
  report.absorb(eq_grid_check(t));
  report.absorb(named_quotient_suite(t));
  report.absorb(quotient_scan_suite(
      resolve_targets(opt.targets, opt.max_target_order),
      opt.brute_max_order));
  SamplerConfig cfg;
  cfg.seed = opt.seed;
  cfg.samples = opt.samples;
  cfg.max_word_length = opt.max_word_length;
  cfg.max_n = opt.max_n;
  report.absorb(elementary_suite(t, cfg));
  report.absorb(shorten_move_suite(t, opt.seed, opt.shorten_samples));
  report.absorb(bass_serre_suite(t, opt.radius));
  return report;
}

}  // namespace britton::cli
