#ifndef AWG_VERIFY_HPP
#define AWG_VERIFY_HPP

// Verification suites. Each check yields one pass/fail line with a
// counterexample payload on failure. Output depends only on the config.

#include <random>

#include "awg/paths.hpp"

namespace awg {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
  nlohmann::json counterexample;  // null when passed
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  nlohmann::json config;
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
  void append(Report other) {
    for (auto& c : other.checks) checks.push_back(std::move(c));
  }
};

struct VerifyConfig {
  std::size_t n = 4;
  Label window = 2;
  std::uint64_t seed = 1;
  std::size_t pairs = 200;          // distance pairs per class
  std::size_t samples = 500;        // constructive-path members per class
  std::size_t conjugations = 10'000;
  std::size_t max_nodes = 5'000'000;
  std::optional<Family> family;     // restrict to one family
};

namespace detail {

inline nlohmann::json pair_payload(const AffineElement& x, const AffineElement& y) {
  return {{"x", format_element(x)}, {"y", format_element(y)}};
}

/// Odometer over [-g, g]^k.
inline bool next_labels(std::vector<Label>& v, Label g) {
  std::size_t i = 0;
  while (i < v.size() && v[i] == g) v[i++] = -g;
  if (i == v.size()) return false;
  ++v[i];
  return true;
}

/// Builds an element on points perm[0..] of rank perm.size()+1; the last
/// point carries (-p)^0 in every element so both sides are involutions.
struct LemmaFamily {
  std::string name;
  std::size_t points;
  std::size_t labels;
  bool is_iff;
  std::function<std::pair<std::vector<LabelledCycle>, std::vector<LabelledCycle>>(
      const std::vector<std::size_t>&, const std::vector<Label>&)>
      build;
  std::function<bool(const std::vector<Label>&)> expected;
};

inline std::vector<LemmaFamily> lemma_families() {
  using K = CycleKind;
  auto neg = [](std::size_t a, Label l) { return LabelledCycle{K::NegOneCycle, a, a, l}; };
  auto fix = [](std::size_t a) { return LabelledCycle{K::FixedPoint, a, a, 0}; };
  auto tr = [](bool pos, std::size_t a, std::size_t b, Label l) {
    return LabelledCycle{pos ? K::PosTransposition : K::NegTransposition, a, b, l};
  };
  using P = const std::vector<std::size_t>&;
  using V = const std::vector<Label>&;
  std::vector<LemmaFamily> f;
  f.push_back({"1-cycle vs fixed point", 1, 1, false,
               [=](P p, V v) { return std::pair{std::vector{neg(p[0], v[0])}, std::vector{fix(p[0])}}; },
               [](V) { return true; }});
  f.push_back({"1-cycle vs 1-cycle", 1, 2, true,
               [=](P p, V v) {
                 return std::pair{std::vector{neg(p[0], v[0])}, std::vector{neg(p[0], v[1])}};
               },
               [](V v) { return v[0] == v[1]; }});
  for (int s = 0; s < 3; ++s) {
    bool px = s != 1, py = s == 0;
    std::string nm = std::string("transposition ") + (px ? "+" : "-") + " vs transposition " +
                     (py ? "+" : "-");
    f.push_back({nm, 2, 2, s != 2,
                 [=](P p, V v) {
                   return std::pair{std::vector{tr(px, p[0], p[1], v[0])},
                                    std::vector{tr(py, p[0], p[1], v[1])}};
                 },
                 [=](V v) { return s == 2 || v[0] == v[1]; }});
  }
  for (bool pos : {true, false}) {
    std::string sg = pos ? "+" : "-";
    f.push_back({"transposition " + sg + " vs two fixed points", 2, 1, false,
                 [=](P p, V v) {
                   return std::pair{std::vector{tr(pos, p[0], p[1], v[0])},
                                    std::vector{fix(p[0]), fix(p[1])}};
                 },
                 [](V) { return true; }});
    f.push_back({"transposition " + sg + " vs fixed point and 1-cycle", 2, 2, false,
                 [=](P p, V v) {
                   return std::pair{std::vector{tr(pos, p[0], p[1], v[0])},
                                    std::vector{fix(p[0]), neg(p[1], v[1])}};
                 },
                 [](V) { return false; }});
    f.push_back({"transposition " + sg + " vs two 1-cycles", 2, 3, true,
                 [=](P p, V v) {
                   return std::pair{std::vector{tr(pos, p[0], p[1], v[0])},
                                    std::vector{neg(p[0], v[1]), neg(p[1], v[2])}};
                 },
                 [=](V v) { return pos ? v[1] - v[2] == 2 * v[0] : v[1] + v[2] == 2 * v[0]; }});
  }
  // Double transpositions g_i on (ab)(cd) against h_j on (ac)(bd).
  auto g = [=](int i, P p, Label l1, Label l2) {
    return std::vector{tr(i != 3, p[0], p[1], l1), tr(i == 1, p[2], p[3], l2)};
  };
  auto h = [=](int j, P p, Label m1, Label m2) {
    return std::vector{tr(j != 3, p[0], p[2], m1), tr(j == 1, p[1], p[3], m2)};
  };
  struct Clause {
    const char* tag;
    int gi, hj;
    bool iff;
    std::function<bool(Label, Label, Label, Label)> rule;
  };
  std::vector<Clause> clauses{
      {"i", 1, 1, true, [](Label l1, Label l2, Label m1, Label m2) { return m1 - l1 == m2 - l2; }},
      {"ii", 1, 2, false, [](Label, Label, Label, Label) { return false; }},
      {"iii", 1, 3, true, [](Label l1, Label l2, Label m1, Label m2) { return m1 - l1 == m2 + l2; }},
      {"iv", 2, 2, true, [](Label l1, Label l2, Label m1, Label m2) { return m1 - l1 == m2 - l2; }},
      {"v", 2, 3, false, [](Label, Label, Label, Label) { return false; }},
      {"vi", 3, 3, true, [](Label l1, Label l2, Label m1, Label m2) { return m1 - l1 == l2 - m2; }},
  };
  for (const auto& c : clauses) {
    f.push_back({std::string("double transposition (") + c.tag + ")", 4, 4, c.iff,
                 [=](P p, V v) { return std::pair{g(c.gi, p, v[0], v[1]), h(c.hj, p, v[2], v[3])}; },
                 [=](V v) { return c.rule(v[0], v[1], v[2], v[3]); }});
  }
  return f;
}

}  // namespace detail

/// Every lemma clause over all point orientations and labels in [-grid, grid].
inline Report verify_lemma_tables(Label grid = 3) {
  Report r{"lemma-tables", 0, {{"grid", grid}}, {}};
  for (const auto& fam : detail::lemma_families()) {
    CheckResult c{fam.name, true, {}, nullptr};
    std::vector<std::size_t> perm(fam.points);
    std::iota(perm.begin(), perm.end(), 0);
    const std::size_t n = fam.points + 1;
    std::size_t cases = 0, positives = 0;
    do {
      std::vector<Label> v(fam.labels, -grid);
      do {
        auto [cx, cy] = fam.build(perm, v);
        cx.push_back({CycleKind::NegOneCycle, n - 1, n - 1, 0});
        cy.push_back({CycleKind::NegOneCycle, n - 1, n - 1, 0});
        auto x = to_element({n, cx});
        auto y = to_element({n, cy});
        bool want = fam.expected(v);
        bool oracle = commutes_oracle(x, y);
        bool fast = commutes_fast(x, y);
        ++cases;
        positives += oracle;
        if ((want != oracle || fast != oracle) && c.passed) {
          c.passed = false;
          c.counterexample = detail::pair_payload(x, y);
          c.counterexample["lemma"] = want;
          c.counterexample["oracle"] = oracle;
          c.counterexample["fast"] = fast;
        }
      } while (detail::next_labels(v, grid));
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (fam.is_iff && (positives == 0 || positives == cases) && c.passed) {
      c.passed = false;
      c.detail = "grid does not exercise both directions; ";
    }
    c.detail += std::to_string(cases) + " pairs, " + std::to_string(positives) + " commuting";
    r.checks.push_back(std::move(c));
  }
  return r;
}

/// The structural involution criterion against x^2 = 1 for every element of
/// rank n with labels in [-L, L].
inline CheckResult verify_involution_criterion(std::size_t n, Label L) {
  CheckResult c{"involution criterion n=" + std::to_string(n), true, {}, nullptr};
  std::size_t count = 0, invols = 0;
  // Every signed permutation: enumerate images as permutations with signs.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::size_t signs = 0; signs < (std::size_t{1} << n); ++signs) {
      std::vector<std::pair<std::size_t, int>> img(n);
      for (std::size_t i = 0; i < n; ++i) img[i] = {perm[i], (signs >> i) & 1 ? -1 : 1};
      auto s = SignedPermutation::from_images(img);
      std::vector<Label> v(n, -L);
      do {
        AffineElement x(s, v);
        bool structural = is_structural_involution(x);
        bool algebraic = !x.is_identity() && multiply(x, x).is_identity();
        ++count;
        invols += algebraic;
        if (structural != algebraic && c.passed) {
          c.passed = false;
          c.counterexample = element_to_json(x);
        }
      } while (detail::next_labels(v, L));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  c.detail = std::to_string(count) + " elements, " + std::to_string(invols) + " involutions";
  return c;
}

/// commutes_fast against the oracle over all involution pairs in a window.
inline CheckResult verify_commuting_exhaustive(std::size_t n, Label L) {
  CheckResult c{"commutes_fast = oracle, n=" + std::to_string(n) + " L=" + std::to_string(L),
                true, {}, nullptr};
  auto all = involutions_in_window(n, L);
  std::size_t agree = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j) {
      bool fast = commutes_fast(all[i], all[j]);
      bool oracle = commutes_oracle(all[i], all[j]);
      if (fast != oracle || fast != commutes_fast(all[j], all[i])) {
        if (c.passed) c.counterexample = detail::pair_payload(all[i], all[j]);
        c.passed = false;
      } else {
        ++agree;
      }
    }
  c.detail = std::to_string(all.size()) + " involutions, " + std::to_string(agree) + " pairs agree";
  return c;
}

/// Structural neighbour generation against filtering the class window.
inline CheckResult verify_neighbors(const ClassDescriptor& d, Label L, std::size_t max_checks,
                                    std::mt19937_64& rng) {
  CheckResult c{"neighbors " + to_string(d) + " L=" + std::to_string(L), true, {}, nullptr};
  auto members = class_members_in_window(d, L);
  std::size_t checked = 0;
  for (std::size_t k = 0; k < std::min(max_checks, members.size()); ++k) {
    const auto& x = members[members.size() <= max_checks ? k : rng() % members.size()];
    std::vector<AffineElement> brute;
    for (const auto& y : members)
      if (y != x && commutes_oracle(x, y)) brute.push_back(y);
    auto fast = neighbors_in_class(x, d, L);
    std::unordered_set<AffineElement> seen(fast.begin(), fast.end());
    bool ok = seen.size() == fast.size() && fast.size() == brute.size() &&
              std::all_of(brute.begin(), brute.end(), [&](const auto& y) { return seen.count(y); });
    ++checked;
    if (!ok && c.passed) {
      c.passed = false;
      c.counterexample = {{"x", format_element(x)},
                          {"structural", fast.size()},
                          {"brute_force", brute.size()}};
    }
  }
  c.detail = std::to_string(checked) + " vertices of " + std::to_string(members.size());
  return c;
}

inline std::vector<Family> families_for(const VerifyConfig& cfg, bool include_a) {
  std::vector<Family> out;
  for (auto f : {Family::AffineA, Family::AffineB, Family::AffineBbar, Family::AffineC,
                 Family::AffineD}) {
    if (f == Family::AffineA && !include_a) continue;
    if (cfg.family && *cfg.family != f) continue;
    if (cfg.n < minimum_rank(f)) continue;
    out.push_back(f);
  }
  return out;
}

inline Report verify_lemmas(const VerifyConfig& cfg) {
  Report r = verify_lemma_tables(3);
  r.suite = "lemmas";
  r.seed = cfg.seed;
  r.config = {{"n", cfg.n}, {"window", cfg.window}};
  // Exhaustive sweeps grow as 2^n n! (2L+1)^n; beyond rank 4 they are capped.
  const std::size_t sweep = std::min<std::size_t>(cfg.n, 4);
  r.checks.push_back(verify_involution_criterion(sweep, cfg.window));
  r.checks.push_back(verify_commuting_exhaustive(sweep, std::min<Label>(cfg.window, 2)));
  std::mt19937_64 rng(cfg.seed);
  for (auto f : families_for(cfg, true))
    for (const auto& d : enumerate_descriptors(GroupFamily(f, cfg.n)))
      r.checks.push_back(verify_neighbors(d, std::min<Label>(cfg.window, 1), 25, rng));
  return r;
}

// ---------------------------------------------------------------------------
// Conjugacy.

inline std::size_t expected_split_count(Family f, const LabelledCycleType& t) {
  switch (split_kind(f, t)) {
    case SplitKind::None: return 1;
    case SplitKind::MinusAndFMod4: return 4;
    default: return 2;
  }
}

/// A uniformly chosen signed involution with uniform labels in [-L, L],
/// resampled until it lies in g.
inline AffineElement random_involution(const GroupFamily& g, Label L, std::mt19937_64& rng) {
  const auto n = g.rank();
  std::uniform_int_distribution<Label> lab(-L, L);
  while (true) {
    std::vector<std::size_t> pts(n);
    std::iota(pts.begin(), pts.end(), 0);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::size_t m = std::uniform_int_distribution<std::size_t>(0, n / 2)(rng);
    LabelledCycleForm form{n, {}};
    for (std::size_t i = 0; i < m; ++i) {
      bool pos = g.tag() == Family::AffineA || rng() % 2 == 0;
      form.cycles.push_back({pos ? CycleKind::PosTransposition : CycleKind::NegTransposition,
                             pts[2 * i], pts[2 * i + 1], lab(rng)});
    }
    for (std::size_t i = 2 * m; i < n; ++i) {
      bool neg = g.tag() != Family::AffineA && rng() % 2 == 0;
      form.cycles.push_back(
          {neg ? CycleKind::NegOneCycle : CycleKind::FixedPoint, pts[i], pts[i], neg ? lab(rng) : 0});
    }
    auto x = to_element(form);
    if (is_structural_involution(x) && member_of(x, g)) return x;
  }
}

inline AffineElement random_word(const GroupFamily& g, std::size_t length, std::mt19937_64& rng) {
  auto gens = generators(g);
  auto w = AffineElement::identity(g.rank());
  for (std::size_t i = 0; i < length; ++i) w = multiply(w, gens[rng() % gens.size()]);
  return w;
}

inline Report verify_conjugacy_family(const GroupFamily& g, Label L, std::size_t pairs,
                                      std::size_t conjugations, std::mt19937_64& rng) {
  const std::string tag = std::string(family_letter(g.tag())) + " n=" + std::to_string(g.rank());
  Report r;
  auto all = involutions_in_window(g.rank(), L, g.tag() == Family::AffineA);
  std::vector<AffineElement> members;
  for (auto& x : all)
    if (member_of(x, g)) members.push_back(std::move(x));
  auto gens = generators(g);
  auto descriptors = enumerate_descriptors(g);
  std::map<ClassDescriptor, AffineElement> reps;
  CheckResult reps_ok{"representatives " + tag, true, {}, nullptr};
  for (const auto& d : descriptors) {
    try {
      reps.emplace(d, canonical_representative(d));
    } catch (const std::exception& e) {
      reps_ok.passed = false;
      reps_ok.counterexample = {{"descriptor", to_string(d)}, {"error", e.what()}};
    }
  }
  reps_ok.detail = std::to_string(reps.size()) + " classes";
  r.checks.push_back(reps_ok);

  CheckResult inv{"generator invariance " + tag, true, {}, nullptr};
  CheckResult comp{"conjugate to representative " + tag, true, {}, nullptr};
  CheckResult sep{"no conjugator across classes of one type " + tag, true, {}, nullptr};
  std::map<LabelledCycleType, std::set<ClassDescriptor>> found;
  std::map<ClassDescriptor, std::vector<std::size_t>> by_class;
  for (std::size_t idx = 0; idx < members.size(); ++idx) {
    const auto& x = members[idx];
    auto d = class_of(x, g);
    found[d.type].insert(d);
    by_class[d].push_back(idx);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto xg = conjugate(x, gens[k]);
      if (class_of(xg, g) != d && inv.passed) {
        inv.passed = false;
        inv.counterexample = {{"x", format_element(x)}, {"generator", k + 1},
                              {"conjugate", format_element(xg)}};
      }
    }
    for (const auto& [e, rep] : reps) {
      if (e.type != d.type) continue;
      auto h = find_conjugator(x, rep, g);
      if (e == d) {
        if ((!h || conjugate(x, *h) != rep || !member_of(*h, g)) && comp.passed) {
          comp.passed = false;
          comp.counterexample = {{"x", format_element(x)}, {"descriptor", to_string(d)}};
        }
      } else if (h && sep.passed) {
        sep.passed = false;
        sep.counterexample = {{"x", format_element(x)}, {"other", to_string(e)}};
      }
    }
  }
  inv.detail = std::to_string(members.size()) + " involutions x " + std::to_string(gens.size()) +
               " generators";
  comp.detail = std::to_string(members.size()) + " involutions";
  r.checks.push_back(inv);
  r.checks.push_back(comp);
  r.checks.push_back(sep);

  CheckResult splits{"split counts " + tag, true, {}, nullptr};
  std::map<LabelledCycleType, std::size_t> theory;
  for (const auto& d : descriptors) ++theory[d.type];
  for (const auto& [t, ds] : found) {
    if (ds.size() != expected_split_count(g.tag(), t) || theory[t] != ds.size()) {
      splits.passed = false;
      splits.counterexample = {{"type", to_string(t)}, {"found", ds.size()}, {"theory", theory[t]}};
      break;
    }
  }
  if (found.size() != theory.size() && splits.passed) {
    splits.passed = false;
    splits.detail = "window misses some types; ";
  }
  splits.detail += std::to_string(theory.size()) + " types, " + std::to_string(descriptors.size()) + " classes";
  r.checks.push_back(splits);

  CheckResult pair_check{"random same-class pairs " + tag, true, {}, nullptr};
  std::vector<const std::vector<std::size_t>*> classes;
  for (const auto& [d, v] : by_class) classes.push_back(&v);
  for (std::size_t i = 0; i < pairs && !classes.empty(); ++i) {
    const auto& v = *classes[rng() % classes.size()];
    const auto& x = members[v[rng() % v.size()]];
    const auto& y = members[v[rng() % v.size()]];
    auto h = find_conjugator(x, y, g);
    if ((!h || conjugate(x, *h) != y) && pair_check.passed) {
      pair_check.passed = false;
      pair_check.counterexample = detail::pair_payload(x, y);
    }
  }
  pair_check.detail = std::to_string(pairs) + " pairs";
  r.checks.push_back(pair_check);

  CheckResult rand{"random conjugations " + tag, true, {}, nullptr};
  for (std::size_t i = 0; i < conjugations; ++i) {
    auto x = random_involution(g, 3, rng);
    auto w = random_word(g, 1 + rng() % (2 * g.rank() + 2), rng);
    auto xw = conjugate(x, w);
    if (class_of(xw, g) != class_of(x, g) && rand.passed) {
      rand.passed = false;
      rand.counterexample = {{"x", format_element(x)}, {"conjugate", format_element(xw)}};
    }
  }
  rand.detail = std::to_string(conjugations) + " conjugations";
  r.checks.push_back(rand);
  return r;
}

inline Report verify_conjugacy(const VerifyConfig& cfg) {
  Report r{"conjugacy", cfg.seed, {{"n", cfg.n}, {"window", cfg.window}}, {}};
  std::mt19937_64 rng(cfg.seed);
  for (auto f : families_for(cfg, true))
    r.append(verify_conjugacy_family(GroupFamily(f, cfg.n), cfg.window, cfg.pairs,
                                     cfg.conjugations, rng));
  return r;
}

// ---------------------------------------------------------------------------
// Connectivity and diameters.

/// Checks that the certificate's invariant is constant on every window
/// component; for clauses (iv) and (v) also that it separates the window.
inline CheckResult verify_disconnection(const ClassDescriptor& d, const ConnectivityVerdict& v,
                                        const WindowSpec& w) {
  CheckResult c{to_string(d) + " " + to_string(v), true, {}, nullptr};
  auto comps = components_in_window(d, w);
  std::vector<std::optional<std::string>> value(comps.count);
  std::set<std::string> distinct;
  for (std::size_t i = 0; i < comps.vertices.size(); ++i) {
    auto inv = obstruction_invariant(comps.vertices[i], d, *v.certificate);
    distinct.insert(inv);
    auto& slot = value[comps.component[i]];
    if (!slot) slot = inv;
    else if (*slot != inv && c.passed) {
      c.passed = false;
      c.counterexample = {{"vertex", format_element(comps.vertices[i])},
                          {"invariant", inv},
                          {"component_invariant", *slot}};
    }
  }
  bool needs_split = *v.clause == DisconnectionClause::RankFourOneTransposition ||
                     *v.clause == DisconnectionClause::RankSixBalanced;
  if (needs_split && distinct.size() < 2 && c.passed) {
    c.passed = false;
    c.detail = "invariant does not separate the window; ";
  }
  c.detail += std::string(certificate_name(*v.certificate)) + ", " +
              std::to_string(comps.vertices.size()) + " vertices, " +
              std::to_string(comps.count) + " components, " + std::to_string(distinct.size()) +
              " invariant values";
  return c;
}

inline Report verify_connectivity(const VerifyConfig& cfg) {
  Report r{"connectivity", cfg.seed, {{"n", cfg.n}, {"window", cfg.window}}, {}};
  for (auto f : families_for(cfg, false))
    for (const auto& d : enumerate_descriptors(GroupFamily(f, cfg.n))) {
      auto v = predict_connectivity(d);
      if (v.connected()) continue;
      r.checks.push_back(verify_disconnection(d, v, WindowSpec(cfg.window, cfg.max_nodes)));
    }
  return r;
}

/// Random pairs from the window: witnesses within the predicted bound, and
/// the projection lower bound never above the witness length.
inline CheckResult verify_class_diameter(const ClassDescriptor& d, const ConnectivityVerdict& v,
                                         Label L, std::size_t pairs, std::mt19937_64& rng,
                                         std::size_t max_nodes) {
  CheckResult c{to_string(d) + " " + to_string(v), true, {}, nullptr};
  auto members = class_members_in_window(d, L, max_nodes);
  int worst = 0, best_lower = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto& x = members[rng() % members.size()];
    const auto& y = members[rng() % members.size()];
    SearchLimits lim{L + v.bound, v.bound, 2'000'000};
    auto res = distance(x, y, d.family, lim);
    if (!res || res->length > v.bound ||
        (res->lower_bound && *res->lower_bound > res->length)) {
      if (c.passed) {
        c.counterexample = detail::pair_payload(x, y);
        if (res) c.counterexample["length"] = res->length;
      }
      c.passed = false;
      continue;
    }
    worst = std::max(worst, res->length);
    if (res->lower_bound) best_lower = std::max(best_lower, *res->lower_bound);
  }
  c.detail = std::to_string(pairs) + " pairs, longest witness " + std::to_string(worst) +
             ", largest projection bound " + std::to_string(best_lower);
  return c;
}

inline CheckResult verify_constructive(const ClassDescriptor& d, Label L, std::size_t samples,
                                       std::mt19937_64& rng) {
  int bound = constructive_bound(d);
  CheckResult c{"constructive " + to_string(d) + " bound " + std::to_string(bound), true, {},
                nullptr};
  auto members = class_members_in_window(d, L);
  int worst = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const auto& x = members[rng() % members.size()];
    try {
      auto p = constructive_path(x, d);
      worst = std::max(worst, static_cast<int>(p.length()));
    } catch (const std::exception& e) {
      if (c.passed) c.counterexample = {{"x", format_element(x)}, {"error", e.what()}};
      c.passed = false;
    }
  }
  c.detail = std::to_string(samples) + " members, longest path " + std::to_string(worst);
  return c;
}

inline Report verify_diameters(const VerifyConfig& cfg) {
  Report r{"diameters", cfg.seed, {{"n", cfg.n}, {"window", cfg.window}, {"pairs", cfg.pairs}}, {}};
  std::mt19937_64 rng(cfg.seed);
  for (auto f : families_for(cfg, false))
    for (const auto& d : enumerate_descriptors(GroupFamily(f, cfg.n))) {
      auto v = predict_connectivity(d);
      if (!v.connected()) continue;
      r.checks.push_back(verify_class_diameter(d, v, cfg.window, cfg.pairs, rng, cfg.max_nodes));
      if (constructive_case(d))
        r.checks.push_back(verify_constructive(d, cfg.window, cfg.samples, rng));
    }
  return r;
}

inline Report verify_finite_baseline(const VerifyConfig& cfg) {
  Report r{"finite-baseline", cfg.seed, {{"n", cfg.n}}, {}};
  for (auto f : {FiniteFamily::FiniteA, FiniteFamily::FiniteB, FiniteFamily::FiniteD})
    for (std::size_t n = f == FiniteFamily::FiniteD ? 4 : 2; n <= cfg.n; ++n)
      for (const auto& d : finite_classes(f, n)) {
        const auto& g = finite_class_graph(d);
        auto p = predict_finite(d);
        auto diam = g.diameter();
        CheckResult c{to_string(d) + " clause " + p.clause, finite_prediction_holds(g, p), {},
                      nullptr};
        c.detail = std::to_string(g.size()) + " vertices, " +
                   (diam ? "diameter " + std::to_string(*diam)
                         : std::to_string(g.component_count()) + " components");
        if (!c.passed) c.counterexample = {{"class", to_string(d)}, {"diameter", diam ? *diam : -1}};
        r.checks.push_back(std::move(c));
      }
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemmas", "conjugacy", "connectivity", "diameters",
                                              "finite-baseline", "all"};
  return names;
}

inline Report run_suite(const std::string& name, const VerifyConfig& cfg) {
  if (name == "lemmas") return verify_lemmas(cfg);
  if (name == "conjugacy") return verify_conjugacy(cfg);
  if (name == "connectivity") return verify_connectivity(cfg);
  if (name == "diameters") return verify_diameters(cfg);
  if (name == "finite-baseline") return verify_finite_baseline(cfg);
  if (name == "all") {
    Report r{"all", cfg.seed, {{"n", cfg.n}, {"window", cfg.window}}, {}};
    for (const auto& s : suite_names())
      if (s != "all") r.append(run_suite(s, cfg));
    return r;
  }
  throw Error("unknown suite '" + name + "'");
}

// ---------------------------------------------------------------------------
// Report rendering.

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

inline std::string render_report(const Report& r, const std::string& format) {
  std::string out;
  if (format == "json") {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
      nlohmann::json j{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
      if (!c.passed) j["counterexample"] = c.counterexample;
      checks.push_back(std::move(j));
    }
    nlohmann::json j{{"suite", r.suite}, {"seed", r.seed}, {"config", r.config},
                     {"passed", r.passed()}, {"checks", checks}};
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    out = "suite,seed,check,status,detail,counterexample\n";
    for (const auto& c : r.checks)
      out += csv_field(r.suite) + "," + std::to_string(r.seed) + "," + csv_field(c.name) + "," +
             (c.passed ? "pass" : "fail") + "," + csv_field(c.detail) + "," +
             csv_field(c.passed ? "" : c.counterexample.dump()) + "\n";
    return out;
  }
  out = "# suite " + r.suite + " seed " + std::to_string(r.seed) + " config " + r.config.dump() + "\n";
  for (const auto& c : r.checks) {
    out += std::string(c.passed ? "PASS " : "FAIL ") + c.name + " (" + c.detail + ")";
    if (!c.passed) out += " counterexample " + c.counterexample.dump();
    out += "\n";
  }
  std::size_t failed = std::count_if(r.checks.begin(), r.checks.end(), [](auto& c) { return !c.passed; });
  out += "# " + std::to_string(r.checks.size() - failed) + "/" + std::to_string(r.checks.size()) +
         " checks passed\n";
  return out;
}

}  // namespace awg

#endif  // AWG_VERIFY_HPP
