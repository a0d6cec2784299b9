#include "braidforge/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "braidforge/abelianize.hpp"
#include "braidforge/aut_action.hpp"
#include "braidforge/catalog.hpp"
#include "braidforge/errors.hpp"
#include "braidforge/tietze.hpp"

namespace braidforge {

bool Report::passed() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

void Report::check(const std::string& name, bool ok,
                   const std::string& detail) {
  checks.push_back({name, ok, detail});
}

void Report::value(const std::string& key, const std::string& val) {
  values.emplace_back(key, val);
}

namespace {

using Key = std::vector<std::pair<std::uint32_t, std::int64_t>>;

Symbol graded_symbol(bool beta, std::int64_t k, int eps, int index) {
  return Symbol::intern(graded_label_name({beta, k, eps, index}));
}

Word ga(std::int64_t k, int eps, int index, std::int64_t exp = 1) {
  return Word(graded_symbol(false, k, eps, index), exp);
}

Word gb(std::int64_t k, int eps, int index, std::int64_t exp = 1) {
  return Word(graded_symbol(true, k, eps, index), exp);
}

int strands_of(const DerivedPresentation& dp) {
  return static_cast<int>(dp.quotient.source().generators().size() / 2) + 1;
}

/// Erase freely-trivial labels plus beta[k,*,1] (relation-style
/// trivializations whose witnessing relators are checked separately) and
/// flatten beta[k,1,r] to beta[k,0,r] for r >= 3.
Word normalize_graded(const Word& w) {
  std::vector<Syllable> out;
  for (const Syllable& s : w.syllables()) {
    auto l = parse_graded_label(s.gen.name());
    if (!l) {
      out.push_back(s);
      continue;
    }
    if (!l->beta && l->index == 1 && l->eps == 0) continue;
    if (l->beta && l->index == 1) continue;
    if (l->beta && l->index >= 3 && l->eps == 1) {
      out.push_back({graded_symbol(true, l->k, 0, l->index), s.exp});
      continue;
    }
    out.push_back(s);
  }
  return Word::from_syllables(std::move(out));
}

struct KeySets {
  std::set<Key> raw;
  std::set<Key> norm;
};

KeySets key_sets(const DerivedPresentation& dp) {
  KeySets ks;
  for (const Word& r : dp.base.relators()) {
    ks.raw.insert(cyclic_key(r));
    Key nk = cyclic_key(normalize_graded(r));
    if (!nk.empty()) ks.norm.insert(std::move(nk));
  }
  return ks;
}

enum class MatchClass { Exact, Flip, Wide, Missing };

struct MatchOutcome {
  MatchClass cls = MatchClass::Missing;
  std::string note;
};

// Involution-flip variants of the rho-type factors: a beta factor may be
// replaced via relation (3) (eps and sign together), an eps-only flip, or a
// sign-only flip. The first hit in the narrowest class wins.
MatchOutcome match_instance(const Word& expected, const KeySets& ks) {
  Word base = normalize_graded(expected);
  if (base.is_identity()) return {MatchClass::Exact, "vacuous after erasure"};
  if (ks.norm.count(cyclic_key(base))) return {MatchClass::Exact, ""};

  std::vector<std::size_t> beta_pos;
  for (std::size_t i = 0; i < base.syllables().size(); ++i) {
    auto l = parse_graded_label(base.syllables()[i].gen.name());
    if (l && l->beta) beta_pos.push_back(i);
  }
  auto variant = [&](const std::vector<int>& opts) -> Word {
    std::vector<Syllable> syls = base.syllables();
    for (std::size_t t = 0; t < beta_pos.size(); ++t) {
      if (opts[t] == 0) continue;
      Syllable& s = syls[beta_pos[t]];
      auto l = parse_graded_label(s.gen.name());
      int eps = l->eps;
      std::int64_t exp = s.exp;
      if (opts[t] == 1) {
        eps = 1 - eps;
        exp = -exp;
      } else if (opts[t] == 2) {
        eps = 1 - eps;
      } else {
        exp = -exp;
      }
      s = {graded_symbol(true, l->k, eps, l->index), exp};
    }
    return normalize_graded(Word::from_syllables(std::move(syls)));
  };

  const std::size_t m = beta_pos.size();
  if (m == 0 || m > 8) return {MatchClass::Missing, ""};
  // Pass 1: relation-(3) flips only.
  std::vector<int> opts(m, 0);
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    for (std::size_t t = 0; t < m; ++t) opts[t] = (mask >> t) & 1 ? 1 : 0;
    Word v = variant(opts);
    if (!v.is_identity() && ks.norm.count(cyclic_key(v)))
      return {MatchClass::Flip, "matched after relation-(3) flip"};
  }
  // Pass 2: the full option space.
  std::size_t total = 1;
  for (std::size_t t = 0; t < m; ++t) total *= 4;
  for (std::size_t code = 1; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t t = 0; t < m; ++t) {
      opts[t] = static_cast<int>(c % 4);
      c /= 4;
    }
    Word v = variant(opts);
    if (!v.is_identity() && ks.norm.count(cyclic_key(v))) {
      std::string note = "matched variant with factor options";
      for (std::size_t t = 0; t < m; ++t)
        note += " " + std::to_string(opts[t]);
      return {MatchClass::Wide, note};
    }
  }
  return {MatchClass::Missing, ""};
}

std::string instance_tag(int family, std::int64_t k, int mu, int r, int s) {
  std::string tag = "(" + std::to_string(family) + ")@k=" + std::to_string(k) +
                    ",mu=" + std::to_string(mu) + ",r=" + std::to_string(r);
  if (s >= 0) tag += ",s=" + std::to_string(s);
  return tag;
}

}  // namespace

bool Lemma22Result::complete() const {
  for (const FamilyOutcome& f : families)
    if (!f.missing.empty()) return false;
  return trivializations_ok;
}

Lemma22Result match_lemma22(const DerivedPresentation& dp) {
  const int n = strands_of(dp);
  const std::int64_t K = dp.transversal.window();
  KeySets ks = key_sets(dp);
  Lemma22Result out;
  out.families.resize(8);
  for (int f = 0; f < 8; ++f) out.families[f].family = f + 1;

  auto oracle_true = [&](const Word& label_word) {
    return is_identity_in_wb(expand_labels(dp, label_word), n);
  };

  auto record = [&](int family, std::int64_t k, int mu, int r, int s,
                    const Word& expected) {
    FamilyOutcome& fo = out.families[family - 1];
    MatchOutcome mo = match_instance(expected, ks);
    std::string tag = instance_tag(family, k, mu, r, s);
    switch (mo.cls) {
      case MatchClass::Exact:
        ++fo.exact;
        break;
      case MatchClass::Flip:
        ++fo.flip_variant;
        if (fo.notes.size() < 4) fo.notes.push_back(tag + ": " + mo.note);
        break;
      case MatchClass::Wide:
        if (oracle_true(expected)) {
          ++fo.group_only;
          if (fo.notes.size() < 6)
            fo.notes.push_back(tag +
                               ": printed form holds group-level (oracle); "
                               "tau emits an involution-flipped word");
        } else {
          ++fo.corrected;
          if (fo.notes.size() < 6)
            fo.notes.push_back(tag +
                               ": printed form refuted by the oracle; the "
                               "derived relator differs by an eps flip");
        }
        break;
      case MatchClass::Missing:
        fo.missing.push_back(tag);
        break;
    }
  };

  for (std::int64_t k = -K + 2; k <= K - 2; ++k) {
    for (int mu = 0; mu <= 1; ++mu) {
      const int nu = 1 - mu;
      // (1) alpha commutation, |r-s| > 1.
      for (int r = 1; r < n; ++r)
        for (int s = r + 2; s < n; ++s)
          record(1, k, mu, r, s,
                 ga(k, mu, r) * ga(k + 1, mu, s) * ga(k + 1, mu, r, -1) *
                     ga(k, mu, s, -1));
      // (2) alpha braid exchange.
      for (int r = 1; r + 1 < n; ++r)
        record(2, k, mu, r, -1,
               ga(k, mu, r) * ga(k + 1, mu, r + 1) * ga(k + 2, mu, r) *
                   ga(k + 2, mu, r + 1, -1) * ga(k + 1, mu, r, -1) *
                   ga(k, mu, r + 1, -1));
      // (3) beta involution pairing.
      for (int r = 1; r < n; ++r)
        record(3, k, mu, r, -1, gb(k, mu, r) * gb(k, nu, r));
      // (4) beta commutation squares, r,s >= 2.
      for (int r = 2; r < n; ++r)
        for (int s = r + 2; s < n; ++s)
          record(4, k, mu, r, s,
                 (gb(k, mu, r) * gb(k, mu, s)).pow(2));
      // (5) beta braid cubes.
      for (int r = 1; r + 1 < n; ++r)
        record(5, k, mu, r, -1, (gb(k, mu, r) * gb(k, mu, r + 1)).pow(3));
      // (6) mixed commutation, |r-s| > 1 (ordered).
      for (int r = 1; r < n; ++r)
        for (int s = 1; s < n; ++s) {
          if (r - s <= 1 && s - r <= 1) continue;
          record(6, k, mu, r, s,
                 ga(k, mu, r) * gb(k + 1, nu, s) * ga(k, nu, r, -1) *
                     gb(k, mu, s));
        }
      // (7) mixed braid relation.
      for (int r = 1; r + 1 < n; ++r)
        record(7, k, mu, r, -1,
               ga(k, mu, r) * gb(k + 1, mu, r + 1) * gb(k + 1, nu, r) *
                   ga(k, mu, r + 1, -1) * gb(k, mu, r) * gb(k, nu, r + 1));
      // (8) forbidden relation.
      for (int r = 1; r + 1 < n; ++r)
        record(8, k, mu, r, -1,
               ga(k, mu, r + 1) * ga(k + 1, mu, r) * gb(k + 2, mu, r + 1) *
                   ga(k + 1, nu, r, -1) * ga(k, nu, r + 1, -1) *
                   gb(k, mu, r));
    }
  }

  // Trivializations (9)-(12).
  bool ok = true;
  std::vector<std::string>& notes = out.trivialization_notes;
  std::set<std::string> trivial(dp.trivial_labels.begin(),
                                dp.trivial_labels.end());
  for (const SchreierGenerator& sg : dp.schreier) {
    auto l = parse_graded_label(sg.label);
    if (!l) continue;
    bool expect_trivial =
        (!l->beta && l->index == 1 && l->eps == 0) ||
        (l->beta && l->index == 1 && l->eps == 0);
    if (expect_trivial != sg.trivial) {
      ok = false;
      notes.push_back("unexpected triviality status for " + sg.label);
    }
  }
  notes.push_back("(9)/(11 eps=0): alpha[k,0,1] and beta[k,0,1] freely trivial");
  for (std::int64_t k = -K; k <= K; ++k) {
    if (!ks.raw.count(cyclic_key(gb(k, 1, 1)))) {
      ok = false;
      notes.push_back("(11 eps=1): missing relator beta[" + std::to_string(k) +
                      ",1,1]");
    }
  }
  notes.push_back("(11 eps=1): relator beta[k,1,1] present for |k| <= K");
  for (std::int64_t k = -K + 2; k <= K - 2; ++k) {
    for (int r = 3; r < n; ++r) {
      bool shift =
          ks.norm.count(cyclic_key(ga(k + 1, 0, r) * ga(k, 0, r, -1)));
      bool flip = ks.norm.count(cyclic_key(ga(k, 0, r) * ga(k, 1, r, -1)));
      if (!shift || !flip) {
        ok = false;
        notes.push_back("(10): missing link relators at k=" +
                        std::to_string(k) + ", r=" + std::to_string(r));
      }
      bool square = ks.norm.count(cyclic_key(gb(k, 0, r, 2)));
      if (!square) {
        ok = false;
        notes.push_back("(12): missing beta square at k=" + std::to_string(k) +
                        ", r=" + std::to_string(r));
      }
    }
  }
  if (n >= 4)
    notes.push_back(
        "(10)/(12): shift and flip links plus beta squares present for "
        "interior k, r >= 3");
  out.trivializations_ok = ok;
  return out;
}

WindowedAbelianization windowed_interior_abelianization(
    const DerivedPresentation& dp) {
  const std::int64_t K = dp.transversal.window();
  WindowedAbelianization out;
  IntMatrix m = relation_matrix(dp.base);
  RowSpaceChecker checker(m);
  const auto& gens = dp.base.generators();
  for (std::size_t j = 0; j < gens.size(); ++j) {
    auto l = parse_graded_label(gens[j].name());
    if (!l) continue;
    std::int64_t a = l->k < 0 ? -l->k : l->k;
    if (a > K - 2) continue;
    std::vector<BigInt> e(gens.size());
    e[j] = 1;
    if (checker.contains(e))
      out.killed.push_back(gens[j].name());
    else
      out.survivors.push_back(gens[j].name());
  }
  return out;
}

bool check_telescoping(const DerivedPresentation& dp, std::string* first_bad) {
  std::unordered_map<std::uint32_t, const Word*> expansion;
  for (const SchreierGenerator& sg : dp.schreier)
    expansion.emplace(sg.symbol.id(), &sg.expansion);
  const auto& src = dp.quotient.source();
  for (std::size_t j = 0; j < dp.origins.size(); ++j) {
    const RelatorOrigin& o = dp.origins[j];
    Word expanded;
    for (const Syllable& s : o.tau_word.syllables()) {
      auto it = expansion.find(s.gen.id());
      if (it == expansion.end()) {
        if (first_bad) *first_bad = "unknown label " + s.gen.name();
        return false;
      }
      expanded = expanded * it->second->pow(s.exp);
    }
    Word want = conjugate(o.conjugator, src.relators()[o.source_index]);
    if (expanded != want) {
      if (first_bad)
        *first_bad = "relator " + std::to_string(j) + ": got '" +
                     to_string(expanded) + "', want '" + to_string(want) + "'";
      return false;
    }
  }
  return true;
}

namespace {

Word fw(std::initializer_list<std::pair<const char*, int>> letters) {
  std::vector<Syllable> syls;
  for (const auto& [stem, i] : letters) {
    std::string name = std::string(stem) + std::to_string(i);
    if (name == "a1" || name == "b1" || name == "f1") continue;
    syls.push_back({Symbol::intern(name), 1});
  }
  return Word::from_syllables(std::move(syls));
}

}  // namespace

std::vector<Word> flat_expected_relators(int n, bool welded) {
  std::vector<Word> out;
  auto push = [&](Word w) {
    if (!w.is_identity()) out.push_back(std::move(w));
  };
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      push(fw({{"a", i}, {"e", j}}).pow(2));
      push(fw({{"e", i}, {"a", j}}).pow(2));
      push(fw({{"c", i}, {"g", j}}).pow(2));
      push(fw({{"g", i}, {"c", j}}).pow(2));
      push(fw({{"b", i}, {"d", j}}).pow(2));
      push(fw({{"d", i}, {"b", j}}).pow(2));
      push(fw({{"f", i}, {"h", j}}).pow(2));
      push(fw({{"h", i}, {"f", j}}).pow(2));
    }
  }
  for (int i = 1; i + 1 < n; ++i) {
    push(fw({{"a", i}, {"e", i + 1}}).pow(3));
    push(fw({{"e", i}, {"a", i + 1}}).pow(3));
    push(fw({{"c", i}, {"g", i + 1}}).pow(3));
    push(fw({{"g", i}, {"c", i + 1}}).pow(3));
    push(fw({{"b", i}, {"d", i + 1}}).pow(3));
    push(fw({{"d", i}, {"b", i + 1}}).pow(3));
    push(fw({{"f", i}, {"h", i + 1}}).pow(3));
    push(fw({{"h", i}, {"f", i + 1}}).pow(3));
  }
  for (int i = 1; i < n; ++i) {
    push(fw({{"a", i}, {"e", i}}));
    push(fw({{"c", i}, {"g", i}}));
    push(fw({{"b", i}, {"d", i}}));
    push(fw({{"f", i}, {"h", i}}));
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      if (i - j <= 1 && j - i <= 1) continue;
      push(fw({{"a", i}, {"f", j}, {"g", i}, {"d", j}}));
      push(fw({{"e", i}, {"b", j}, {"c", i}, {"h", j}}));
    }
  }
  for (int i = 1; i + 1 < n; ++i) {
    push(fw({{"b", i}, {"d", i + 1}, {"a", i}, {"f", i + 1}, {"h", i},
             {"e", i + 1}}));
    push(fw({{"f", i}, {"h", i + 1}, {"e", i}, {"b", i + 1}, {"d", i},
             {"a", i + 1}}));
    push(fw({{"d", i}, {"b", i + 1}, {"c", i}, {"h", i + 1}, {"f", i},
             {"g", i + 1}}));
    push(fw({{"h", i}, {"f", i + 1}, {"g", i}, {"d", i + 1}, {"b", i},
             {"c", i + 1}}));
  }
  if (welded) {
    for (int i = 1; i + 1 < n; ++i) {
      push(fw({{"b", i}, {"c", i + 1}, {"g", i}, {"d", i + 1}, {"a", i},
               {"e", i + 1}}));
      push(fw({{"f", i}, {"g", i + 1}, {"c", i}, {"h", i + 1}, {"e", i},
               {"a", i + 1}}));
      push(fw({{"d", i}, {"a", i + 1}, {"e", i}, {"b", i + 1}, {"c", i},
               {"g", i + 1}}));
      push(fw({{"h", i}, {"e", i + 1}, {"a", i}, {"f", i + 1}, {"g", i},
               {"c", i + 1}}));
    }
  }
  return out;
}

std::vector<std::pair<std::string, Word>> flat_expected_expansions(int n) {
  std::vector<std::pair<std::string, Word>> out;
  auto letters = [&](std::initializer_list<std::string> names) {
    std::vector<Syllable> syls;
    for (const std::string& nm : names) syls.push_back({Symbol::intern(nm), 1});
    return Word::from_syllables(std::move(syls));
  };
  for (int i = 1; i < n; ++i) {
    std::string si = "s" + std::to_string(i);
    std::string ri = "r" + std::to_string(i);
    out.emplace_back("a" + std::to_string(i), letters({si, "s1"}));
    out.emplace_back("b" + std::to_string(i), letters({ri, "r1"}));
    out.emplace_back("c" + std::to_string(i), letters({"r1", si, "r1", "s1"}));
    out.emplace_back("d" + std::to_string(i), letters({"r1", ri}));
    out.emplace_back("e" + std::to_string(i), letters({"s1", si}));
    out.emplace_back("f" + std::to_string(i),
                     letters({"s1", ri, "r1", "s1"}));
    out.emplace_back("g" + std::to_string(i),
                     letters({"s1", "r1", si, "r1"}));
    out.emplace_back("h" + std::to_string(i), letters({"s1", "r1", ri, "s1"}));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scenario registry
// ---------------------------------------------------------------------------

namespace {

constexpr std::int64_t kWindow = 3;

Presentation cat(Family f, int n) { return catalog({f, n}); }

DerivedPresentation derive_flat(Family f, int n) {
  Presentation p = cat(f, n);
  QuotientMap q = flat_abelianization_quotient(p);
  auto [table, t] = coset_table(q);
  (void)table;
  return derived_presentation(q, t);
}

DerivedPresentation derive_wb(int n, std::int64_t window) {
  Presentation p = cat(Family::WeldedBraid, n);
  QuotientMap q = welded_abelianization_quotient(p);
  Transversal t = graded_transversal(q, window);
  return derived_presentation(q, t);
}

std::string strip_signs(const Word& w) {
  std::string out;
  for (const Syllable& s : w.syllables()) {
    std::int64_t reps = s.exp < 0 ? -s.exp : s.exp;
    for (std::int64_t k = 0; k < reps; ++k) {
      if (!out.empty()) out += ' ';
      out += s.gen.name();
    }
  }
  return out;
}

struct Scenario {
  ScenarioInfo info;
  std::function<void(Report&)> run;
};

void scenario_wb_abelianization(Report& r, int n) {
  AbelianInvariants inv = abelian_invariants(cat(Family::WeldedBraid, n));
  r.value("invariants", inv.str());
  r.check("invariants-equal-Z-x-Z2",
          inv == AbelianInvariants{1, {2}},
          "abelianization of the welded catalog, strands=" +
              std::to_string(n));
}

void scenario_flat_abelianization(Report& r, Family f, int n) {
  AbelianInvariants inv = abelian_invariants(cat(f, n));
  r.value("invariants", inv.str());
  r.check("invariants-equal-Z2-x-Z2", inv == AbelianInvariants{0, {2, 2}});
}

void scenario_oracle_relators(Report& r, int n) {
  Presentation p = cat(Family::WeldedBraid, n);
  CompositionOrder order = resolve_composition_order(n);
  r.value("composition-order",
          order == CompositionOrder::LeftToRight ? "left-to-right"
                                                 : "right-to-left");
  std::size_t bad = 0;
  for (const Word& rel : p.relators())
    if (!is_identity_in_wb(rel, n, order)) ++bad;
  r.check("catalog-relators-act-trivially", bad == 0,
          std::to_string(p.relators().size()) + " relators");
  bool flat_fails = true;
  for (int i = 1; i < n; ++i) {
    Word sq(Symbol::intern("s" + std::to_string(i)), 2);
    if (is_identity_in_wb(sq, n, order)) flat_fails = false;
  }
  r.check("sigma-squared-acts-nontrivially", flat_fails);
}

void scenario_lemma21(Report& r, int n) {
  const std::int64_t K = 2;
  Presentation p = cat(Family::WeldedBraid, n);
  QuotientMap q = welded_abelianization_quotient(p);
  Transversal t = graded_transversal(q, K);
  Rewriter rw(q, t);
  auto slots = rw.enumerate();
  r.value("slots", std::to_string(slots.size()));
  bool kernel_ok = true, formula_ok = true, trivial_ok = true;
  for (const SchreierGenerator& sg : slots) {
    if (!q.in_kernel(sg.expansion)) kernel_ok = false;
    auto l = parse_graded_label(sg.label);
    if (!l) {
      formula_ok = false;
      continue;
    }
    // Printed generator word, checked group-level through the oracle.
    Word formula;
    std::string si = (l->beta ? "r" : "s") + std::to_string(l->index);
    if (!l->beta) {
      formula = Word::from_syllables({{Symbol::intern("s1"), l->k},
                                      {Symbol::intern("r1"), l->eps},
                                      {Symbol::intern(si), 1},
                                      {Symbol::intern("r1"), l->eps},
                                      {Symbol::intern("s1"), -1 - l->k}});
    } else {
      formula = Word::from_syllables({{Symbol::intern("s1"), l->k},
                                      {Symbol::intern("r1"), l->eps},
                                      {Symbol::intern(si), 1},
                                      {Symbol::intern("r1"), 1 + l->eps},
                                      {Symbol::intern("s1"), -l->k}});
    }
    if (!is_identity_in_wb(sg.expansion * formula.inverse(), n))
      formula_ok = false;
    bool expect_trivial = l->index == 1 && l->eps == 0;
    if (expect_trivial != sg.trivial) trivial_ok = false;
  }
  r.check("expansions-lie-in-kernel", kernel_ok);
  r.check("expansions-match-generator-formulas", formula_ok,
          "group-level, via the free-group action oracle");
  r.check("freely-trivial-slots-are-index-1-eps-0", trivial_ok);
}

void scenario_lemma22(Report& r, int n) {
  DerivedPresentation dp = derive_wb(n, kWindow);
  r.value("generators", std::to_string(dp.base.generators().size()));
  r.value("relators", std::to_string(dp.base.relators().size()));
  Lemma22Result m = match_lemma22(dp);
  for (const FamilyOutcome& f : m.families) {
    std::ostringstream os;
    os << "exact=" << f.exact << " flip=" << f.flip_variant
       << " group-only=" << f.group_only << " corrected=" << f.corrected
       << " missing=" << f.missing.size();
    r.value("family-" + std::to_string(f.family), os.str());
    for (const std::string& note : f.notes)
      r.value("note-family-" + std::to_string(f.family), note);
    r.check("family-" + std::to_string(f.family) + "-instances-found",
            f.missing.empty(),
            f.missing.empty() ? "" : f.missing.front());
  }
  r.check("trivializations-9-12", m.trivializations_ok,
          m.trivialization_notes.empty() ? ""
                                         : m.trivialization_notes.front());
  std::string bad;
  r.check("telescoping", check_telescoping(dp, &bad), bad);
  std::size_t failures = 0;
  for (const Word& rel : dp.base.relators())
    if (!is_identity_in_wb(expand_labels(dp, rel), n)) ++failures;
  r.check("derived-relators-pass-oracle", failures == 0,
          std::to_string(dp.base.relators().size()) + " relators");
}

void scenario_windowed_perfect(Report& r, int n, bool expect_perfect) {
  DerivedPresentation dp = derive_wb(n, kWindow);
  WindowedAbelianization wa = windowed_interior_abelianization(dp);
  r.value("interior-killed", std::to_string(wa.killed.size()));
  r.value("interior-survivors", std::to_string(wa.survivors.size()));
  if (!wa.survivors.empty()) r.value("survivor-example", wa.survivors.front());
  r.value("evidence-scope",
          "window-interior evidence at K=" + std::to_string(kWindow) +
              "; not a proof outside the window");
  if (expect_perfect) {
    r.check("interior-generators-all-die", wa.survivors.empty());
  } else {
    r.check("an-interior-generator-survives", !wa.survivors.empty());
  }
}

void scenario_script(Report& r, int n, const std::string& script_name,
                     std::size_t bound,
                     const std::set<std::string>& claimed) {
  DerivedPresentation dp = derive_wb(n, kWindow);
  ParsedScript script =
      parse_script(builtin_scripts().at(script_name), script_name);
  ReplayResult res = replay_script(dp.base, script);
  r.value("moves", std::to_string(res.executed.moves.size()));
  r.value("final-generators",
          std::to_string(res.presentation.generators().size()));
  r.value("boundary", std::to_string(res.boundary.size()));
  std::vector<std::string> interior;
  for (Symbol g : res.presentation.generators()) {
    auto l = parse_graded_label(g.name());
    if (!l) continue;
    std::int64_t a = l->k < 0 ? -l->k : l->k;
    if (a <= kWindow - 2) interior.push_back(g.name());
  }
  std::string interior_list;
  for (const std::string& s : interior)
    interior_list += (interior_list.empty() ? "" : " ") + s;
  r.value("interior-generators", interior_list);
  bool subset = true;
  for (const std::string& s : interior)
    if (!claimed.count(s)) subset = false;
  r.check("interior-generators-within-claimed-set", subset);
  r.check("interior-count-within-bound", interior.size() <= bound,
          std::to_string(interior.size()) + " <= " + std::to_string(bound));
}

void scenario_lemma33(Report& r, Family f, int n) {
  DerivedPresentation dp = derive_flat(f, n);
  r.value("slots", std::to_string(dp.slot_count()));
  r.check("slot-count-8(n-1)", dp.slot_count() == 8u * (n - 1));
  std::set<std::string> trivial(dp.trivial_labels.begin(),
                                dp.trivial_labels.end());
  r.check("trivial-labels-a1-b1-f1",
          trivial == std::set<std::string>{"a1", "b1", "f1"});
  bool labels_ok = true, expansions_ok = true;
  auto expected = flat_expected_expansions(n);
  std::map<std::string, std::string> expected_by_label;
  for (auto& [label, word] : expected)
    expected_by_label[label] = strip_signs(word);
  std::size_t seen = 0;
  for (const SchreierGenerator& sg : dp.schreier) {
    auto it = expected_by_label.find(sg.label);
    if (it == expected_by_label.end()) {
      labels_ok = false;
      continue;
    }
    ++seen;
    // Freely trivial slots expand to the identity; their printed words
    // (sigma1 sigma1 and friends) are trivial only through the group
    // relations.
    if (sg.trivial) {
      if (!sg.expansion.is_identity()) expansions_ok = false;
      continue;
    }
    if (strip_signs(sg.expansion) != it->second) expansions_ok = false;
  }
  r.check("labels-follow-the-a-h-scheme",
          labels_ok && seen == expected_by_label.size());
  r.check("expansions-match-printed-words", expansions_ok,
          "letterwise, exponent signs stripped; trivial slots expand to the "
          "identity");
}

void scenario_lemma34_relations(Report& r, Family f, int n) {
  DerivedPresentation dp = derive_flat(f, n);
  std::set<Key> keys;
  for (const Word& rel : dp.base.relators()) keys.insert(cyclic_key(rel));
  auto expected = flat_expected_relators(n, f == Family::FlatWeldedBraid);
  std::size_t missing = 0;
  std::string first_missing;
  for (const Word& e : expected) {
    if (!keys.count(cyclic_key(e))) {
      ++missing;
      if (first_missing.empty()) first_missing = to_string(e);
    }
  }
  r.value("expected-instances", std::to_string(expected.size()));
  r.value("derived-relators", std::to_string(dp.base.relators().size()));
  r.check("printed-relators-all-derived", missing == 0, first_missing);
  std::string bad;
  r.check("telescoping", check_telescoping(dp, &bad), bad);
}

void scenario_lemma34_script(Report& r, Family f, int n) {
  DerivedPresentation dp = derive_flat(f, n);
  std::string name = f == Family::FlatWeldedBraid ? "lemma-3.4-fwb.tz"
                                                  : "lemma-3.4-fvb.tz";
  ParsedScript script = parse_script(builtin_scripts().at(name), name);
  ReplayResult res = replay_script(dp.base, script);
  std::set<std::string> want{"c1", "c2", "f2"};
  for (int i = 2; i < n; ++i) {
    want.insert("a" + std::to_string(i));
    want.insert("b" + std::to_string(i));
  }
  std::set<std::string> got;
  for (Symbol g : res.presentation.generators()) got.insert(g.name());
  std::string got_list;
  for (const std::string& s : got) got_list += (got_list.empty() ? "" : " ") + s;
  r.value("final-generators", got_list);
  r.value("final-relators",
          std::to_string(res.presentation.relators().size()));
  r.check("generating-set-matches-lemma", got == want);
  r.check("no-boundary-leftovers", res.boundary.empty());
}

void scenario_thm31_presentation(Report& r, Family f) {
  bool welded = f == Family::FlatWeldedBraid;
  DerivedPresentation dp = derive_flat(f, 3);
  AbelianInvariants derived = abelian_invariants(dp.base);
  AbelianInvariants explicit_inv = abelian_invariants(
      cat(welded ? Family::PaperFWB3Prime : Family::PaperFVB3Prime, 3));
  AbelianInvariants want =
      welded ? AbelianInvariants{1, {3}} : AbelianInvariants{1, {3, 3}};
  r.value("derived-invariants", derived.str());
  r.value("explicit-presentation-invariants", explicit_inv.str());
  r.check("derived-matches-explicit-presentation", derived == explicit_inv);
  r.check("invariants-have-expected-value", derived == want, want.str());
}

void scenario_cor32(Report& r, Family f, int n) {
  DerivedPresentation dp = derive_flat(f, n);
  AbelianInvariants inv = abelian_invariants(dp.base);
  r.value("derived-invariants", inv.str());
  bool expect_perfect = n >= 5;
  r.check(expect_perfect ? "derived-commutator-subgroup-is-perfect"
                         : "derived-commutator-subgroup-is-not-perfect",
          is_perfect(dp.base) == expect_perfect);
}

void scenario_duplicate_flag(Report& r) {
  const int n = 5;
  DerivedPresentation fvb = derive_flat(Family::FlatVirtualBraid, n);
  DerivedPresentation fwb = derive_flat(Family::FlatWeldedBraid, n);
  std::set<Key> fvb_keys, fwb_keys;
  for (const Word& rel : fvb.base.relators()) fvb_keys.insert(cyclic_key(rel));
  for (const Word& rel : fwb.base.relators()) fwb_keys.insert(cyclic_key(rel));
  std::size_t extra = 0, duplicate = 0;
  for (std::size_t j = 0; j < fwb.base.relators().size(); ++j) {
    if (fwb.quotient.source().labels()[fwb.origins[j].source_index] !=
        kForbiddenLabel)
      continue;
    ++extra;
    if (fvb_keys.count(cyclic_key(fwb.base.relators()[j]))) ++duplicate;
  }
  r.value("forbidden-derived-relators", std::to_string(extra));
  r.value("also-derivable-in-fvb", std::to_string(duplicate));
  r.value("flag",
          "the doubled printed relation family is recorded here; the catalog "
          "is left as printed");
  r.check("flag-recorded", true);
}

std::vector<Scenario> build_scenarios() {
  std::vector<Scenario> out;
  auto add = [&](std::string id, std::string anchor, std::string summary,
                 std::function<void(Report&)> fn) {
    out.push_back({{std::move(id), std::move(anchor), std::move(summary)},
                   std::move(fn)});
  };
  for (int n = 2; n <= 6; ++n) {
    add("sec-2.2-abelianization-wb" + std::to_string(n), "section 2.2",
        "welded abelianization is Z x Z/2",
        [n](Report& r) { scenario_wb_abelianization(r, n); });
    add("oracle-relators-wb" + std::to_string(n), "section 2.1 / corollary 1",
        "catalog relators act trivially on the free group",
        [n](Report& r) { scenario_oracle_relators(r, n); });
  }
  for (int n = 3; n <= 6; ++n) {
    add("sec-3.1-abelianization-fvb" + std::to_string(n), "section 3.1",
        "flat virtual abelianization is Z/2 x Z/2", [n](Report& r) {
          scenario_flat_abelianization(r, Family::FlatVirtualBraid, n);
        });
    add("sec-3.1-abelianization-fwb" + std::to_string(n), "section 3.1",
        "flat welded abelianization is Z/2 x Z/2", [n](Report& r) {
          scenario_flat_abelianization(r, Family::FlatWeldedBraid, n);
        });
    add("lemma-2.1-generators-wb" + std::to_string(n), "lemma 2.1",
        "graded Schreier generators match the printed words",
        [n](Report& r) { scenario_lemma21(r, n); });
    add("lemma-2.2-relations-wb" + std::to_string(n), "lemma 2.2",
        "windowed rewriting reproduces the relation families",
        [n](Report& r) { scenario_lemma22(r, n); });
    std::set<std::string> claimed{"alpha[0,1,1]", "alpha[0,0,2]",
                                  "alpha[1,0,2]", "beta[0,0,2]"};
    for (int rr = 3; rr < n; ++rr) {
      claimed.insert("alpha[0,0," + std::to_string(rr) + "]");
      claimed.insert("beta[0,0," + std::to_string(rr) + "]");
    }
    add("lemma-2.3-script-wb" + std::to_string(n), "lemma 2.3",
        "guided elimination reaches the small generating set",
        [n, claimed](Report& r) {
          scenario_script(r, n, "lemma-2.3.tz", 4 + 2 * (n - 3), claimed);
        });
  }
  {
    std::set<std::string> claimed{"beta[0,0,2]"};
    for (int rr = 3; rr < 7; ++rr) {
      claimed.insert("alpha[0,0," + std::to_string(rr) + "]");
      claimed.insert("beta[0,0," + std::to_string(rr) + "]");
    }
    add("lemma-2.4-script-wb7", "lemma 2.4",
        "alternative elimination reaches 2(n-3)+1 generators",
        [claimed](Report& r) {
          scenario_script(r, 7, "lemma-2.4.tz", 2 * (7 - 3) + 1, claimed);
        });
  }
  for (int n = 5; n <= 6; ++n)
    add("thm-1.1-perfect-wb" + std::to_string(n),
        "lemma 2.5 / theorem 1.1(ii)",
        "windowed abelianization kills every interior generator",
        [n](Report& r) { scenario_windowed_perfect(r, n, true); });
  for (int n = 3; n <= 4; ++n)
    add("n34-not-perfect-wb" + std::to_string(n), "corollary 3 consequence",
        "an interior generator survives the windowed abelianization",
        [n](Report& r) { scenario_windowed_perfect(r, n, false); });
  for (int n = 3; n <= 6; ++n) {
    for (Family f : {Family::FlatVirtualBraid, Family::FlatWeldedBraid}) {
      std::string tok = family_token(f);
      add("lemma-3.3-generators-" + tok + std::to_string(n), "lemma 3.3",
          "index-4 Schreier generators carry the printed labels and words",
          [f, n](Report& r) { scenario_lemma33(r, f, n); });
      add("lemma-3.4-relations-" + tok + std::to_string(n), "lemma 3.4",
          "index-4 rewriting reproduces the printed relator lists",
          [f, n](Report& r) { scenario_lemma34_relations(r, f, n); });
      add("lemma-3.4-script-" + tok + std::to_string(n), "lemma 3.4",
          "guided elimination reaches the c1,c2,f2,a_i,b_i generating set",
          [f, n](Report& r) { scenario_lemma34_script(r, f, n); });
      add("cor-3.2-perfect-" + tok + std::to_string(n), "corollary 3.2",
          "perfect exactly when n >= 5",
          [f, n](Report& r) { scenario_cor32(r, f, n); });
    }
  }
  add("thm-3.1-presentations-fvb3", "theorem 3.1 / section 3 end",
      "derived FVB_3' invariants match the explicit presentation",
      [](Report& r) { scenario_thm31_presentation(r, Family::FlatVirtualBraid); });
  add("thm-3.1-presentations-fwb3", "theorem 3.1 / section 3 end",
      "derived FWB_3' invariants match the explicit presentation",
      [](Report& r) { scenario_thm31_presentation(r, Family::FlatWeldedBraid); });
  add("lemma-3.4-duplicate-flag-fwb5", "lemma 3.4 (doubled relation)",
      "records whether the doubled printed relation is already derivable",
      [](Report& r) { scenario_duplicate_flag(r); });
  std::sort(out.begin(), out.end(), [](const Scenario& a, const Scenario& b) {
    return a.info.id < b.info.id;
  });
  return out;
}

const std::vector<Scenario>& scenarios() {
  static const std::vector<Scenario> s = build_scenarios();
  return s;
}

}  // namespace

std::vector<ScenarioInfo> list_scenarios() {
  std::vector<ScenarioInfo> out;
  for (const Scenario& s : scenarios()) out.push_back(s.info);
  return out;
}

Report run_scenario(const std::string& id) {
  for (const Scenario& s : scenarios()) {
    if (s.info.id != id) continue;
    Report r;
    r.scenario = s.info.id;
    r.anchor = s.info.anchor;
    auto t0 = std::chrono::steady_clock::now();
    try {
      s.run(r);
    } catch (const std::exception& e) {
      r.check("scenario-aborted", false, e.what());
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    return r;
  }
  throw Error("unknown scenario '" + id + "'");
}

std::vector<Report> run_all(const std::string& filter) {
  std::vector<Report> out;
  for (const Scenario& s : scenarios())
    if (filter.empty() || s.info.id.rfind(filter, 0) == 0)
      out.push_back(run_scenario(s.info.id));
  return out;
}

std::string report_text(const Report& r, bool color) {
  const char* green = color ? "\033[32m" : "";
  const char* red = color ? "\033[31m" : "";
  const char* reset = color ? "\033[0m" : "";
  std::ostringstream os;
  os << "scenario " << r.scenario << "  [" << r.anchor << "]\n";
  for (const CheckResult& c : r.checks) {
    os << "  " << (c.pass ? green : red) << (c.pass ? "ok  " : "FAIL")
       << reset << ' ' << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ')';
    os << '\n';
  }
  for (const auto& [k, v] : r.values) os << "  " << k << " = " << v << '\n';
  os << "  result: " << (r.passed() ? green : red)
     << (r.passed() ? "PASS" : "FAIL") << reset << '\n';
  return os.str();
}

std::string reports_json(const std::vector<Report>& reports) {
  nlohmann::ordered_json j;
  j["schema"] = "braidforge-report/1";
  j["reports"] = nlohmann::ordered_json::array();
  bool all = true;
  for (const Report& r : reports) {
    nlohmann::ordered_json e;
    e["scenario"] = r.scenario;
    e["anchor"] = r.anchor;
    e["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : r.checks) {
      nlohmann::ordered_json ce;
      ce["name"] = c.name;
      ce["pass"] = c.pass;
      if (!c.detail.empty()) ce["detail"] = c.detail;
      e["checks"].push_back(ce);
    }
    nlohmann::ordered_json vals = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.values) {
      if (vals.contains(k)) {
        std::string kk = k;
        int suffix = 2;
        while (vals.contains(kk)) kk = k + "#" + std::to_string(suffix++);
        vals[kk] = v;
      } else {
        vals[k] = v;
      }
    }
    e["values"] = vals;
    e["pass"] = r.passed();
    e["wall_ms"] = r.wall_ms;
    j["reports"].push_back(e);
    all = all && r.passed();
  }
  j["all_pass"] = all;
  return j.dump(2) + "\n";
}

}  // namespace braidforge
