#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "braidforge/abelianize.hpp"
#include "braidforge/catalog.hpp"
#include "braidforge/presentation_io.hpp"
#include "braidforge/quotient.hpp"
#include "braidforge/tietze.hpp"
#include "oracles.hpp"

using namespace braidforge;

namespace {

Presentation two_gen() {
  return parse_presentation("gens: g h\nrels: g h^-1, h^3");
}

DerivedPresentation derive_flat(Family f, int n) {
  Presentation p = catalog({f, n});
  QuotientMap q = flat_abelianization_quotient(p);
  auto [table, t] = coset_table(q);
  (void)table;
  return derived_presentation(q, t);
}

}  // namespace

TEST_CASE("generator elimination") {
  Presentation p = two_gen();
  Presentation out =
      apply_move(p, MoveEliminate{Symbol::intern("g"), 0});
  CHECK(out.generators().size() == 1);
  CHECK(out.generators()[0].name() == "h");
  REQUIRE(out.relators().size() == 1);
  CHECK(to_string(out.relators()[0]) == "h^3");

  // Eliminating y through the relator y a x b leaves a three-generator
  // presentation.
  Presentation fvb3p = catalog({Family::PaperFVB3Prime, 3});
  Presentation left = apply_move(fvb3p, MoveEliminate{Symbol::intern("y"), 4});
  CHECK(left.generators().size() == 3);
  CHECK(abelian_invariants(left) == abelian_invariants(fvb3p));

  CHECK_THROWS_AS(apply_move(p, MoveEliminate{Symbol::intern("zz"), 0}),
                  TietzeError);
  // h occurs with exponent 3 in relator 1: not solvable there.
  CHECK_THROWS_AS(apply_move(p, MoveEliminate{Symbol::intern("h"), 1}),
                  TietzeError);
  Presentation sq = parse_presentation("gens: a b\nrels: a b a b^-1");
  CHECK_THROWS_AS(apply_move(sq, MoveEliminate{Symbol::intern("a"), 0}),
                  TietzeError);
}

TEST_CASE("elimination drops relators that collapse to the identity") {
  Presentation p = parse_presentation("gens: g h\nrels: g h^-1, h g^-1");
  Presentation out = apply_move(p, MoveEliminate{Symbol::intern("g"), 0});
  CHECK(out.generators().size() == 1);
  CHECK(out.relators().empty());
}

TEST_CASE("add and remove relator moves") {
  Presentation p = two_gen();
  // A conjugate of relator 0 is derivable.
  Word conj = conjugate(parse_word("h"), p.relators()[0]);
  Presentation added = apply_move(
      p, MoveAddRelator{conj, {{0, 1, parse_word("h")}}});
  CHECK(added.relators().size() == 3);
  CHECK_THROWS_AS(
      apply_move(p, MoveAddRelator{parse_word("h^5"),
                                   {{0, 1, parse_word("h")}}}),
      TietzeError);

  // The added relator is a rotation/inversion duplicate once reduced, so it
  // can be removed again.
  Presentation removed = apply_move(added, MoveRemoveRelator{2});
  CHECK(removed.relators().size() == 2);
  CHECK_THROWS_AS(apply_move(p, MoveRemoveRelator{1}), TietzeError);

  Presentation deduped = apply_move(added, MoveSimplify{});
  CHECK(deduped.relators().size() == 2);
}

TEST_CASE("moves preserve abelian invariants when checking is on") {
  TietzeOptions opts;
  opts.check_invariants = true;
  Presentation p = two_gen();
  CHECK_NOTHROW(apply_move(p, MoveEliminate{Symbol::intern("g"), 0}, opts));
}

TEST_CASE("automatic simplification") {
  Presentation p = parse_presentation("gens: x y\nrels: x y^-1, y^5");
  SimplifyResult r = simplify(p, 100);
  CHECK(r.presentation.generators().size() == 1);
  REQUIRE(r.presentation.relators().size() == 1);
  CHECK(r.presentation.relators()[0].length() == 5);

  Presentation single = parse_presentation("gens: g\nrels: g");
  SimplifyResult t = simplify(single, 100);
  CHECK(t.presentation.generators().empty());
  CHECK(t.presentation.relators().empty());

  // Regression: the derived flat-virtual commutator subgroup at three
  // strands simplifies to 4 generators within the default budget.
  DerivedPresentation dp = derive_flat(Family::FlatVirtualBraid, 3);
  SimplifyResult s = simplify(dp.base, 200);
  CHECK(s.presentation.generators().size() <= 8);
  CHECK(s.presentation.generators().size() == 4);
  CHECK(abelian_invariants(s.presentation) == abelian_invariants(dp.base));
  CHECK(s.script.moves.size() <= 200);

  // Budget zero leaves the presentation untouched.
  SimplifyResult gz = simplify(p, 0);
  CHECK(gz.presentation == p);
}

TEST_CASE("random move sequences preserve abelian invariants") {
  std::mt19937 rng(31337);
  TietzeOptions opts;
  opts.check_invariants = true;
  for (int trial = 0; trial < 60; ++trial) {
    // Random presentation on 4 generators.
    std::vector<Symbol> gens{Symbol::intern("a"), Symbol::intern("b"),
                             Symbol::intern("c"), Symbol::intern("d")};
    std::vector<Word> rels;
    for (int i = 0; i < 5; ++i) {
      Word w = testing::random_word(rng, gens, 6, 2).cyclically_reduced();
      if (!w.is_identity()) rels.push_back(w);
    }
    Presentation p("random", gens, rels);
    AbelianInvariants want = abelian_invariants(p);
    for (int step = 0; step < 4; ++step) {
      // Try a random elimination; fall back to simplify.
      Symbol g = p.generators().empty()
                     ? Symbol::intern("a")
                     : p.generators()[rng() % p.generators().size()];
      std::optional<std::pair<std::size_t, std::int64_t>> def;
      if (!p.generators().empty()) def = defining_relator(p, g);
      if (def)
        p = apply_move(p, MoveEliminate{g, def->first}, opts);
      else
        p = apply_move(p, MoveSimplify{}, opts);
      CHECK(abelian_invariants(p) == want);
    }
  }
}

TEST_CASE("eliminate then re-add keeps the invariants") {
  Presentation p = two_gen();
  AbelianInvariants before = abelian_invariants(p);
  Presentation out = apply_move(p, MoveEliminate{Symbol::intern("g"), 0});
  // Reintroduce g with its defining relator g h^-1.
  std::vector<Symbol> gens = out.generators();
  gens.push_back(Symbol::intern("g"));
  std::vector<Word> rels = out.relators();
  rels.push_back(parse_word("g h^-1"));
  Presentation readded("readded", gens, rels);
  CHECK(abelian_invariants(readded) == before);
}

TEST_CASE("script text round trip") {
  ParsedScript script = parse_script(
      "# comment\n"
      "eliminate g via 0\n"
      "eliminate-where beta[*,1,1]\n"
      "remove-relator 3\n"
      "simplify-relators\n"
      "add-relator g h^-1 via 0:1:h\n",
      "t");
  REQUIRE(script.steps.size() == 5);
  CHECK(script.steps[0].kind == ScriptStep::Kind::Eliminate);
  CHECK(script.steps[0].relator_index == 0);
  CHECK(script.steps[1].kind == ScriptStep::Kind::EliminateWhere);
  CHECK(script.steps[4].derivation.size() == 1);
  CHECK_THROWS_AS(parse_script("frobnicate\n", "t"), TietzeError);

  Presentation p = two_gen();
  ReplayResult rr = replay_script(p, parse_script("eliminate g\n", "t"));
  CHECK(rr.presentation.generators().size() == 1);
  std::string serialized = serialize_script(rr.executed);
  CHECK(serialized == "eliminate g via 0\n");

  ReplayResult empty = replay_script(p, parse_script("", "t"));
  CHECK(empty.presentation == p);
}

TEST_CASE("replay fails loudly with the step number") {
  Presentation p = two_gen();
  try {
    replay_script(p, parse_script("eliminate g\neliminate nosuch\n", "t"));
    CHECK(false);
  } catch (const TietzeError& e) {
    CHECK(std::string(e.what()).find("step 2") != std::string::npos);
  }
}

TEST_CASE("generator patterns") {
  GenPattern graded{"alpha[*,1,>=3]"};
  CHECK(graded.matches(Symbol::intern("alpha[5,1,3]")));
  CHECK(graded.matches(Symbol::intern("alpha[-2,1,4]")));
  CHECK(!graded.matches(Symbol::intern("alpha[0,0,3]")));
  CHECK(!graded.matches(Symbol::intern("beta[5,1,3]")));
  CHECK(!graded.matches(Symbol::intern("c3")));

  GenPattern neq{"beta[!=0,0,2]"};
  CHECK(neq.matches(Symbol::intern("beta[4,0,2]")));
  CHECK(!neq.matches(Symbol::intern("beta[0,0,2]")));

  GenPattern lettered{"e[*]"};
  CHECK(lettered.matches(Symbol::intern("e2")));
  CHECK(!lettered.matches(Symbol::intern("f2")));
  GenPattern c3{"c[>=3]"};
  CHECK(c3.matches(Symbol::intern("c4")));
  CHECK(!c3.matches(Symbol::intern("c2")));
}

TEST_CASE("flat elimination scripts reach the lemma generating set") {
  for (Family f : {Family::FlatVirtualBraid, Family::FlatWeldedBraid}) {
    for (int n : {3, 4, 5}) {
      DerivedPresentation dp = derive_flat(f, n);
      std::string name = f == Family::FlatWeldedBraid ? "lemma-3.4-fwb.tz"
                                                      : "lemma-3.4-fvb.tz";
      ReplayResult rr = replay_script(
          dp.base, parse_script(builtin_scripts().at(name), name));
      std::set<std::string> got;
      for (Symbol g : rr.presentation.generators()) got.insert(g.name());
      std::set<std::string> want{"c1", "c2", "f2"};
      for (int i = 2; i < n; ++i) {
        want.insert("a" + std::to_string(i));
        want.insert("b" + std::to_string(i));
      }
      CHECK(got == want);
      CHECK(rr.boundary.empty());
      CHECK(abelian_invariants(rr.presentation) ==
            abelian_invariants(dp.base));
    }
  }
}

TEST_CASE("shipped script files match the builtins") {
  for (const auto& [name, text] : builtin_scripts()) {
    std::ifstream in(std::string(BRAIDFORGE_SCRIPTS_DIR) + "/" + name,
                     std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    CHECK(os.str() == text);
  }
}
