#include "braidforge/tietze.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <tuple>

#include "braidforge/abelianize.hpp"
#include "braidforge/errors.hpp"
#include "braidforge/rewriting.hpp"

namespace braidforge {

namespace {

Presentation eliminate(const Presentation& p, const MoveEliminate& m) {
  auto gi = p.generator_index(m.gen);
  if (!gi)
    throw TietzeError("UnknownGenerator: '" + m.gen.name() + "'");
  if (m.relator_index >= p.relators().size())
    throw TietzeError("relator index out of range");
  const Word& r = p.relators()[m.relator_index];
  if (r.occurrences(m.gen) != 1)
    throw TietzeError("NotSolvable: '" + m.gen.name() +
                      "' does not occur exactly once with exponent +-1 in "
                      "relator " +
                      std::to_string(m.relator_index));
  const auto& syls = r.syllables();
  std::size_t pos = 0;
  while (syls[pos].gen != m.gen) ++pos;
  std::int64_t e = syls[pos].exp;
  Word suffix = Word::from_syllables(
      {syls.begin() + static_cast<std::ptrdiff_t>(pos) + 1, syls.end()});
  Word prefix = Word::from_syllables(
      {syls.begin(), syls.begin() + static_cast<std::ptrdiff_t>(pos)});
  Word rest = suffix * prefix;  // r ~ g^e * rest as a cyclic word
  Word replacement = e > 0 ? rest.inverse() : rest;

  std::vector<Symbol> gens;
  for (Symbol g : p.generators())
    if (g != m.gen) gens.push_back(g);
  std::vector<Word> relators;
  std::vector<std::string> labels;
  const bool labeled = !p.labels().empty();
  for (std::size_t j = 0; j < p.relators().size(); ++j) {
    if (j == m.relator_index) continue;
    Word sub =
        p.relators()[j].substituted(m.gen, replacement).cyclically_reduced();
    if (sub.is_identity()) continue;
    relators.push_back(std::move(sub));
    if (labeled) labels.push_back(p.labels()[j]);
  }
  return Presentation(p.name(), std::move(gens), std::move(relators),
                      std::move(labels));
}

Presentation add_relator(const Presentation& p, const MoveAddRelator& m) {
  Word prod;
  for (const MoveAddRelator::Factor& f : m.derivation) {
    if (f.relator_index >= p.relators().size())
      throw TietzeError("add-relator derivation index out of range");
    Word c = conjugate(f.conjugator, p.relators()[f.relator_index]);
    prod = prod * (f.sign < 0 ? c.inverse() : c);
  }
  if (prod != m.relator)
    throw TietzeError("add-relator derivation does not prove the word '" +
                      to_string(m.relator) + "'");
  std::vector<Word> relators = p.relators();
  relators.push_back(m.relator);
  std::vector<std::string> labels = p.labels();
  if (!labels.empty()) labels.emplace_back();
  return Presentation(p.name(), p.generators(), std::move(relators),
                      std::move(labels));
}

Presentation remove_relator(const Presentation& p,
                            const MoveRemoveRelator& m) {
  if (m.index >= p.relators().size())
    throw TietzeError("remove-relator index out of range");
  auto key = cyclic_key(p.relators()[m.index]);
  bool redundant = false;
  for (std::size_t j = 0; j < p.relators().size() && !redundant; ++j)
    if (j != m.index && cyclic_key(p.relators()[j]) == key) redundant = true;
  if (!redundant)
    throw TietzeError("relator " + std::to_string(m.index) +
                      " is not a duplicate; refusing to remove");
  std::vector<Word> relators;
  std::vector<std::string> labels;
  const bool labeled = !p.labels().empty();
  for (std::size_t j = 0; j < p.relators().size(); ++j) {
    if (j == m.index) continue;
    relators.push_back(p.relators()[j]);
    if (labeled) labels.push_back(p.labels()[j]);
  }
  return Presentation(p.name(), p.generators(), std::move(relators),
                      std::move(labels));
}

Presentation simplify_relators(const Presentation& p) {
  std::set<std::vector<std::pair<std::uint32_t, std::int64_t>>> seen;
  std::vector<Word> relators;
  std::vector<std::string> labels;
  const bool labeled = !p.labels().empty();
  for (std::size_t j = 0; j < p.relators().size(); ++j) {
    if (!seen.insert(cyclic_key(p.relators()[j])).second) continue;
    relators.push_back(p.relators()[j]);
    if (labeled) labels.push_back(p.labels()[j]);
  }
  return Presentation(p.name(), p.generators(), std::move(relators),
                      std::move(labels));
}

}  // namespace

Presentation apply_move(const Presentation& p, const TietzeMove& move,
                        const TietzeOptions& opts) {
  Presentation out = std::visit(
      [&](const auto& m) -> Presentation {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, MoveEliminate>)
          return eliminate(p, m);
        else if constexpr (std::is_same_v<T, MoveAddRelator>)
          return add_relator(p, m);
        else if constexpr (std::is_same_v<T, MoveRemoveRelator>)
          return remove_relator(p, m);
        else
          return simplify_relators(p);
      },
      move);
  if (opts.check_invariants &&
      abelian_invariants(p) != abelian_invariants(out))
    throw InternalError("Tietze move changed the abelian invariants");
  return out;
}

std::optional<std::pair<std::size_t, std::int64_t>> defining_relator(
    const Presentation& p, Symbol g) {
  std::optional<std::pair<std::size_t, std::int64_t>> best;
  for (std::size_t j = 0; j < p.relators().size(); ++j) {
    if (p.relators()[j].occurrences(g) != 1) continue;
    std::int64_t len = p.relators()[j].length();
    if (!best || len < best->second) best = {{j, len}};
  }
  return best;
}

SimplifyResult simplify(const Presentation& p, std::size_t budget) {
  SimplifyResult out{p, {"auto", {}}};
  auto dedup = [&]() {
    if (out.script.moves.size() >= budget) return;
    std::set<std::vector<std::pair<std::uint32_t, std::int64_t>>> keys;
    for (const Word& r : out.presentation.relators())
      if (!keys.insert(cyclic_key(r)).second) {
        out.presentation = apply_move(out.presentation, MoveSimplify{});
        out.script.moves.emplace_back(MoveSimplify{});
        return;
      }
  };
  dedup();
  while (out.script.moves.size() < budget) {
    const Presentation& cur = out.presentation;
    // (delta, relator length, generator position, relator index)
    std::optional<std::tuple<std::int64_t, std::int64_t, std::size_t,
                             std::size_t>>
        best;
    Symbol best_gen = Symbol::intern("1");
    for (std::size_t gp = 0; gp < cur.generators().size(); ++gp) {
      Symbol g = cur.generators()[gp];
      std::int64_t occ_total = 0;
      for (const Word& r : cur.relators())
        occ_total = checked_add(occ_total, r.occurrences(g));
      for (std::size_t j = 0; j < cur.relators().size(); ++j) {
        if (cur.relators()[j].occurrences(g) != 1) continue;
        std::int64_t len = cur.relators()[j].length();
        std::int64_t delta = (len - 2) * (occ_total - 1) - len;
        std::tuple<std::int64_t, std::int64_t, std::size_t, std::size_t> cand{
            delta, len, gp, j};
        if (!best || cand < *best) {
          best = cand;
          best_gen = g;
        }
      }
    }
    if (!best || std::get<0>(*best) > 0) break;
    out.presentation = apply_move(
        out.presentation, MoveEliminate{best_gen, std::get<3>(*best)});
    out.script.moves.emplace_back(MoveEliminate{best_gen, std::get<3>(*best)});
    dedup();
  }
  return out;
}

namespace {

struct Cond {
  enum class Op { Any, Eq, Ne, Ge, Le } op = Op::Any;
  std::int64_t value = 0;

  bool check(std::int64_t x) const {
    switch (op) {
      case Op::Any: return true;
      case Op::Eq: return x == value;
      case Op::Ne: return x != value;
      case Op::Ge: return x >= value;
      case Op::Le: return x <= value;
    }
    return false;
  }
};

Cond parse_cond(std::string_view s) {
  Cond c;
  if (s == "*") return c;
  if (s.rfind("!=", 0) == 0) {
    c.op = Cond::Op::Ne;
    s.remove_prefix(2);
  } else if (s.rfind(">=", 0) == 0) {
    c.op = Cond::Op::Ge;
    s.remove_prefix(2);
  } else if (s.rfind("<=", 0) == 0) {
    c.op = Cond::Op::Le;
    s.remove_prefix(2);
  } else {
    c.op = Cond::Op::Eq;
  }
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), c.value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw TietzeError("bad pattern condition '" + std::string(s) + "'");
  return c;
}

struct PatternSpec {
  std::string stem;
  std::vector<Cond> conds;
};

PatternSpec parse_pattern(const std::string& text) {
  auto open = text.find('[');
  if (open == std::string::npos || text.back() != ']')
    throw TietzeError("bad generator pattern '" + text + "'");
  PatternSpec spec;
  spec.stem = text.substr(0, open);
  std::string inner = text.substr(open + 1, text.size() - open - 2);
  std::size_t start = 0;
  while (true) {
    std::size_t comma = inner.find(',', start);
    std::string piece = comma == std::string::npos
                            ? inner.substr(start)
                            : inner.substr(start, comma - start);
    spec.conds.push_back(parse_cond(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return spec;
}

std::optional<std::int64_t> lettered_index(const std::string& name,
                                           const std::string& stem) {
  if (name.size() <= stem.size() || name.rfind(stem, 0) != 0)
    return std::nullopt;
  std::int64_t idx = 0;
  for (std::size_t i = stem.size(); i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return std::nullopt;
    idx = idx * 10 + (name[i] - '0');
  }
  return idx;
}

// Elimination order: small |k| first so substitution chains walk outward.
std::tuple<std::int64_t, int, int, std::int64_t, int, std::string> sort_key(
    Symbol g) {
  if (auto l = parse_graded_label(g.name())) {
    return {l->k < 0 ? -l->k : l->k, l->k < 0 ? 1 : 0, l->beta ? 1 : 0,
            l->index, l->eps, g.name()};
  }
  return {0, 0, 0, 0, 0, g.name()};
}

}  // namespace

bool GenPattern::matches(Symbol g) const {
  PatternSpec spec = parse_pattern(text);
  if (spec.stem == "alpha" || spec.stem == "beta") {
    auto l = parse_graded_label(g.name());
    if (!l || (spec.stem == "beta") != l->beta) return false;
    if (spec.conds.size() != 3)
      throw TietzeError("graded pattern needs three conditions: '" + text +
                        "'");
    return spec.conds[0].check(l->k) && spec.conds[1].check(l->eps) &&
           spec.conds[2].check(l->index);
  }
  auto idx = lettered_index(g.name(), spec.stem);
  if (!idx) return false;
  if (spec.conds.size() != 1)
    throw TietzeError("lettered pattern needs one condition: '" + text + "'");
  return spec.conds[0].check(*idx);
}

ParsedScript parse_script(std::string_view text, std::string name) {
  ParsedScript script;
  script.name = std::move(name);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;
    ScriptStep step;
    if (tok[0] == "eliminate-where" && tok.size() == 2) {
      step.kind = ScriptStep::Kind::EliminateWhere;
      step.pattern.text = tok[1];
    } else if (tok[0] == "eliminate" && tok.size() >= 2) {
      step.kind = ScriptStep::Kind::Eliminate;
      step.gen_name = tok[1];
      if (tok.size() == 4 && tok[2] == "via") {
        step.relator_index = std::stoul(tok[3]);
      } else if (tok.size() != 2) {
        throw TietzeError("bad script line: '" + line + "'");
      }
    } else if (tok[0] == "remove-relator" && tok.size() == 2) {
      step.kind = ScriptStep::Kind::RemoveRelator;
      step.index = std::stoul(tok[1]);
    } else if (tok[0] == "simplify-relators" && tok.size() == 1) {
      step.kind = ScriptStep::Kind::Simplify;
    } else if (tok[0] == "add-relator") {
      step.kind = ScriptStep::Kind::AddRelator;
      std::size_t via = 1;
      while (via < tok.size() && tok[via] != "via") ++via;
      if (via == tok.size())
        throw TietzeError("add-relator needs a 'via' derivation: '" + line +
                          "'");
      std::string word_text;
      for (std::size_t i = 1; i < via; ++i)
        word_text += (i > 1 ? " " : "") + tok[i];
      step.relator = parse_word(word_text);
      std::string deriv;
      for (std::size_t i = via + 1; i < tok.size(); ++i)
        deriv += (i > via + 1 ? " " : "") + tok[i];
      std::size_t start = 0;
      while (start <= deriv.size()) {
        std::size_t semi = deriv.find(';', start);
        std::string part = semi == std::string::npos
                               ? deriv.substr(start)
                               : deriv.substr(start, semi - start);
        if (!part.empty()) {
          auto c1 = part.find(':');
          auto c2 = part.find(':', c1 + 1);
          if (c1 == std::string::npos || c2 == std::string::npos)
            throw TietzeError("bad derivation factor '" + part + "'");
          MoveAddRelator::Factor f;
          f.relator_index = std::stoul(part.substr(0, c1));
          f.sign = std::stoi(part.substr(c1 + 1, c2 - c1 - 1));
          f.conjugator = parse_word(part.substr(c2 + 1));
          step.derivation.push_back(std::move(f));
        }
        if (semi == std::string::npos) break;
        start = semi + 1;
      }
    } else {
      throw TietzeError("bad script line: '" + line + "'");
    }
    script.steps.push_back(std::move(step));
  }
  return script;
}

std::string serialize_script(const TietzeScript& script) {
  std::ostringstream os;
  for (const TietzeMove& m : script.moves) {
    std::visit(
        [&](const auto& mv) {
          using T = std::decay_t<decltype(mv)>;
          if constexpr (std::is_same_v<T, MoveEliminate>) {
            os << "eliminate " << mv.gen.name() << " via "
               << mv.relator_index << '\n';
          } else if constexpr (std::is_same_v<T, MoveAddRelator>) {
            os << "add-relator " << to_string(mv.relator) << " via ";
            for (std::size_t i = 0; i < mv.derivation.size(); ++i) {
              const auto& f = mv.derivation[i];
              if (i) os << ';';
              os << f.relator_index << ':' << f.sign << ':'
                 << to_string(f.conjugator);
            }
            os << '\n';
          } else if constexpr (std::is_same_v<T, MoveRemoveRelator>) {
            os << "remove-relator " << mv.index << '\n';
          } else {
            os << "simplify-relators\n";
          }
        },
        m);
  }
  return os.str();
}

ReplayResult replay_script(const Presentation& p, const ParsedScript& script,
                           const TietzeOptions& opts) {
  ReplayResult out{p, {script.name, {}}, {}};
  std::set<std::uint32_t> boundary_ids;
  for (std::size_t si = 0; si < script.steps.size(); ++si) {
    const ScriptStep& step = script.steps[si];
    try {
      switch (step.kind) {
        case ScriptStep::Kind::Eliminate: {
          auto g = out.presentation.generator_named(step.gen_name);
          if (!g)
            throw TietzeError("UnknownGenerator: '" + step.gen_name + "'");
          std::size_t idx;
          if (step.relator_index) {
            idx = *step.relator_index;
          } else {
            auto def = defining_relator(out.presentation, *g);
            if (!def)
              throw TietzeError("NotSolvable: no defining relator for '" +
                                step.gen_name + "'");
            idx = def->first;
          }
          MoveEliminate mv{*g, idx};
          out.presentation = apply_move(out.presentation, mv, opts);
          out.executed.moves.emplace_back(mv);
          break;
        }
        case ScriptStep::Kind::EliminateWhere: {
          for (;;) {
            std::vector<Symbol> matches;
            for (Symbol g : out.presentation.generators())
              if (step.pattern.matches(g)) matches.push_back(g);
            std::sort(matches.begin(), matches.end(),
                      [](Symbol a, Symbol b) { return sort_key(a) < sort_key(b); });
            bool progress = false;
            for (Symbol g : matches) {
              if (!out.presentation.generator_index(g)) continue;
              auto def = defining_relator(out.presentation, g);
              if (!def) continue;
              MoveEliminate mv{g, def->first};
              out.presentation = apply_move(out.presentation, mv, opts);
              out.executed.moves.emplace_back(mv);
              progress = true;
            }
            if (!progress) break;
          }
          for (Symbol g : out.presentation.generators())
            if (step.pattern.matches(g) && boundary_ids.insert(g.id()).second)
              out.boundary.push_back(g);
          break;
        }
        case ScriptStep::Kind::AddRelator: {
          MoveAddRelator mv{step.relator, step.derivation};
          out.presentation = apply_move(out.presentation, mv, opts);
          out.executed.moves.emplace_back(std::move(mv));
          break;
        }
        case ScriptStep::Kind::RemoveRelator: {
          MoveRemoveRelator mv{step.index};
          out.presentation = apply_move(out.presentation, mv, opts);
          out.executed.moves.emplace_back(mv);
          break;
        }
        case ScriptStep::Kind::Simplify: {
          out.presentation = apply_move(out.presentation, MoveSimplify{}, opts);
          out.executed.moves.emplace_back(MoveSimplify{});
          break;
        }
      }
    } catch (const Error& e) {
      throw TietzeError("MoveInvalid at step " + std::to_string(si + 1) +
                        ": " + e.what());
    }
  }
  return out;
}

const std::map<std::string, std::string>& builtin_scripts() {
  static const std::map<std::string, std::string> scripts = {
      {"lemma-2.3.tz",
       "# Reduce a windowed derived welded presentation to the generators\n"
       "# alpha[0,1,1], alpha[0,0,2], alpha[1,0,2], beta[0,0,2],\n"
       "# alpha[0,0,r], beta[0,0,r] (r >= 3), up to window-boundary leftovers.\n"
       "eliminate-where beta[*,1,1]\n"
       "eliminate-where alpha[*,1,>=3]\n"
       "eliminate-where alpha[!=0,0,>=3]\n"
       "eliminate-where beta[*,1,>=3]\n"
       "eliminate-where alpha[*,1,2]\n"
       "eliminate-where alpha[!=0,1,1]\n"
       "eliminate-where beta[*,1,2]\n"
       "eliminate-where beta[!=0,0,2]\n"
       "eliminate-where alpha[>=2,0,2]\n"
       "eliminate-where alpha[<=-1,0,2]\n"
       "eliminate-where beta[!=0,0,>=3]\n"
       "simplify-relators\n"},
      {"lemma-2.4.tz",
       "# Alternative elimination for wide presentations (six or more sigma\n"
       "# generators): reduces to beta[0,0,2], beta[0,0,r], alpha[0,0,r]\n"
       "# (r >= 3), up to window-boundary leftovers.\n"
       "eliminate-where beta[*,1,1]\n"
       "eliminate-where alpha[*,1,>=3]\n"
       "eliminate-where alpha[!=0,0,>=3]\n"
       "eliminate-where beta[*,1,>=3]\n"
       "eliminate-where alpha[*,0,2]\n"
       "eliminate-where alpha[*,1,2]\n"
       "eliminate-where alpha[*,1,1]\n"
       "eliminate-where beta[!=0,0,>=3]\n"
       "eliminate-where beta[*,1,2]\n"
       "eliminate-where beta[!=0,0,2]\n"
       "simplify-relators\n"},
      {"lemma-3.4-fvb.tz",
       "# Index-4 flat virtual reduction to the generating set\n"
       "# c1, c2, f2, a_i, b_i (i >= 2).\n"
       "eliminate-where e[*]\n"
       "eliminate-where d[*]\n"
       "eliminate-where g[*]\n"
       "eliminate-where h[*]\n"
       "eliminate-where c[>=3]\n"
       "eliminate-where f[>=3]\n"
       "simplify-relators\n"},
      {"lemma-3.4-fwb.tz",
       "# Index-4 flat welded reduction to the generating set\n"
       "# c1, c2, f2, a_i, b_i (i >= 2).\n"
       "eliminate-where e[*]\n"
       "eliminate-where d[*]\n"
       "eliminate-where g[*]\n"
       "eliminate-where h[*]\n"
       "eliminate-where c[>=3]\n"
       "eliminate-where f[>=3]\n"
       "simplify-relators\n"},
  };
  return scripts;
}

}  // namespace braidforge
