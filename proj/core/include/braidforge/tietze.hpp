#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "braidforge/presentation.hpp"

namespace braidforge {

/// Eliminate a generator through a relator in which it occurs exactly once
/// with exponent +-1 (checked at application time).
struct MoveEliminate {
  Symbol gen;
  std::size_t relator_index = 0;
};

/// Add a relator together with the derivation witnessing it: the word must
/// freely equal the product of the listed conjugated relators.
struct MoveAddRelator {
  struct Factor {
    std::size_t relator_index = 0;
    int sign = 1;
    Word conjugator;
  };
  Word relator;
  std::vector<Factor> derivation;
};

/// Remove a relator that duplicates another one up to rotation/inversion.
struct MoveRemoveRelator {
  std::size_t index = 0;
};

/// Deduplicate relators up to rotation and inversion (first witness kept).
struct MoveSimplify {};

using TietzeMove =
    std::variant<MoveEliminate, MoveAddRelator, MoveRemoveRelator,
                 MoveSimplify>;

struct TietzeScript {
  std::string name;
  std::vector<TietzeMove> moves;
};

struct TietzeOptions {
  /// Recompute abelian invariants after every move and fail loudly on a
  /// mismatch. Off by default; property tests switch it on.
  bool check_invariants = false;
};

Presentation apply_move(const Presentation& p, const TietzeMove& move,
                        const TietzeOptions& opts = {});

/// Shortest single-occurrence relator for g, if any: (index, length).
std::optional<std::pair<std::size_t, std::int64_t>> defining_relator(
    const Presentation& p, Symbol g);

struct SimplifyResult {
  Presentation presentation;
  TietzeScript script;
};

/// Heuristic driver: greedy generator elimination, shortest defining relator
/// first, only length-nonincreasing substitutions, at most `budget` moves.
SimplifyResult simplify(const Presentation& p, std::size_t budget);

/// Generator pattern over graded labels (alpha[k,eps,i] / beta[k,eps,i]) or
/// lettered labels (e.g. c3). Conditions per field: *, N, !=N, >=N, <=N.
struct GenPattern {
  std::string text;
  bool matches(Symbol g) const;
};

/// One line of a script file: a concrete move, or the pattern directive
/// `eliminate-where <pattern>` that expands against the presentation it is
/// replayed on.
struct ScriptStep {
  enum class Kind { Eliminate, EliminateWhere, AddRelator, RemoveRelator,
                    Simplify };
  Kind kind;
  // Eliminate
  std::string gen_name;
  std::optional<std::size_t> relator_index;
  // EliminateWhere
  GenPattern pattern;
  // AddRelator
  Word relator;
  std::vector<MoveAddRelator::Factor> derivation;
  // RemoveRelator
  std::size_t index = 0;
};

struct ParsedScript {
  std::string name;
  std::vector<ScriptStep> steps;
};

ParsedScript parse_script(std::string_view text, std::string name = "");
std::string serialize_script(const TietzeScript& script);

struct ReplayResult {
  Presentation presentation;
  TietzeScript executed;
  /// Generators a pattern step matched but could not eliminate (typically
  /// window-boundary artifacts); reported, never fatal.
  std::vector<Symbol> boundary;
};

ReplayResult replay_script(const Presentation& p, const ParsedScript& script,
                           const TietzeOptions& opts = {});

/// The guided elimination scripts shipped with the project, keyed by file
/// name (lemma-2.3.tz, lemma-2.4.tz, lemma-3.4-fvb.tz, lemma-3.4-fwb.tz).
const std::map<std::string, std::string>& builtin_scripts();

}  // namespace braidforge
