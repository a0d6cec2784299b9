#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidforge/quotient.hpp"

namespace braidforge {

/// Subgroup generator S_{lambda,a} = (lambda a)(rep(lambda a))^-1 for a coset
/// representative lambda and an ambient letter a. The expansion is the exact
/// free word (formal inverses, freely reduced); it is trivial when lambda a
/// is freely equal to its representative.
struct SchreierGenerator {
  std::string label;
  Coset coset;
  Symbol letter = Symbol::intern("1");
  Word expansion;
  bool trivial = false;
  Symbol symbol = Symbol::intern("1");
};

/// Canonical graded label alpha[k,eps,i] / beta[k,eps,i].
struct GradedLabel {
  bool beta = false;
  std::int64_t k = 0;
  int eps = 0;
  int index = 0;
};

std::string graded_label_name(const GradedLabel& l);
std::optional<GradedLabel> parse_graded_label(std::string_view name);

/// The rewriting process: scans a kernel word letter by letter, tracking the
/// current coset, and emits one Schreier generator per letter (coset before
/// the letter for positive letters, after it for negative ones). Freely
/// trivial generators are erased eagerly.
class Rewriter {
 public:
  Rewriter(QuotientMap q, Transversal t);

  const QuotientMap& quotient() const { return q_; }
  const Transversal& transversal() const { return t_; }

  SchreierGenerator schreier(Coset c, Symbol letter) const;
  /// All generator slots in canonical order: finite tables emit every
  /// (coset, letter) pair; the graded case emits |m| <= window + L where L
  /// is the largest coordinate shift any relator prefix attains.
  std::vector<SchreierGenerator> enumerate() const;
  /// Largest |m|-shift over all proper prefixes of the source relators.
  std::int64_t max_shift() const { return shift_; }

  Word tau(const Word& w) const;

 private:
  std::string label_for(Coset c, Symbol letter) const;

  QuotientMap q_;
  Transversal t_;
  std::int64_t shift_ = 0;
  bool lettered_labels_ = false;  // index-4 transversal {1, s1, r1, s1 r1}
};

struct RelatorOrigin {
  std::size_t source_index;  // relator of the ambient presentation
  Word conjugator;           // lambda
  Word tau_word;             // tau(lambda r lambda^-1) before cyclic reduction
};

/// Presentation of the kernel subgroup produced by rewriting all conjugates
/// lambda r lambda^-1 of the ambient relators by the in-scope transversal
/// representatives. Relators are cyclically reduced and deduplicated up to
/// rotation and inversion; origins keep the first witness.
struct DerivedPresentation {
  Presentation base;
  std::vector<SchreierGenerator> schreier;
  std::vector<std::string> trivial_labels;
  std::vector<RelatorOrigin> origins;
  QuotientMap quotient;
  Transversal transversal;

  std::size_t slot_count() const { return schreier.size(); }
  const SchreierGenerator* find_label(std::string_view label) const;
};

DerivedPresentation derived_presentation(const QuotientMap& q,
                                         const Transversal& t);

/// Replaces every Schreier label in a word over the derived generators by
/// its expansion and freely reduces; the result is a word in the ambient
/// generators. Expanding a derived relator recovers the originating
/// conjugate (the telescoping identity).
Word expand_labels(const DerivedPresentation& dp, const Word& label_word);

}  // namespace braidforge
