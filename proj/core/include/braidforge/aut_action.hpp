#pragma once

#include <vector>

#include "braidforge/word.hpp"

namespace braidforge {

/// Free basis x1..xn of F_n.
struct FreeBasis {
  int rank = 0;
  std::vector<Symbol> symbols;

  static FreeBasis standard(int rank);
  friend bool operator==(const FreeBasis& a, const FreeBasis& b) {
    return a.rank == b.rank && a.symbols == b.symbols;
  }
};

/// Endomorphism of a free group, given by the images of the basis.
class FreeGroupEndo {
 public:
  static FreeGroupEndo identity(const FreeBasis& basis);
  FreeGroupEndo(FreeBasis basis, std::vector<Word> images);

  const FreeBasis& basis() const { return basis_; }
  const std::vector<Word>& images() const { return images_; }

  /// Letterwise image of a word over the basis.
  Word apply(const Word& w) const;
  bool is_identity() const;

  friend bool operator==(const FreeGroupEndo& a, const FreeGroupEndo& b) {
    return a.basis_ == b.basis_ && a.images_ == b.images_;
  }

 private:
  FreeBasis basis_;
  std::vector<Word> images_;
};

enum class CompositionOrder { LeftToRight, RightToLeft };

/// compose(f, g)(x) = the images of g substituted into f(x); i.e. f acts
/// first, then g. This is the left-to-right convention words use below.
FreeGroupEndo compose(const FreeGroupEndo& f, const FreeGroupEndo& g);

/// Action of sigma_i (x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i) or rho_i
/// (x_i <-> x_{i+1}); rejects indices past the basis rank.
FreeGroupEndo generator_action(Symbol g, const FreeBasis& basis);
FreeGroupEndo generator_action_inverse(Symbol g, const FreeBasis& basis);

FreeGroupEndo action_of_word(
    const Word& w, const FreeBasis& basis,
    CompositionOrder order = CompositionOrder::LeftToRight);

/// Exact word problem oracle for the welded braid group on `strands`
/// strands, through the faithful action on F_n. The negative direction is
/// exact by construction; the positive direction leans on faithfulness of
/// the permutation-conjugacy action, which is a cited theorem, not
/// something this code proves.
bool is_identity_in_wb(const Word& w, int strands,
                       CompositionOrder order = CompositionOrder::LeftToRight);

/// Self-diagnosing convention pin: returns the composition order under
/// which every catalog relator of the welded family acts trivially while
/// sigma_1^2 does not. Throws if neither order validates.
CompositionOrder resolve_composition_order(int strands);

}  // namespace braidforge
