#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "braidforge/presentation.hpp"

namespace braidforge {

/// Finitely generated abelian group Z^free_rank x Z/d1 x ... (no
/// divisibility requirement on the torsion entries of a target).
struct AbelianTarget {
  std::int64_t free_rank = 0;
  std::vector<std::int64_t> torsion;

  std::size_t components() const { return free_rank + torsion.size(); }
  bool finite() const { return free_rank == 0; }
  /// Group order; only valid for finite targets.
  std::int64_t order() const;
};

/// Element of an AbelianTarget: one integer per component, torsion
/// components reduced mod their modulus.
using Tuple = std::vector<std::int64_t>;

/// Surjection of a finitely presented group onto an abelian target,
/// validated at construction: every relator maps to zero and the generator
/// images generate the target.
class QuotientMap {
 public:
  static QuotientMap make(Presentation source, AbelianTarget target,
                          std::vector<Tuple> images);

  const Presentation& source() const { return source_; }
  const AbelianTarget& target() const { return target_; }
  const std::vector<Tuple>& images() const { return images_; }

  Tuple image(Symbol g) const;
  Tuple image(const Word& w) const;
  Tuple reduce(Tuple t) const;
  Tuple zero() const { return Tuple(target_.components(), 0); }
  bool in_kernel(const Word& w) const { return image(w) == zero(); }

 private:
  QuotientMap(Presentation source, AbelianTarget target,
              std::vector<Tuple> images)
      : source_(std::move(source)),
        target_(std::move(target)),
        images_(std::move(images)) {}

  Presentation source_;
  AbelianTarget target_;
  std::vector<Tuple> images_;
};

/// The ready-made maps the derivation pipeline uses: every sigma generator
/// to the first coordinate, every rho generator to the second.
QuotientMap welded_abelianization_quotient(const Presentation& p);  // Z x Z/2
QuotientMap flat_abelianization_quotient(const Presentation& p);    // Z/2 x Z/2

/// Coset handle. Finite tables use index (a = 0..N-1, b unused); the graded
/// Z x Z/2 transversal uses the exact pair a = m, b = eps.
struct Coset {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(Coset x, Coset y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(Coset x, Coset y) { return !(x == y); }
  friend bool operator<(Coset x, Coset y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
};

/// Closed coset action table for a finite-index kernel: cosets 0..N-1 with
/// 0 the kernel coset; built directly from the quotient map images (no
/// enumeration search is needed for abelian targets).
class CosetTable {
 public:
  std::size_t size() const { return size_; }
  /// Action of generator gi (by position) with the given sign.
  std::size_t act(std::size_t coset, std::size_t gen_index, int sign) const;
  std::string str(const Presentation& p) const;

 private:
  friend std::pair<CosetTable, class Transversal> coset_table(
      const QuotientMap& q);
  std::size_t size_ = 0;
  std::size_t gens_ = 0;
  std::vector<std::size_t> action_;  // [coset * 2*gens + 2*gi + (sign<0)]
};

/// Schreier transversal: prefix-closed coset representatives, either for a
/// finite table or the graded Z x Z/2 kernel where rep(m, eps) is
/// sigma1^m rho1^eps for all m (exact; the window only bounds which
/// conjugators later rewriting instantiates).
class Transversal {
 public:
  enum class Kind { Finite, GradedZxZ2 };

  Kind kind() const { return kind_; }
  std::int64_t window() const { return window_; }
  std::size_t size() const;  // finite only
  const std::vector<Coset>& cosets() const;  // finite only, table order

  Coset identity_coset() const { return Coset{0, 0}; }
  Word rep(Coset c) const;
  Coset coset_of_tuple(const Tuple& t) const;
  std::string coset_label(Coset c) const;

 private:
  friend std::pair<CosetTable, Transversal> coset_table(const QuotientMap& q);
  friend Transversal graded_transversal(const QuotientMap& q,
                                        std::int64_t window);

  Kind kind_ = Kind::Finite;
  std::int64_t window_ = 0;
  // finite:
  std::vector<Word> reps_;
  std::vector<Coset> coset_list_;
  std::map<Tuple, std::size_t> index_of_tuple_;
  // graded:
  Symbol sigma1_ = Symbol::intern("s1");
  Symbol rho1_ = Symbol::intern("r1");
};

std::pair<CosetTable, Transversal> coset_table(const QuotientMap& q);
Transversal graded_transversal(const QuotientMap& q, std::int64_t window);

Coset coset_of(const Transversal& t, const QuotientMap& q, const Word& w);
/// Coset reached from c by one letter g^sign.
Coset coset_step(const Transversal& t, const QuotientMap& q, Coset c,
                 Symbol g, int sign);

}  // namespace braidforge
