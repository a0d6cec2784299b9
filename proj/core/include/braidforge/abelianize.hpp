#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "braidforge/presentation.hpp"

namespace braidforge {

using BigInt = mpz_class;

/// Dense exact integer matrix. Entries are arbitrary-precision, so matrix
/// arithmetic never wraps or loses exactness.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(
      const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const {
    return e_[r * cols_ + c];
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> e_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
/// Exact determinant of a square matrix (fraction-free elimination).
BigInt determinant(const IntMatrix& m);

/// U * A * V = D with U, V unimodular and D diagonal with the divisibility
/// chain d1 | d2 | ... ; validated before returning.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  std::vector<BigInt> diagonal() const;
  std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Whether v lies in the integer row space of a (exact membership).
bool in_row_space(const IntMatrix& a, const std::vector<BigInt>& v);

/// Factors the matrix once and answers many row-space membership queries.
class RowSpaceChecker {
 public:
  explicit RowSpaceChecker(const IntMatrix& a);
  bool contains(const std::vector<BigInt>& v) const;

 private:
  SmithForm s_;
  std::size_t rows_;
  std::size_t cols_;
};

/// One row per relator, one column per generator, entry = exponent sum.
IntMatrix relation_matrix(const Presentation& p);

/// Isomorphism invariants of a finitely generated abelian group: free rank
/// plus the torsion coefficient chain (each entry >= 2, each dividing the
/// next). Canonical print form: "Z^r x Z/d1 x Z/d2 ...".
struct AbelianInvariants {
  std::int64_t free_rank = 0;
  std::vector<std::int64_t> torsion;

  std::string str() const;
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianInvariants& a,
                         const AbelianInvariants& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
  friend bool operator!=(const AbelianInvariants& a,
                         const AbelianInvariants& b) {
    return !(a == b);
  }
};

AbelianInvariants invariants_from_smith(const SmithForm& s,
                                        std::size_t generator_count);
AbelianInvariants abelian_invariants(const Presentation& p);
bool is_perfect(const Presentation& p);

}  // namespace braidforge
