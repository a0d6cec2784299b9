#include "braidforge/abelianize.hpp"

#include <algorithm>

#include "braidforge/errors.hpp"

namespace braidforge {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(
    const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error("ragged row list");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const BigInt& bkj = b.at(k, j);
        if (bkj != 0) c.at(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(),
                     prev.get_mpz_t());
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : BigInt(-a.at(n - 1, n - 1));
}

namespace {

BigInt absval(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

struct SnfWork {
  IntMatrix d, u, v;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
  }
  // row[a] += f * row[b]
  void add_row(std::size_t a, std::size_t b, const BigInt& f) {
    for (std::size_t j = 0; j < d.cols(); ++j) d.at(a, j) += f * d.at(b, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) += f * u.at(b, j);
  }
  void add_col(std::size_t a, std::size_t b, const BigInt& f) {
    for (std::size_t i = 0; i < d.rows(); ++i) d.at(i, a) += f * d.at(i, b);
    for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, a) += f * v.at(i, b);
  }
  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < d.cols(); ++j) d.at(a, j) = -d.at(a, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
  }

  bool find_min_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < d.rows(); ++i) {
      for (std::size_t j = t; j < d.cols(); ++j) {
        if (d.at(i, j) == 0) continue;
        BigInt a = absval(d.at(i, j));
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    }
    return found;
  }
};

}  // namespace

std::vector<BigInt> SmithForm::diagonal() const {
  std::vector<BigInt> out;
  std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i) out.push_back(d.at(i, i));
  return out;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const BigInt& x : diagonal())
    if (x != 0) ++r;
  return r;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SnfWork w{a, IntMatrix::identity(m), IntMatrix::identity(n)};
  const std::size_t steps = std::min(m, n);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      std::size_t pi = t, pj = t;
      // Minimal-absolute-value pivoting keeps coefficients small.
      if (!w.find_min_pivot(t, pi, pj)) {
        t = steps;  // remainder is zero
        break;
      }
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);
      bool lone = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (w.d.at(i, t) == 0) continue;
        BigInt q = w.d.at(i, t) / w.d.at(t, t);
        if (q != 0) w.add_row(i, t, BigInt(-q));
        if (w.d.at(i, t) != 0) lone = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w.d.at(t, j) == 0) continue;
        BigInt q = w.d.at(t, j) / w.d.at(t, t);
        if (q != 0) w.add_col(j, t, BigInt(-q));
        if (w.d.at(t, j) != 0) lone = false;
      }
      if (!lone) continue;
      // Fold in any submatrix entry the pivot does not divide yet.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < m && divides_all; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (w.d.at(i, j) % w.d.at(t, t) != 0) {
            w.add_row(t, i, BigInt(1));
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
    if (t >= steps) break;
    if (w.d.at(t, t) < 0) w.negate_row(t);
  }
  for (std::size_t t = 0; t < steps; ++t)
    if (w.d.at(t, t) < 0) w.negate_row(t);

  SmithForm out{std::move(w.d), std::move(w.u), std::move(w.v)};
  // Postconditions: diagonal, divisibility chain, and U*A*V == D.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && out.d.at(i, j) != 0)
        throw InternalError("smith form is not diagonal");
  auto diag = out.diagonal();
  for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
    if (diag[i] == 0 && diag[i + 1] != 0)
      throw InternalError("smith form has a zero before a nonzero entry");
    if (diag[i] != 0 && diag[i + 1] % diag[i] != 0)
      throw InternalError("smith form divisibility chain violated");
  }
  if (!(multiply(multiply(out.u, a), out.v) == out.d))
    throw InternalError("smith form transform check U*A*V == D failed");
  return out;
}

RowSpaceChecker::RowSpaceChecker(const IntMatrix& a)
    : s_(smith_normal_form(a)), rows_(a.rows()), cols_(a.cols()) {}

bool RowSpaceChecker::contains(const std::vector<BigInt>& v) const {
  if (v.size() != cols_) throw Error("vector length mismatch");
  // x*A = v  <=>  y*D = v*V with y = x*U^{-1} ranging over all of Z^m.
  std::vector<BigInt> c(cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    BigInt acc = 0;
    for (std::size_t k = 0; k < cols_; ++k)
      if (v[k] != 0) acc += v[k] * s_.v.at(k, j);
    c[j] = acc;
  }
  const std::size_t steps = std::min(rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (j >= steps || s_.d.at(j, j) == 0) {
      if (c[j] != 0) return false;
    } else if (c[j] % s_.d.at(j, j) != 0) {
      return false;
    }
  }
  return true;
}

bool in_row_space(const IntMatrix& a, const std::vector<BigInt>& v) {
  return RowSpaceChecker(a).contains(v);
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), p.generators().size());
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    for (const Syllable& s : p.relators()[i].syllables()) {
      auto col = p.generator_index(s.gen);
      if (!col) throw InternalError("relator over undeclared generator");
      m.at(i, *col) += s.exp;
    }
  }
  return m;
}

AbelianInvariants invariants_from_smith(const SmithForm& s,
                                        std::size_t generator_count) {
  AbelianInvariants inv;
  std::size_t rank = s.rank();
  inv.free_rank = static_cast<std::int64_t>(generator_count - rank);
  for (const BigInt& d : s.diagonal()) {
    if (d > 1) {
      if (!d.fits_slong_p())
        throw OverflowError("torsion coefficient exceeds int64");
      inv.torsion.push_back(d.get_si());
    }
  }
  return inv;
}

AbelianInvariants abelian_invariants(const Presentation& p) {
  return invariants_from_smith(smith_normal_form(relation_matrix(p)),
                               p.generators().size());
}

bool is_perfect(const Presentation& p) {
  return abelian_invariants(p).trivial();
}

std::string AbelianInvariants::str() const {
  std::string out = "Z^" + std::to_string(free_rank);
  for (std::int64_t d : torsion) out += " x Z/" + std::to_string(d);
  return out;
}

}  // namespace braidforge
