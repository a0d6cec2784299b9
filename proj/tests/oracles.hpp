#pragma once

// Test-only oracles, kept independent of the library code paths they check:
// determinants by cofactor expansion, Smith diagonals by gcds of minors.

#include <random>
#include <vector>

#include "braidforge/abelianize.hpp"
#include "braidforge/word.hpp"

namespace braidforge::testing {

inline BigInt cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  BigInt det = 0;
  int sign = 1;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    det += sign * m.at(0, j) * cofactor_det(minor);
    sign = -sign;
  }
  return det;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start,
                    std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Smith diagonal of small matrices via determinantal divisors:
/// D_k = gcd of all k x k minors, d_k = D_k / D_{k-1}. Entries past the
/// rank are omitted.
inline std::vector<BigInt> minors_gcd_diagonal(const IntMatrix& m) {
  std::vector<BigInt> out;
  BigInt prev = 1;
  std::size_t kmax = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    std::vector<std::vector<std::size_t>> rsets, csets;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rsets);
    subsets(m.cols(), k, 0, cur, csets);
    BigInt g = 0;
    for (const auto& rs : rsets) {
      for (const auto& cs : csets) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            sub.at(i, j) = m.at(rs[i], cs[j]);
        BigInt d = cofactor_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    }
    if (g == 0) break;  // rank reached
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim,
                               std::int64_t max_abs) {
  std::size_t rows = 1 + rng() % max_dim;
  std::size_t cols = 1 + rng() % max_dim;
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = static_cast<std::int64_t>(rng() % (2 * max_abs + 1)) -
                   max_abs;
  return m;
}

inline Word random_word(std::mt19937& rng, const std::vector<Symbol>& alphabet,
                        std::size_t max_syllables, std::int64_t max_exp = 3) {
  std::vector<Syllable> syls;
  std::size_t n = rng() % (max_syllables + 1);
  for (std::size_t i = 0; i < n; ++i) {
    Symbol g = alphabet[rng() % alphabet.size()];
    std::int64_t e = static_cast<std::int64_t>(rng() % (2 * max_exp + 1)) -
                     max_exp;
    syls.push_back({g, e});
  }
  return Word::from_syllables(std::move(syls));
}

}  // namespace braidforge::testing
