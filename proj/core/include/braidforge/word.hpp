#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidforge/errors.hpp"

namespace braidforge {

/// Interned generator symbol. Identity is the interned id, so equality is a
/// single integer compare. An optional strand index carries the i of
/// sigma_i / rho_i style generators. Immutable and safe to share.
class Symbol {
 public:
  static Symbol intern(std::string_view name);
  static Symbol intern(std::string_view name, int strand);

  const std::string& name() const;
  std::optional<int> strand() const;
  std::uint32_t id() const { return id_; }

  friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
  friend bool operator!=(Symbol a, Symbol b) { return a.id_ != b.id_; }
  friend bool operator<(Symbol a, Symbol b) { return a.id_ < b.id_; }

 private:
  explicit Symbol(std::uint32_t id) : id_(id) {}
  std::uint32_t id_;
};

struct SymbolHash {
  std::size_t operator()(Symbol s) const noexcept {
    return std::hash<std::uint32_t>{}(s.id());
  }
};

/// One run g^e, e != 0.
struct Syllable {
  Symbol gen;
  std::int64_t exp;

  friend bool operator==(const Syllable& a, const Syllable& b) {
    return a.gen == b.gen && a.exp == b.exp;
  }
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_negate(std::int64_t a);

/// Freely reduced word in syllable (run-length) form. The empty word is the
/// identity. Words are immutable values; every operation returns a new word.
class Word {
 public:
  Word() = default;
  explicit Word(Symbol g, std::int64_t exp = 1);

  /// Free reduction of an arbitrary syllable list: merges adjacent runs of
  /// the same generator and drops vanishing ones, recursively.
  static Word from_syllables(std::vector<Syllable> raw);

  const std::vector<Syllable>& syllables() const { return syls_; }
  bool is_identity() const { return syls_.empty(); }
  std::size_t syllable_count() const { return syls_.size(); }
  /// Letter length: sum of |exponent|.
  std::int64_t length() const;

  Word inverse() const;
  Word pow(std::int64_t n) const;
  Word cyclically_reduced() const;

  /// Replaces every occurrence g^e by replacement^e (single left-to-right
  /// pass), then freely reduces. Unless single_pass is set, rejects a
  /// replacement containing g, which would describe a non-terminating
  /// rewrite.
  Word substituted(Symbol g, const Word& replacement,
                   bool single_pass = false) const;

  bool contains(Symbol g) const;
  /// Total number of letters of g (sum of |e| over syllables of g).
  std::int64_t occurrences(Symbol g) const;
  std::int64_t exponent_sum(Symbol g) const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.syls_ == b.syls_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

 private:
  std::vector<Syllable> syls_;
};

Word operator*(const Word& a, const Word& b);
/// by * w * by^-1 with genuine free-word inverses.
Word conjugate(const Word& by, const Word& w);

/// Text form: whitespace separated syllables, caret exponents, exponent 1
/// implied ("s1^2 r1 s2^-1"). The identity prints as the empty string.
std::string to_string(const Word& w);
Word parse_word(std::string_view text);

/// Canonical key of the cyclic word class of w under rotation and inversion;
/// equal keys <=> the cyclically reduced words are rotations of each other
/// or of each other's inverses.
std::vector<std::pair<std::uint32_t, std::int64_t>> cyclic_key(const Word& w);
bool cyclically_equal(const Word& a, const Word& b);

}  // namespace braidforge
