#include "braidforge/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <mutex>
#include <unordered_map>

namespace braidforge {

namespace {

struct SymbolEntry {
  std::string name;
  std::optional<int> strand;
};

// Entries live in a deque so references handed out by Symbol::name() stay
// valid while other threads intern new symbols.
struct SymbolTable {
  std::mutex mutex;
  std::deque<SymbolEntry> entries;
  std::unordered_map<std::string, std::uint32_t> by_name;
};

SymbolTable& table() {
  static SymbolTable t;
  return t;
}

std::uint32_t intern_impl(std::string_view name, std::optional<int> strand) {
  if (name.empty()) throw Error("generator name must be nonempty");
  // Commas are legal only between brackets (graded labels alpha[k,eps,i]).
  int depth = 0;
  for (char c : name) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (std::isspace(static_cast<unsigned char>(c)) || c == '^' ||
        c == '(' || c == ')' || (c == ',' && depth == 0)) {
      throw Error("generator name contains a reserved character: '" +
                  std::string(name) + "'");
    }
  }
  if (depth != 0)
    throw Error("unbalanced brackets in generator name: '" +
                std::string(name) + "'");
  SymbolTable& t = table();
  std::lock_guard<std::mutex> lock(t.mutex);
  auto it = t.by_name.find(std::string(name));
  if (it != t.by_name.end()) {
    SymbolEntry& e = t.entries[it->second];
    if (strand && e.strand && *strand != *e.strand) {
      throw Error("conflicting strand index for generator '" +
                  std::string(name) + "'");
    }
    if (strand && !e.strand) e.strand = strand;
    return it->second;
  }
  auto id = static_cast<std::uint32_t>(t.entries.size());
  t.entries.push_back({std::string(name), strand});
  t.by_name.emplace(std::string(name), id);
  return id;
}

}  // namespace

Symbol Symbol::intern(std::string_view name) {
  return Symbol(intern_impl(name, std::nullopt));
}

Symbol Symbol::intern(std::string_view name, int strand) {
  return Symbol(intern_impl(name, strand));
}

const std::string& Symbol::name() const {
  SymbolTable& t = table();
  std::lock_guard<std::mutex> lock(t.mutex);
  return t.entries[id_].name;
}

std::optional<int> Symbol::strand() const {
  SymbolTable& t = table();
  std::lock_guard<std::mutex> lock(t.mutex);
  return t.entries[id_].strand;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer addition overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer multiplication overflow");
  return r;
}

std::int64_t checked_negate(std::int64_t a) {
  std::int64_t r;
  if (__builtin_sub_overflow(std::int64_t{0}, a, &r))
    throw OverflowError("integer negation overflow");
  return r;
}

Word::Word(Symbol g, std::int64_t exp) {
  if (exp != 0) syls_.push_back({g, exp});
}

Word Word::from_syllables(std::vector<Syllable> raw) {
  Word w;
  for (const Syllable& s : raw) {
    if (s.exp == 0) continue;
    if (!w.syls_.empty() && w.syls_.back().gen == s.gen) {
      w.syls_.back().exp = checked_add(w.syls_.back().exp, s.exp);
      if (w.syls_.back().exp == 0) w.syls_.pop_back();
    } else {
      w.syls_.push_back(s);
    }
  }
  return w;
}

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const Syllable& s : syls_)
    n = checked_add(n, s.exp < 0 ? checked_negate(s.exp) : s.exp);
  return n;
}

Word Word::inverse() const {
  Word r;
  r.syls_.reserve(syls_.size());
  for (auto it = syls_.rbegin(); it != syls_.rend(); ++it)
    r.syls_.push_back({it->gen, checked_negate(it->exp)});
  return r;
}

Word Word::pow(std::int64_t n) const {
  if (n == 0 || is_identity()) return Word();
  Word base = n < 0 ? inverse() : *this;
  std::int64_t count = n < 0 ? checked_negate(n) : n;
  // Syllable form handles proper powers of a single run in O(1).
  if (base.syls_.size() == 1) {
    Word r;
    r.syls_.push_back({base.syls_[0].gen, checked_mul(base.syls_[0].exp, count)});
    return r;
  }
  Word r;
  for (std::int64_t i = 0; i < count; ++i) r = r * base;
  return r;
}

Word Word::cyclically_reduced() const {
  Word w = *this;
  // Conjugating by the leading run moves it next to the trailing run of the
  // same generator; merging realizes the cyclic reduction.
  while (w.syls_.size() >= 2 && w.syls_.front().gen == w.syls_.back().gen) {
    w.syls_.back().exp = checked_add(w.syls_.back().exp, w.syls_.front().exp);
    w.syls_.erase(w.syls_.begin());
    if (w.syls_.back().exp == 0) w.syls_.pop_back();
  }
  return w;
}

Word Word::substituted(Symbol g, const Word& replacement,
                       bool single_pass) const {
  if (!single_pass && replacement.contains(g)) {
    throw Error("substitution target '" + g.name() +
                "' occurs in the replacement word; declare single-pass to "
                "allow this");
  }
  std::vector<Syllable> out;
  for (const Syllable& s : syls_) {
    if (s.gen == g) {
      Word piece = replacement.pow(s.exp);
      out.insert(out.end(), piece.syllables().begin(),
                 piece.syllables().end());
    } else {
      out.push_back(s);
    }
  }
  return from_syllables(std::move(out));
}

bool Word::contains(Symbol g) const {
  for (const Syllable& s : syls_)
    if (s.gen == g) return true;
  return false;
}

std::int64_t Word::occurrences(Symbol g) const {
  std::int64_t n = 0;
  for (const Syllable& s : syls_)
    if (s.gen == g)
      n = checked_add(n, s.exp < 0 ? checked_negate(s.exp) : s.exp);
  return n;
}

std::int64_t Word::exponent_sum(Symbol g) const {
  std::int64_t n = 0;
  for (const Syllable& s : syls_)
    if (s.gen == g) n = checked_add(n, s.exp);
  return n;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Syllable> raw;
  raw.reserve(a.syllables().size() + b.syllables().size());
  raw.insert(raw.end(), a.syllables().begin(), a.syllables().end());
  raw.insert(raw.end(), b.syllables().begin(), b.syllables().end());
  return Word::from_syllables(std::move(raw));
}

Word conjugate(const Word& by, const Word& w) {
  return by * w * by.inverse();
}

std::string to_string(const Word& w) {
  std::string out;
  for (const Syllable& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += s.gen.name();
    if (s.exp != 1) {
      out += '^';
      out += std::to_string(s.exp);
    }
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<Syllable> raw;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::string_view token = text.substr(start, i - start);
    std::int64_t exp = 1;
    std::size_t caret = token.rfind('^');
    std::string_view name = token;
    if (caret != std::string_view::npos) {
      name = token.substr(0, caret);
      std::string_view digits = token.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(
          digits.data(), digits.data() + digits.size(), exp);
      if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw Error("bad exponent in word token '" + std::string(token) + "'");
    }
    if (name.empty())
      throw Error("empty generator name in word token '" + std::string(token) +
                  "'");
    raw.push_back({Symbol::intern(name), exp});
  }
  return Word::from_syllables(std::move(raw));
}

namespace {

using Key = std::vector<std::pair<std::uint32_t, std::int64_t>>;

Key encode(const Word& w) {
  Key k;
  k.reserve(w.syllables().size());
  for (const Syllable& s : w.syllables()) k.emplace_back(s.gen.id(), s.exp);
  return k;
}

void min_rotation_into(const Key& k, Key& best) {
  const std::size_t n = k.size();
  Key rot(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) rot[i] = k[(r + i) % n];
    if (best.empty() || rot < best) best = rot;
  }
}

}  // namespace

std::vector<std::pair<std::uint32_t, std::int64_t>> cyclic_key(const Word& w) {
  Word c = w.cyclically_reduced();
  if (c.is_identity()) return {};
  Key best;
  min_rotation_into(encode(c), best);
  min_rotation_into(encode(c.inverse()), best);
  return best;
}

bool cyclically_equal(const Word& a, const Word& b) {
  return cyclic_key(a) == cyclic_key(b);
}

}  // namespace braidforge
