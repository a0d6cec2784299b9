#include "braidforge/aut_action.hpp"

#include "braidforge/catalog.hpp"
#include "braidforge/errors.hpp"

namespace braidforge {

FreeBasis FreeBasis::standard(int rank) {
  if (rank < 1) throw Error("free basis rank must be at least 1");
  FreeBasis b;
  b.rank = rank;
  for (int i = 1; i <= rank; ++i)
    b.symbols.push_back(Symbol::intern("x" + std::to_string(i)));
  return b;
}

FreeGroupEndo FreeGroupEndo::identity(const FreeBasis& basis) {
  std::vector<Word> images;
  for (Symbol x : basis.symbols) images.emplace_back(x);
  return FreeGroupEndo(basis, std::move(images));
}

FreeGroupEndo::FreeGroupEndo(FreeBasis basis, std::vector<Word> images)
    : basis_(std::move(basis)), images_(std::move(images)) {
  if (images_.size() != basis_.symbols.size())
    throw Error("endomorphism image count mismatch");
}

Word FreeGroupEndo::apply(const Word& w) const {
  Word out;
  for (const Syllable& s : w.syllables()) {
    std::size_t i = 0;
    while (i < basis_.symbols.size() && basis_.symbols[i] != s.gen) ++i;
    if (i == basis_.symbols.size())
      throw Error("word uses symbol '" + s.gen.name() +
                  "' outside the free basis");
    out = out * images_[i].pow(s.exp);
  }
  return out;
}

bool FreeGroupEndo::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != Word(basis_.symbols[i])) return false;
  return true;
}

FreeGroupEndo compose(const FreeGroupEndo& f, const FreeGroupEndo& g) {
  if (!(f.basis() == g.basis())) throw Error("basis mismatch in composition");
  std::vector<Word> images;
  images.reserve(f.images().size());
  for (const Word& w : f.images()) images.push_back(g.apply(w));
  return FreeGroupEndo(f.basis(), std::move(images));
}

namespace {

struct Letter {
  bool sigma;
  int index;  // 1-based strand
};

Letter classify_letter(Symbol g, int rank) {
  const std::string& n = g.name();
  bool sigma;
  if (!n.empty() && n[0] == 's')
    sigma = true;
  else if (!n.empty() && n[0] == 'r')
    sigma = false;
  else
    throw Error("invalid letter '" + n + "' for the braid-like action");
  int idx = 0;
  for (std::size_t i = 1; i < n.size(); ++i) {
    if (n[i] < '0' || n[i] > '9')
      throw Error("invalid letter '" + n + "' for the braid-like action");
    idx = idx * 10 + (n[i] - '0');
  }
  if (idx < 1 || idx + 1 > rank)
    throw Error("letter '" + n + "' index out of range for rank " +
                std::to_string(rank));
  return {sigma, idx};
}

}  // namespace

FreeGroupEndo generator_action(Symbol g, const FreeBasis& basis) {
  Letter l = classify_letter(g, basis.rank);
  std::vector<Word> images;
  for (int j = 1; j <= basis.rank; ++j)
    images.emplace_back(basis.symbols[j - 1]);
  Symbol xi = basis.symbols[l.index - 1];
  Symbol xj = basis.symbols[l.index];
  if (l.sigma) {
    images[l.index - 1] =
        Word::from_syllables({{xi, 1}, {xj, 1}, {xi, -1}});
    images[l.index] = Word(xi);
  } else {
    images[l.index - 1] = Word(xj);
    images[l.index] = Word(xi);
  }
  return FreeGroupEndo(basis, std::move(images));
}

FreeGroupEndo generator_action_inverse(Symbol g, const FreeBasis& basis) {
  Letter l = classify_letter(g, basis.rank);
  if (!l.sigma) return generator_action(g, basis);  // involution
  std::vector<Word> images;
  for (int j = 1; j <= basis.rank; ++j)
    images.emplace_back(basis.symbols[j - 1]);
  Symbol xi = basis.symbols[l.index - 1];
  Symbol xj = basis.symbols[l.index];
  images[l.index - 1] = Word(xj);
  images[l.index] = Word::from_syllables({{xj, -1}, {xi, 1}, {xj, 1}});
  return FreeGroupEndo(basis, std::move(images));
}

FreeGroupEndo action_of_word(const Word& w, const FreeBasis& basis,
                             CompositionOrder order) {
  FreeGroupEndo acc = FreeGroupEndo::identity(basis);
  for (const Syllable& s : w.syllables()) {
    FreeGroupEndo letter = s.exp > 0 ? generator_action(s.gen, basis)
                                     : generator_action_inverse(s.gen, basis);
    std::int64_t reps = s.exp < 0 ? checked_negate(s.exp) : s.exp;
    for (std::int64_t k = 0; k < reps; ++k) {
      acc = order == CompositionOrder::LeftToRight ? compose(acc, letter)
                                                   : compose(letter, acc);
    }
  }
  return acc;
}

bool is_identity_in_wb(const Word& w, int strands, CompositionOrder order) {
  FreeBasis basis = FreeBasis::standard(strands);
  return action_of_word(w, basis, order).is_identity();
}

CompositionOrder resolve_composition_order(int strands) {
  Presentation p = catalog({Family::WeldedBraid, strands});
  auto validates = [&](CompositionOrder order) {
    for (const Word& r : p.relators())
      if (!is_identity_in_wb(r, strands, order)) return false;
    Word sigma_sq(Symbol::intern("s1"), 2);
    return !is_identity_in_wb(sigma_sq, strands, order);
  };
  if (validates(CompositionOrder::LeftToRight))
    return CompositionOrder::LeftToRight;
  if (validates(CompositionOrder::RightToLeft))
    return CompositionOrder::RightToLeft;
  throw InternalError("no composition order validates the catalog relators");
}

}  // namespace braidforge
