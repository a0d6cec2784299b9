#include "braidforge/rewriting.hpp"

#include <charconv>
#include <map>
#include <unordered_map>

#include "braidforge/errors.hpp"

namespace braidforge {

std::string graded_label_name(const GradedLabel& l) {
  return std::string(l.beta ? "beta" : "alpha") + "[" + std::to_string(l.k) +
         "," + std::to_string(l.eps) + "," + std::to_string(l.index) + "]";
}

std::optional<GradedLabel> parse_graded_label(std::string_view name) {
  GradedLabel l;
  std::string_view rest;
  if (name.rfind("alpha[", 0) == 0) {
    l.beta = false;
    rest = name.substr(6);
  } else if (name.rfind("beta[", 0) == 0) {
    l.beta = true;
    rest = name.substr(5);
  } else {
    return std::nullopt;
  }
  if (rest.empty() || rest.back() != ']') return std::nullopt;
  rest.remove_suffix(1);
  std::int64_t parts[3];
  for (int p = 0; p < 3; ++p) {
    std::size_t comma = rest.find(',');
    std::string_view piece =
        p < 2 ? rest.substr(0, comma) : rest;
    if (p < 2) {
      if (comma == std::string_view::npos) return std::nullopt;
      rest.remove_prefix(comma + 1);
    }
    auto [ptr, ec] =
        std::from_chars(piece.data(), piece.data() + piece.size(), parts[p]);
    if (ec != std::errc() || ptr != piece.data() + piece.size())
      return std::nullopt;
  }
  l.k = parts[0];
  l.eps = static_cast<int>(parts[1]);
  l.index = static_cast<int>(parts[2]);
  return l;
}

namespace {

struct LetterInfo {
  bool sigma;
  int index;
};

std::optional<LetterInfo> classify(Symbol g) {
  const std::string& n = g.name();
  if (n.size() < 2 || (n[0] != 's' && n[0] != 'r')) return std::nullopt;
  int idx = 0;
  for (std::size_t i = 1; i < n.size(); ++i) {
    if (n[i] < '0' || n[i] > '9') return std::nullopt;
    idx = idx * 10 + (n[i] - '0');
  }
  return LetterInfo{n[0] == 's', idx};
}

}  // namespace

Rewriter::Rewriter(QuotientMap q, Transversal t)
    : q_(std::move(q)), t_(std::move(t)) {
  for (const Word& r : q_.source().relators()) {
    std::int64_t m = 0;
    for (const Syllable& s : r.syllables()) {
      Tuple img = q_.image(s.gen);
      std::int64_t step = img.empty() ? 0 : img[0];
      std::int64_t reps = s.exp < 0 ? -s.exp : s.exp;
      for (std::int64_t k = 0; k < reps; ++k) {
        m = checked_add(m, s.exp < 0 ? -step : step);
        std::int64_t a = m < 0 ? -m : m;
        if (a > shift_) shift_ = a;
      }
    }
  }
  if (t_.kind() == Transversal::Kind::Finite && t_.size() == 4) {
    // The index-4 lettered transversal {1, sigma1, rho1, sigma1 rho1}.
    bool ok = true;
    for (Coset c : t_.cosets()) {
      std::string r = to_string(t_.rep(c));
      if (r != "" && r != "s1" && r != "r1" && r != "s1 r1") ok = false;
    }
    lettered_labels_ = ok;
  }
}

std::string Rewriter::label_for(Coset c, Symbol letter) const {
  auto info = classify(letter);
  if (t_.kind() == Transversal::Kind::GradedZxZ2) {
    if (!info)
      return "S[" + t_.coset_label(c) + "," + letter.name() + "]";
    return graded_label_name(
        {!info->sigma, c.a, static_cast<int>(c.b), info->index});
  }
  if (lettered_labels_ && info) {
    std::string r = to_string(t_.rep(c));
    char ch;
    if (r == "")
      ch = info->sigma ? 'a' : 'b';
    else if (r == "r1")
      ch = info->sigma ? 'c' : 'd';
    else if (r == "s1")
      ch = info->sigma ? 'e' : 'f';
    else
      ch = info->sigma ? 'g' : 'h';
    return std::string(1, ch) + std::to_string(info->index);
  }
  return "S[" + t_.coset_label(c) + "," + letter.name() + "]";
}

SchreierGenerator Rewriter::schreier(Coset c, Symbol letter) const {
  SchreierGenerator sg;
  sg.coset = c;
  sg.letter = letter;
  Word lambda = t_.rep(c);
  Coset after = coset_step(t_, q_, c, letter, 1);
  sg.expansion = lambda * Word(letter) * t_.rep(after).inverse();
  sg.trivial = sg.expansion.is_identity();
  sg.label = label_for(c, letter);
  sg.symbol = Symbol::intern(sg.label);
  return sg;
}

std::vector<SchreierGenerator> Rewriter::enumerate() const {
  std::vector<SchreierGenerator> out;
  if (t_.kind() == Transversal::Kind::Finite) {
    for (Coset c : t_.cosets())
      for (Symbol g : q_.source().generators()) out.push_back(schreier(c, g));
    return out;
  }
  std::int64_t bound = checked_add(t_.window(), shift_);
  for (std::int64_t m = -bound; m <= bound; ++m)
    for (std::int64_t e = 0; e <= 1; ++e)
      for (Symbol g : q_.source().generators())
        out.push_back(schreier(Coset{m, e}, g));
  return out;
}

Word Rewriter::tau(const Word& w) const {
  if (!q_.in_kernel(w))
    throw KernelError("WordNotInKernel: '" + to_string(w) +
                      "' is not in the kernel subgroup");
  std::vector<Syllable> out;
  Coset c = t_.identity_coset();
  for (const Syllable& s : w.syllables()) {
    std::int64_t reps = s.exp < 0 ? checked_negate(s.exp) : s.exp;
    int sign = s.exp < 0 ? -1 : 1;
    for (std::int64_t k = 0; k < reps; ++k) {
      SchreierGenerator sg;
      if (sign > 0) {
        sg = schreier(c, s.gen);
        c = coset_step(t_, q_, c, s.gen, 1);
      } else {
        c = coset_step(t_, q_, c, s.gen, -1);
        sg = schreier(c, s.gen);
      }
      if (!sg.trivial) out.push_back({sg.symbol, sign});
    }
  }
  return Word::from_syllables(std::move(out));
}

const SchreierGenerator* DerivedPresentation::find_label(
    std::string_view label) const {
  for (const SchreierGenerator& sg : schreier)
    if (sg.label == label) return &sg;
  return nullptr;
}

DerivedPresentation derived_presentation(const QuotientMap& q,
                                         const Transversal& t) {
  Rewriter rw(q, t);
  DerivedPresentation dp{Presentation(),    rw.enumerate(), {}, {},
                         rw.quotient(),     rw.transversal()};

  std::vector<Symbol> gens;
  for (const SchreierGenerator& sg : dp.schreier) {
    if (sg.trivial)
      dp.trivial_labels.push_back(sg.label);
    else
      gens.push_back(sg.symbol);
  }

  std::vector<Coset> lambdas;
  if (t.kind() == Transversal::Kind::Finite) {
    lambdas = t.cosets();
  } else {
    for (std::int64_t m = -t.window(); m <= t.window(); ++m)
      for (std::int64_t e = 0; e <= 1; ++e) lambdas.push_back(Coset{m, e});
  }

  std::map<std::vector<std::pair<std::uint32_t, std::int64_t>>, std::size_t>
      seen;
  std::vector<Word> relators;
  std::vector<std::string> labels;
  const auto& source = q.source();
  for (Coset lc : lambdas) {
    Word lambda = t.rep(lc);
    for (std::size_t i = 0; i < source.relators().size(); ++i) {
      Word tw = rw.tau(conjugate(lambda, source.relators()[i]));
      if (tw.is_identity()) continue;
      Word cyc = tw.cyclically_reduced();
      auto key = cyclic_key(cyc);
      if (seen.count(key)) continue;
      seen.emplace(std::move(key), relators.size());
      relators.push_back(cyc);
      labels.push_back(source.labels().empty() ? std::string()
                                               : source.labels()[i]);
      dp.origins.push_back({i, lambda, tw});
    }
  }

  std::string name = source.name() + "-derived";
  if (t.kind() == Transversal::Kind::GradedZxZ2)
    name += "-K" + std::to_string(t.window());
  bool any_label = false;
  for (const std::string& l : labels) any_label |= !l.empty();
  dp.base = Presentation(std::move(name), std::move(gens), std::move(relators),
                         any_label ? std::move(labels)
                                   : std::vector<std::string>{});
  return dp;
}

Word expand_labels(const DerivedPresentation& dp, const Word& label_word) {
  std::unordered_map<std::uint32_t, const Word*> expansion;
  for (const SchreierGenerator& sg : dp.schreier)
    expansion.emplace(sg.symbol.id(), &sg.expansion);
  Word out;
  for (const Syllable& s : label_word.syllables()) {
    auto it = expansion.find(s.gen.id());
    if (it == expansion.end())
      throw Error("unknown Schreier label '" + s.gen.name() + "'");
    out = out * it->second->pow(s.exp);
  }
  return out;
}

}  // namespace braidforge
