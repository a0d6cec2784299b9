#include "braidforge/catalog.hpp"

#include <initializer_list>

#include "braidforge/errors.hpp"

namespace braidforge {

namespace {

Symbol sig(int i) { return Symbol::intern("s" + std::to_string(i), i); }
Symbol rho(int i) { return Symbol::intern("r" + std::to_string(i), i); }

Word w(std::initializer_list<Syllable> syls) {
  return Word::from_syllables(std::vector<Syllable>(syls));
}

struct Builder {
  std::vector<Word> relators;
  std::vector<std::string> labels;
  void add(const std::string& label, Word relator) {
    relators.push_back(std::move(relator));
    labels.push_back(label);
  }
};

std::vector<Symbol> braid_like_generators(int n, bool sigma, bool rhos) {
  std::vector<Symbol> gens;
  if (sigma)
    for (int i = 1; i < n; ++i) gens.push_back(sig(i));
  if (rhos)
    for (int i = 1; i < n; ++i) gens.push_back(rho(i));
  return gens;
}

void add_sigma_braid_family(Builder& b, int n) {
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      b.add("sigma-comm",
            w({{sig(i), 1}, {sig(j), 1}, {sig(i), -1}, {sig(j), -1}}));
  for (int i = 1; i + 1 < n; ++i)
    b.add("sigma-braid", w({{sig(i), 1},
                            {sig(i + 1), 1},
                            {sig(i), 1},
                            {sig(i + 1), -1},
                            {sig(i), -1},
                            {sig(i + 1), -1}}));
}

void add_symmetric_family(Builder& b, int n) {
  for (int i = 1; i < n; ++i) b.add("rho-invol", w({{rho(i), 2}}));
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      b.add("rho-comm",
            w({{rho(i), 1}, {rho(j), 1}, {rho(i), 1}, {rho(j), 1}}));
  for (int i = 1; i + 1 < n; ++i)
    b.add("rho-braid", w({{rho(i), 1},
                          {rho(i + 1), 1},
                          {rho(i), 1},
                          {rho(i + 1), 1},
                          {rho(i), 1},
                          {rho(i + 1), 1}}));
}

Presentation welded_braid(int n) {
  Builder b;
  add_sigma_braid_family(b, n);
  add_symmetric_family(b, n);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (i - j > 1 || j - i > 1)
        b.add("mixed-comm",
              w({{sig(i), 1}, {rho(j), 1}, {sig(i), -1}, {rho(j), -1}}));
  for (int i = 1; i + 1 < n; ++i)
    b.add("mixed-braid", w({{rho(i), 1},
                            {rho(i + 1), 1},
                            {sig(i), 1},
                            {rho(i + 1), 1},
                            {rho(i), 1},
                            {sig(i + 1), -1}}));
  for (int i = 1; i + 1 < n; ++i)
    b.add(kForbiddenLabel, w({{rho(i), 1},
                              {sig(i + 1), 1},
                              {sig(i), 1},
                              {rho(i + 1), 1},
                              {sig(i), -1},
                              {sig(i + 1), -1}}));
  return Presentation("wb" + std::to_string(n),
                      braid_like_generators(n, true, true),
                      std::move(b.relators), std::move(b.labels));
}

// Flat catalogs: every generator is an involution at the group level, so all
// relators are carried in their all-positive form.
Presentation flat_braid(int n, bool with_forbidden) {
  Builder b;
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      b.add("sigma-comm",
            w({{sig(i), 1}, {sig(j), 1}, {sig(i), 1}, {sig(j), 1}}));
  for (int i = 1; i + 1 < n; ++i)
    b.add("sigma-braid", w({{sig(i), 1},
                            {sig(i + 1), 1},
                            {sig(i), 1},
                            {sig(i + 1), 1},
                            {sig(i), 1},
                            {sig(i + 1), 1}}));
  for (int i = 1; i < n; ++i) b.add("flat", w({{sig(i), 2}}));
  for (int i = 1; i < n; ++i) b.add("rho-invol", w({{rho(i), 2}}));
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      b.add("rho-comm",
            w({{rho(i), 1}, {rho(j), 1}, {rho(i), 1}, {rho(j), 1}}));
  for (int i = 1; i + 1 < n; ++i)
    b.add("rho-braid", w({{rho(i), 1},
                          {rho(i + 1), 1},
                          {rho(i), 1},
                          {rho(i + 1), 1},
                          {rho(i), 1},
                          {rho(i + 1), 1}}));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (i - j > 1 || j - i > 1)
        b.add("mixed-comm",
              w({{sig(i), 1}, {rho(j), 1}, {sig(i), 1}, {rho(j), 1}}));
  for (int i = 1; i + 1 < n; ++i)
    b.add("mixed-braid", w({{rho(i), 1},
                            {rho(i + 1), 1},
                            {sig(i), 1},
                            {rho(i + 1), 1},
                            {rho(i), 1},
                            {sig(i + 1), 1}}));
  if (with_forbidden) {
    for (int i = 1; i + 1 < n; ++i)
      b.add(kForbiddenLabel, w({{rho(i), 1},
                                {sig(i + 1), 1},
                                {sig(i), 1},
                                {rho(i + 1), 1},
                                {sig(i), 1},
                                {sig(i + 1), 1}}));
  }
  std::string name = (with_forbidden ? "fwb" : "fvb") + std::to_string(n);
  return Presentation(std::move(name), braid_like_generators(n, true, true),
                      std::move(b.relators), std::move(b.labels));
}

Presentation explicit_fvb3_prime() {
  Symbol a = Symbol::intern("a");
  Symbol bb = Symbol::intern("b");
  Symbol x = Symbol::intern("x");
  Symbol y = Symbol::intern("y");
  Builder b;
  b.add("explicit", w({{a, 3}}));
  b.add("explicit", w({{bb, 3}}));
  b.add("explicit", w({{a, 1}, {bb, 1}, {a, 1}, {bb, 1}, {a, 1}, {bb, 1}}));
  b.add("explicit", w({{x, 1}, {y, 1}, {x, 1}, {y, 1}, {x, 1}, {y, 1}}));
  b.add("explicit", w({{y, 1}, {a, 1}, {x, 1}, {bb, 1}}));
  return Presentation("fvb3-prime", {a, bb, x, y}, std::move(b.relators),
                      std::move(b.labels));
}

Presentation explicit_fwb3_prime() {
  Symbol a = Symbol::intern("a");
  Symbol bb = Symbol::intern("b");
  Symbol c = Symbol::intern("c");
  Symbol x = Symbol::intern("x");
  Builder b;
  b.add("explicit", w({{a, 3}}));
  b.add("explicit", w({{bb, 3}}));
  b.add("explicit", w({{c, 3}}));
  b.add("explicit", w({{a, 1}, {bb, 1}, {c, 1}}));
  b.add("explicit",
        w({{a, 1}, {x, 1}, {c, 1}, {x, -1}, {a, -1}, {bb, -1}}));
  b.add("explicit",
        w({{bb, 1}, {a, 1}, {x, 1}, {bb, -1}, {c, -1}, {x, -1}}));
  return Presentation("fwb3-prime", {a, bb, c, x}, std::move(b.relators),
                      std::move(b.labels));
}

}  // namespace

Presentation catalog(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::PaperFVB3Prime:
      return explicit_fvb3_prime();
    case Family::PaperFWB3Prime:
      return explicit_fwb3_prime();
    default:
      break;
  }
  if (spec.strands < 2)
    throw PresentationError("strand count must be at least 2");
  const int n = spec.strands;
  switch (spec.family) {
    case Family::Braid: {
      Builder b;
      add_sigma_braid_family(b, n);
      return Presentation("braid" + std::to_string(n),
                          braid_like_generators(n, true, false),
                          std::move(b.relators), std::move(b.labels));
    }
    case Family::Symmetric: {
      Builder b;
      add_symmetric_family(b, n);
      return Presentation("sym" + std::to_string(n),
                          braid_like_generators(n, false, true),
                          std::move(b.relators), std::move(b.labels));
    }
    case Family::WeldedBraid:
      return welded_braid(n);
    case Family::FlatVirtualBraid:
      return flat_braid(n, false);
    case Family::FlatWeldedBraid:
      return flat_braid(n, true);
    default:
      throw InternalError("unhandled family");
  }
}

Family family_from_token(const std::string& token) {
  if (token == "wb") return Family::WeldedBraid;
  if (token == "fvb") return Family::FlatVirtualBraid;
  if (token == "fwb") return Family::FlatWeldedBraid;
  if (token == "braid") return Family::Braid;
  if (token == "sym") return Family::Symmetric;
  if (token == "fvb3p") return Family::PaperFVB3Prime;
  if (token == "fwb3p") return Family::PaperFWB3Prime;
  throw Error("unknown family '" + token +
              "' (expected wb, fvb, fwb, braid, sym, fvb3p, fwb3p)");
}

std::string family_token(Family f) {
  switch (f) {
    case Family::Braid: return "braid";
    case Family::Symmetric: return "sym";
    case Family::WeldedBraid: return "wb";
    case Family::FlatVirtualBraid: return "fvb";
    case Family::FlatWeldedBraid: return "fwb";
    case Family::PaperFVB3Prime: return "fvb3p";
    case Family::PaperFWB3Prime: return "fwb3p";
  }
  throw InternalError("unhandled family");
}

}  // namespace braidforge
