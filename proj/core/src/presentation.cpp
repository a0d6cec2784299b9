#include "braidforge/presentation.hpp"

#include <unordered_set>

#include "braidforge/errors.hpp"

namespace braidforge {

Presentation::Presentation(std::string name, std::vector<Symbol> generators,
                           std::vector<Word> relators,
                           std::vector<std::string> labels)
    : name_(std::move(name)),
      generators_(std::move(generators)),
      relators_(std::move(relators)),
      labels_(std::move(labels)) {
  std::unordered_set<std::uint32_t> declared;
  for (Symbol g : generators_) {
    if (!declared.insert(g.id()).second)
      throw PresentationError("duplicate generator '" + g.name() + "'");
  }
  if (!labels_.empty() && labels_.size() != relators_.size())
    throw PresentationError("relator label list length mismatch");
  for (Word& r : relators_) {
    r = r.cyclically_reduced();
    if (r.is_identity())
      throw PresentationError("identity relator is not allowed");
    for (const Syllable& s : r.syllables()) {
      if (!declared.count(s.gen.id()))
        throw PresentationError("relator uses undeclared generator '" +
                                s.gen.name() + "'");
    }
  }
}

std::optional<std::size_t> Presentation::generator_index(Symbol g) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == g) return i;
  return std::nullopt;
}

std::optional<Symbol> Presentation::generator_named(
    std::string_view name) const {
  for (Symbol g : generators_)
    if (g.name() == name) return g;
  return std::nullopt;
}

std::int64_t Presentation::total_relator_length() const {
  std::int64_t n = 0;
  for (const Word& r : relators_) n = checked_add(n, r.length());
  return n;
}

}  // namespace braidforge
