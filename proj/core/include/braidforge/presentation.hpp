#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "braidforge/word.hpp"

namespace braidforge {

/// Finitely presented group value: an ordered generator list plus relator
/// words (r means r = 1). Relators are stored freely and cyclically reduced;
/// identity relators are rejected. Each relator may carry a family label
/// (e.g. "forbidden") so derived catalogs can include or exclude whole
/// families programmatically. Immutable after construction.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::string name, std::vector<Symbol> generators,
               std::vector<Word> relators,
               std::vector<std::string> labels = {});

  const std::string& name() const { return name_; }
  const std::vector<Symbol>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<std::size_t> generator_index(Symbol g) const;
  std::optional<Symbol> generator_named(std::string_view name) const;

  /// Sum of relator letter lengths.
  std::int64_t total_relator_length() const;

  /// Equality over name, generators and relators; labels are bookkeeping
  /// and excluded.
  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.name_ == b.name_ && a.generators_ == b.generators_ &&
           a.relators_ == b.relators_;
  }
  friend bool operator!=(const Presentation& a, const Presentation& b) {
    return !(a == b);
  }

 private:
  std::string name_;
  std::vector<Symbol> generators_;
  std::vector<Word> relators_;
  std::vector<std::string> labels_;
};

}  // namespace braidforge
