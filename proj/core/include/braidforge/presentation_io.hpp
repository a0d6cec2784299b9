#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "braidforge/presentation.hpp"
#include "braidforge/rewriting.hpp"

namespace braidforge {

/// Text format:
///   name: wb3            (optional)
///   gens: s1 s2 r1 r2
///   rels: r1^2, (r1 r2)^3, s1 s2 s1 s2^-1 s1^-1 s2^-1
///   provenance:          (optional, derived presentations)
///     0: relator 4 mixed-braid lambda s1^-1
/// Relator expressions allow parenthesized powers; the rels section may
/// span lines. parse(serialize(p)) == p up to relator cyclic normalization.
struct PresentationFile {
  Presentation presentation;
  std::vector<std::string> provenance;
};

PresentationFile parse_presentation_file(std::string_view text);
Presentation parse_presentation(std::string_view text);

std::string serialize_presentation(const Presentation& p);
std::string serialize_derived_presentation(const DerivedPresentation& dp);

/// Structured (JSON) mirror of the same fields, schema-versioned.
std::string presentation_json(const Presentation& p,
                              const std::vector<std::string>& provenance = {});

}  // namespace braidforge
