#pragma once

#include <string>

#include "braidforge/presentation.hpp"

namespace braidforge {

enum class Family {
  Braid,
  Symmetric,
  WeldedBraid,
  FlatVirtualBraid,
  FlatWeldedBraid,
  PaperFVB3Prime,
  PaperFWB3Prime,
};

struct FamilySpec {
  Family family;
  int strands = 3;
};

/// Relator family labels used by the catalog, in canonical emission order.
/// The welded catalog order is sigma-comm, sigma-braid, rho-invol, rho-comm,
/// rho-braid, mixed-comm, mixed-braid, forbidden; the flat catalogs insert
/// "flat" after sigma-braid and keep mixed relators in their all-positive
/// involution form.
inline constexpr const char* kForbiddenLabel = "forbidden";

Presentation catalog(const FamilySpec& spec);

/// CLI token ("wb", "fvb", "fwb", "braid", "sym", "fvb3p", "fwb3p").
Family family_from_token(const std::string& token);
std::string family_token(Family f);

}  // namespace braidforge
