#pragma once

#include <vector>

#include "ncdef/ncpoly.hpp"

namespace ncdef {

/// A quiver with relations. Admissible presentations have every relation a
/// nonzero combination of parallel paths of length >= 2.
struct AlgebraPresentation {
  Quiver quiver;
  std::vector<NCPoly> relations;
  int truncation_degree = 10;

  friend bool operator==(const AlgebraPresentation&, const AlgebraPresentation&) = default;
};

/// Throws AdmissibilityError naming the first offending relation.
void validate_admissible(const AlgebraPresentation& pres);

/// Reverses every arrow and every path of every relation.
AlgebraPresentation opposite(const AlgebraPresentation& pres);

/// Term order with the arrows' declaration order as precedence.
inline TermOrder default_order(const AlgebraPresentation& pres) { return TermOrder::declaration_order(pres.quiver); }

}  // namespace ncdef
