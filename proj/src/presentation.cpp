#include "ncdef/presentation.hpp"

#include <string>

#include "ncdef/errors.hpp"

namespace ncdef {

void validate_admissible(const AlgebraPresentation& pres) {
  if (pres.truncation_degree < 1) throw AdmissibilityError("truncation degree must be positive");
  for (std::size_t i = 0; i < pres.relations.size(); ++i) {
    const NCPoly& r = pres.relations[i];
    std::string which = "relation " + std::to_string(i + 1);
    if (r.is_zero()) throw AdmissibilityError(which + " is zero");
    if (!r.is_parallel()) throw AdmissibilityError(which + " mixes non-parallel paths");
    if (r.min_degree() < 2) throw AdmissibilityError(which + " has a term of degree < 2");
  }
}

AlgebraPresentation opposite(const AlgebraPresentation& pres) {
  AlgebraPresentation op;
  op.quiver = pres.quiver.opposite();
  op.truncation_degree = pres.truncation_degree;
  for (const auto& r : pres.relations) op.relations.push_back(reversed(r));
  return op;
}

}  // namespace ncdef
