#pragma once

// Finite-dimensional algebras: structure constants, the truncations A/J^d of
// a quiver presentation, and their simple and indecomposable projective modules.

#include <memory>
#include <optional>
#include <vector>

#include "ncdef/linalg.hpp"
#include "ncdef/presentation.hpp"
#include "ncdef/repmod.hpp"

namespace ncdef {

class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), table_(dim * dim) {}

  std::size_t dimension() const { return dim_; }
  const SparseVector& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  void set_product(std::size_t i, std::size_t j, SparseVector v) { table_[i * dim_ + j] = std::move(v); }
  SparseVector multiply(const SparseVector& a, const SparseVector& b) const;

 private:
  std::size_t dim_ = 0;
  std::vector<SparseVector> table_;
};

bool is_associative(const StructureConstants& sc);
std::size_t center_dimension(const StructureConstants& sc);

/// Layer dimensions [dim A/I, dim I/I^2, dim I^2/I^3, ...] of the powers of the
/// ideal spanned by `ideal`, stopping at I^k = 0. Throws std::runtime_error
/// when the ideal is not nilpotent.
std::vector<std::size_t> power_layers(const StructureConstants& sc, const std::vector<SparseVector>& ideal);

/// Dimension of the two-sided ideal generated by `generators`.
std::vector<SparseVector> two_sided_ideal(const StructureConstants& sc, const std::vector<SparseVector>& generators);

/// A/J^d for an admissible presentation: the path algebra modulo the relations
/// and all paths of length >= d. The basis consists of the paths (of length < d)
/// that are not leading terms of the truncated relation ideal in the term order.
class TruncatedAlgebra {
 public:
  const AlgebraPresentation& presentation() const { return *pres_; }
  const std::shared_ptr<const AlgebraPresentation>& presentation_ptr() const { return pres_; }
  const Quiver& quiver() const { return pres_->quiver; }
  const TermOrder& order() const { return order_; }
  int truncation_degree() const { return pres_->truncation_degree; }

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Path>& basis() const { return basis_; }
  std::optional<std::size_t> index_of(const Path& p) const;
  int degree(std::size_t i) const { return basis_[i].length(); }
  std::size_t idempotent(int v) const { return idempotents_.at(static_cast<std::size_t>(v)); }

  /// Coordinates on the basis; paths of length >= d are dropped.
  SparseVector normal_form(const NCPoly& p) const;
  NCPoly to_poly(const SparseVector& coords) const;

  const StructureConstants& structure() const { return table_; }

  /// [dim A/J, dim J/J^2, ...] for the radical J (span of the arrows).
  std::vector<std::size_t> radical_layers() const;
  /// Number of basis paths of each length.
  std::vector<std::size_t> degree_profile() const;

  /// True when J^(d-1) = 0 here, which forces J^(d-1) = 0 in the untruncated
  /// algebra: the truncation is the whole algebra.
  bool captures_full_algebra() const { return captures_full_; }

 private:
  friend TruncatedAlgebra truncate(std::shared_ptr<const AlgebraPresentation>, const TermOrder&);

  std::shared_ptr<const AlgebraPresentation> pres_;
  TermOrder order_;
  std::vector<Path> basis_;
  std::map<Path, std::size_t> basis_index_;
  std::vector<std::size_t> idempotents_;
  std::map<Path, SparseVector> word_forms_;  // every path of length < d
  StructureConstants table_;
  bool captures_full_ = false;
};

/// Throws AdmissibilityError for non-admissible presentations.
TruncatedAlgebra truncate(std::shared_ptr<const AlgebraPresentation> pres, const TermOrder& order);
TruncatedAlgebra truncate(std::shared_ptr<const AlgebraPresentation> pres);
TruncatedAlgebra truncate(const AlgebraPresentation& pres);

/// One-dimensional modules S_v with all arrows acting by zero.
std::vector<RepModule> simples(const TruncatedAlgebra& alg);

/// P_v = e_v A as a right module; its space at w is spanned by the basis paths v -> w.
std::vector<RepModule> projectives(const TruncatedAlgebra& alg);

}  // namespace ncdef
