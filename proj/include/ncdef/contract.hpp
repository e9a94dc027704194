#pragma once
// Contraction algebras A/AeA for the idempotent e of a vertex set V0, computed
// both from A's multiplication table and from a presentation on the kept
// vertices, plus the cross-checks against deformations of partial collections.
#include <cstddef>
#include <string>
#include <vector>

#include "ncdef/algebra.hpp"
#include "ncdef/deform.hpp"
#include "ncdef/rewrite.hpp"

namespace ncdef {

struct ContractionSpec {
  AlgebraPresentation algebra;
  std::vector<int> contracted;  // 0-based vertex indices
  bool allow_zero = false;      // permit contracting every vertex
};

/// A/AeA computed inside the structure constants of A/J^d.
struct QuotientAlgebra {
  std::vector<Path> basis;  // words of A's basis avoiding the pivots of AeA
  StructureConstants structure;
  std::vector<std::size_t> radical_layers;
  std::vector<std::size_t> degree_profile;
  std::size_t dimension() const { return basis.size(); }
};

struct Contraction {
  AlgebraPresentation presentation;  // on the kept vertices
  TruncatedAlgebra algebra;          // truncation of `presentation`
  QuotientAlgebra quotient;
  std::vector<int> kept;             // new vertex -> old vertex
  /// The quotient map A -> A/AeA is multiplicative and the quotient is
  /// isomorphic, through the kept words, to the truncated presentation.
  bool routes_agree = false;
};

/// Throws std::invalid_argument for out-of-range vertices, or when every vertex
/// is contracted and allow_zero is unset.
AlgebraPresentation contracted_presentation(const ContractionSpec& spec);
Contraction contract(const ContractionSpec& spec);

struct LayerComparison {
  std::size_t layer = 0;
  std::size_t deformation = 0;
  std::size_t contraction = 0;
  bool agree() const { return deformation == contraction; }
};

struct ContractionComparison {
  bool converged = false;
  int stages = 0;
  std::size_t deformation_dimension = 0;
  std::size_t contraction_dimension = 0;
  std::vector<LayerComparison> layers;
  bool agree() const;
};

/// Deforms {S_v : v not in V0} over the full algebra and compares End with
/// contract(spec): all layers when converged, otherwise the layers reached.
ContractionComparison contraction_vs_deformation(const ContractionSpec& spec, int max_stage);

GrowthReport contraction_finiteness(const ContractionSpec& spec, int degree_bound);

struct OppositeReport {
  std::vector<Check> checks;
  bool passed() const;
};

/// Compares contract(spec) with the contraction of the opposite algebra:
/// dimension, degree profile, center dimension.
OppositeReport opposite_symmetry_check(const ContractionSpec& spec);

}  // namespace ncdef
