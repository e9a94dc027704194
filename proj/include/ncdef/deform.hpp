#pragma once
// Noncommutative deformations of a simple collection by iterated universal
// extensions, their parameter algebras End(F), and the recovery check that the
// versal deformation of the simples of A is A itself.
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncdef/algebra.hpp"
#include "ncdef/repmod.hpp"

namespace ncdef {

struct SimpleCollection {
  std::vector<RepModule> members;
  std::size_t size() const { return members.size(); }
};

/// Throws NotSimpleCollection for the first pair (i, j) with
/// dim Hom(F_i, F_j) != delta_ij, std::invalid_argument for mixed algebras.
SimpleCollection check_simple_collection(const std::vector<RepModule>& mods);

/// One copy of F_target glued under F_component at a stage.
struct ExtensionStep {
  int stage = 0;
  std::size_t component = 0;
  std::size_t target = 0;
  std::size_t class_index = 0;  // index in the Ext basis of (F_component, F_target)
  bool nontrivial = false;
};

struct DeformationState {
  SimpleCollection base;
  int stage = 0;
  std::vector<RepModule> current;
  std::vector<ModuleMap> to_base;                  // F^(n)_i -> F_i
  std::vector<ExtensionStep> ledger;
  std::vector<std::vector<RepModule>> snapshots;   // snapshots[n] = F^(n)
  std::size_t nontrivial_steps() const;
};

/// An augmented k^r-algebra given by structure constants. Basis element k lies
/// in e_{row} R e_{col}; the first r basis elements are the idempotents.
struct ParameterAlgebra {
  StructureConstants structure;
  std::vector<std::size_t> idempotents;
  std::vector<std::size_t> augmentation_ideal;
  std::vector<std::size_t> row;
  std::vector<std::size_t> col;
  std::size_t components = 0;

  std::size_t dimension() const { return structure.dimension(); }
  /// block_dimensions()[i][j] = dim e_i R e_j
  std::vector<std::vector<std::size_t>> block_dimensions() const;
  /// [dim R/M, dim M/M^2, ...]
  std::vector<std::size_t> radical_layers() const;
  /// Smallest k with M^k = 0.
  int nilpotency_index() const;
};

/// End(F) for F = (+)_i F^(n)_i with product phi * psi = phi o psi; e_i R e_j
/// is Hom(F_j, F_i). The augmentation sends phi in End(F_i) to the scalar c
/// with pi o phi = c pi for the surjection pi : F^(n)_i -> F_i.
ParameterAlgebra parameter_algebra(const DeformationState& state);

struct VersalResult {
  DeformationState state;
  ParameterAlgebra parameter;
  bool converged = false;
};

/// Iterates universal extensions until Ext^1(F^(n)_i, F_j) = 0 for all i, j or
/// n = max_stage. Throws TruncationExceeded when a stage reaches Loewy length
/// >= the algebra's truncation degree.
VersalResult deform_versal(const SimpleCollection& coll, int max_stage);

/// dim End(F^(n)) == r + number of non-trivial steps.
bool iterated_extension_dim_audit(const DeformationState& state);

/// Quiver with an arrow i -> j per basis element of e_i (M/M^2) e_j, relations
/// generating the kernel from the path algebra, found degree by degree up to
/// the nilpotency index.
AlgebraPresentation extract_presentation(const ParameterAlgebra& pa);

/// Every non-trivial extension of a stage F^(n)_i by some F_j receives all
/// maps from the final F: Hom(F, G) -> Hom(F, F^(n)_i) is onto.
bool versality_smoke_test(const DeformationState& state);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RecoveryReport {
  std::vector<Check> checks;
  bool converged = false;
  int stages = 0;
  std::size_t parameter_dimension = 0;
  std::vector<std::size_t> parameter_layers;
  std::vector<std::size_t> algebra_layers;
  bool passed() const;
};

/// Deforms the simples of alg and checks: convergence; Hom(F_i, S_j) = delta_ij
/// and Ext^1(F_i, S_j) = 0; F_i ~= P_i; the parameter algebra's dimension and
/// radical layers equal alg's; the extracted presentation re-truncates to the
/// same layers; the r + N audit; versality lifting. Truncation overflow is
/// reported as a failed check.
RecoveryReport recovery_check(const TruncatedAlgebra& alg, std::optional<int> max_stage = std::nullopt);

}  // namespace ncdef
