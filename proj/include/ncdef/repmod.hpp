#pragma once

// Finite-dimensional right modules over a quiver algebra given as
// representations: a vector space per vertex and a matrix per arrow acting on
// row vectors from the right. Homomorphisms, Ext^1 and explicit extensions.

#include <cstddef>
#include <memory>
#include <vector>

#include "ncdef/linalg.hpp"
#include "ncdef/presentation.hpp"

namespace ncdef {

class TruncatedAlgebra;

class RepModule {
 public:
  /// Validates matrix shapes, that every relation acts as zero, and that the
  /// arrows act nilpotently. Throws std::invalid_argument otherwise.
  RepModule(std::shared_ptr<const AlgebraPresentation> algebra, std::vector<int> dims, std::vector<Matrix> actions);

  const AlgebraPresentation& algebra() const { return *algebra_; }
  const std::shared_ptr<const AlgebraPresentation>& algebra_ptr() const { return algebra_; }
  const Quiver& quiver() const { return algebra_->quiver; }

  const std::vector<int>& dims() const { return dims_; }
  std::size_t dim(int v) const { return static_cast<std::size_t>(dims_.at(static_cast<std::size_t>(v))); }
  int total_dimension() const;
  const Matrix& action(int arrow) const { return actions_.at(static_cast<std::size_t>(arrow)); }
  const std::vector<Matrix>& actions() const { return actions_; }

  /// Action of a path, dim(start) x dim(end).
  Matrix path_action(const Path& p) const;
  /// Action of a parallel polynomial.
  Matrix evaluate(const NCPoly& p) const;

  /// Length of the radical series M > MJ > MJ^2 > ... > 0.
  int loewy_length() const;

  friend bool operator==(const RepModule& a, const RepModule& b);

 private:
  std::shared_ptr<const AlgebraPresentation> algebra_;
  std::vector<int> dims_;
  std::vector<Matrix> actions_;
};

bool same_algebra(const RepModule& a, const RepModule& b);

RepModule direct_sum(const std::vector<RepModule>& summands);

/// A module map given per vertex: blocks[v] is dim_M(v) x dim_N(v).
struct ModuleMap {
  std::vector<Matrix> blocks;
  friend bool operator==(const ModuleMap&, const ModuleMap&) = default;
};

/// First f, then g.
ModuleMap compose(const ModuleMap& f, const ModuleMap& g);
ModuleMap identity_map(const RepModule& m);
ModuleMap zero_map(const RepModule& from, const RepModule& to);
bool is_homomorphism(const ModuleMap& f, const RepModule& from, const RepModule& to);
ModuleMap linear_combination(const std::vector<ModuleMap>& maps, const Vector& coeffs);

struct HomSpace {
  std::vector<ModuleMap> basis;
  std::size_t dimension() const { return basis.size(); }
};

HomSpace hom(const RepModule& from, const RepModule& to);

/// Per-arrow blocks delta_a : M_{s(a)} -> N_{t(a)}. The middle term of the
/// extension acts by [[N_a, 0], [delta_a, M_a]] on (N, M) coordinates.
using Cocycle = std::vector<Matrix>;

class ExtSpace {
 public:
  const RepModule& domain() const { return domain_; }
  const RepModule& codomain() const { return codomain_; }
  std::size_t dimension() const { return basis_.size(); }
  /// Cocycles representing a basis of Ext^1(domain, codomain).
  const std::vector<Cocycle>& basis() const { return basis_; }
  std::size_t cocycle_dimension() const { return cocycle_dim_; }

  bool is_coboundary(const Cocycle& c) const;
  /// Coordinates of the class of c. Throws std::invalid_argument if c is not a cocycle.
  Vector class_of(const Cocycle& c) const;
  Cocycle combination(const Vector& coords) const;

 private:
  friend ExtSpace ext1(const RepModule&, const RepModule&);
  ExtSpace(RepModule m, RepModule n) : domain_(std::move(m)), codomain_(std::move(n)) {}

  Vector flatten(const Cocycle& c) const;

  RepModule domain_;
  RepModule codomain_;
  std::vector<Cocycle> basis_;
  std::vector<Vector> coboundaries_;  // spanning set, flattened
  std::size_t cocycle_dim_ = 0;
};

/// Ext^1(M, N) as cocycles (extensions of M by N split as vector spaces)
/// modulo coboundaries (changes of the splitting).
ExtSpace ext1(const RepModule& m, const RepModule& n);

/// 0 -> sub -> middle -> quotient -> 0
struct Extension {
  RepModule sub;
  RepModule middle;
  RepModule quotient;
  ModuleMap inclusion;
  ModuleMap projection;
};

/// Extension of M by N twisted by a cocycle; the zero cocycle gives N (+) M.
Extension realize_extension(const RepModule& m, const RepModule& n, const Cocycle& delta);
Extension realize_extension(const ExtSpace& ext, const Vector& coords);

/// Maps are homomorphisms, the inclusion is injective, the projection
/// surjective, their composite zero, and dimensions add up.
bool is_short_exact(const Extension& e);
/// Whether the projection admits a module section.
bool splits(const Extension& e);

struct UniversalExtension {
  Extension extension;
  std::vector<std::size_t> summand_target;  // target index j of each copy of F_j, in order
  std::vector<Cocycle> classes;             // the Ext basis element used for each copy
};

/// 0 -> (+)_j Ext^1(F, F_j)^* (x) F_j -> E -> F -> 0 classified by the identity
/// tensor: one copy of F_j per basis element of Ext^1(F, F_j).
UniversalExtension universal_extension(const RepModule& f, const std::vector<RepModule>& targets);

/// Sequential decomposition of a universal extension: step q adds the q-th
/// summand. Returns the extension 0 -> F_{j_q} -> G^q -> G^{q-1} -> 0.
Extension universal_extension_step(const RepModule& f, const std::vector<RepModule>& targets,
                                   const UniversalExtension& u, std::size_t q);

/// Grid searched after random sampling fails: coefficients in [-grid_bound + 1, grid_bound].
inline constexpr int kIsomorphismGridBound = 2;
inline constexpr std::size_t kIsomorphismGridMaxBasis = 6;

/// True iff some element of Hom(M, N) is invertible at every vertex. Searches
/// seeded random combinations, then a small deterministic grid.
bool is_isomorphic(const RepModule& m, const RepModule& n);

/// Whether every map P -> quotient lifts through the projection of e.
bool lifts_through(const RepModule& p, const Extension& e);

/// Ext^1(M, N) computed independently from a projective cover P0 -> M over the
/// truncated algebra: dim Hom(Omega M, N) - rank(Hom(P0, N) -> Hom(Omega M, N)).
/// With `pad`, an extra projective summand mapping to zero is added to P0.
/// Throws TruncationExceeded unless alg captures the full algebra or
/// Loewy(M) + Loewy(N) <= truncation degree.
std::size_t ext1_dimension_via_projective_cover(const TruncatedAlgebra& alg, const RepModule& m, const RepModule& n,
                                                bool pad = false);

}  // namespace ncdef
