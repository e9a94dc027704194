#pragma once

// Degree-bounded two-sided rewriting (noncommutative Groebner bases) on path
// algebras, and the finite-dimensionality decision built on it.

#include <cstddef>
#include <vector>

#include "ncdef/ncpoly.hpp"

namespace ncdef {

/// lead -> tail, where every path of tail is smaller than lead in the term order.
struct Rule {
  Path lead;
  NCPoly tail;
  friend bool operator==(const Rule&, const Rule&) = default;
};

class RewriteSystem {
 public:
  const Quiver& quiver() const { return quiver_; }
  const TermOrder& order() const { return order_; }
  /// Sorted by leading path in the term order.
  const std::vector<Rule>& rules() const { return rules_; }
  int degree_bound() const { return degree_bound_; }
  int complete_below() const { return complete_below_; }

  /// True when every overlap and inclusion ambiguity among the final rules
  /// resolves, at any degree. The rules are then a full Groebner basis.
  bool confluent() const { return confluent_; }

  /// Rewrites to an irreducible polynomial without any degree check.
  NCPoly reduce(const NCPoly& p) const;
  bool is_normal(const Path& w) const;

 private:
  friend RewriteSystem complete_rewrite_system(const Quiver&, const std::vector<NCPoly>&, int,
                                               const TermOrder&);

  struct Match {
    std::size_t rule;
    int position;
  };
  std::optional<Match> find_reducer(const Path& w) const;

  Quiver quiver_;
  TermOrder order_;
  std::vector<Rule> rules_;
  int degree_bound_ = 0;
  int complete_below_ = 0;
  bool confluent_ = false;
};

/// Completes `relations` by resolving every overlap of degree <= degree_bound.
/// Throws std::invalid_argument for non-parallel relations, relations above the
/// bound, or a relation whose leading term is an idempotent.
RewriteSystem complete_rewrite_system(const Quiver& q, const std::vector<NCPoly>& relations, int degree_bound,
                                      const TermOrder& order);
RewriteSystem complete_rewrite_system(const Quiver& q, const std::vector<NCPoly>& relations, int degree_bound);

/// Fully reduced representative. Throws TruncationExceeded when deg(p)
/// exceeds rs.complete_below().
NCPoly normal_form(const NCPoly& p, const RewriteSystem& rs);

/// The polynomials whose vanishing certifies each ambiguity (overlap or
/// inclusion) between the leading paths of rs, up to `max_degree` (< 0: all).
std::vector<NCPoly> ambiguity_polynomials(const RewriteSystem& rs, int max_degree);

struct GrowthReport {
  enum class Kind { Finite, Infinite, Unknown };
  Kind kind = Kind::Unknown;
  std::size_t dimension = 0;  // meaningful for Finite
  std::vector<Path> basis;    // normal words, ascending in the term order
};

/// Decides finite dimensionality of the quotient from the graph of normal
/// words (cycles mean infinitely many). Answers Unknown whenever the rules are
/// not confluent, since unresolved overlaps may still shrink the quotient.
GrowthReport growth_report(const RewriteSystem& rs);

}  // namespace ncdef
