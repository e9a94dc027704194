#pragma once

// Quivers, paths and noncommutative polynomials over the rationals.
//
// Vertices are 0-based internally; file formats and reports use 1-based
// indices. Paths compose left to right: p*q is defined when p ends where q
// starts.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncdef/rational.hpp"

namespace ncdef {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver() = default;
  /// Throws std::invalid_argument on duplicate names or out-of-range endpoints.
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int a) const { return arrows_.at(static_cast<std::size_t>(a)); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  std::optional<int> find_arrow(std::string_view name) const;
  std::vector<int> arrows_from(int v) const;

  /// Same vertices, every arrow reversed.
  Quiver opposite() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Arrow> arrows_;
};

class Path {
 public:
  Path() = default;
  static Path idempotent(int v) { return Path(v, v, {}); }
  static Path of_arrow(const Quiver& q, int a);
  /// Throws std::invalid_argument if consecutive arrows do not compose.
  static Path of_arrows(const Quiver& q, int start, std::vector<int> arrows);

  int start() const { return start_; }
  int end() const { return end_; }
  int length() const { return static_cast<int>(arrows_.size()); }
  const std::vector<int>& arrows() const { return arrows_; }

  /// Concatenation, or nullopt when this path does not end where `next` starts.
  std::optional<Path> then(const Path& next) const;

  /// Arrows [from, from + len) as a path; an empty slice is the idempotent at that position.
  Path slice(const Quiver& q, int from, int len) const;

  /// Vertex reached after `k` arrows (0 <= k <= length).
  int vertex_at(const Quiver& q, int k) const;
  bool visits(const Quiver& q, int v) const;

  /// Same path read backwards in the opposite quiver.
  Path reversed() const;

  /// Structural order (length, arrow indices, start); not the term order.
  friend auto operator<=>(const Path& a, const Path& b) {
    if (auto c = a.arrows_.size() <=> b.arrows_.size(); c != 0) return c;
    if (auto c = a.arrows_ <=> b.arrows_; c != 0) return c;
    return a.start_ <=> b.start_;
  }
  friend bool operator==(const Path& a, const Path& b) {
    return a.start_ == b.start_ && a.arrows_ == b.arrows_;
  }

 private:
  Path(int start, int end, std::vector<int> arrows) : start_(start), end_(end), arrows_(std::move(arrows)) {}

  int start_ = 0;
  int end_ = 0;
  std::vector<int> arrows_;
};

/// Finite linear combination of paths with nonzero rational coefficients.
class NCPoly {
 public:
  NCPoly() = default;
  explicit NCPoly(const Path& p, const Rational& c = 1);

  const std::map<Path, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest path length; -1 for the zero polynomial.
  int degree() const;
  int min_degree() const;
  Rational coefficient(const Path& p) const;

  /// True when every term has the same start and the same end vertex.
  bool is_parallel() const;

  void add_term(const Path& p, const Rational& c);

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Rational& c);
  NCPoly operator-() const;

  friend bool operator==(const NCPoly&, const NCPoly&) = default;

 private:
  std::map<Path, Rational> terms_;
};

NCPoly operator+(NCPoly a, const NCPoly& b);
NCPoly operator-(NCPoly a, const NCPoly& b);
NCPoly operator*(const Rational& c, NCPoly a);
/// Bilinear extension of path concatenation; non-composable products vanish.
NCPoly operator*(const NCPoly& a, const NCPoly& b);
NCPoly multiply(const NCPoly& a, const NCPoly& b);

/// Left-and-right multiplication u * p * v by paths.
NCPoly sandwich(const Path& u, const NCPoly& p, const Path& v);

/// Reverses every path; the result lives over the opposite quiver.
NCPoly reversed(const NCPoly& p);

/// Degree-lexicographic order with an arrow precedence: longer paths are
/// larger; equal lengths compare arrow by arrow by rank; idempotents by vertex.
class TermOrder {
 public:
  TermOrder() = default;
  explicit TermOrder(std::vector<int> rank) : rank_(std::move(rank)) {}
  /// Earlier declared arrows rank higher (x > y for "arrow x", "arrow y").
  static TermOrder declaration_order(const Quiver& q);

  std::strong_ordering compare(const Path& a, const Path& b) const;
  bool less(const Path& a, const Path& b) const { return compare(a, b) < 0; }
  /// Largest term; the polynomial must be nonzero.
  Path leading(const NCPoly& p) const;
  const std::vector<int>& ranks() const { return rank_; }

 private:
  std::vector<int> rank_;
};

/// All paths of length < max_length, sorted by the given order.
std::vector<Path> enumerate_paths(const Quiver& q, int max_length, const TermOrder& order);

}  // namespace ncdef
