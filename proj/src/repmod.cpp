#include "ncdef/repmod.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "ncdef/algebra.hpp"
#include "ncdef/errors.hpp"

namespace ncdef {
namespace {

std::size_t sz(int n) { return static_cast<std::size_t>(n); }

// Basis rows of the row space of the stacked matrices.
Matrix row_space(const std::vector<Matrix>& blocks, std::size_t width) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.rows();
  Matrix stacked(total, width);
  std::size_t r = 0;
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.rows(); ++i, ++r)
      for (std::size_t j = 0; j < width; ++j) stacked(r, j) = b(i, j);
  RowEchelon e = row_reduce(std::move(stacked));
  Matrix basis(e.pivots.size(), width);
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) basis(i, j) = e.reduced(i, j);
  return basis;
}

RepModule zero_module(const std::shared_ptr<const AlgebraPresentation>& alg) {
  std::vector<int> dims(sz(alg->quiver.vertex_count()), 0);
  std::vector<Matrix> actions(sz(alg->quiver.arrow_count()));
  return RepModule(alg, std::move(dims), std::move(actions));
}

Cocycle zero_cocycle(const RepModule& m, const RepModule& n) {
  Cocycle c;
  for (const auto& a : m.quiver().arrows()) c.emplace_back(m.dim(a.source), n.dim(a.target));
  return c;
}

// f itself, as the extension of f by the zero module.
Extension trivial_extension(const RepModule& f) {
  RepModule zero = zero_module(f.algebra_ptr());
  return realize_extension(f, zero, zero_cocycle(f, zero));
}

Vector flatten_map(const ModuleMap& f) {
  Vector out;
  for (const auto& b : f.blocks)
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out.push_back(b(i, j));
  return out;
}

std::size_t rank_of_vectors(const std::vector<Vector>& vs) {
  SparseEchelon e;
  for (const auto& v : vs) e.insert(to_sparse(v));
  return e.size();
}

std::vector<std::size_t> cocycle_offsets(const RepModule& m, const RepModule& n) {
  const Quiver& q = m.quiver();
  std::vector<std::size_t> off(sz(q.arrow_count()) + 1, 0);
  for (int a = 0; a < q.arrow_count(); ++a)
    off[sz(a) + 1] = off[sz(a)] + m.dim(q.arrow(a).source) * n.dim(q.arrow(a).target);
  return off;
}

Cocycle unflatten_cocycle(const RepModule& m, const RepModule& n, const Vector& flat) {
  const Quiver& q = m.quiver();
  auto off = cocycle_offsets(m, n);
  Cocycle c;
  for (int a = 0; a < q.arrow_count(); ++a) {
    std::size_t rows = m.dim(q.arrow(a).source), cols = n.dim(q.arrow(a).target);
    Matrix block(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) block(i, j) = flat[off[sz(a)] + i * cols + j];
    c.push_back(std::move(block));
  }
  return c;
}

// Columns [from, from + width) of every block, as a per-vertex selection.
Matrix embed_rows(std::size_t rows, std::size_t width, std::size_t at) {
  Matrix m(rows, width);
  for (std::size_t i = 0; i < rows; ++i) m(i, at + i) = 1;
  return m;
}

}  // namespace

RepModule::RepModule(std::shared_ptr<const AlgebraPresentation> algebra, std::vector<int> dims,
                     std::vector<Matrix> actions)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), actions_(std::move(actions)) {
  if (!algebra_) throw std::invalid_argument("module without an algebra");
  const Quiver& q = algebra_->quiver;
  if (dims_.size() != sz(q.vertex_count())) throw std::invalid_argument("dimension vector has the wrong length");
  for (int d : dims_)
    if (d < 0) throw std::invalid_argument("negative vertex dimension");
  if (actions_.size() != sz(q.arrow_count())) throw std::invalid_argument("wrong number of arrow matrices");
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    Matrix& m = actions_[sz(a)];
    if (m.rows() == 0 && m.cols() == 0) m = Matrix(dim(arr.source), dim(arr.target));
    if (m.rows() != dim(arr.source) || m.cols() != dim(arr.target))
      throw std::invalid_argument("matrix for arrow '" + arr.name + "' has the wrong shape");
  }
  for (std::size_t r = 0; r < algebra_->relations.size(); ++r)
    if (!evaluate(algebra_->relations[r]).is_zero())
      throw std::invalid_argument("relation " + std::to_string(r + 1) + " does not act as zero");
  if (loewy_length() < 0) throw std::invalid_argument("arrows do not act nilpotently");
}

int RepModule::total_dimension() const {
  int t = 0;
  for (int d : dims_) t += d;
  return t;
}

Matrix RepModule::path_action(const Path& p) const {
  Matrix m = Matrix::identity(dim(p.start()));
  for (int a : p.arrows()) m = m * action(a);
  return m;
}

Matrix RepModule::evaluate(const NCPoly& p) const {
  if (p.is_zero()) throw std::invalid_argument("evaluating the zero polynomial");
  if (!p.is_parallel()) throw std::invalid_argument("evaluating a non-parallel polynomial");
  const Path& first = p.terms().begin()->first;
  Matrix out(dim(first.start()), dim(first.end()));
  for (const auto& [w, c] : p.terms()) out += c * path_action(w);
  return out;
}

int RepModule::loewy_length() const {
  const Quiver& q = quiver();
  std::vector<Matrix> layer;
  int total = 0;
  for (int v = 0; v < q.vertex_count(); ++v) {
    layer.push_back(Matrix::identity(dim(v)));
    total += dims_[sz(v)];
  }
  int steps = 0;
  while (total > 0) {
    std::vector<Matrix> next;
    int next_total = 0;
    for (int v = 0; v < q.vertex_count(); ++v) {
      std::vector<Matrix> images;
      for (int a = 0; a < q.arrow_count(); ++a)
        if (q.arrow(a).target == v) images.push_back(layer[sz(q.arrow(a).source)] * action(a));
      next.push_back(row_space(images, dim(v)));
      next_total += static_cast<int>(next.back().rows());
    }
    if (next_total == total) return -1;
    layer = std::move(next);
    total = next_total;
    ++steps;
  }
  return steps;
}

bool same_algebra(const RepModule& a, const RepModule& b) {
  return a.algebra_ptr() == b.algebra_ptr() || a.algebra() == b.algebra();
}

bool operator==(const RepModule& a, const RepModule& b) {
  return same_algebra(a, b) && a.dims_ == b.dims_ && a.actions_ == b.actions_;
}

RepModule direct_sum(const std::vector<RepModule>& summands) {
  if (summands.empty()) throw std::invalid_argument("direct sum of no modules");
  const Quiver& q = summands.front().quiver();
  std::vector<int> dims(sz(q.vertex_count()), 0);
  std::vector<Matrix> actions(sz(q.arrow_count()));
  for (const auto& s : summands) {
    if (!same_algebra(s, summands.front())) throw std::invalid_argument("direct sum over different algebras");
    for (int v = 0; v < q.vertex_count(); ++v) dims[sz(v)] += s.dims()[sz(v)];
    for (int a = 0; a < q.arrow_count(); ++a) actions[sz(a)] = block_diagonal(actions[sz(a)], s.action(a));
  }
  return RepModule(summands.front().algebra_ptr(), std::move(dims), std::move(actions));
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap h;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(f.blocks[v] * g.blocks.at(v));
  return h;
}

ModuleMap identity_map(const RepModule& m) {
  ModuleMap f;
  for (int v = 0; v < m.quiver().vertex_count(); ++v) f.blocks.push_back(Matrix::identity(m.dim(v)));
  return f;
}

ModuleMap zero_map(const RepModule& from, const RepModule& to) {
  ModuleMap f;
  for (int v = 0; v < from.quiver().vertex_count(); ++v) f.blocks.emplace_back(from.dim(v), to.dim(v));
  return f;
}

bool is_homomorphism(const ModuleMap& f, const RepModule& from, const RepModule& to) {
  const Quiver& q = from.quiver();
  if (f.blocks.size() != sz(q.vertex_count())) return false;
  for (int v = 0; v < q.vertex_count(); ++v)
    if (f.blocks[sz(v)].rows() != from.dim(v) || f.blocks[sz(v)].cols() != to.dim(v)) return false;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    if (from.action(a) * f.blocks[sz(arr.target)] != f.blocks[sz(arr.source)] * to.action(a)) return false;
  }
  return true;
}

ModuleMap linear_combination(const std::vector<ModuleMap>& maps, const Vector& coeffs) {
  if (maps.empty()) throw std::invalid_argument("linear combination of no maps");
  ModuleMap out = maps.front();
  for (auto& b : out.blocks) b *= 0;
  for (std::size_t k = 0; k < maps.size(); ++k)
    for (std::size_t v = 0; v < out.blocks.size(); ++v) out.blocks[v] += coeffs.at(k) * maps[k].blocks[v];
  return out;
}

HomSpace hom(const RepModule& from, const RepModule& to) {
  if (!same_algebra(from, to)) throw std::invalid_argument("hom between modules over different algebras");
  const Quiver& q = from.quiver();
  std::vector<std::size_t> off(sz(q.vertex_count()) + 1, 0);
  for (int v = 0; v < q.vertex_count(); ++v) off[sz(v) + 1] = off[sz(v)] + from.dim(v) * to.dim(v);
  const std::size_t unknowns = off.back();
  HomSpace space;
  if (unknowns == 0) return space;

  std::size_t equations = 0;
  for (const auto& a : q.arrows()) equations += from.dim(a.source) * to.dim(a.target);
  Matrix sys(equations, unknowns);
  std::size_t row = 0;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const auto s = sz(q.arrow(a).source), t = sz(q.arrow(a).target);
    const Matrix& ma = from.action(a);
    const Matrix& na = to.action(a);
    const std::size_t ds = to.dim(static_cast<int>(s)), dt = to.dim(static_cast<int>(t));
    for (std::size_t i = 0; i < ma.rows(); ++i)
      for (std::size_t j = 0; j < na.cols(); ++j, ++row) {
        // (M_a f_t - f_s N_a)(i, j) = 0
        for (std::size_t k = 0; k < ma.cols(); ++k) sys(row, off[t] + k * dt + j) += ma(i, k);
        for (std::size_t l = 0; l < ds; ++l) sys(row, off[s] + i * ds + l) -= na(l, j);
      }
  }
  for (const auto& x : nullspace(sys)) {
    ModuleMap f;
    for (int v = 0; v < q.vertex_count(); ++v) {
      Matrix b(from.dim(v), to.dim(v));
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = x[off[sz(v)] + i * b.cols() + j];
      f.blocks.push_back(std::move(b));
    }
    space.basis.push_back(std::move(f));
  }
  return space;
}

Vector ExtSpace::flatten(const Cocycle& c) const {
  const Quiver& q = domain_.quiver();
  if (c.size() != sz(q.arrow_count())) throw std::invalid_argument("cocycle has the wrong number of blocks");
  Vector flat;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Matrix& b = c[sz(a)];
    if (b.rows() != domain_.dim(q.arrow(a).source) || b.cols() != codomain_.dim(q.arrow(a).target))
      throw std::invalid_argument("cocycle block has the wrong shape");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) flat.push_back(b(i, j));
  }
  return flat;
}

bool ExtSpace::is_coboundary(const Cocycle& c) const {
  SparseEchelon e;
  for (const auto& b : coboundaries_) e.insert(to_sparse(b));
  return e.contains(to_sparse(flatten(c)));
}

Vector ExtSpace::class_of(const Cocycle& c) const {
  Vector flat = flatten(c);
  std::vector<Vector> cols;
  for (const auto& b : basis_) cols.push_back(flatten(b));
  cols.insert(cols.end(), coboundaries_.begin(), coboundaries_.end());
  if (cols.empty()) {
    for (const auto& x : flat)
      if (x != 0) throw std::invalid_argument("not a cocycle");
    return {};
  }
  auto sol = solve(from_columns(cols, flat.size()), flat);
  if (!sol) throw std::invalid_argument("not a cocycle");
  return Vector(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(basis_.size()));
}

Cocycle ExtSpace::combination(const Vector& coords) const {
  if (coords.size() != basis_.size()) throw std::invalid_argument("wrong number of Ext coordinates");
  Cocycle c = unflatten_cocycle(domain_, codomain_, Vector(cocycle_offsets(domain_, codomain_).back()));
  for (std::size_t k = 0; k < basis_.size(); ++k)
    for (std::size_t a = 0; a < c.size(); ++a) c[a] += coords[k] * basis_[k][a];
  return c;
}

ExtSpace ext1(const RepModule& m, const RepModule& n) {
  if (!same_algebra(m, n)) throw std::invalid_argument("ext between modules over different algebras");
  ExtSpace space(m, n);
  const Quiver& q = m.quiver();
  const AlgebraPresentation& alg = m.algebra();
  auto off = cocycle_offsets(m, n);
  const std::size_t unknowns = off.back();
  if (unknowns == 0) return space;

  // A block-triangular action satisfies a relation iff the off-diagonal part
  // sum_l M_{prefix} delta_{a_l} N_{suffix} vanishes; this is linear in delta.
  std::size_t equations = 0;
  for (const auto& r : alg.relations) {
    const Path& first = r.terms().begin()->first;
    equations += m.dim(first.start()) * n.dim(first.end());
  }
  Matrix sys(equations, unknowns);
  std::size_t base = 0;
  for (const auto& r : alg.relations) {
    const Path& first = r.terms().begin()->first;
    const std::size_t rows = m.dim(first.start()), cols = n.dim(first.end());
    for (const auto& [p, c] : r.terms()) {
      for (int l = 0; l < p.length(); ++l) {
        int a = p.arrows()[sz(l)];
        Matrix pre = m.path_action(p.slice(q, 0, l));
        Matrix post = n.path_action(p.slice(q, l + 1, p.length() - l - 1));
        const std::size_t dt = n.dim(q.arrow(a).target);
        for (std::size_t i = 0; i < rows; ++i)
          for (std::size_t x = 0; x < pre.cols(); ++x) {
            if (pre(i, x) == 0) continue;
            for (std::size_t y = 0; y < post.rows(); ++y)
              for (std::size_t j = 0; j < cols; ++j)
                if (post(y, j) != 0) sys(base + i * cols + j, off[sz(a)] + x * dt + y) += c * pre(i, x) * post(y, j);
          }
      }
    }
    base += rows * cols;
  }
  std::vector<Vector> cocycles = nullspace(sys);
  space.cocycle_dim_ = cocycles.size();

  // Changing the vector-space splitting by h adds M_a h_t - h_s N_a.
  for (int v = 0; v < q.vertex_count(); ++v)
    for (std::size_t r = 0; r < m.dim(v); ++r)
      for (std::size_t col = 0; col < n.dim(v); ++col) {
        Vector d(unknowns);
        for (int a = 0; a < q.arrow_count(); ++a) {
          const Arrow& arr = q.arrow(a);
          const std::size_t dt = n.dim(arr.target);
          if (arr.target == v)
            for (std::size_t i = 0; i < m.dim(arr.source); ++i) d[off[sz(a)] + i * dt + col] += m.action(a)(i, r);
          if (arr.source == v)
            for (std::size_t j = 0; j < dt; ++j) d[off[sz(a)] + r * dt + j] -= n.action(a)(col, j);
        }
        space.coboundaries_.push_back(std::move(d));
      }

  SparseEchelon quotient;
  for (const auto& b : space.coboundaries_) quotient.insert(to_sparse(b));
  for (const auto& z : cocycles)
    if (quotient.insert(to_sparse(z))) space.basis_.push_back(unflatten_cocycle(m, n, z));
  return space;
}

Extension realize_extension(const RepModule& m, const RepModule& n, const Cocycle& delta) {
  if (!same_algebra(m, n)) throw std::invalid_argument("extension of modules over different algebras");
  const Quiver& q = m.quiver();
  if (delta.size() != sz(q.arrow_count())) throw std::invalid_argument("cocycle has the wrong number of blocks");
  std::vector<int> dims;
  for (int v = 0; v < q.vertex_count(); ++v) dims.push_back(static_cast<int>(n.dim(v) + m.dim(v)));
  std::vector<Matrix> actions;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    const std::size_t ns = n.dim(arr.source), nt = n.dim(arr.target);
    const Matrix& d = delta[sz(a)];
    if (d.rows() != m.dim(arr.source) || d.cols() != nt) throw std::invalid_argument("cocycle block has the wrong shape");
    Matrix e = block_diagonal(n.action(a), m.action(a));
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < nt; ++j) e(ns + i, j) = d(i, j);
    actions.push_back(std::move(e));
  }
  RepModule middle(m.algebra_ptr(), std::move(dims), std::move(actions));
  ModuleMap inclusion, projection;
  for (int v = 0; v < q.vertex_count(); ++v) {
    const std::size_t nv = n.dim(v), mv = m.dim(v);
    inclusion.blocks.push_back(embed_rows(nv, nv + mv, 0));
    projection.blocks.push_back(embed_rows(mv, nv + mv, nv).transpose());
  }
  return Extension{n, std::move(middle), m, std::move(inclusion), std::move(projection)};
}

Extension realize_extension(const ExtSpace& ext, const Vector& coords) {
  return realize_extension(ext.domain(), ext.codomain(), ext.combination(coords));
}

bool is_short_exact(const Extension& e) {
  if (!is_homomorphism(e.inclusion, e.sub, e.middle) || !is_homomorphism(e.projection, e.middle, e.quotient))
    return false;
  const Quiver& q = e.middle.quiver();
  for (int v = 0; v < q.vertex_count(); ++v) {
    const Matrix& i = e.inclusion.blocks[sz(v)];
    const Matrix& p = e.projection.blocks[sz(v)];
    if (e.middle.dim(v) != e.sub.dim(v) + e.quotient.dim(v)) return false;
    if (rank(i) != e.sub.dim(v) || rank(p) != e.quotient.dim(v)) return false;
    if (!(i * p).is_zero()) return false;
  }
  return true;
}

bool splits(const Extension& e) {
  if (e.quotient.total_dimension() == 0) return true;
  HomSpace sections = hom(e.quotient, e.middle);
  if (sections.basis.empty()) return false;
  // sum_k c_k (s_k then projection) = identity
  std::vector<Vector> cols;
  for (const auto& s : sections.basis) cols.push_back(flatten_map(compose(s, e.projection)));
  Vector target = flatten_map(identity_map(e.quotient));
  return solve(from_columns(cols, target.size()), target).has_value();
}

UniversalExtension universal_extension(const RepModule& f, const std::vector<RepModule>& targets) {
  UniversalExtension u{trivial_extension(f), {}, {}};
  std::vector<RepModule> copies;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    ExtSpace e = ext1(f, targets[j]);
    for (const auto& c : e.basis()) {
      u.summand_target.push_back(j);
      u.classes.push_back(c);
      copies.push_back(targets[j]);
    }
  }
  if (copies.empty()) return u;

  const Quiver& q = f.quiver();
  Cocycle delta;
  for (int a = 0; a < q.arrow_count(); ++a) {
    std::size_t width = 0;
    for (const auto& c : copies) width += c.dim(q.arrow(a).target);
    Matrix block(f.dim(q.arrow(a).source), width);
    std::size_t at = 0;
    for (std::size_t k = 0; k < copies.size(); ++k) {
      const Matrix& part = u.classes[k][sz(a)];
      for (std::size_t i = 0; i < part.rows(); ++i)
        for (std::size_t j = 0; j < part.cols(); ++j) block(i, at + j) = part(i, j);
      at += part.cols();
    }
    delta.push_back(std::move(block));
  }
  u.extension = realize_extension(f, direct_sum(copies), delta);
  return u;
}

Extension universal_extension_step(const RepModule& f, const std::vector<RepModule>& targets,
                                   const UniversalExtension& u, std::size_t q) {
  if (q >= u.classes.size()) throw std::out_of_range("universal extension step out of range");
  const Quiver& quiver = f.quiver();
  auto partial = [&](std::size_t count) {
    if (count == 0) return trivial_extension(f);
    std::vector<RepModule> copies;
    for (std::size_t k = 0; k < count; ++k) copies.push_back(targets[u.summand_target[k]]);
    Cocycle delta;
    for (int a = 0; a < quiver.arrow_count(); ++a) {
      std::size_t width = 0;
      for (const auto& c : copies) width += c.dim(quiver.arrow(a).target);
      Matrix block(f.dim(quiver.arrow(a).source), width);
      std::size_t at = 0;
      for (std::size_t k = 0; k < count; ++k) {
        const Matrix& part = u.classes[k][sz(a)];
        for (std::size_t i = 0; i < part.rows(); ++i)
          for (std::size_t j = 0; j < part.cols(); ++j) block(i, at + j) = part(i, j);
        at += part.cols();
      }
      delta.push_back(std::move(block));
    }
    return realize_extension(f, direct_sum(copies), delta);
  };
  Extension before = partial(q);
  Extension after = partial(q + 1);
  const RepModule& added = targets[u.summand_target[q]];

  ModuleMap inclusion, projection;
  for (int v = 0; v < quiver.vertex_count(); ++v) {
    const std::size_t earlier = before.sub.dim(v);  // copies 0..q-1
    const std::size_t width = after.middle.dim(v);
    inclusion.blocks.push_back(embed_rows(added.dim(v), width, earlier));
    Matrix drop(width, before.middle.dim(v));
    for (std::size_t i = 0; i < earlier; ++i) drop(i, i) = 1;
    for (std::size_t i = 0; i < f.dim(v); ++i) drop(earlier + added.dim(v) + i, earlier + i) = 1;
    projection.blocks.push_back(std::move(drop));
  }
  return Extension{added, std::move(after.middle), std::move(before.middle), std::move(inclusion),
                   std::move(projection)};
}

bool is_isomorphic(const RepModule& m, const RepModule& n) {
  if (!same_algebra(m, n) || m.dims() != n.dims()) return false;
  if (m.total_dimension() == 0) return true;
  HomSpace h = hom(m, n);
  if (h.basis.empty()) return false;
  auto invertible = [&](const Vector& coeffs) {
    ModuleMap f = linear_combination(h.basis, coeffs);
    for (const auto& b : f.blocks)
      if (!is_invertible(b)) return false;
    return true;
  };
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> coeff(-7, 7);
  for (int attempt = 0; attempt < 24; ++attempt) {
    Vector c(h.basis.size());
    for (auto& x : c) x = coeff(rng);
    if (invertible(c)) return true;
  }
  if (h.basis.size() > kIsomorphismGridMaxBasis) return false;
  const int lo = -kIsomorphismGridBound + 1, hi = kIsomorphismGridBound;
  std::vector<int> digits(h.basis.size(), lo);
  while (true) {
    Vector c(digits.begin(), digits.end());
    if (invertible(c)) return true;
    std::size_t k = 0;
    while (k < digits.size() && digits[k] == hi) digits[k++] = lo;
    if (k == digits.size()) return false;
    ++digits[k];
  }
}

bool lifts_through(const RepModule& p, const Extension& e) {
  HomSpace down = hom(p, e.quotient);
  if (down.basis.empty()) return true;
  HomSpace up = hom(p, e.middle);
  std::vector<Vector> images;
  for (const auto& g : up.basis) images.push_back(flatten_map(compose(g, e.projection)));
  return rank_of_vectors(images) == down.dimension();
}

std::size_t ext1_dimension_via_projective_cover(const TruncatedAlgebra& alg, const RepModule& m, const RepModule& n,
                                                bool pad) {
  if (!(alg.presentation() == m.algebra()) || !same_algebra(m, n))
    throw std::invalid_argument("modules are not over this algebra");
  if (!alg.captures_full_algebra() && m.loewy_length() + n.loewy_length() > alg.truncation_degree())
    throw TruncationExceeded("truncation exceeded: raise truncate to at least " +
                             std::to_string(m.loewy_length() + n.loewy_length()));
  const Quiver& q = alg.quiver();
  const std::vector<RepModule> proj = projectives(alg);

  // Generators: a complement of the radical at each vertex.
  struct Generator {
    int vertex;
    Vector element;
  };
  std::vector<Generator> gens;
  for (int v = 0; v < q.vertex_count(); ++v) {
    std::vector<Matrix> images;
    for (int a = 0; a < q.arrow_count(); ++a)
      if (q.arrow(a).target == v) images.push_back(m.action(a));
    SparseEchelon span;
    Matrix rad = row_space(images, m.dim(v));
    for (std::size_t i = 0; i < rad.rows(); ++i) span.insert(to_sparse(rad.row(i)));
    for (std::size_t i = 0; i < m.dim(v); ++i) {
      Vector unit(m.dim(v));
      unit[i] = 1;
      if (span.insert(to_sparse(unit))) gens.push_back({v, unit});
    }
  }

  std::vector<RepModule> summands;
  for (const auto& g : gens) summands.push_back(proj[sz(g.vertex)]);
  if (pad) summands.push_back(proj[0]);
  if (summands.empty()) return 0;
  RepModule cover = direct_sum(summands);

  // cover -> m, row by row in the order projectives() lays out P_v.
  std::vector<Matrix> pi;
  for (int w = 0; w < q.vertex_count(); ++w) pi.emplace_back(cover.dim(w), m.dim(w));
  std::vector<std::size_t> row_at(sz(q.vertex_count()), 0);
  for (std::size_t s = 0; s < summands.size(); ++s) {
    const bool real = s < gens.size();
    const int v = real ? gens[s].vertex : 0;
    std::vector<std::size_t> local(sz(q.vertex_count()), 0);
    for (const auto& path : alg.basis()) {
      if (path.start() != v) continue;
      const auto w = sz(path.end());
      std::size_t r = row_at[w] + local[w]++;
      if (!real) continue;
      Vector image = gens[s].element * m.path_action(path);
      for (std::size_t j = 0; j < image.size(); ++j) pi[w](r, j) = image[j];
    }
    for (int w = 0; w < q.vertex_count(); ++w) row_at[sz(w)] += local[sz(w)];
  }

  // Omega = kernel of pi, with the restricted action.
  std::vector<Matrix> kernel;
  std::vector<int> kdims;
  for (int w = 0; w < q.vertex_count(); ++w) {
    auto basis = nullspace(pi[sz(w)].transpose());
    Matrix k(basis.size(), cover.dim(w));
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < cover.dim(w); ++j) k(i, j) = basis[i][j];
    kdims.push_back(static_cast<int>(basis.size()));
    kernel.push_back(std::move(k));
  }
  std::vector<Matrix> kactions;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const auto s = sz(q.arrow(a).source), t = sz(q.arrow(a).target);
    Matrix act(kernel[s].rows(), kernel[t].rows());
    Matrix kt_transposed = kernel[t].transpose();
    for (std::size_t i = 0; i < kernel[s].rows(); ++i) {
      Vector image = kernel[s].row(i) * cover.action(a);
      auto z = solve(kt_transposed, image);
      if (!z) throw std::logic_error("kernel of a module map is not a submodule");
      for (std::size_t j = 0; j < z->size(); ++j) act(i, j) = (*z)[j];
    }
    kactions.push_back(std::move(act));
  }
  RepModule omega(m.algebra_ptr(), std::move(kdims), std::move(kactions));

  HomSpace from_omega = hom(omega, n);
  HomSpace from_cover = hom(cover, n);
  std::vector<Vector> restricted;
  for (const auto& f : from_cover.basis) {
    ModuleMap r;
    for (int w = 0; w < q.vertex_count(); ++w) r.blocks.push_back(kernel[sz(w)] * f.blocks[sz(w)]);
    restricted.push_back(flatten_map(r));
  }
  return from_omega.dimension() - rank_of_vectors(restricted);
}

}  // namespace ncdef
