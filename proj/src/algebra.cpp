#include "ncdef/algebra.hpp"

#include <deque>
#include <stdexcept>

#include "ncdef/errors.hpp"

namespace ncdef {

SparseVector StructureConstants::multiply(const SparseVector& a, const SparseVector& b) const {
  SparseVector out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) axpy(out, x * y, product(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  return out;
}

bool is_associative(const StructureConstants& sc) {
  const std::size_t n = sc.dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVector& ij = sc.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        SparseVector left = sc.multiply(ij, {{static_cast<int>(k), 1}});
        SparseVector right = sc.multiply({{static_cast<int>(i), 1}}, sc.product(j, k));
        if (left != right) return false;
      }
    }
  return true;
}

std::size_t center_dimension(const StructureConstants& sc) {
  const std::size_t n = sc.dimension();
  // z = sum z_i b_i is central iff z b_j = b_j z for every j; one equation per (j, k).
  SparseEchelon equations;
  for (std::size_t j = 0; j < n; ++j) {
    std::map<int, SparseVector> rows;  // output coordinate k -> coefficients of z_i
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [k, x] : sc.product(i, j)) axpy(rows[k], x, {{static_cast<int>(i), 1}});
      for (const auto& [k, x] : sc.product(j, i)) axpy(rows[k], -x, {{static_cast<int>(i), 1}});
    }
    for (auto& [k, row] : rows)
      if (!row.empty()) equations.insert(row);
  }
  return n - equations.size();
}

namespace {

// Basis (as inserted vectors) of the span of `vectors`.
std::vector<SparseVector> span_basis(const std::vector<SparseVector>& vectors) {
  SparseEchelon e;
  std::vector<SparseVector> out;
  for (const auto& v : vectors)
    if (e.insert(v)) out.push_back(v);
  return out;
}

}  // namespace

std::vector<SparseVector> two_sided_ideal(const StructureConstants& sc, const std::vector<SparseVector>& generators) {
  const std::size_t n = sc.dimension();
  SparseEchelon e;
  std::vector<SparseVector> out;
  std::deque<SparseVector> queue(generators.begin(), generators.end());
  while (!queue.empty()) {
    SparseVector g = std::move(queue.front());
    queue.pop_front();
    if (!e.insert(g)) continue;
    for (std::size_t i = 0; i < n; ++i) {
      SparseVector unit{{static_cast<int>(i), 1}};
      if (auto l = sc.multiply(unit, g); !l.empty()) queue.push_back(std::move(l));
      if (auto r = sc.multiply(g, unit); !r.empty()) queue.push_back(std::move(r));
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<std::size_t> power_layers(const StructureConstants& sc, const std::vector<SparseVector>& ideal) {
  std::vector<SparseVector> base = span_basis(ideal);
  std::vector<std::size_t> layers{sc.dimension() - base.size()};
  std::vector<SparseVector> current = base;
  while (!current.empty()) {
    SparseEchelon e;
    std::vector<SparseVector> next;
    for (const auto& x : current)
      for (const auto& y : base) {
        SparseVector xy = sc.multiply(x, y);
        if (e.insert(xy)) next.push_back(std::move(xy));
      }
    if (next.size() == current.size()) throw std::runtime_error("ideal is not nilpotent");
    layers.push_back(current.size() - next.size());
    current = std::move(next);
  }
  return layers;
}

std::optional<std::size_t> TruncatedAlgebra::index_of(const Path& p) const {
  auto it = basis_index_.find(p);
  if (it == basis_index_.end()) return std::nullopt;
  return it->second;
}

SparseVector TruncatedAlgebra::normal_form(const NCPoly& p) const {
  SparseVector out;
  for (const auto& [w, c] : p.terms()) {
    if (w.length() >= truncation_degree()) continue;
    auto it = word_forms_.find(w);
    if (it == word_forms_.end()) throw std::invalid_argument("path is not a path of this algebra's quiver");
    axpy(out, c, it->second);
  }
  return out;
}

NCPoly TruncatedAlgebra::to_poly(const SparseVector& coords) const {
  NCPoly p;
  for (const auto& [i, c] : coords) p.add_term(basis_.at(static_cast<std::size_t>(i)), c);
  return p;
}

std::vector<std::size_t> TruncatedAlgebra::radical_layers() const {
  std::vector<SparseVector> radical;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].length() >= 1) radical.push_back({{static_cast<int>(i), 1}});
  auto layers = power_layers(table_, radical);
  if (!layers.empty() && layers.front() == 0) layers.clear();  // zero algebra
  return layers;
}

std::vector<std::size_t> TruncatedAlgebra::degree_profile() const {
  std::vector<std::size_t> profile;
  for (const auto& p : basis_) {
    auto d = static_cast<std::size_t>(p.length());
    if (profile.size() <= d) profile.resize(d + 1, 0);
    ++profile[d];
  }
  return profile;
}

TruncatedAlgebra truncate(std::shared_ptr<const AlgebraPresentation> pres, const TermOrder& order) {
  validate_admissible(*pres);
  const Quiver& q = pres->quiver;
  const int d = pres->truncation_degree;

  TruncatedAlgebra alg;
  alg.pres_ = pres;
  alg.order_ = order;

  // Word ids follow the term order so that pivots (largest index) are leading terms.
  std::vector<Path> words = enumerate_paths(q, d, order);
  std::map<Path, int> word_id;
  for (std::size_t i = 0; i < words.size(); ++i) word_id.emplace(words[i], static_cast<int>(i));

  auto id_of = [&](const std::optional<Path>& p) -> int {
    if (!p || p->length() >= d) return -1;
    return word_id.at(*p);
  };
  const auto n_arrows = static_cast<std::size_t>(q.arrow_count());
  std::vector<int> left(words.size() * n_arrows), right(words.size() * n_arrows);
  for (std::size_t w = 0; w < words.size(); ++w)
    for (std::size_t a = 0; a < n_arrows; ++a) {
      Path arrow = Path::of_arrow(q, static_cast<int>(a));
      left[w * n_arrows + a] = id_of(arrow.then(words[w]));
      right[w * n_arrows + a] = id_of(words[w].then(arrow));
    }

  // The truncated ideal: span of u*r*v (dropping long paths), built as the
  // closure of the relations under multiplication by arrows on either side.
  SparseEchelon ideal;
  std::deque<SparseVector> queue;
  for (const auto& r : pres->relations) {
    SparseVector v;
    for (const auto& [w, c] : r.terms())
      if (w.length() < d) v.emplace(word_id.at(w), c);
    if (!v.empty()) queue.push_back(std::move(v));
  }
  while (!queue.empty()) {
    SparseVector g = std::move(queue.front());
    queue.pop_front();
    if (!ideal.insert(g)) continue;
    for (std::size_t a = 0; a < n_arrows; ++a) {
      for (const auto* ext : {&left, &right}) {
        SparseVector child;
        for (const auto& [w, c] : g) {
          int id = (*ext)[static_cast<std::size_t>(w) * n_arrows + a];
          if (id >= 0) child.emplace(id, c);
        }
        if (!child.empty()) queue.push_back(std::move(child));
      }
    }
  }

  std::vector<int> basis_of_word(words.size(), -1);
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (ideal.is_pivot(static_cast<int>(i))) continue;
    basis_of_word[i] = static_cast<int>(alg.basis_.size());
    alg.basis_index_.emplace(words[i], alg.basis_.size());
    alg.basis_.push_back(words[i]);
  }
  for (int v = 0; v < q.vertex_count(); ++v) alg.idempotents_.push_back(alg.basis_index_.at(Path::idempotent(v)));

  for (std::size_t i = 0; i < words.size(); ++i) {
    SparseVector coords;
    for (const auto& [w, c] : ideal.reduce({{static_cast<int>(i), 1}})) coords.emplace(basis_of_word[static_cast<std::size_t>(w)], c);
    alg.word_forms_.emplace(words[i], std::move(coords));
  }

  const std::size_t n = alg.basis_.size();
  alg.table_ = StructureConstants(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto prod = alg.basis_[i].then(alg.basis_[j]);
      if (!prod || prod->length() >= d) continue;
      alg.table_.set_product(i, j, alg.word_forms_.at(*prod));
    }

  bool captures = q.arrow_count() == 0;
  if (!captures && d >= 2) {
    captures = true;
    for (const auto& w : words)
      if (w.length() == d - 1 && !alg.word_forms_.at(w).empty()) {
        captures = false;
        break;
      }
  }
  alg.captures_full_ = captures;
  return alg;
}

TruncatedAlgebra truncate(std::shared_ptr<const AlgebraPresentation> pres) {
  TermOrder order = default_order(*pres);
  return truncate(std::move(pres), order);
}

TruncatedAlgebra truncate(const AlgebraPresentation& pres) {
  return truncate(std::make_shared<const AlgebraPresentation>(pres));
}

std::vector<RepModule> simples(const TruncatedAlgebra& alg) {
  const Quiver& q = alg.quiver();
  std::vector<RepModule> out;
  for (int v = 0; v < q.vertex_count(); ++v) {
    std::vector<int> dims(static_cast<std::size_t>(q.vertex_count()), 0);
    dims[static_cast<std::size_t>(v)] = 1;
    std::vector<Matrix> actions;
    for (const auto& a : q.arrows())
      actions.emplace_back(static_cast<std::size_t>(dims[static_cast<std::size_t>(a.source)]),
                           static_cast<std::size_t>(dims[static_cast<std::size_t>(a.target)]));
    out.emplace_back(alg.presentation_ptr(), std::move(dims), std::move(actions));
  }
  return out;
}

std::vector<RepModule> projectives(const TruncatedAlgebra& alg) {
  const Quiver& q = alg.quiver();
  const auto nv = static_cast<std::size_t>(q.vertex_count());
  std::vector<RepModule> out;
  for (int v = 0; v < q.vertex_count(); ++v) {
    // position of each basis path from v within its end-vertex space
    std::vector<int> dims(nv, 0);
    std::map<std::size_t, int> position;
    for (std::size_t i = 0; i < alg.dimension(); ++i) {
      const Path& p = alg.basis()[i];
      if (p.start() != v) continue;
      position.emplace(i, dims[static_cast<std::size_t>(p.end())]++);
    }
    std::vector<Matrix> actions;
    for (int a = 0; a < q.arrow_count(); ++a) {
      const Arrow& arr = q.arrow(a);
      Matrix m(static_cast<std::size_t>(dims[static_cast<std::size_t>(arr.source)]),
               static_cast<std::size_t>(dims[static_cast<std::size_t>(arr.target)]));
      for (const auto& [i, row] : position) {
        const Path& p = alg.basis()[i];
        if (p.end() != arr.source) continue;
        NCPoly prod = NCPoly(p) * NCPoly(Path::of_arrow(q, a));
        for (const auto& [j, c] : alg.normal_form(prod))
          m(static_cast<std::size_t>(row), static_cast<std::size_t>(position.at(static_cast<std::size_t>(j)))) = c;
      }
      actions.push_back(std::move(m));
    }
    out.emplace_back(alg.presentation_ptr(), std::move(dims), std::move(actions));
  }
  return out;
}

}  // namespace ncdef
