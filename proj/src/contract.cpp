#include "ncdef/contract.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace ncdef {
namespace {

std::size_t sz(int n) { return static_cast<std::size_t>(n); }

SparseVector unit(std::size_t k) { return SparseVector{{static_cast<int>(k), Rational(1)}}; }

std::set<int> contracted_set(const ContractionSpec& spec) {
  std::set<int> v0;
  for (int v : spec.contracted) {
    if (v < 0 || v >= spec.algebra.quiver.vertex_count())
      throw std::invalid_argument("contracted vertex " + std::to_string(v + 1) + " out of range");
    v0.insert(v);
  }
  if (static_cast<int>(v0.size()) == spec.algebra.quiver.vertex_count() && !spec.allow_zero)
    throw std::invalid_argument("contracting every vertex gives the zero algebra");
  return v0;
}

struct Renumbering {
  std::vector<int> kept;           // new -> old vertex
  std::vector<int> vertex;         // old -> new, -1 if contracted
  std::vector<int> arrow;          // old -> new, -1 if dropped
};

Renumbering renumber(const Quiver& q, const std::set<int>& v0) {
  Renumbering r;
  r.vertex.assign(sz(q.vertex_count()), -1);
  for (int v = 0; v < q.vertex_count(); ++v)
    if (!v0.count(v)) {
      r.vertex[sz(v)] = static_cast<int>(r.kept.size());
      r.kept.push_back(v);
    }
  int next = 0;
  for (const auto& a : q.arrows())
    r.arrow.push_back(r.vertex[sz(a.source)] >= 0 && r.vertex[sz(a.target)] >= 0 ? next++ : -1);
  return r;
}

std::optional<Path> translate(const Path& p, const Quiver& from, const Quiver& to, const Renumbering& r) {
  for (int k = 0; k <= p.length(); ++k)
    if (r.vertex[sz(p.vertex_at(from, k))] < 0) return std::nullopt;
  if (p.length() == 0) return Path::idempotent(r.vertex[sz(p.start())]);
  std::vector<int> arrows;
  for (int a : p.arrows()) arrows.push_back(r.arrow[sz(a)]);
  return Path::of_arrows(to, r.vertex[sz(p.start())], std::move(arrows));
}

}  // namespace

AlgebraPresentation contracted_presentation(const ContractionSpec& spec) {
  const Quiver& q = spec.algebra.quiver;
  const Renumbering r = renumber(q, contracted_set(spec));
  std::vector<Arrow> arrows;
  for (int a = 0; a < q.arrow_count(); ++a)
    if (r.arrow[sz(a)] >= 0) {
      Arrow arr = q.arrow(a);
      arr.source = r.vertex[sz(arr.source)];
      arr.target = r.vertex[sz(arr.target)];
      arrows.push_back(std::move(arr));
    }
  AlgebraPresentation out{Quiver(static_cast<int>(r.kept.size()), std::move(arrows)), {},
                          spec.algebra.truncation_degree};
  for (const auto& rel : spec.algebra.relations) {
    NCPoly image;
    for (const auto& [p, c] : rel.terms())
      if (auto t = translate(p, q, out.quiver, r)) image.add_term(*t, c);
    if (!image.is_zero()) out.relations.push_back(std::move(image));
  }
  return out;
}

Contraction contract(const ContractionSpec& spec) {
  const std::set<int> v0 = contracted_set(spec);
  const Renumbering r = renumber(spec.algebra.quiver, v0);
  Contraction out;
  out.presentation = contracted_presentation(spec);
  out.algebra = truncate(out.presentation);
  out.kept = r.kept;

  const TruncatedAlgebra a = truncate(spec.algebra);
  const StructureConstants& sc = a.structure();
  std::vector<SparseVector> gens;
  for (int v : v0) gens.push_back(unit(a.idempotent(v)));
  SparseEchelon ideal;
  for (const auto& g : two_sided_ideal(sc, gens)) ideal.insert(g);

  std::vector<std::size_t> old_index;
  std::vector<int> new_index(a.dimension(), -1);
  for (std::size_t k = 0; k < a.dimension(); ++k)
    if (!ideal.is_pivot(static_cast<int>(k))) {
      new_index[k] = static_cast<int>(old_index.size());
      old_index.push_back(k);
      out.quotient.basis.push_back(a.basis()[k]);
    }
  const std::size_t n = old_index.size();
  auto project = [&](const SparseVector& v) {
    SparseVector w;
    for (const auto& [k, c] : ideal.reduce(v)) w[new_index[sz(k)]] = c;
    return w;
  };
  out.quotient.structure = StructureConstants(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.quotient.structure.set_product(i, j, project(sc.product(old_index[i], old_index[j])));
  std::vector<SparseVector> radical;
  for (std::size_t i = 0; i < n; ++i) {
    const auto len = sz(out.quotient.basis[i].length());
    if (len >= out.quotient.degree_profile.size()) out.quotient.degree_profile.resize(len + 1, 0);
    ++out.quotient.degree_profile[len];
    if (len > 0) radical.push_back(unit(i));
  }
  if (n > 0) out.quotient.radical_layers = power_layers(out.quotient.structure, radical);

  // Kept words, read in the truncated presentation, must give an isomorphism.
  const TruncatedAlgebra& t = out.algebra;
  bool agree = n == t.dimension();
  std::vector<SparseVector> image;
  for (std::size_t i = 0; agree && i < n; ++i) {
    auto p = translate(out.quotient.basis[i], spec.algebra.quiver, out.presentation.quiver, r);
    if (!p) agree = false;
    else image.push_back(t.normal_form(NCPoly(*p)));
  }
  if (agree) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [k, c] : image[i]) m(i, sz(k)) = c;
    agree = is_invertible(m);
  }
  for (std::size_t i = 0; agree && i < n; ++i)
    for (std::size_t j = 0; agree && j < n; ++j) {
      SparseVector expected;
      for (const auto& [k, c] : out.quotient.structure.product(i, j)) axpy(expected, c, image[sz(k)]);
      agree = t.structure().multiply(image[i], image[j]) == expected;
    }
  out.routes_agree = agree;
  return out;
}

bool ContractionComparison::agree() const {
  if (converged && deformation_dimension != contraction_dimension) return false;
  return std::all_of(layers.begin(), layers.end(), [](const LayerComparison& l) { return l.agree(); });
}

ContractionComparison contraction_vs_deformation(const ContractionSpec& spec, int max_stage) {
  const Contraction c = contract(spec);
  const TruncatedAlgebra a = truncate(spec.algebra);
  const std::vector<RepModule> s = simples(a);
  std::vector<RepModule> sub;
  for (int v : c.kept) sub.push_back(s[sz(v)]);
  const VersalResult res = deform_versal(check_simple_collection(sub), max_stage);

  ContractionComparison out;
  out.converged = res.converged;
  out.stages = res.state.stage;
  out.deformation_dimension = res.parameter.dimension();
  out.contraction_dimension = c.algebra.dimension();
  const auto dl = res.parameter.radical_layers();
  const auto cl = c.algebra.radical_layers();
  // A stage-n truncated deformation only sees R / M^(n+1).
  std::size_t count = std::max(dl.size(), cl.size());
  if (!res.converged) count = std::min(count, sz(res.state.stage + 1));
  for (std::size_t k = 0; k < count; ++k)
    out.layers.push_back({k, k < dl.size() ? dl[k] : 0, k < cl.size() ? cl[k] : 0});
  return out;
}

GrowthReport contraction_finiteness(const ContractionSpec& spec, int degree_bound) {
  const AlgebraPresentation p = contracted_presentation(spec);
  return growth_report(complete_rewrite_system(p.quiver, p.relations, degree_bound, default_order(p)));
}

bool OppositeReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

OppositeReport opposite_symmetry_check(const ContractionSpec& spec) {
  ContractionSpec op = spec;
  op.algebra = opposite(spec.algebra);
  const Contraction a = contract(spec);
  const Contraction b = contract(op);
  OppositeReport rep;
  rep.checks.push_back({"dimension", a.algebra.dimension() == b.algebra.dimension(),
                        std::to_string(a.algebra.dimension()) + "," + std::to_string(b.algebra.dimension())});
  rep.checks.push_back({"degree_profile", a.algebra.degree_profile() == b.algebra.degree_profile(),
                        join(a.algebra.degree_profile()) + ";" + join(b.algebra.degree_profile())});
  const std::size_t za = center_dimension(a.algebra.structure());
  const std::size_t zb = center_dimension(b.algebra.structure());
  rep.checks.push_back({"center_dimension", za == zb, std::to_string(za) + "," + std::to_string(zb)});
  rep.checks.push_back({"routes_agree", a.routes_agree && b.routes_agree, ""});
  return rep;
}

}  // namespace ncdef
