#include "ncdef/deform.hpp"

#include <stdexcept>
#include <string>

#include "ncdef/errors.hpp"

namespace ncdef {
namespace {

std::size_t sz(int n) { return static_cast<std::size_t>(n); }

Vector flatten_map(const ModuleMap& f) {
  Vector out;
  for (const auto& b : f.blocks)
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out.push_back(b(i, j));
  return out;
}

SparseVector unit(std::size_t k) { return SparseVector{{static_cast<int>(k), Rational(1)}}; }

// c with (phi then pi) = c * pi.
Rational augmentation(const ModuleMap& phi, const ModuleMap& pi) {
  ModuleMap image = compose(phi, pi);
  for (std::size_t v = 0; v < pi.blocks.size(); ++v)
    for (std::size_t r = 0; r < pi.blocks[v].rows(); ++r)
      for (std::size_t c = 0; c < pi.blocks[v].cols(); ++c)
        if (pi.blocks[v](r, c) != 0) {
          Rational scalar = image.blocks[v](r, c) / pi.blocks[v](r, c);
          for (std::size_t w = 0; w < pi.blocks.size(); ++w)
            if (image.blocks[w] != scalar * pi.blocks[w])
              throw std::logic_error("endomorphism does not descend to the base");
          return scalar;
        }
  throw std::logic_error("surjection onto the base is zero");
}

// Spans of M, M^2, ... as echelon forms; powers[k] spans M^k (powers[0] unused).
std::vector<SparseEchelon> ideal_powers(const StructureConstants& sc, const std::vector<std::size_t>& ideal) {
  std::vector<SparseEchelon> powers(2);
  std::vector<SparseVector> current;
  for (std::size_t k : ideal)
    if (powers[1].insert(unit(k))) current.push_back(unit(k));
  while (!current.empty()) {
    SparseEchelon next;
    std::vector<SparseVector> spanning;
    for (const auto& a : current)
      for (std::size_t k : ideal) {
        SparseVector p = sc.multiply(a, unit(k));
        if (next.insert(p)) spanning.push_back(std::move(p));
      }
    powers.push_back(std::move(next));
    current = std::move(spanning);
  }
  return powers;  // the last entry is the zero ideal
}

}  // namespace

SimpleCollection check_simple_collection(const std::vector<RepModule>& mods) {
  for (std::size_t i = 0; i < mods.size(); ++i) {
    if (!same_algebra(mods[i], mods.front())) throw std::invalid_argument("collection mixes algebras");
    for (std::size_t j = 0; j < mods.size(); ++j) {
      std::size_t d = hom(mods[i], mods[j]).dimension();
      if (d != (i == j ? 1u : 0u)) throw NotSimpleCollection(static_cast<int>(i), static_cast<int>(j), d);
    }
  }
  return SimpleCollection{mods};
}

std::size_t DeformationState::nontrivial_steps() const {
  std::size_t n = 0;
  for (const auto& s : ledger) n += s.nontrivial ? 1 : 0;
  return n;
}

std::vector<std::vector<std::size_t>> ParameterAlgebra::block_dimensions() const {
  std::vector<std::vector<std::size_t>> dims(components, std::vector<std::size_t>(components, 0));
  for (std::size_t k = 0; k < dimension(); ++k) ++dims[row[k]][col[k]];
  return dims;
}

std::vector<std::size_t> ParameterAlgebra::radical_layers() const {
  if (dimension() == 0) return {};
  std::vector<SparseVector> gens;
  for (std::size_t k : augmentation_ideal) gens.push_back(unit(k));
  return power_layers(structure, gens);
}

int ParameterAlgebra::nilpotency_index() const {
  return static_cast<int>(ideal_powers(structure, augmentation_ideal).size()) - 1;
}

ParameterAlgebra parameter_algebra(const DeformationState& state) {
  const std::size_t r = state.current.size();
  struct Element {
    std::size_t row, col;
    ModuleMap map;  // F_col -> F_row
  };
  std::vector<Element> elems;
  for (std::size_t i = 0; i < r; ++i) elems.push_back({i, i, identity_map(state.current[i])});
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      HomSpace h = hom(state.current[j], state.current[i]);
      if (i != j) {
        for (auto& f : h.basis) elems.push_back({i, j, std::move(f)});
        continue;
      }
      Matrix functional(1, h.dimension());
      for (std::size_t k = 0; k < h.dimension(); ++k) functional(0, k) = augmentation(h.basis[k], state.to_base[i]);
      for (const auto& c : nullspace(functional)) elems.push_back({i, i, linear_combination(h.basis, c)});
    }

  ParameterAlgebra pa;
  pa.components = r;
  pa.structure = StructureConstants(elems.size());
  for (std::size_t k = 0; k < elems.size(); ++k) {
    pa.row.push_back(elems[k].row);
    pa.col.push_back(elems[k].col);
    (k < r ? pa.idempotents : pa.augmentation_ideal).push_back(k);
  }

  // Coordinates within a block (i, k), by solving against its flattened basis.
  std::vector<std::vector<std::size_t>> members(r * r);
  for (std::size_t k = 0; k < elems.size(); ++k) members[elems[k].row * r + elems[k].col].push_back(k);
  std::vector<Matrix> solvers(r * r);
  for (std::size_t b = 0; b < r * r; ++b) {
    std::vector<Vector> cols;
    for (std::size_t k : members[b]) cols.push_back(flatten_map(elems[k].map));
    if (!cols.empty()) solvers[b] = from_columns(cols, cols.front().size());
  }

  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) {
      if (elems[a].col != elems[b].row) continue;
      // phi o psi: psi first, then phi
      ModuleMap product = compose(elems[b].map, elems[a].map);
      const std::size_t block = elems[a].row * r + elems[b].col;
      Vector flat = flatten_map(product);
      bool zero = true;
      for (const auto& x : flat) zero = zero && x == 0;
      if (zero) continue;
      auto coords = solve(solvers[block], flat);
      if (!coords) throw std::logic_error("product leaves the Hom space");
      SparseVector v;
      for (std::size_t k = 0; k < coords->size(); ++k)
        if ((*coords)[k] != 0) v[static_cast<int>(members[block][k])] = (*coords)[k];
      pa.structure.set_product(a, b, std::move(v));
    }
  return pa;
}

VersalResult deform_versal(const SimpleCollection& coll, int max_stage) {
  if (max_stage < 0) throw std::invalid_argument("max_stage must be non-negative");
  VersalResult out;
  DeformationState& st = out.state;
  st.base = coll;
  st.current = coll.members;
  for (const auto& f : coll.members) st.to_base.push_back(identity_map(f));
  st.snapshots.push_back(st.current);
  if (coll.members.empty()) {
    out.converged = true;
    out.parameter = parameter_algebra(st);
    return out;
  }
  const int degree = coll.members.front().algebra().truncation_degree;

  while (true) {
    bool vanish = true;
    for (std::size_t i = 0; i < st.current.size() && vanish; ++i)
      for (const auto& fj : coll.members)
        if (ext1(st.current[i], fj).dimension() != 0) {
          vanish = false;
          break;
        }
    if (vanish) {
      out.converged = true;
      break;
    }
    if (st.stage >= max_stage) break;

    std::vector<RepModule> next;
    for (std::size_t i = 0; i < st.current.size(); ++i) {
      UniversalExtension u = universal_extension(st.current[i], coll.members);
      std::vector<std::size_t> seen(coll.size(), 0);
      for (std::size_t q = 0; q < u.classes.size(); ++q) {
        const std::size_t j = u.summand_target[q];
        Extension step = universal_extension_step(st.current[i], coll.members, u, q);
        st.ledger.push_back({st.stage + 1, i, j, seen[j]++, !splits(step)});
      }
      const int loewy = u.extension.middle.loewy_length();
      if (loewy >= degree)
        throw TruncationExceeded("truncation exceeded: stage " + std::to_string(st.stage + 1) + " component " +
                                 std::to_string(i + 1) + " has Loewy length " + std::to_string(loewy) +
                                 " >= truncate " + std::to_string(degree) + "; raise truncate");
      st.to_base[i] = compose(u.extension.projection, st.to_base[i]);
      next.push_back(std::move(u.extension.middle));
    }
    st.current = std::move(next);
    ++st.stage;
    st.snapshots.push_back(st.current);
  }
  out.parameter = parameter_algebra(st);
  return out;
}

bool iterated_extension_dim_audit(const DeformationState& state) {
  std::size_t end_dim = 0;
  for (const auto& a : state.current)
    for (const auto& b : state.current) end_dim += hom(a, b).dimension();
  return end_dim == state.base.size() + state.nontrivial_steps();
}

AlgebraPresentation extract_presentation(const ParameterAlgebra& pa) {
  const std::vector<SparseEchelon> powers = ideal_powers(pa.structure, pa.augmentation_ideal);
  const int nil = static_cast<int>(powers.size()) - 1;  // M^nil = 0

  std::vector<Arrow> arrows;
  std::vector<std::size_t> arrow_element;
  for (std::size_t i = 0; i < pa.components; ++i)
    for (std::size_t j = 0; j < pa.components; ++j) {
      SparseEchelon span = nil >= 2 ? powers[2] : SparseEchelon{};
      for (std::size_t k : pa.augmentation_ideal)
        if (pa.row[k] == i && pa.col[k] == j && span.insert(unit(k))) {
          arrows.push_back({"a" + std::to_string(arrows.size() + 1), static_cast<int>(i), static_cast<int>(j)});
          arrow_element.push_back(k);
        }
    }
  AlgebraPresentation pres{Quiver(static_cast<int>(pa.components), arrows), {}, nil + 1};

  auto value = [&](const Path& p) {
    SparseVector v = unit(pa.idempotents[sz(p.start())]);
    for (int a : p.arrows()) v = pa.structure.multiply(v, unit(arrow_element[sz(a)]));
    return v;
  };

  // Invariant: kQ / (relations + J^(L+1)) ~= R / M^(L+1).
  for (int L = 2; L <= nil; ++L) {
    AlgebraPresentation stage{pres.quiver, pres.relations, L + 1};
    TruncatedAlgebra t = truncate(stage);
    const SparseEchelon zero;
    const SparseEchelon& modulo = L + 1 < static_cast<int>(powers.size()) ? powers[sz(L + 1)] : zero;
    for (std::size_t s = 0; s < pa.components; ++s)
      for (std::size_t e = 0; e < pa.components; ++e) {
        std::vector<Path> words;
        for (const auto& p : t.basis())
          if (sz(p.start()) == s && sz(p.end()) == e) words.push_back(p);
        if (words.empty()) continue;
        Matrix images(pa.dimension(), words.size());
        for (std::size_t w = 0; w < words.size(); ++w)
          for (const auto& [k, c] : modulo.reduce(value(words[w]))) images(sz(k), w) = c;
        for (const auto& c : nullspace(images)) {
          NCPoly rel;
          for (std::size_t w = 0; w < words.size(); ++w)
            if (c[w] != 0) rel.add_term(words[w], c[w]);
          pres.relations.push_back(std::move(rel));
        }
      }
  }
  return pres;
}

bool versality_smoke_test(const DeformationState& state) {
  if (state.current.empty()) return true;
  RepModule total = direct_sum(state.current);
  for (const auto& snapshot : state.snapshots)
    for (const auto& fi : snapshot)
      for (const auto& fj : state.base.members) {
        ExtSpace e = ext1(fi, fj);
        for (std::size_t k = 0; k < e.dimension(); ++k) {
          Vector coords(e.dimension());
          coords[k] = 1;
          if (!lifts_through(total, realize_extension(e, coords))) return false;
        }
      }
  return true;
}

bool RecoveryReport::passed() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

RecoveryReport recovery_check(const TruncatedAlgebra& alg, std::optional<int> max_stage) {
  RecoveryReport rep;
  rep.algebra_layers = alg.radical_layers();
  const std::vector<RepModule> s = simples(alg);
  const std::vector<RepModule> p = projectives(alg);
  VersalResult res;
  try {
    res = deform_versal(check_simple_collection(s), max_stage.value_or(alg.truncation_degree()));
  } catch (const TruncationExceeded& e) {
    rep.checks.push_back({"truncation", false, e.what()});
    return rep;
  }
  rep.converged = res.converged;
  rep.stages = res.state.stage;
  rep.parameter_dimension = res.parameter.dimension();
  rep.parameter_layers = res.parameter.radical_layers();
  const auto& f = res.state.current;

  rep.checks.push_back({"converged", res.converged, "stages=" + std::to_string(res.state.stage)});

  bool hom_delta = true, ext_zero = true, iso = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      hom_delta = hom_delta && hom(f[i], s[j]).dimension() == (i == j ? 1u : 0u);
      ext_zero = ext_zero && ext1(f[i], s[j]).dimension() == 0;
    }
    iso = iso && is_isomorphic(f[i], p[i]);
  }
  rep.checks.push_back({"hom_F_S_delta", hom_delta, ""});
  rep.checks.push_back({"ext1_F_S_zero", ext_zero, ""});
  rep.checks.push_back({"F_iso_P", iso, ""});
  rep.checks.push_back({"param_dim", rep.parameter_dimension == alg.dimension(),
                        "param=" + std::to_string(rep.parameter_dimension) +
                            " algebra=" + std::to_string(alg.dimension())});
  rep.checks.push_back({"layers", rep.parameter_layers == rep.algebra_layers,
                        "param=" + join(rep.parameter_layers) + " algebra=" + join(rep.algebra_layers)});

  TruncatedAlgebra back = truncate(extract_presentation(res.parameter));
  rep.checks.push_back({"presentation_roundtrip",
                        back.dimension() == rep.parameter_dimension && back.radical_layers() == rep.parameter_layers,
                        "layers=" + join(back.radical_layers())});
  rep.checks.push_back({"audit_r_plus_N", iterated_extension_dim_audit(res.state),
                        "r=" + std::to_string(s.size()) + " N=" + std::to_string(res.state.nontrivial_steps())});
  if (res.converged) rep.checks.push_back({"versality_lifting", versality_smoke_test(res.state), ""});
  return rep;
}

}  // namespace ncdef
