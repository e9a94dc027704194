#include "ncdef/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "ncdef/algebra.hpp"
#include "ncdef/contract.hpp"
#include "ncdef/deform.hpp"
#include "ncdef/errors.hpp"
#include "ncdef/io.hpp"
#include "ncdef/rewrite.hpp"

namespace ncdef {
namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string s;
  for (unsigned int i = 0; i < len; ++i) {
    s += hex[md[i] >> 4];
    s += hex[md[i] & 15];
  }
  return s;
}

std::string join(const std::vector<std::size_t>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string join_dims(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

const char* status(bool ok) { return ok ? "pass" : "fail"; }

// 1-based comma-separated vertex list; "" and "none" mean the empty list.
std::vector<int> parse_vertices(const std::string& text, int vertex_count) {
  std::vector<int> out;
  if (text.empty() || text == "none") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        item.size() > 9)
      throw InputError("bad vertex '" + item + "'");
    int v = std::stoi(item);
    if (v < 1 || v > vertex_count) throw InputError("vertex " + item + " out of range");
    if (std::find(out.begin(), out.end(), v - 1) == out.end()) out.push_back(v - 1);
  }
  return out;
}

struct Session {
  std::ostringstream out;
  std::shared_ptr<const AlgebraPresentation> pres;

  void load(const std::string& path) {
    const std::string text = read_file(path);
    out << "input_sha256=" << sha256_hex(text) << "\n";
    pres = std::make_shared<const AlgebraPresentation>(parse_algebra(text));
  }

  RepModule module_arg(const std::string& arg, const TruncatedAlgebra& alg, const char* label) {
    if (arg.size() >= 2 && (arg[0] == 'S' || arg[0] == 'P') &&
        std::all_of(arg.begin() + 1, arg.end(), [](char c) { return c >= '0' && c <= '9'; }) && arg.size() < 11) {
      const int v = std::stoi(arg.substr(1));
      if (v < 1 || v > alg.quiver().vertex_count()) throw InputError("no vertex " + arg.substr(1) + " for " + arg);
      const auto list = arg[0] == 'S' ? simples(alg) : projectives(alg);
      return list[static_cast<std::size_t>(v - 1)];
    }
    const std::string text = read_file(arg);
    out << "module_sha256." << label << "=" << sha256_hex(text) << "\n";
    return parse_module(text, pres);
  }
};

int cmd_basis(Session& s) {
  const TruncatedAlgebra alg = truncate(s.pres);
  s.out << "dimension=" << alg.dimension() << "\n";
  s.out << "radical_layers=" << join(alg.radical_layers()) << "\n";
  s.out << "degree_profile=" << join(alg.degree_profile()) << "\n";
  s.out << "captures_full_algebra=" << (alg.captures_full_algebra() ? "true" : "false") << "\n";
  for (std::size_t i = 0; i < alg.dimension(); ++i)
    s.out << "basis." << i + 1 << "=" << format_path(alg.quiver(), alg.basis()[i]) << "\n";
  return kExitOk;
}

int cmd_simples(Session& s) {
  const TruncatedAlgebra alg = truncate(s.pres);
  const auto list = simples(alg);
  s.out << "count=" << list.size() << "\n";
  for (std::size_t i = 0; i < list.size(); ++i) s.out << "S" << i + 1 << ".dims=" << join_dims(list[i].dims()) << "\n";
  return kExitOk;
}

int cmd_projectives(Session& s) {
  const TruncatedAlgebra alg = truncate(s.pres);
  const auto list = projectives(alg);
  const auto simple = simples(alg);
  s.out << "count=" << list.size() << "\n";
  bool delta = true;
  for (std::size_t i = 0; i < list.size(); ++i) {
    s.out << "P" << i + 1 << ".dims=" << join_dims(list[i].dims()) << " loewy=" << list[i].loewy_length() << "\n";
    for (std::size_t j = 0; j < simple.size(); ++j) delta = delta && hom(list[i], simple[j]).dimension() == (i == j);
  }
  s.out << "check.hom_P_S_delta=" << status(delta) << "\n";
  return delta ? kExitOk : kExitCheckFailed;
}

int cmd_hom(Session& s, const std::string& a, const std::string& b) {
  const TruncatedAlgebra alg = truncate(s.pres);
  const RepModule m = s.module_arg(a, alg, "A");
  const RepModule n = s.module_arg(b, alg, "B");
  const HomSpace h = hom(m, n);
  s.out << "hom_dim=" << h.dimension() << "\n";
  return kExitOk;
}

int cmd_ext(Session& s, const std::string& a, const std::string& b) {
  const TruncatedAlgebra alg = truncate(s.pres);
  const RepModule m = s.module_arg(a, alg, "A");
  const RepModule n = s.module_arg(b, alg, "B");
  const ExtSpace e = ext1(m, n);
  s.out << "ext1_dim=" << e.dimension() << " cocycle_dim=" << e.cocycle_dimension() << "\n";
  bool ok = true;
  for (std::size_t k = 0; k < e.dimension(); ++k) {
    Vector coords(e.dimension());
    coords[k] = 1;
    const Extension x = realize_extension(e, coords);
    const bool exact = is_short_exact(x), nonsplit = !splits(x);
    ok = ok && exact && nonsplit;
    s.out << "class." << k + 1 << " middle_dims=" << join_dims(x.middle.dims()) << " exact=" << status(exact)
          << " nonsplit=" << status(nonsplit) << "\n";
  }
  if (alg.captures_full_algebra() || m.loewy_length() + n.loewy_length() <= alg.truncation_degree()) {
    const std::size_t cover = ext1_dimension_via_projective_cover(alg, m, n);
    const std::size_t padded = ext1_dimension_via_projective_cover(alg, m, n, true);
    const bool agree = cover == e.dimension() && padded == e.dimension();
    ok = ok && agree;
    s.out << "check.ext1_routes=" << status(agree) << " cocycle=" << e.dimension() << " cover=" << cover
          << " padded_cover=" << padded << "\n";
  } else {
    s.out << "check.ext1_routes=skipped reason=truncation\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_deform(Session& s, const std::optional<std::string>& collection, int max_stage) {
  const TruncatedAlgebra alg = truncate(s.pres);
  const auto simple = simples(alg);
  std::vector<int> verts;
  if (collection) {
    std::stringstream ss(*collection);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.size() > 9 ||
          !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw InputError("bad vertex '" + item + "'");
      const int v = std::stoi(item);
      if (v < 1 || v > alg.quiver().vertex_count()) throw InputError("vertex " + item + " out of range");
      verts.push_back(v - 1);
    }
  } else {
    for (int v = 0; v < alg.quiver().vertex_count(); ++v) verts.push_back(v);
  }
  std::vector<RepModule> mods;
  std::vector<std::size_t> shown;
  for (int v : verts) {
    mods.push_back(simple[static_cast<std::size_t>(v)]);
    shown.push_back(static_cast<std::size_t>(v + 1));
  }
  s.out << "collection=" << join(shown) << "\n";
  SimpleCollection coll;
  try {
    coll = check_simple_collection(mods);
  } catch (const NotSimpleCollection& e) {
    s.out << "check.simple_collection=fail pair=" << e.i() + 1 << "," << e.j() + 1 << " hom_dim=" << e.dimension()
          << "\n";
    return kExitCheckFailed;
  }
  const VersalResult res = deform_versal(coll, max_stage);
  bool all_nontrivial = true;
  for (std::size_t k = 0; k < res.state.ledger.size(); ++k) {
    const auto& st = res.state.ledger[k];
    all_nontrivial = all_nontrivial && st.nontrivial;
    s.out << "step." << k + 1 << " stage=" << st.stage << " component=" << st.component + 1
          << " target=" << st.target + 1 << " class=" << st.class_index + 1
          << " nontrivial=" << (st.nontrivial ? "true" : "false") << "\n";
  }
  for (std::size_t i = 0; i < res.state.current.size(); ++i)
    s.out << "F" << i + 1 << ".dims=" << join_dims(res.state.current[i].dims()) << "\n";
  std::string blocks;
  for (const auto& row : res.parameter.block_dimensions()) blocks += (blocks.empty() ? "" : ";") + join(row);
  s.out << "param_blocks=" << blocks << "\n";
  s.out << "param_layers=" << join(res.parameter.radical_layers()) << "\n";
  const bool audit = iterated_extension_dim_audit(res.state);
  s.out << "converged=" << (res.converged ? "true" : "false") << " stages=" << res.state.stage
        << " param_dim=" << res.parameter.dimension() << " audit_r_plus_N=" << status(audit) << "\n";
  return audit && all_nontrivial ? kExitOk : kExitCheckFailed;
}

int cmd_recover(Session& s) {
  const TruncatedAlgebra alg = truncate(s.pres);
  const RecoveryReport rep = recovery_check(alg);
  if (rep.checks.size() == 1 && rep.checks.front().name == "truncation")
    throw TruncationExceeded(rep.checks.front().detail);
  for (const auto& c : rep.checks)
    s.out << "check." << c.name << "=" << status(c.passed) << (c.detail.empty() ? "" : " " + c.detail) << "\n";
  s.out << status(rep.passed()) << " param_dim=" << rep.parameter_dimension << " layers=" << join(rep.parameter_layers)
        << "\n";
  return rep.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_contract(Session& s, const std::string& vertices, bool compare, bool opposite_check, int max_stage) {
  ContractionSpec spec{*s.pres, parse_vertices(vertices, s.pres->quiver.vertex_count()), true};
  const Contraction c = contract(spec);
  std::vector<std::size_t> kept;
  for (int v : c.kept) kept.push_back(static_cast<std::size_t>(v + 1));
  s.out << "kept=" << join(kept) << "\n";
  s.out << "dimension=" << c.algebra.dimension() << "\n";
  s.out << "radical_layers=" << join(c.algebra.radical_layers()) << "\n";
  s.out << "degree_profile=" << join(c.algebra.degree_profile()) << "\n";
  const TermOrder order = default_order(c.presentation);
  for (std::size_t k = 0; k < c.presentation.relations.size(); ++k)
    s.out << "relation." << k + 1 << "=" << format_poly(c.presentation.quiver, c.presentation.relations[k], order)
          << "\n";
  s.out << "check.routes_agree=" << status(c.routes_agree) << " quotient_dim=" << c.quotient.dimension() << "\n";
  bool ok = c.routes_agree;
  if (compare) {
    const ContractionComparison cmp = contraction_vs_deformation(spec, max_stage);
    s.out << "deform.converged=" << (cmp.converged ? "true" : "false") << " stages=" << cmp.stages
          << " param_dim=" << cmp.deformation_dimension << " contract_dim=" << cmp.contraction_dimension << "\n";
    for (const auto& l : cmp.layers)
      s.out << "layer." << l.layer << "=" << (l.agree() ? "agree" : "disagree") << " deform=" << l.deformation
            << " contract=" << l.contraction << "\n";
    s.out << "compare_deform=" << (cmp.agree() ? "agree" : "disagree") << "\n";
    ok = ok && cmp.agree();
  }
  if (opposite_check) {
    const OppositeReport rep = opposite_symmetry_check(spec);
    for (const auto& chk : rep.checks)
      s.out << "opposite." << chk.name << "=" << status(chk.passed) << (chk.detail.empty() ? "" : " " + chk.detail)
            << "\n";
    s.out << "check_opposite=" << status(rep.passed()) << "\n";
    ok = ok && rep.passed();
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_findim(Session& s, int bound) {
  ContractionSpec spec{*s.pres, {}, false};
  const GrowthReport g = contraction_finiteness(spec, bound);
  switch (g.kind) {
    case GrowthReport::Kind::Finite:
      s.out << "result=finite dim=" << g.dimension << "\n";
      break;
    case GrowthReport::Kind::Infinite:
      s.out << "result=infinite\n";
      break;
    case GrowthReport::Kind::Unknown:
      s.out << "result=unknown bound=" << bound << "\n";
      break;
  }
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noncommutative deformations of quiver algebras", "ncdef"};
  app.require_subcommand(1);
  std::string file, mod_a, mod_b, vertices;
  std::optional<std::string> collection;
  int max_stage = 32, bound = 10;
  bool compare = false, opposite_check = false;

  auto* basis = app.add_subcommand("basis", "Basis, radical layers and degree profile of A/J^d");
  auto* simple = app.add_subcommand("simples", "Simple modules S_v");
  auto* proj = app.add_subcommand("projectives", "Indecomposable projectives P_v");
  auto* homc = app.add_subcommand("hom", "dim Hom(A, B)");
  auto* extc = app.add_subcommand("ext", "Ext^1(A, B) with its extensions");
  auto* deform = app.add_subcommand("deform", "Versal deformation of a collection of simples");
  auto* recover = app.add_subcommand("recover", "Recover A from the versal deformation of its simples");
  auto* contractc = app.add_subcommand("contract", "Contraction algebra A/AeA");
  auto* findim = app.add_subcommand("findim", "Finite-dimensionality of A");
  for (auto* sub : {basis, simple, proj, homc, extc, deform, recover, contractc, findim})
    sub->add_option("file", file, "algebra file")->required();
  for (auto* sub : {homc, extc}) {
    sub->add_option("modA", mod_a, "module file, S<i> or P<i>")->required();
    sub->add_option("modB", mod_b, "module file, S<i> or P<i>")->required();
  }
  deform->add_option("--collection", collection, "vertices v1,v2,... of the simples to deform");
  deform->add_option("--max-stage", max_stage, "stop after this many stages")->check(CLI::NonNegativeNumber);
  contractc->add_option("--vertices", vertices, "contracted vertices v1,v2,... (empty or none for no vertex)")
      ->required();
  contractc->add_flag("--compare-deform", compare, "compare with the deformation of the kept simples");
  contractc->add_flag("--check-opposite", opposite_check, "compare with the opposite algebra");
  contractc->add_option("--max-stage", max_stage, "stage limit for --compare-deform")->check(CLI::NonNegativeNumber);
  findim->add_option("--bound", bound, "degree bound for completion")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  Session s;
  std::string echo;
  for (const auto& a : args) echo += (echo.empty() ? "" : " ") + a;
  s.out << "command=" << echo << "\n";
  int code = kExitOk;
  try {
    s.load(file);
    if (*basis) code = cmd_basis(s);
    else if (*simple) code = cmd_simples(s);
    else if (*proj) code = cmd_projectives(s);
    else if (*homc) code = cmd_hom(s, mod_a, mod_b);
    else if (*extc) code = cmd_ext(s, mod_a, mod_b);
    else if (*deform) code = cmd_deform(s, collection, max_stage);
    else if (*recover) code = cmd_recover(s);
    else if (*contractc) code = cmd_contract(s, vertices, compare, opposite_check, max_stage);
    else if (*findim) code = cmd_findim(s, bound);
  } catch (const TruncationExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  out << s.out.str();
  return code;
}

}  // namespace ncdef
