// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <iostream>
#include <sstream>

#include "helpers.hpp"
#include "ncdef/cli.hpp"
#include "ncdef/contract.hpp"
#include "ncdef/deform.hpp"
#include "ncdef/rewrite.hpp"
#include "oracle.hpp"

using namespace ncdef;
using namespace testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  int code;
  std::string out;
};

Outcome cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str() + err.str()};
}

std::string path_of(const std::string& name) { return corpus_dir() + "/" + name + ".alg"; }

std::string last_line(std::string s) {
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s.substr(s.rfind('\n') + 1);
}

bool report(int id, bool ok, const std::string& detail) {
  std::cout << "AC" << id << " " << (ok ? "PASS" : "FAIL") << " " << detail << std::endl;
  return ok;
}

bool ac1() {
  const auto t0 = Clock::now();
  Outcome r = cli({"findim", path_of("dw"), "--bound", "8"});
  const double t = seconds_since(t0);
  const std::size_t o7 = oracle::truncated_dimension(dw(), 7), o8 = oracle::truncated_dimension(dw(), 8);
  const bool ok = r.code == 0 && last_line(r.out) == "result=finite dim=9" && o7 == 9 && o8 == 9 && t < 1.0;
  return report(1, ok,
                "findim dw: '" + last_line(r.out) + "' brute-force d=7,8: " + std::to_string(o7) + "," +
                    std::to_string(o8) + " time=" + std::to_string(t) + "s (<1s)");
}

bool ac2() {
  const auto t0 = Clock::now();
  const auto names = corpus_names();
  bool ok = names.size() >= 8;
  for (const char* needed : {"a2", "cyc2", "kx2", "kx3", "kx4", "kx5", "comm3", "dw"})
    ok = ok && std::find(names.begin(), names.end(), needed) != names.end();
  std::string bad;
  for (const auto& name : names) {
    auto alg = truncate(load(name));
    auto s = simples(alg);
    auto p = projectives(alg);
    const auto r = static_cast<std::size_t>(alg.quiver().vertex_count());
    bool here = s.size() == r && p.size() == r;
    for (std::size_t i = 0; here && i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) here = here && hom(p[i], s[j]).dimension() == (i == j ? 1u : 0u);
    if (!here) bad += " " + name;
    ok = ok && here;
  }
  const double t = seconds_since(t0);
  ok = ok && t < 10.0;
  return report(2, ok,
                "simples/projectives/Hom(P_i,S_j) on " + std::to_string(names.size()) + " algebras" +
                    (bad.empty() ? "" : " failing:" + bad) + " time=" + std::to_string(t) + "s (<10s)");
}

bool ac3() {
  bool ok = true;
  std::string bad;
  for (const auto& name : corpus_names()) {
    Outcome r = cli({"recover", path_of(name)});
    const bool here = r.code == 0 && last_line(r.out).rfind("pass ", 0) == 0;
    if (!here) bad += " " + name;
    ok = ok && here;
  }
  auto k3 = recovery_check(truncate(kxn(3)));
  auto a = recovery_check(truncate(a2()));
  const bool k3ok = k3.passed() && k3.stages == 2 && k3.parameter_dimension == 3;
  const bool aok = a.passed() && a.stages == 1 && a.parameter_dimension == 3;
  ok = ok && k3ok && aok;
  return report(3, ok,
                "recover on corpus" + (bad.empty() ? std::string(" all pass") : " failing:" + bad) +
                    "; kx3 stages=" + std::to_string(k3.stages) + " param_dim=" +
                    std::to_string(k3.parameter_dimension) + "; a2 stages=" + std::to_string(a.stages) +
                    " param_dim=" + std::to_string(a.parameter_dimension));
}

bool ac4() {
  bool ok = true;
  std::size_t full_runs = 0, random_runs = 0;
  for (const auto& name : corpus_names()) {
    auto alg = truncate(load(name));
    auto res = deform_versal(check_simple_collection(simples(alg)), 32);
    ok = ok && iterated_extension_dim_audit(res.state);
    ++full_runs;
  }
  std::mt19937 rng(20241015);
  const auto names = corpus_names();
  for (int run = 0; run < 100; ++run) {
    auto alg = truncate(load(names[std::uniform_int_distribution<std::size_t>(0, names.size() - 1)(rng)]));
    auto s = simples(alg);
    std::vector<RepModule> sub;
    for (const auto& m : s)
      if (std::uniform_int_distribution<int>(0, 3)(rng) != 0) sub.push_back(m);
    if (sub.empty()) sub.push_back(s.front());
    const int stop = std::uniform_int_distribution<int>(0, 5)(rng);
    auto res = deform_versal(check_simple_collection(sub), stop);
    ok = ok && iterated_extension_dim_audit(res.state) && res.state.stage <= stop;
    ++random_runs;
  }
  return report(4, ok,
                "dim End = r + N on " + std::to_string(full_runs) + " full runs and " +
                    std::to_string(random_runs) + " randomized partial runs");
}

bool ac5() {
  bool ok = true;
  std::string detail;
  for (const auto& [name, v] : std::vector<std::pair<std::string, std::string>>{{"a2", "2"}, {"cyc2", "2"}}) {
    Outcome r = cli({"contract", path_of(name), "--vertices", v, "--compare-deform"});
    const bool here = r.code == 0 && r.out.find("compare_deform=agree\n") != std::string::npos;
    detail += name + "{" + v + "}=" + (here ? "agree " : "DISAGREE ");
    ok = ok && here;
  }
  std::size_t empty_ok = 0;
  const auto names = corpus_names();
  for (const auto& name : names) {
    Outcome r = cli({"contract", path_of(name), "--vertices", "", "--compare-deform"});
    const bool here = r.code == 0 && r.out.find("compare_deform=agree\n") != std::string::npos;
    empty_ok += here;
    ok = ok && here;
  }
  return report(5, ok,
                detail + "empty V0 agree on " + std::to_string(empty_ok) + "/" + std::to_string(names.size()));
}

bool ac6() {
  bool ok = true;
  std::size_t passed = 0, total = 0;
  for (const auto& name : corpus_names()) {
    Outcome r = cli({"contract", path_of(name), "--vertices", "", "--check-opposite"});
    const bool here = r.code == 0 && r.out.find("opposite.dimension=pass") != std::string::npos &&
                      r.out.find("opposite.degree_profile=pass") != std::string::npos &&
                      r.out.find("check_opposite=pass\n") != std::string::npos;
    passed += here;
    ++total;
    ok = ok && here;
  }
  return report(6, ok, "opposite dimension and degree profile equal on " + std::to_string(passed) + "/" +
                           std::to_string(total) + " corpus algebras");
}

bool ac7() {
  bool assoc = true;
  std::size_t tables = 0;
  for (const auto& name : corpus_names()) {
    auto alg = truncate(load(name));
    assoc = assoc && is_associative(alg.structure());
    auto res = deform_versal(check_simple_collection(simples(alg)), 32);
    assoc = assoc && is_associative(res.parameter.structure);
    tables += 2;
  }

  bool nf = true;
  std::size_t samples = 0;
  std::mt19937 rng(7);
  for (const char* name : {"dw", "kx5", "comm3", "cyc2", "square"}) {
    auto pres = load(name);
    RewriteSystem rs = complete_rewrite_system(pres.quiver, pres.relations, 8);
    for (int i = 0; i < 2000; ++i, ++samples) {
      NCPoly p = random_poly(pres.quiver, rng, 4, 3), q = random_poly(pres.quiver, rng, 4, 3);
      NCPoly np = normal_form(p, rs);
      nf = nf && normal_form(np, rs) == np;
      nf = nf && normal_form(p * q, rs) == normal_form(np * normal_form(q, rs), rs);
    }
  }

  bool ext = true;
  std::size_t classes = 0;
  for (const auto& name : corpus_names()) {
    auto alg = truncate(load(name));
    auto mods = simples(alg);
    auto p = projectives(alg);
    mods.insert(mods.end(), p.begin(), p.end());
    for (const auto& m : mods)
      for (const auto& n : mods) {
        ExtSpace e = ext1(m, n);
        for (std::size_t k = 0; k < e.dimension(); ++k, ++classes) {
          Vector c(e.dimension());
          c[k] = 1;
          auto x = realize_extension(e, c);
          ext = ext && is_short_exact(x) && !splits(x);
        }
      }
  }

  bool growth = true;
  std::size_t comparisons = 0;
  for (const auto& name : corpus_names()) {
    auto pres = load(name);
    int top = 2;
    for (const auto& r : pres.relations) top = std::max(top, r.degree());
    for (int b = top; b <= 8; ++b, ++comparisons) {
      auto lo = growth_report(complete_rewrite_system(pres.quiver, pres.relations, b));
      auto hi = growth_report(complete_rewrite_system(pres.quiver, pres.relations, b + 2));
      if (lo.kind != GrowthReport::Kind::Unknown)
        growth = growth && hi.kind == lo.kind && hi.dimension == lo.dimension;
    }
  }
  const bool ok = assoc && nf && samples >= 10000 && ext && growth;
  return report(7, ok,
                "associativity " + std::string(assoc ? "ok" : "FAILED") + " on " + std::to_string(tables) +
                    " tables; normal forms " + (nf ? "ok" : "FAILED") + " on " + std::to_string(samples) +
                    " samples; " + std::to_string(classes) + " Ext classes " + (ext ? "exact/non-split" : "FAILED") +
                    "; growth " + (growth ? "stable" : "FLIPPED") + " over " + std::to_string(comparisons) +
                    " bound pairs");
}

std::string whole_corpus_reports() {
  std::string all;
  for (const auto& name : corpus_names()) {
    const std::string f = path_of(name);
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"basis", f}, {"simples", f}, {"projectives", f}, {"hom", f, "P1", "S1"}, {"ext", f, "S1", "S1"},
             {"deform", f}, {"recover", f}, {"contract", f, "--vertices", "1", "--compare-deform", "--check-opposite"},
             {"findim", f, "--bound", "8"}}) {
      Outcome r = cli(args);
      all += std::to_string(r.code) + "\n" + r.out;
    }
  }
  return all;
}

bool ac8() {
  const std::string a = whole_corpus_reports(), b = whole_corpus_reports(), c = whole_corpus_reports();
  return report(8, a == b && b == c && !a.empty(),
                "3 runs of every subcommand over the corpus, " + std::to_string(a.size()) + " bytes each, identical");
}

}  // namespace

int main() {
  bool ok = true;
  for (auto* check : {ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8}) {
    try {
      ok = check() && ok;
    } catch (const std::exception& e) {
      std::cout << "FAIL exception: " << e.what() << std::endl;
      ok = false;
    }
  }
  std::cout << (ok ? "ALL PASS" : "SOME FAILED") << std::endl;
  return ok ? 0 : 1;
}
