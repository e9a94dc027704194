#pragma once
#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ncdef/algebra.hpp"
#include "ncdef/io.hpp"

namespace testing {

using namespace ncdef;

inline std::string corpus_dir() { return NCDEF_CORPUS_DIR; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline AlgebraPresentation load(const std::string& name) {
  return parse_algebra(read_text(corpus_dir() + "/" + name + ".alg"));
}

inline std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const auto& e : std::filesystem::directory_iterator(corpus_dir()))
    if (e.path().extension() == ".alg") names.push_back(e.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

inline NCPoly arrow(const Quiver& q, const std::string& name) { return NCPoly(Path::of_arrow(q, *q.find_arrow(name))); }

inline NCPoly power(const NCPoly& p, int n) {
  NCPoly out = p;
  for (int i = 1; i < n; ++i) out = out * p;
  return out;
}

inline AlgebraPresentation kxn(int n, int d = 10) {
  Quiver q(1, {{"x", 0, 0}});
  return {q, {power(arrow(q, "x"), n)}, d};
}

inline AlgebraPresentation a2() { return {Quiver(2, {{"a", 0, 1}}), {}, 10}; }

inline AlgebraPresentation dw(int d = 7) {
  Quiver q(1, {{"x", 0, 0}, {"y", 0, 0}});
  NCPoly x = arrow(q, "x"), y = arrow(q, "y");
  return {q, {x * y + y * x, x * x - y * y * y}, d};
}

inline AlgebraPresentation cyc2() {
  Quiver q(2, {{"a", 0, 1}, {"b", 1, 0}});
  NCPoly a = arrow(q, "a"), b = arrow(q, "b");
  return {q, {a * b, b * a}, 10};
}

inline std::shared_ptr<const AlgebraPresentation> share(AlgebraPresentation p) {
  return std::make_shared<const AlgebraPresentation>(std::move(p));
}

/// Random polynomial of parallel paths from `start`, lengths in [0, max_len].
inline NCPoly random_poly(const Quiver& q, std::mt19937& rng, int max_len, int terms) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> len(0, max_len);
  NCPoly out;
  for (int t = 0; t < terms; ++t) {
    int v = 0;
    std::vector<int> word;
    int l = len(rng);
    for (int k = 0; k < l; ++k) {
      auto out_arrows = q.arrows_from(v);
      if (out_arrows.empty()) break;
      int a = out_arrows[std::uniform_int_distribution<std::size_t>(0, out_arrows.size() - 1)(rng)];
      word.push_back(a);
      v = q.arrow(a).target;
    }
    out.add_term(Path::of_arrows(q, 0, word), coeff(rng));
  }
  return out;
}

}  // namespace testing
