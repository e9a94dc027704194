#include <doctest.h>

#include "helpers.hpp"
#include "ncdef/errors.hpp"

using namespace ncdef;
using namespace testing;

namespace {

Matrix mat(std::size_t r, std::size_t c, std::vector<long> entries) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = entries[i * c + j];
  return m;
}

// All simples and projectives of an algebra.
std::vector<RepModule> standard_modules(const TruncatedAlgebra& alg) {
  auto out = simples(alg);
  auto p = projectives(alg);
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

TEST_SUITE("repmod") {

TEST_CASE("module validation") {
  auto kx3 = share(kxn(3));
  CHECK_NOTHROW(RepModule(kx3, {2}, {mat(2, 2, {0, 1, 0, 0})}));
  CHECK_THROWS(RepModule(kx3, {2}, {mat(2, 3, {0, 0, 0, 0, 0, 0})}));
  // x acts invertibly: not nilpotent
  CHECK_THROWS(RepModule(kx3, {1}, {mat(1, 1, {1})}));
  // x^3 = 0 fails for a 4x4 Jordan block
  CHECK_THROWS(RepModule(kx3, {4}, {mat(4, 4, {0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0})}));
}

TEST_CASE("hom basics") {
  auto alg = truncate(a2());
  auto s = simples(alg);
  auto p = projectives(alg);
  CHECK(hom(s[0], s[0]).dimension() == 1);
  CHECK(hom(s[0], s[1]).dimension() == 0);
  CHECK(hom(p[0], s[1]).dimension() == 0);
  CHECK(hom(p[0], s[0]).dimension() == 1);
  for (const auto& m : standard_modules(alg)) {
    CHECK(is_homomorphism(identity_map(m), m, m));
    for (const auto& n : standard_modules(alg))
      for (const auto& f : hom(m, n).basis) CHECK(is_homomorphism(f, m, n));
  }
}

TEST_CASE("ext over A2") {
  auto alg = truncate(a2());
  auto s = simples(alg);
  auto p = projectives(alg);
  CHECK(ext1(s[0], s[1]).dimension() == 1);
  CHECK(ext1(s[1], s[0]).dimension() == 0);

  // brute force: modules of dimension vector (1,1) are k --t--> k; t = 0 splits,
  // every t != 0 is isomorphic to t = 1, so there is exactly one non-split class.
  auto pres = alg.presentation_ptr();
  std::vector<RepModule> nonsplit;
  for (int t = -2; t <= 2; ++t) {
    RepModule m(pres, {1, 1}, {mat(1, 1, {t})});
    bool is_split = is_isomorphic(m, direct_sum({s[0], s[1]}));
    CHECK(is_split == (t == 0));
    if (!is_split) nonsplit.push_back(m);
  }
  for (const auto& m : nonsplit) CHECK(is_isomorphic(m, nonsplit.front()));

  auto e = realize_extension(ext1(s[0], s[1]), Vector{1});
  CHECK(is_isomorphic(e.middle, p[0]));
  CHECK(!splits(e));
}

TEST_CASE("ext over k[x]/x^3") {
  auto alg = truncate(kxn(3));
  auto s = simples(alg)[0];
  auto pres = alg.presentation_ptr();
  RepModule m2(pres, {2}, {mat(2, 2, {0, 1, 0, 0})});  // k[x]/x^2
  CHECK(ext1(s, s).dimension() == 1);
  CHECK(ext1(m2, s).dimension() == 1);
  auto e = realize_extension(ext1(s, s), Vector{1});
  CHECK(is_isomorphic(e.middle, m2));
  CHECK(rank(e.middle.action(0)) == 1);
}

TEST_CASE("ext of projectives vanishes") {
  for (const auto& name : corpus_names()) {
    auto alg = truncate(load(name));
    for (const auto& p : projectives(alg))
      for (const auto& n : standard_modules(alg)) CHECK(ext1(p, n).dimension() == 0);
  }
}

TEST_CASE("ext between simples counts arrows") {
  for (const auto& name : corpus_names()) {
    auto alg = truncate(load(name));
    auto s = simples(alg);
    const Quiver& q = alg.quiver();
    for (int i = 0; i < q.vertex_count(); ++i)
      for (int j = 0; j < q.vertex_count(); ++j) {
        std::size_t arrows = 0;
        for (const auto& a : q.arrows()) arrows += a.source == i && a.target == j;
        CAPTURE(name);
        CHECK(ext1(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]).dimension() == arrows);
      }
  }
}

TEST_CASE("ext does not depend on the presentation") {
  for (const auto& name : corpus_names()) {
    auto alg = truncate(load(name));
    auto mods = standard_modules(alg);
    for (const auto& m : mods)
      for (const auto& n : mods) {
        const std::size_t d = ext1(m, n).dimension();
        CAPTURE(name);
        CHECK(ext1_dimension_via_projective_cover(alg, m, n) == d);
        CHECK(ext1_dimension_via_projective_cover(alg, m, n, true) == d);
      }
  }
}

TEST_CASE("projective cover route refuses an insufficient truncation") {
  auto pres = kxn(5, 3);  // x^5 = 0 but only J^3 is killed
  auto alg = truncate(pres);
  REQUIRE(!alg.captures_full_algebra());
  auto shared = alg.presentation_ptr();
  RepModule m(shared, {2}, {mat(2, 2, {0, 1, 0, 0})});
  CHECK_THROWS_AS(ext1_dimension_via_projective_cover(alg, m, m), TruncationExceeded);
}

TEST_CASE("realized extensions are exact; nonzero classes do not split") {
  for (const auto& name : corpus_names()) {
    auto alg = truncate(load(name));
    auto mods = standard_modules(alg);
    for (const auto& m : mods)
      for (const auto& n : mods) {
        ExtSpace e = ext1(m, n);
        auto zero = realize_extension(e, Vector(e.dimension()));
        CHECK(is_short_exact(zero));
        CHECK(splits(zero));
        for (std::size_t k = 0; k < e.dimension(); ++k) {
          Vector c(e.dimension());
          c[k] = 1;
          auto x = realize_extension(e, c);
          CHECK(is_short_exact(x));
          CHECK(!splits(x));
          CHECK(e.class_of(e.basis()[k]) == c);
        }
      }
  }
}

TEST_CASE("coboundaries realize split extensions") {
  auto alg = truncate(kxn(3));
  auto s = simples(alg)[0];
  auto p = projectives(alg)[0];
  ExtSpace e = ext1(p, s);
  REQUIRE(e.dimension() == 0);
  // delta = M_x h - h N_x for h = first coordinate functional
  Matrix h(3, 1);
  h(0, 0) = 1;
  Cocycle delta{p.action(0) * h - h * s.action(0)};
  CHECK(e.is_coboundary(delta));
  CHECK(splits(realize_extension(p, s, delta)));
}

TEST_CASE("universal extension") {
  auto k3 = truncate(kxn(3));
  auto s = simples(k3);
  auto u1 = universal_extension(s[0], s);
  CHECK(u1.extension.middle.total_dimension() == 2);
  auto u2 = universal_extension(u1.extension.middle, s);
  CHECK(u2.extension.middle.total_dimension() == 3);
  auto u3 = universal_extension(u2.extension.middle, s);
  CHECK(u3.classes.empty());
  CHECK(u3.extension.middle == u2.extension.middle);

  auto a = truncate(a2());
  auto sa = simples(a);
  auto pa = projectives(a);
  auto v1 = universal_extension(sa[0], sa);
  CHECK(is_isomorphic(v1.extension.middle, pa[0]));
  auto v2 = universal_extension(sa[1], sa);
  CHECK(v2.classes.empty());
  CHECK(is_isomorphic(v2.extension.middle, pa[1]));
}

TEST_CASE("universal extension dimension formula and fixed points") {
  for (const auto& name : corpus_names()) {
    auto alg = truncate(load(name));
    auto s = simples(alg);
    for (const auto& f : standard_modules(alg)) {
      auto u = universal_extension(f, s);
      int expected = f.total_dimension();
      bool all_zero = true;
      for (const auto& t : s) {
        auto d = ext1(f, t).dimension();
        expected += static_cast<int>(d) * t.total_dimension();
        all_zero = all_zero && d == 0;
      }
      CHECK(u.extension.middle.total_dimension() == expected);
      CHECK(is_short_exact(u.extension));
      CHECK((u.extension.middle == f) == all_zero);
      for (std::size_t q = 0; q < u.classes.size(); ++q) {
        auto step = universal_extension_step(f, s, u, q);
        CHECK(is_short_exact(step));
        CHECK(!splits(step));
      }
    }
  }
}

TEST_CASE("isomorphism test") {
  auto alg = truncate(a2());
  auto s = simples(alg);
  CHECK(is_isomorphic(s[0], s[0]));
  CHECK(!is_isomorphic(s[0], s[1]));
  auto kr = truncate(load("kronecker"));
  auto pres = kr.presentation_ptr();
  RepModule m1(pres, {1, 1}, {mat(1, 1, {1}), mat(1, 1, {0})});
  RepModule m2(pres, {1, 1}, {mat(1, 1, {2}), mat(1, 1, {0})});
  RepModule m3(pres, {1, 1}, {mat(1, 1, {0}), mat(1, 1, {1})});
  CHECK(is_isomorphic(m1, m2));
  CHECK(!is_isomorphic(m1, m3));
}

}
