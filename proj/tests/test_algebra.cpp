#include <doctest.h>

#include "helpers.hpp"
#include "ncdef/errors.hpp"
#include "oracle.hpp"

using namespace ncdef;
using namespace testing;

TEST_SUITE("algebra") {

TEST_CASE("truncation examples") {
  AlgebraPresentation point{Quiver(1, {}), {}, 4};
  auto p = truncate(point);
  CHECK(p.dimension() == 1);
  CHECK(format_path(p.quiver(), p.basis()[0]) == "e1");

  auto k3 = truncate(kxn(3, 5));
  REQUIRE(k3.dimension() == 3);
  const Quiver& q = k3.quiver();
  auto x = *k3.index_of(Path::of_arrow(q, 0));
  auto xx = *k3.index_of(Path::of_arrows(q, 0, {0, 0}));
  CHECK(k3.structure().product(x, xx).empty());
  CHECK(k3.structure().product(x, x) == SparseVector{{static_cast<int>(xx), 1}});

  auto d = truncate(dw(7));
  CHECK(d.dimension() == 9);
  CHECK(d.captures_full_algebra());
  CHECK(d.radical_layers() == std::vector<std::size_t>{1, 2, 2, 2, 1, 1});
  CHECK(d.degree_profile() == std::vector<std::size_t>{1, 2, 3, 2, 1});
}

TEST_CASE("inhomogeneous relations: x^2 already lies in J^3 at degree 3") {
  // x^2 = y^3 puts x^2 in I + J^3, so A/J^3 has basis e, x, y, y^2, yx.
  auto t = truncate(dw(3));
  CHECK(t.dimension() == oracle::truncated_dimension(dw(3), 3));
  CHECK(t.dimension() == 5);
}

TEST_CASE("truncated dimensions agree with the brute-force oracle") {
  for (const auto& name : corpus_names()) {
    auto pres = load(name);
    for (int d = 1; d <= 7; ++d) {
      pres.truncation_degree = d;
      CAPTURE(name);
      CAPTURE(d);
      CHECK(truncate(pres).dimension() == oracle::truncated_dimension(pres, d));
    }
  }
}

TEST_CASE("admissibility is enforced") {
  Quiver q(1, {{"x", 0, 0}, {"y", 0, 0}});
  NCPoly x = arrow(q, "x"), y = arrow(q, "y");
  CHECK_THROWS_AS(truncate(AlgebraPresentation{q, {x * x - y}, 5}), AdmissibilityError);
  Quiver two(2, {{"a", 0, 1}, {"b", 0, 0}});
  NCPoly mixed = arrow(two, "b") * arrow(two, "b") + arrow(two, "b") * arrow(two, "a");
  CHECK_THROWS_AS(truncate(AlgebraPresentation{two, {mixed}, 5}), AdmissibilityError);
  CHECK_THROWS_AS(truncate(AlgebraPresentation{q, {NCPoly()}, 5}), AdmissibilityError);
}

TEST_CASE("multiplication tables are associative with a complete set of idempotents") {
  for (const auto& name : corpus_names()) {
    auto alg = truncate(load(name));
    CAPTURE(name);
    CHECK(is_associative(alg.structure()));
    SparseVector one;
    for (int v = 0; v < alg.quiver().vertex_count(); ++v) one[static_cast<int>(alg.idempotent(v))] = 1;
    for (std::size_t i = 0; i < alg.dimension(); ++i) {
      SparseVector b{{static_cast<int>(i), 1}};
      CHECK(alg.structure().multiply(one, b) == b);
      CHECK(alg.structure().multiply(b, one) == b);
    }
  }
}

TEST_CASE("the radical is nilpotent of order at most the truncation degree") {
  for (const auto& name : corpus_names()) {
    auto alg = truncate(load(name));
    CHECK(alg.radical_layers().size() <= static_cast<std::size_t>(alg.truncation_degree()));
    std::size_t total = 0;
    for (auto l : alg.radical_layers()) total += l;
    CHECK(total == alg.dimension());
  }
}

TEST_CASE("simples and projectives: counts and Hom(P_i, S_j) = delta_ij") {
  for (const auto& name : corpus_names()) {
    auto alg = truncate(load(name));
    auto s = simples(alg);
    auto p = projectives(alg);
    const auto r = static_cast<std::size_t>(alg.quiver().vertex_count());
    REQUIRE(s.size() == r);
    REQUIRE(p.size() == r);
    std::size_t total = 0;
    for (std::size_t i = 0; i < r; ++i) {
      CHECK(s[i].total_dimension() == 1);
      total += static_cast<std::size_t>(p[i].total_dimension());
      for (std::size_t j = 0; j < r; ++j) CHECK(hom(p[i], s[j]).dimension() == (i == j ? 1u : 0u));
    }
    CHECK(total == alg.dimension());
  }
}

TEST_CASE("A2 simples and projectives") {
  auto alg = truncate(a2());
  auto s = simples(alg);
  auto p = projectives(alg);
  CHECK(s[0].dims() == std::vector<int>{1, 0});
  CHECK(s[1].dims() == std::vector<int>{0, 1});
  CHECK(p[0].dims() == std::vector<int>{1, 1});
  CHECK(p[1].dims() == std::vector<int>{0, 1});
  CHECK(projectives(truncate(kxn(3)))[0].total_dimension() == 3);
}

TEST_CASE("opposite algebras") {
  auto op = opposite(a2());
  CHECK(op.quiver.arrow(0).source == 1);
  CHECK(op.quiver.arrow(0).target == 0);
  auto d = dw();
  auto dop = opposite(d);
  NCPoly x = arrow(d.quiver, "x"), y = arrow(d.quiver, "y");
  CHECK(dop.relations[0] == y * x + x * y);
  CHECK(dop.relations[1] == x * x - y * y * y);
  for (const auto& name : corpus_names()) {
    auto pres = load(name);
    CHECK(opposite(opposite(pres)) == pres);
    CHECK(truncate(opposite(pres)).degree_profile() == truncate(pres).degree_profile());
  }
}

TEST_CASE("truncating at d then discarding equals truncating at d' directly") {
  for (const auto& name : corpus_names()) {
    auto pres = load(name);
    pres.truncation_degree = 7;
    auto big = truncate(pres).radical_layers();
    for (int e = 1; e < 7; ++e) {
      pres.truncation_degree = e;
      std::size_t head = 0;
      for (std::size_t k = 0; k < big.size() && k < static_cast<std::size_t>(e); ++k) head += big[k];
      CAPTURE(name);
      CHECK(truncate(pres).dimension() == head);
    }
  }
}

TEST_CASE("center dimension") {
  CHECK(center_dimension(truncate(kxn(3)).structure()) == 3);
  CHECK(center_dimension(truncate(a2()).structure()) == 1);
  CHECK(center_dimension(truncate(dw()).structure()) < 9);
}

}
