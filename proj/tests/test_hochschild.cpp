#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace fptate;
using testutil::raises;

namespace {

AlgebraPresentation poly1(std::uint32_t p) {
  return preset_homology(Preset::parse("X1"), p); // P(b1), |b1| = (0,2)
}

AlgebraPresentation poly2(std::uint32_t p) {
  return preset_homology(Preset::parse("X2"), p); // P(b1,b2), degrees 2 and 4
}

} // namespace

TEST_CASE("closed form adjoins one exterior class per generator") {
  AlgebraPresentation hh = hh_closed_form(poly1(2));
  REQUIRE(hh.size() == 2);
  CHECK(hh.gen(0).name == "b1");
  CHECK(hh.gen(1).name == "sb1");
  CHECK(hh.gen(1).kind == GeneratorKind::exterior);
  CHECK(hh.gen(1).degree == Bidegree{0, 3});
}

TEST_CASE("first-page form puts the new classes in filtration one") {
  BokstedtPage page = bokstedt_e2(poly2(3));
  REQUIRE(page.algebra.size() == 4);
  CHECK(page.algebra.gen(2).name == "sb1");
  CHECK(page.algebra.gen(2).degree == Bidegree{1, 2});
  CHECK(page.algebra.gen(3).degree == Bidegree{1, 4});
  CHECK(page.collapses);
}

TEST_CASE("only polynomial input is accepted") {
  AlgebraPresentation e = make_presentation(2, {{"e", GeneratorKind::exterior, {0, 1}}});
  CHECK(raises([&] { hh_closed_form(e); }, errc::non_polynomial_input));
  CHECK(raises([&] { BarComplex(e, 4); }, errc::non_polynomial_input));
}

TEST_CASE("bar boundary squares to zero") {
  for (std::uint32_t p : {2u, 3u}) {
    BarComplex bar(poly1(p), 8);
    PrimeField f(p);
    for (int k = 1; k + 1 <= bar.max_k(); ++k)
      for (int u = 0; u <= bar.max_internal(); ++u) {
        FpMatrix outer = bar.boundary(k, u);
        FpMatrix inner = bar.boundary(k + 1, u);
        if (outer.cols() == 0 || inner.cols() == 0) continue;
        CHECK(matmul(outer, inner, f).is_zero());
      }
  }
}

TEST_CASE("one polynomial generator: dims match the closed form") {
  std::vector<long> expected{1, 0, 1, 1, 1, 1, 1};
  CHECK(graded_dims(hh_closed_form(poly1(2)), 6) == expected);
  CHECK(bar_hh_oracle(poly1(2), 6) == expected);
  CHECK(bar_hh_oracle(poly1(3), 6) == expected);
}

TEST_CASE("two polynomial generators: dims match the closed form") {
  std::vector<long> expected{1, 0, 1, 1, 2, 2, 2, 3, 4};
  CHECK(graded_dims(hh_closed_form(poly2(2)), 8) == expected);
  CHECK(bar_hh_oracle(poly2(2), 8) == expected);
  CHECK(bar_hh_oracle(poly2(3), 8) == expected);
}

TEST_CASE("torsion-free form generators sit in the right degrees") {
  AlgebraPresentation t1 = preset_homology(Preset::parse("T1"), 3); // P(x1), |x1| = 4
  CHECK(t1.gen(0).degree == Bidegree{0, 4});
  std::vector<long> dims = bar_hh_oracle(t1, 10);
  CHECK(dims == graded_dims(hh_closed_form(t1), 10));
  CHECK(dims[0] == 1);
  CHECK(dims[4] == 1);
  CHECK(dims[5] == 1);
  CHECK(dims[8] == 1);
  CHECK(dims[9] == 1);
  CHECK(dims[10] == 0);
}

TEST_CASE("degree zero truncation keeps only the unit") {
  std::vector<long> dims = bar_hh_oracle(poly1(2), 0);
  CHECK(dims == std::vector<long>{1});
}
