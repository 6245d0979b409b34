#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace fptate;
using testutil::raises;

TEST_CASE("tensor-power presentation carries p-fold degrees") {
  AlgebraPresentation s = singer_presentation_algebra(Preset::parse("X1"), 3);
  REQUIRE(s.size() == 4);
  CHECK(s.gen(0).name == "h");
  CHECK(s.gen(1).name == "t");
  CHECK(s.gen(2).name == "b1@3");
  CHECK(s.gen(2).kind == GeneratorKind::polynomial);
  CHECK(s.gen(2).degree == Bidegree{0, 6});
  CHECK(s.gen(3).name == "sb1@3");
  CHECK(s.gen(3).kind == GeneratorKind::exterior);
  CHECK(s.gen(3).degree == Bidegree{0, 9});
}

TEST_CASE("the basis map sends power classes straight across") {
  SingerMap map = make_singer_map(Preset::parse("X1"), 3);
  CHECK(map.t_power == 1);
  CHECK(map.filtration_shift_per_factor() == -2);

  int power = map.source.index_of("b1^3");
  int pair = map.source.index_of("b1^2sb1");
  Monomial m = Monomial::generator(power, 2);
  Monomial img = phi(m, map);
  CHECK(img == Monomial::generator(map.target.algebra.index_of("b1@3"), 2));
  CHECK(bidegree(m, map.source) == bidegree(img, map.target.algebra));

  // The pair class picks up the degree-balancing t power.
  Monomial pm = Monomial::generator(pair);
  Monomial pimg = phi(pm, map);
  CHECK(pimg == Monomial::from_entries({{map.target.algebra.index_of("t"), 1},
                                        {map.target.algebra.index_of("sb1@3"), 1}}));
  CHECK(bidegree(pm, map.source).total() == bidegree(pimg, map.target.algebra).total());
  CHECK(bidegree(pimg, map.target.algebra).s ==
        bidegree(pm, map.source).s + map.filtration_shift_per_factor());
  CHECK(pair_factor_count(pm, map) == 1);
}

TEST_CASE("coefficient classes are fixed by the map") {
  for (std::uint32_t p : {2u, 3u}) {
    SingerMap map = make_singer_map(Preset::parse("X2"), p);
    int t_src = map.source.index_of("t");
    Monomial m = Monomial::generator(t_src, -3);
    CHECK(phi(m, map) == Monomial::generator(map.target.algebra.index_of("t"), -3));
  }
}

TEST_CASE("at p = 2 the pair class also shifts by one t power") {
  SingerMap map = make_singer_map(Preset::parse("X1"), 2);
  CHECK(map.t_power == 1);
  CHECK(map.filtration_shift_per_factor() == -1);
  Monomial pm = Monomial::generator(map.source.index_of("b1sb1"));
  Monomial img = phi(pm, map);
  CHECK(img == Monomial::from_entries({{map.target.algebra.index_of("t"), 1},
                                       {map.target.algebra.index_of("sb1@2"), 1}}));
  CHECK(bidegree(pm, map.source).total() == bidegree(img, map.target.algebra).total());
}

TEST_CASE("filtration shift closed form") {
  CHECK(s_shift({}, 3) == 0);
  CHECK(s_shift({1}, 3) == -6);
  CHECK(s_shift({1, 2}, 2) == -8);
  CHECK(s_shift({2, 5}, 2) == -16);
  CHECK(raises([] { s_shift({2, 2}, 3); }, errc::non_increasing));
  CHECK(raises([] { s_shift({3, 1}, 3); }, errc::non_increasing));
  CHECK(raises([] { s_shift({0}, 3); }, errc::non_increasing));
}

TEST_CASE("index reindexing closed form") {
  CHECK(singer_index(5, 1, 2) == 9);
  CHECK(singer_index(4, 0, 3) == 12);
  CHECK(singer_index(7, 7, 5) == 7);
  CHECK(singer_index(0, 0, 2) == 0);
  CHECK(raises([] { singer_index(3, 4, 2); }, errc::precondition));
  CHECK(raises([] { singer_index(3, -1, 2); }, errc::precondition));
}

TEST_CASE("the correspondence is a degreewise bijection on small ranges") {
  for (std::uint32_t p : {2u, 3u}) {
    for (const char* label : {"X1", "X2"}) {
      BijectionReport r = verify_bijection(Preset::parse(label), p, 16);
      INFO(label << " at p = " << p << ": " << r.witness);
      CHECK(r.pass());
      REQUIRE(r.counts_by_degree.size() == 17);
      CHECK(r.counts_by_degree[0][0] == r.counts_by_degree[0][1]);
      long total = 0;
      for (const auto& c : r.counts_by_degree) total += c[0];
      CHECK(total > 0);
    }
  }
}

TEST_CASE("torsion-free family small case") {
  BijectionReport r = verify_bijection(Preset::parse("T1"), 3, 16);
  INFO(r.witness);
  CHECK(r.pass());
}

TEST_CASE("empty filtration ranges are rejected") {
  CHECK(raises([] { verify_bijection(Preset::parse("X1"), 2, 8, 3, -3); }, errc::window_too_small));
}
