#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace fptate;
using testutil::raises;

namespace {

AlgebraPresentation mixed(std::uint32_t p) {
  return make_presentation(p, {{"t", GeneratorKind::laurent, {p == 2 ? -1 : -2, 0}},
                               {"b1", GeneratorKind::polynomial, {0, 2}},
                               {"sb1", GeneratorKind::exterior, {0, 3}}});
}

} // namespace

TEST_CASE("a valid presentation round-trips its generators") {
  AlgebraPresentation a = mixed(3);
  CHECK(a.p() == 3);
  CHECK(a.size() == 3);
  CHECK(a.gen(1).name == "b1");
  CHECK(a.gen(1).kind == GeneratorKind::polynomial);
  CHECK(a.gen(2).degree == Bidegree{0, 3});
  CHECK(a.index_of("t") == 0);
  CHECK(a.has("sb1"));
  CHECK(!a.has("sb2"));
  CHECK(a.laurent_index() == 0);
}

TEST_CASE("duplicate names are rejected") {
  CHECK(raises(
      [] {
        make_presentation(2, {{"b1", GeneratorKind::polynomial, {0, 2}},
                              {"b1", GeneratorKind::exterior, {0, 3}}});
      },
      errc::duplicate_name));
}

TEST_CASE("polynomial generators need positive internal degree") {
  CHECK(raises([] { make_presentation(2, {{"b1", GeneratorKind::polynomial, {0, 0}}}); },
               errc::unbounded_basis));
  CHECK(raises([] { make_presentation(2, {{"b1", GeneratorKind::polynomial, {-1, 2}}}); },
               errc::unbounded_basis));
}

TEST_CASE("at most one inverted generator, strictly negative filtration") {
  CHECK(raises([] { make_presentation(2, {{"t", GeneratorKind::laurent, {1, 0}}}); },
               errc::unbounded_basis));
  CHECK(raises([] { make_presentation(2, {{"t", GeneratorKind::laurent, {-1, 1}}}); },
               errc::unbounded_basis));
  CHECK(raises(
      [] {
        make_presentation(2, {{"t", GeneratorKind::laurent, {-1, 0}},
                              {"u", GeneratorKind::laurent, {-2, 0}}});
      },
      errc::unbounded_basis));
}

TEST_CASE("odd primes force odd degrees to be exterior") {
  CHECK(raises([] { make_presentation(3, {{"b1", GeneratorKind::polynomial, {0, 3}}}); },
               errc::parity_violation));
  CHECK(raises([] { make_presentation(5, {{"t", GeneratorKind::laurent, {-1, 0}}}); },
               errc::parity_violation));
  CHECK_NOTHROW(make_presentation(3, {{"sb1", GeneratorKind::exterior, {0, 3}}}));
  CHECK_NOTHROW(make_presentation(2, {{"b1", GeneratorKind::polynomial, {0, 3}}}));
}

TEST_CASE("unknown names raise foreign_generator") {
  AlgebraPresentation a = mixed(2);
  CHECK(raises([&] { a.index_of("zz"); }, errc::foreign_generator));
}

TEST_CASE("tensor concatenates generator lists") {
  AlgebraPresentation left = make_presentation(3, {{"h", GeneratorKind::exterior, {-1, 0}}});
  AlgebraPresentation right = make_presentation(3, {{"b1", GeneratorKind::polynomial, {0, 2}}});
  AlgebraPresentation both = tensor(left, right);
  CHECK(both.size() == 2);
  CHECK(both.gen(0).name == "h");
  CHECK(both.gen(1).name == "b1");
  CHECK(raises([&] { tensor(left, make_presentation(5, {{"x", GeneratorKind::exterior, {0, 1}}})); },
               errc::precondition));
  CHECK(raises([&] { tensor(left, left); }, errc::duplicate_name));
}
