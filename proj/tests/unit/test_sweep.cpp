#include "doctest.h"
#include "fixtures.hpp"
#include "skewsep/errors.hpp"
#include "skewsep/sweep.hpp"

using namespace skewsep;
using namespace skewsep::testing;

TEST_CASE("enumeration order and size") {
  auto r = scalar_poly_ring(CoeffRing::modulo(3));
  const auto polys = monic_polynomials(*r, 2);
  REQUIRE(polys.size() == 9);
  CHECK(polys.front() == scalar_poly(*r, {0, 0}));
  CHECK(polys[1] == scalar_poly(*r, {0, 1}));
  CHECK(polys.back() == scalar_poly(*r, {2, 2}));
  auto ut = triangular_corner_ring(CoeffRing::modulo(2));
  CHECK(monic_polynomials(*ut, 3).size() == 512);
}

TEST_CASE("sweep is deterministic across job counts") {
  for (const auto& rc : sweep_rings()) {
    SweepOptions one{2, 3, true, 1};
    SweepOptions many{2, 3, true, 4};
    const auto a = sweep(rc.ring, one);
    const auto b = sweep(rc.ring, many);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].f == b[i].f);
      CHECK(a[i].separable == b[i].separable);
      CHECK(a[i].weakly_separable == b[i].weakly_separable);
      CHECK(a[i].oracle_agrees());
      CHECK(a[i].internal_error.empty());
    }
  }
}

TEST_CASE("classification of known instances") {
  auto r = scalar_poly_ring(CoeffRing::modulo(2));
  const auto sep = classify(r, scalar_poly(*r, {1, 1}), true);
  CHECK(sep.in_scope());
  CHECK(sep.separable);
  CHECK(sep.weakly_separable);
  CHECK(sep.oracle_agrees());
  const auto dual = classify(r, scalar_poly(*r, {1, 0}), true);
  CHECK_FALSE(dual.separable);
  CHECK_FALSE(dual.weakly_separable);
  CHECK(dual.oracle_run);
  CHECK_FALSE(dual.oracle_weakly_separable);

  auto ut = triangular_corner_ring(CoeffRing::modulo(3));
  const BaseRing& b = ut->base();
  const auto out = classify(ut, ut->from_coeffs({b.zero(), b.basis(1), b.one()}), true);
  CHECK_FALSE(out.in_r0);
  CHECK_FALSE(out.in_scope());
  CHECK_FALSE(out.oracle_run);
}

TEST_CASE("sweep rejects bad options") {
  auto z = scalar_poly_ring(CoeffRing::integers());
  CHECK_THROWS_AS(sweep(z, {}), UsageError);
  auto r = scalar_poly_ring(CoeffRing::modulo(2));
  CHECK_THROWS_AS(sweep(r, SweepOptions{3, 2, true, 1}), UsageError);
  CHECK_THROWS_AS(sweep(r, SweepOptions{0, 2, true, 1}), UsageError);
}
