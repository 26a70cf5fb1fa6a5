#include <array>

#include "doctest.h"
#include "skewsep/catalog.hpp"
#include "skewsep/errors.hpp"

using namespace skewsep;

namespace {

using Mat2 = std::array<long, 4>;  // row-major 2x2

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

// (e11, e12, e22) coordinates to a matrix and back
Mat2 ut_to_mat(const RingElement& a) {
  return {a[0].get_si(), a[1].get_si(), 0, a[2].get_si()};
}

Vec mat_to_ut(const Mat2& m) { return {m[0], m[1], m[3]}; }

Mat2 full_to_mat(const RingElement& a) {
  return {a[0].get_si(), a[1].get_si(), a[2].get_si(), a[3].get_si()};
}

}  // namespace

TEST_CASE("upper-triangular multiplication matches matrix products") {
  const BaseRing b = catalog::upper_triangular(CoeffRing::integers());
  CHECK(b.mul(b.basis(0), b.basis(1)) == b.basis(1));
  CHECK(b.mul(b.basis(1), b.basis(0)).is_zero());
  CHECK(b.mul(b.one(), b.basis(2)) == b.basis(2));
  const RingElement a = b.element({2, -3, 5});
  CHECK(b.mul(a, b.zero()).is_zero());
  for (long x0 = -2; x0 <= 2; ++x0)
    for (long x1 = -2; x1 <= 2; x1 += 2)
      for (long y1 = -1; y1 <= 1; ++y1) {
        const RingElement p = b.element({x0, x1, 3});
        const RingElement q = b.element({1 - x0, y1, x1});
        CHECK(b.mul(p, q).coords() == mat_to_ut(mat_mul(ut_to_mat(p), ut_to_mat(q))));
      }
}

TEST_CASE("full matrix ring matches matrix products") {
  const BaseRing b = catalog::matrix_ring(CoeffRing::integers());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const Mat2 prod = mat_mul(full_to_mat(b.basis(i)), full_to_mat(b.basis(j)));
      CHECK(b.mul(b.basis(i), b.basis(j)).coords() == Vec{prod[0], prod[1], prod[2], prod[3]});
    }
}

TEST_CASE("ring validation") {
  CHECK(validate_ring(catalog::upper_triangular(CoeffRing::integers())).empty());
  CHECK(validate_ring(catalog::cyclic_group_algebra(CoeffRing::modulo(2), 2)).empty());
  CHECK(validate_ring(catalog::matrix_ring(CoeffRing::modulo(3))).empty());
  CHECK(validate_ring(catalog::product_ring(CoeffRing::modulo(4), 3)).empty());

  const BaseRing good = catalog::upper_triangular(CoeffRing::integers());
  Vec sc;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) sc.push_back(good.structure(i, j, k));
  sc[0] = 2;  // e11*e11 = 2 e11
  const BaseRing bad(CoeffRing::integers(), 3, sc, {1, 0, 1});
  const auto problems = validate_ring(bad);
  REQUIRE_FALSE(problems.empty());
  bool names_triple = false;
  for (const auto& p : problems)
    if (p.find("(0, 0, 0)") != std::string::npos || p.find("e0") != std::string::npos) names_triple = true;
  CHECK(names_triple);
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(BaseRing(CoeffRing::integers(), 2, Vec(7), {1, 0}), UsageError);
  const BaseRing b = catalog::upper_triangular(CoeffRing::integers());
  const BaseRing s = catalog::scalar_ring(CoeffRing::integers());
  CHECK_THROWS_AS(b.mul(b.one(), s.one()), UsageError);
  CHECK_THROWS_AS(b.element({1, 2}), UsageError);
}

TEST_CASE("automorphism validation") {
  const BaseRing m2 = catalog::matrix_ring(CoeffRing::integers());
  CHECK(validate_automorphism(m2, RingMap::identity(m2)).empty());
  // u = 1 + e12, u^{-1} = 1 - e12
  const RingElement u = m2.element({1, 1, 0, 1});
  const RingElement u_inv = m2.element({1, -1, 0, 1});
  CHECK(m2.mul(u, u_inv) == m2.one());
  const RingMap rho = catalog::conjugation(m2, u, u_inv);
  CHECK(validate_automorphism(m2, rho).empty());
  // conjugation oracle on e21
  const Mat2 expect = mat_mul(mat_mul(full_to_mat(u), full_to_mat(m2.basis(2))), full_to_mat(u_inv));
  CHECK(rho.apply(m2.basis(2)).coords() == Vec{expect[0], expect[1], expect[2], expect[3]});

  const BaseRing p = catalog::product_ring(CoeffRing::integers(), 2);
  const RingMap singular(Matrix::from_rows({{1, 1}, {0, 0}}, 2));
  const auto problems = validate_automorphism(p, singular);
  REQUIRE_FALSE(problems.empty());
  bool invertible = false;
  for (const auto& msg : problems)
    if (msg.find("not invertible") != std::string::npos) invertible = true;
  CHECK(invertible);
}

TEST_CASE("derivation validation") {
  const BaseRing b = catalog::upper_triangular(CoeffRing::integers());
  const RingMap id = RingMap::identity(b);
  CHECK(validate_derivation(b, RingMap::zero(b), id).empty());
  const RingMap corner = catalog::upper_triangular_corner_derivation(b);
  CHECK(validate_derivation(b, corner, id).empty());
  // D(b1 e11 + b2 e12 + b3 e22) = b2 e12
  CHECK(corner.apply(b.element({4, 7, 9})) == b.element({0, 7, 0}));
  CHECK_FALSE(validate_derivation(b, id, id).empty());

  // twisted inner derivations are rho-derivations
  const BaseRing z3 = catalog::upper_triangular(CoeffRing::modulo(3));
  const RingMap rho = catalog::conjugation(z3, z3.element({1, 1, 1}), z3.element({1, 2, 1}));
  const RingMap d = catalog::inner_twisted_derivation(z3, rho, z3.basis(0));
  CHECK(validate_automorphism(z3, rho).empty());
  CHECK(validate_derivation(z3, d, rho).empty());
  CHECK_FALSE(validate_derivation(z3, RingMap::identity(z3), rho).empty());
}

TEST_CASE("ring maps") {
  const BaseRing p = catalog::product_ring(CoeffRing::modulo(3), 3);
  const RingMap cyc = catalog::permutation(p, {1, 2, 0});
  CHECK(cyc.power(3).is_identity());
  CHECK_FALSE(cyc.power(2).is_identity());
  CHECK(cyc.compose(cyc.inverse()).is_identity());
  CHECK(cyc.inverse() == cyc.power(2));
  CHECK((cyc - cyc).is_zero());
  CHECK(cyc.apply(p.basis(0)) == p.basis(1));
  const RingMap singular(Matrix(3, 3, CoeffRing::modulo(3)));
  CHECK_THROWS_AS(singular.inverse(), UsageError);
}

TEST_CASE("fixed subrings and centralizers") {
  const BaseRing b = catalog::upper_triangular(CoeffRing::integers());
  const RingMap id = RingMap::identity(b);
  const RingMap corner = catalog::upper_triangular_corner_derivation(b);
  CHECK(sub_equal(fixed_subring(b, {{id, FixMode::kFixedPoints}}), Submodule::full(3)));
  CHECK(sub_equal(fixed_subring(b, {{RingMap::zero(b), FixMode::kKernel}}), Submodule::full(3)));
  const auto diag = fixed_subring(b, {{corner, FixMode::kKernel}});
  CHECK(diag.rank() == 2);
  CHECK(sub_equal(diag, hnf(3, std::vector<Vec>{{1, 0, 0}, {0, 0, 1}})));

  const auto scalars = centralizer_in_b(b, Submodule::full(3));
  CHECK(sub_equal(scalars, hnf(3, std::vector<Vec>{{1, 0, 1}})));
  CHECK(centralizer_in_b(b, Submodule::zero(3)).is_zero());
  const BaseRing c = catalog::cyclic_group_algebra(CoeffRing::modulo(2), 3);
  CHECK(sub_equal(centralizer_in_b(c, Submodule::full(3, c.coeff())), Submodule::full(3, c.coeff())));
}

TEST_CASE("enumeration") {
  const BaseRing p = catalog::product_ring(CoeffRing::modulo(2), 2);
  CHECK(p.enumerate().size() == 4);
  CHECK(catalog::upper_triangular(CoeffRing::modulo(3)).enumerate().size() == 27);
  CHECK_THROWS_AS(catalog::scalar_ring(CoeffRing::integers()).enumerate(), UsageError);
}
