#include "fixtures.hpp"

#include "skewsep/sweep.hpp"

namespace skewsep::testing {

std::shared_ptr<const SkewPolyRing> triangular_corner_ring(const CoeffRing& k) {
  BaseRing b = catalog::upper_triangular(k);
  RingMap d = catalog::upper_triangular_corner_derivation(b);
  RingMap id = RingMap::identity(b);
  return SkewPolyRing::create(std::move(b), std::move(id), std::move(d));
}

SkewPoly worked_example_poly(const SkewPolyRing& ring) {
  const RingElement a = ring.base().element({3, 0, 1});
  return ring.from_coeffs({a, a, ring.base().one()});
}

std::shared_ptr<const QuotientRing> worked_example() {
  auto ring = triangular_corner_ring(CoeffRing::integers());
  SkewPoly f = worked_example_poly(*ring);
  return QuotientRing::build(ring, std::move(f));
}

std::shared_ptr<const SkewPolyRing> scalar_poly_ring(const CoeffRing& k) {
  BaseRing b = catalog::scalar_ring(k);
  RingMap id = RingMap::identity(b);
  RingMap zero = RingMap::zero(b);
  return SkewPolyRing::create(std::move(b), std::move(id), std::move(zero));
}

SkewPoly scalar_poly(const SkewPolyRing& ring, const std::vector<long>& lower) {
  std::vector<RingElement> c;
  for (long v : lower) c.push_back(ring.base().element({v}));
  c.push_back(ring.base().one());
  return ring.from_coeffs(std::move(c));
}

namespace {

RingCase make(std::string name, BaseRing b, RingMap rho, RingMap d) {
  return {std::move(name), SkewPolyRing::create(std::move(b), std::move(rho), std::move(d))};
}

RingCase trivial_maps(std::string name, BaseRing b) {
  RingMap id = RingMap::identity(b);
  RingMap zero = RingMap::zero(b);
  return make(std::move(name), std::move(b), std::move(id), std::move(zero));
}

}  // namespace

std::vector<RingCase> sweep_rings() {
  std::vector<RingCase> out;
  for (long n : {2, 3, 4}) {
    out.push_back(trivial_maps("Z/" + std::to_string(n), catalog::scalar_ring(CoeffRing::modulo(n))));
  }
  const CoeffRing z2 = CoeffRing::modulo(2);
  out.push_back(trivial_maps("Z/2 x Z/2", catalog::product_ring(z2, 2)));
  {
    BaseRing b = catalog::product_ring(z2, 2);
    RingMap swap = catalog::permutation(b, {1, 0});
    RingMap zero = RingMap::zero(b);
    out.push_back(make("Z/2 x Z/2, rho = swap", b, swap, zero));
    RingMap d = catalog::inner_twisted_derivation(b, swap, b.basis(0));
    out.push_back(make("Z/2 x Z/2, rho = swap, D = inner(p0)", b, swap, d));
  }
  out.push_back({"UT2(Z/2), D = corner", triangular_corner_ring(z2)});
  out.push_back({"UT2(Z/3), D = corner", triangular_corner_ring(CoeffRing::modulo(3))});
  return out;
}

std::vector<RingCase> invariant_rings() {
  std::vector<RingCase> out = sweep_rings();
  const CoeffRing z2 = CoeffRing::modulo(2);
  const CoeffRing z3 = CoeffRing::modulo(3);
  out.push_back(trivial_maps("UT2(Z/2)", catalog::upper_triangular(z2)));
  out.push_back(trivial_maps("Z/2[C2]", catalog::cyclic_group_algebra(z2, 2)));
  {
    BaseRing b = catalog::product_ring(z3, 2);
    RingMap swap = catalog::permutation(b, {1, 0});
    RingMap d = catalog::inner_twisted_derivation(b, swap, b.element({1, 2}));
    out.push_back(make("Z/3 x Z/3, rho = swap, D = inner(p0 + 2 p1)", b, swap, d));
  }
  {
    // rho = conjugation by u = e11 + e12 + e22 on the triangular ring
    BaseRing b = catalog::upper_triangular(z3);
    RingElement u = b.element({1, 1, 1});
    RingElement u_inv = b.element({1, 2, 1});
    RingMap rho = catalog::conjugation(b, u, u_inv);
    RingMap d = catalog::inner_twisted_derivation(b, rho, b.basis(0));
    out.push_back(make("UT2(Z/3), rho = conj(1 + e12), D = inner(e11)", b, rho, d));
  }
  return out;
}

std::vector<Instance> scoped_instances(const std::vector<RingCase>& rings) {
  std::vector<Instance> out;
  for (const auto& rc : rings) {
    for (std::size_t m : {2u, 3u}) {
      for (auto& f : monic_polynomials(*rc.ring, m)) {
        if (!rc.ring->coefficients_fixed_by_rho(f)) continue;
        if (!rc.ring->is_r0_lemma(f).in_r0) continue;
        out.push_back({rc.name, rc.ring, std::move(f)});
      }
    }
  }
  auto z = triangular_corner_ring(CoeffRing::integers());
  out.push_back({"UT2(Z), D = corner", z, worked_example_poly(*z)});
  auto z5 = triangular_corner_ring(CoeffRing::modulo(5));
  out.push_back({"UT2(Z/5), D = corner", z5, worked_example_poly(*z5)});
  return out;
}

}  // namespace skewsep::testing
