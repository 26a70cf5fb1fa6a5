#pragma once

#include <memory>
#include <string>
#include <vector>

#include "skewsep/catalog.hpp"
#include "skewsep/quotient_ring.hpp"
#include "skewsep/skew_poly.hpp"

namespace skewsep::testing {

struct RingCase {
  std::string name;
  std::shared_ptr<const SkewPolyRing> ring;
};

struct Instance {
  std::string ring_name;
  std::shared_ptr<const SkewPolyRing> ring;
  SkewPoly f;

  std::string label() const { return ring_name + " f = " + ring->to_string(f); }
};

/// Upper-triangular 2x2 ring, rho = id, D keeping the (1,2) entry.
std::shared_ptr<const SkewPolyRing> triangular_corner_ring(const CoeffRing& k);

/// f = X^2 + X a + a with a = diag(3, 1) over the triangular corner ring.
SkewPoly worked_example_poly(const SkewPolyRing& ring);

/// The worked example over Z.
std::shared_ptr<const QuotientRing> worked_example();

/// R = k[X] over B = k (rho = id, D = 0).
std::shared_ptr<const SkewPolyRing> scalar_poly_ring(const CoeffRing& k);

/// Monic f over a rank-1 ring from integer coefficients a_0..a_{m-1}.
SkewPoly scalar_poly(const SkewPolyRing& ring, const std::vector<long>& lower);

/// The finite (B, rho, D) triples the oracle sweep runs over.
std::vector<RingCase> sweep_rings();

/// Extra rings with rho != id or non-commutative B used by the invariant
/// suites (superset of sweep_rings()).
std::vector<RingCase> invariant_rings();

/// In-scope instances of degree 2 and 3 over the given rings, plus the
/// worked example over Z and over Z/5.
std::vector<Instance> scoped_instances(const std::vector<RingCase>& rings);

}  // namespace skewsep::testing
