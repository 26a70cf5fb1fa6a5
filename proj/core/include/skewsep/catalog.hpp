#pragma once

// Small stock rings and maps used by the sweep corpus, tests and benchmarks.

#include <vector>

#include "skewsep/base_ring.hpp"

namespace skewsep::catalog {

/// B = k itself (rank 1).
BaseRing scalar_ring(const CoeffRing& coeff);

/// k x k x ... x k with the idempotent basis.
BaseRing product_ring(const CoeffRing& coeff, std::size_t copies);

/// Upper-triangular 2x2 matrices over k, basis (e11, e12, e22).
BaseRing upper_triangular(const CoeffRing& coeff);

/// Full 2x2 matrices over k, basis (e11, e12, e21, e22).
BaseRing matrix_ring(const CoeffRing& coeff);

/// Group algebra k[C_n], basis g^0..g^{n-1}.
BaseRing cyclic_group_algebra(const CoeffRing& coeff, std::size_t order);

/// Derivation of the upper-triangular ring keeping only the (1,2) entry.
RingMap upper_triangular_corner_derivation(const BaseRing& upper_triangular);

/// a -> a*c - c*rho(a), a rho-derivation for any c.
RingMap inner_twisted_derivation(const BaseRing& ring, const RingMap& rho,
                                 const RingElement& c);

/// a -> u*a*u_inv.
RingMap conjugation(const BaseRing& ring, const RingElement& u, const RingElement& u_inv);

/// e_i -> e_{perm[i]}.
RingMap permutation(const BaseRing& ring, const std::vector<std::size_t>& perm);

}  // namespace skewsep::catalog
