#pragma once

#include <vector>

namespace skewsep::testing {

/// Dense polynomial over Z/p, ascending coefficients, p prime.
using PrimePoly = std::vector<long>;

PrimePoly derivative(const PrimePoly& f, long p);
/// Monic gcd (empty for gcd(0, 0)).
PrimePoly poly_gcd(PrimePoly a, PrimePoly b, long p);
/// gcd(f, f') is a nonzero constant.
bool classically_separable(const PrimePoly& f, long p);

}  // namespace skewsep::testing
