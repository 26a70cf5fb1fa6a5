#pragma once

// Exhaustive enumeration and classification of monic polynomials over a
// finite base ring.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "skewsep/skew_poly.hpp"

namespace skewsep {

/// Every monic polynomial of the given degree, in lexicographic order of
/// (a_0, ..., a_{m-1}) with each a_i running through BaseRing::enumerate().
std::vector<SkewPoly> monic_polynomials(const SkewPolyRing& ring, std::size_t degree);

struct Classification {
  SkewPoly f;
  bool in_r0 = false;
  bool coefficients_fixed = false;
  bool in_scope() const { return in_r0 && coefficients_fixed; }

  // Only meaningful when in_scope().
  bool separable = false;
  bool weakly_separable = false;

  bool oracle_run = false;
  bool oracle_weakly_separable = false;
  bool delta_x_matches = false;
  bool oracle_agrees() const {
    return !oracle_run || (oracle_weakly_separable == weakly_separable && delta_x_matches);
  }

  /// Set when an InternalError escaped from the procedures.
  std::string internal_error;
};

Classification classify(const std::shared_ptr<const SkewPolyRing>& ring, SkewPoly f,
                        bool run_oracle);

struct SweepOptions {
  std::size_t min_degree = 1;
  std::size_t max_degree = 2;
  bool run_oracle = true;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned jobs = 0;
};

/// Classifications ordered by degree, then enumeration order, regardless of
/// how the work was scheduled.
std::vector<Classification> sweep(const std::shared_ptr<const SkewPolyRing>& ring,
                                  const SweepOptions& options);

}  // namespace skewsep
