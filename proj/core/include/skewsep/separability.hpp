#pragma once

// Decision procedures for separability and weak separability of A = R/fR
// over B, and an independent oracle that computes Der_B(A) by brute linear
// algebra.

#include <optional>
#include <vector>

#include "skewsep/linalg.hpp"
#include "skewsep/quotient_ring.hpp"

namespace skewsep {

struct SeparabilityResult {
  bool separable = false;
  /// u in A_{1-m} with tau(u) = 1, when separable.
  std::optional<AElement> witness;
};

/// Solvability of tau(u) = 1 over u in A_{1-m}.
SeparabilityResult is_separable(const QuotientRing& a);

struct WeakSeparability {
  bool weakly_separable = false;
  Submodule s1;  // A_1 ∩ Ker(tau)
  Submodule s2;  // I_x(V)
};

/// Compares A_1 ∩ Ker(tau) with I_x(V). Throws InternalError if I_x(V) is
/// not contained in A_1 ∩ Ker(tau).
WeakSeparability is_weakly_separable(const QuotientRing& a);

struct ExactnessReport {
  /// Ker(tau|A_1) = Im(I_x|V)
  bool exact_at_a1 = false;
  /// Ker(I_x|V) = C(A)
  bool ker_ix_is_center = false;
};

ExactnessReport exactness_report(const QuotientRing& a);

/// Cross-checks for rho = id, where every A_k equals V.
struct DTypeReport {
  /// Ker(tau|V) = I_x(V)
  bool weakly_separable = false;
  /// additionally tau(V) = C(A)
  bool separable = false;
  bool tau_v_in_center = false;
  /// Both verdicts match is_weakly_separable / is_separable.
  bool agrees_with_general = false;
  Submodule tau_image;  // tau(V)
  Submodule center;     // C(A)
};

/// Throws UsageError unless rho is the identity.
DTypeReport d_type_checks(const QuotientRing& a);

struct Verdict {
  bool separable = false;
  std::optional<AElement> witness;
  bool weakly_separable = false;
  Submodule s1;
  Submodule s2;
  ExactnessReport exactness;
};

/// All of the above in one pass. Throws InternalError when separable but not
/// weakly separable, or when the exactness report disagrees with the verdict.
Verdict decide(const QuotientRing& a);

/// B-derivations of A to A, as subgroups of k^{N*N} (N = rm); a matrix
/// delta on k^N is flattened row-major.
struct DerivationModule {
  Submodule derivations;
  Submodule inner;

  /// Generators of `derivations` reshaped to N x N matrices.
  std::vector<Matrix> basis(const QuotientRing& a) const;
};

DerivationModule derivation_module(const QuotientRing& a);

struct OracleResult {
  /// Der_B(A) = inner derivations.
  bool weakly_separable = false;
  /// {delta(x) : delta in Der_B(A)} = A_1 ∩ Ker(tau).
  bool delta_x_matches = false;
  Submodule delta_x_image;
  DerivationModule module;
};

OracleResult oracle_weakly_separable(const QuotientRing& a);

/// delta(zw) = delta(z)w + z delta(w) on basis pairs and delta(B) = 0.
bool is_b_derivation(const QuotientRing& a, const Matrix& delta);

/// The B-derivation of A with delta(x) = u, obtained by extending
/// Delta(X) = u_0 along g_{j+1} = g_j X + X^j g_1 and descending to A.
/// Throws UsageError unless u lies in A_1 ∩ Ker(tau).
Matrix build_derivation_from_seed(const QuotientRing& a, const AElement& u);

/// Matrix of z -> vz - zv.
Matrix inner_derivation_matrix(const QuotientRing& a, const AElement& v);

/// Row-major flattening of a square matrix, and back.
Vec flatten(const Matrix& m);
Matrix unflatten(const Vec& v, std::size_t n, const CoeffRing& coeff);

}  // namespace skewsep
