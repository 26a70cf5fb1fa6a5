#pragma once

// R = B[X; rho, D]: polynomials sum X^i a_i with right coefficients and
// a*X = X*rho(a) + D(a).

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "skewsep/base_ring.hpp"

namespace skewsep {

/// sum_i X^i a_i, degree-ascending, trailing zeros trimmed.
class SkewPoly {
 public:
  SkewPoly() = default;
  explicit SkewPoly(std::vector<RingElement> coeffs);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<RingElement>& coeffs() const noexcept { return coeffs_; }
  /// a_i, or nullptr past the degree.
  const RingElement* coeff(std::size_t i) const {
    return i < coeffs_.size() ? &coeffs_[i] : nullptr;
  }

  friend bool operator==(const SkewPoly&, const SkewPoly&) = default;

 private:
  std::vector<RingElement> coeffs_;
};

/// Outcome of the coefficient test for fR = Rf.
struct R0Certificate {
  bool in_r0 = true;
  /// 1 or 2 for the failing condition, 0 when in_r0.
  int condition = 0;
  /// Condition 1: the coefficient index j and the basis index of alpha.
  std::size_t j = 0;
  std::size_t basis_index = 0;
  /// Condition 2: the coefficient index i.
  std::size_t i = 0;
  std::string message;
};

class SkewPolyRing {
 public:
  /// Validates B, rho and D eagerly; throws UsageError listing every
  /// violation.
  static std::shared_ptr<const SkewPolyRing> create(BaseRing base, RingMap rho, RingMap deriv);

  const BaseRing& base() const noexcept { return base_; }
  const RingMap& rho() const noexcept { return rho_; }
  const RingMap& deriv() const noexcept { return deriv_; }
  const RingMap& rho_inverse() const noexcept { return rho_inv_; }
  /// rho^k for any integer k.
  RingMap rho_power(int k) const;
  /// rho is the identity (derivation type).
  bool is_derivation_type() const { return rho_.is_identity(); }

  /// Phi_{[i,j]}, memoized. Thread-safe.
  const RingMap& phi(std::size_t i, std::size_t j) const;

  SkewPoly zero() const { return SkewPoly(); }
  SkewPoly constant(const RingElement& a) const;
  SkewPoly one() const { return constant(base_.one()); }
  /// X^i a
  SkewPoly monomial(std::size_t i, const RingElement& a) const;
  SkewPoly x() const { return monomial(1, base_.one()); }
  /// sum_i X^i a_i from right coefficients (reduced, trimmed).
  SkewPoly from_coeffs(std::vector<RingElement> coeffs) const;
  /// sum_i c_i X^i from left coefficients.
  SkewPoly from_left_coeffs(const std::vector<RingElement>& coeffs) const;

  SkewPoly add(const SkewPoly& f, const SkewPoly& g) const;
  SkewPoly sub(const SkewPoly& f, const SkewPoly& g) const;
  SkewPoly neg(const SkewPoly& f) const;
  SkewPoly mul(const SkewPoly& f, const SkewPoly& g) const;
  /// f * c for c in B.
  SkewPoly mul_right(const SkewPoly& f, const RingElement& c) const;

  /// alpha X^i in right-coefficient form.
  SkewPoly scalar_power_expand(const RingElement& alpha, std::size_t i) const;

  /// g = f*q + rem with deg rem < deg f. f must be monic of degree >= 1.
  std::pair<SkewPoly, SkewPoly> divmod_monic(const SkewPoly& g, const SkewPoly& f) const;

  bool is_monic(const SkewPoly& f) const;
  /// Every coefficient fixed by rho.
  bool coefficients_fixed_by_rho(const SkewPoly& f) const;

  /// fR = Rf via the two coefficient conditions on a k-basis of B.
  R0Certificate is_r0_lemma(const SkewPoly& f) const;
  /// fR = Rf via alpha f = f rho^m(alpha) and Xf = f(X - (rho(a_{m-1}) - a_{m-1})).
  bool is_r0_direct(const SkewPoly& f) const;
  /// Every coefficient lies in the center of B^{rho,D}. Requires f in R0 with
  /// rho-fixed coefficients (UsageError otherwise).
  bool check_cor01(const SkewPoly& f) const;

  /// Y_0..Y_{m-1} with Y_j = sum_{k=j}^{m-1} X^{k-j} a_{k+1}.
  std::vector<SkewPoly> y_polys(const SkewPoly& f) const;

  /// alpha g = g rho(alpha) for all alpha in B (checked on the basis).
  bool in_r1(const SkewPoly& g) const;
  /// g_0 = 0, g_1 = g1, g_{j+1} = g_j X + X^j g_1, up to g_count.
  std::vector<SkewPoly> g_sequence(const SkewPoly& g1, std::size_t count) const;

  std::string to_string(const SkewPoly& f) const;

 private:
  SkewPolyRing(BaseRing base, RingMap rho, RingMap deriv, RingMap rho_inv);

  void check(const SkewPoly& f, const char* op) const;

  BaseRing base_;
  RingMap rho_;
  RingMap deriv_;
  RingMap rho_inv_;

  mutable std::mutex phi_mutex_;
  mutable std::map<std::pair<std::size_t, std::size_t>, RingMap> phi_cache_;
};

}  // namespace skewsep
