#pragma once

// A = R/fR for monic f in R0 with rho-fixed coefficients, as a free right
// B-module on 1, x, ..., x^{m-1}. Elements have two views: m coefficients in
// B (for ring arithmetic) and a flat vector in k^{rm} (for subgroup
// computations), with flat index i*r + b for the coordinate x^i e_b.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "skewsep/linalg.hpp"
#include "skewsep/skew_poly.hpp"

namespace skewsep {

class AElement {
 public:
  AElement() = default;
  explicit AElement(std::vector<RingElement> coeffs) : coeffs_(std::move(coeffs)) {}

  const std::vector<RingElement>& coeffs() const noexcept { return coeffs_; }
  /// Coordinates in k^{rm}.
  Vec flat() const;
  bool is_zero() const;

  friend bool operator==(const AElement&, const AElement&) = default;

 private:
  std::vector<RingElement> coeffs_;
};

class QuotientRing {
 public:
  /// Throws ScopeError when f is not in R0 or has a coefficient outside B^rho.
  static std::shared_ptr<const QuotientRing> build(std::shared_ptr<const SkewPolyRing> ring,
                                                   SkewPoly f);

  const SkewPolyRing& ring() const noexcept { return *ring_; }
  const BaseRing& base() const noexcept { return ring_->base(); }
  const CoeffRing& coeff() const noexcept { return ring_->base().coeff(); }
  const SkewPoly& f() const noexcept { return f_; }
  std::size_t degree() const noexcept { return m_; }
  /// r*m
  std::size_t flat_dim() const noexcept { return m_ * base().rank(); }

  AElement zero() const;
  AElement one() const;
  AElement x() const;
  AElement embed(const RingElement& a) const;
  /// x^i e_b for flat index q = i*r + b.
  AElement basis_element(std::size_t q) const;
  AElement from_flat(const Vec& v) const;
  /// g + fR in normal form.
  AElement from_poly(const SkewPoly& g) const;
  /// The representative of degree < m.
  SkewPoly lift(const AElement& z) const;
  /// Normal form of x^k, for 0 <= k <= 2m-2.
  const AElement& x_power(std::size_t k) const;

  AElement add(const AElement& z, const AElement& w) const;
  AElement sub(const AElement& z, const AElement& w) const;
  AElement neg(const AElement& z) const;
  AElement mul(const AElement& z, const AElement& w) const;
  /// z*c for c in B.
  AElement mul_right(const AElement& z, const RingElement& c) const;

  /// y_j = Y_j + fR.
  const std::vector<AElement>& y() const noexcept { return y_; }
  /// z x - x z
  AElement inner_x(const AElement& z) const;
  /// sum_j y_j z x^j
  AElement tau(const AElement& z) const;

  /// Matrices on k^{rm}.
  Matrix left_mul_matrix(const AElement& z) const;
  Matrix right_mul_matrix(const AElement& z) const;
  const Matrix& tau_matrix() const noexcept { return tau_matrix_; }
  const Matrix& inner_x_matrix() const noexcept { return inner_x_matrix_; }

  /// A_k = {u : alpha u = u rho^k(alpha) for all alpha in B}.
  Submodule twisted_centralizer(int k) const;
  /// V = A_0, the centralizer of B in A.
  Submodule centralizer_of_b() const { return twisted_centralizer(0); }
  /// C(A) = {u in V : ux = xu}.
  Submodule center() const;
  Submodule tau_kernel() const;
  /// I_x(S)
  Submodule inner_x_image(const Submodule& s) const;

  std::string to_string(const AElement& z) const;

 private:
  QuotientRing(std::shared_ptr<const SkewPolyRing> ring, SkewPoly f);

  void check(const AElement& z, const char* op) const;
  AElement normal_form(const SkewPoly& g) const;

  std::shared_ptr<const SkewPolyRing> ring_;
  SkewPoly f_;
  std::size_t m_;
  std::vector<AElement> x_powers_;
  std::vector<AElement> y_;
  Matrix tau_matrix_;
  Matrix inner_x_matrix_;
};

}  // namespace skewsep
