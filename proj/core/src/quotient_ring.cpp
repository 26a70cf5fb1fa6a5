#include "skewsep/quotient_ring.hpp"

#include <sstream>

#include "skewsep/errors.hpp"

namespace skewsep {

Vec AElement::flat() const {
  Vec out;
  for (const auto& c : coeffs_) out.insert(out.end(), c.coords().begin(), c.coords().end());
  return out;
}

bool AElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

std::shared_ptr<const QuotientRing> QuotientRing::build(std::shared_ptr<const SkewPolyRing> ring,
                                                        SkewPoly f) {
  if (!ring->is_monic(f) || f.degree() < 1) {
    throw UsageError("build_quotient: f must be monic of degree >= 1");
  }
  const R0Certificate cert = ring->is_r0_lemma(f);
  if (!cert.in_r0) {
    throw ScopeError(ScopeError::Reason::kNotInR0, "f is not in R0: " + cert.message);
  }
  if (!ring->coefficients_fixed_by_rho(f)) {
    throw ScopeError(ScopeError::Reason::kCoefficientsNotFixed,
                     "outside B^rho[X] scope: some coefficient of f is not fixed by rho");
  }
  return std::shared_ptr<const QuotientRing>(new QuotientRing(std::move(ring), std::move(f)));
}

QuotientRing::QuotientRing(std::shared_ptr<const SkewPolyRing> ring, SkewPoly f)
    : ring_(std::move(ring)), f_(std::move(f)), m_(static_cast<std::size_t>(f_.degree())) {
  for (std::size_t k = 0; k + 1 < 2 * m_; ++k) {
    const SkewPoly xk = ring_->monomial(k, base().one());
    x_powers_.push_back(normal_form(ring_->divmod_monic(xk, f_).second));
  }
  for (const auto& yj : ring_->y_polys(f_)) y_.push_back(from_poly(yj));

  std::vector<Vec> tau_cols, ix_cols;
  for (std::size_t q = 0; q < flat_dim(); ++q) {
    const AElement e = basis_element(q);
    tau_cols.push_back(tau(e).flat());
    ix_cols.push_back(inner_x(e).flat());
  }
  tau_matrix_ = Matrix::from_columns(tau_cols, flat_dim(), coeff());
  inner_x_matrix_ = Matrix::from_columns(ix_cols, flat_dim(), coeff());
}

void QuotientRing::check(const AElement& z, const char* op) const {
  if (z.coeffs().size() != m_) {
    throw UsageError(std::string(op) + ": element does not belong to this quotient ring");
  }
  for (const auto& c : z.coeffs()) {
    if (c.size() != base().rank()) {
      throw UsageError(std::string(op) + ": element does not belong to this quotient ring");
    }
  }
}

AElement QuotientRing::normal_form(const SkewPoly& g) const {
  if (g.degree() >= static_cast<int>(m_)) {
    throw InternalError("normal_form: polynomial of degree >= m");
  }
  std::vector<RingElement> c(m_, base().zero());
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) c[i] = g.coeffs()[i];
  return AElement(std::move(c));
}

AElement QuotientRing::zero() const { return AElement(std::vector<RingElement>(m_, base().zero())); }

AElement QuotientRing::one() const { return embed(base().one()); }

AElement QuotientRing::x() const { return from_poly(ring_->x()); }

AElement QuotientRing::embed(const RingElement& a) const {
  std::vector<RingElement> c(m_, base().zero());
  c[0] = base().element(a.coords());
  return AElement(std::move(c));
}

AElement QuotientRing::basis_element(std::size_t q) const {
  if (q >= flat_dim()) throw UsageError("basis_element: index out of range");
  return from_flat(unit_vec(flat_dim(), q));
}

AElement QuotientRing::from_flat(const Vec& v) const {
  if (v.size() != flat_dim()) {
    throw UsageError("from_flat: expected " + std::to_string(flat_dim()) + " coordinates");
  }
  const std::size_t r = base().rank();
  std::vector<RingElement> c;
  for (std::size_t i = 0; i < m_; ++i) {
    c.push_back(base().element(Vec(v.begin() + static_cast<std::ptrdiff_t>(i * r),
                                   v.begin() + static_cast<std::ptrdiff_t>((i + 1) * r))));
  }
  return AElement(std::move(c));
}

AElement QuotientRing::from_poly(const SkewPoly& g) const {
  if (g.degree() > static_cast<int>(x_powers_.size()) - 1) {
    return normal_form(ring_->divmod_monic(g, f_).second);
  }
  // Reduction is right B-linear: X^k c = x^k c.
  AElement out = zero();
  for (std::size_t k = 0; k < g.coeffs().size(); ++k) {
    if (g.coeffs()[k].is_zero()) continue;
    out = add(out, mul_right(x_powers_[k], g.coeffs()[k]));
  }
  return out;
}

SkewPoly QuotientRing::lift(const AElement& z) const {
  check(z, "lift");
  return SkewPoly(z.coeffs());
}

const AElement& QuotientRing::x_power(std::size_t k) const { return x_powers_.at(k); }

AElement QuotientRing::add(const AElement& z, const AElement& w) const {
  check(z, "a_add");
  check(w, "a_add");
  std::vector<RingElement> c;
  for (std::size_t i = 0; i < m_; ++i) c.push_back(base().add(z.coeffs()[i], w.coeffs()[i]));
  return AElement(std::move(c));
}

AElement QuotientRing::sub(const AElement& z, const AElement& w) const {
  check(z, "a_sub");
  check(w, "a_sub");
  std::vector<RingElement> c;
  for (std::size_t i = 0; i < m_; ++i) c.push_back(base().sub(z.coeffs()[i], w.coeffs()[i]));
  return AElement(std::move(c));
}

AElement QuotientRing::neg(const AElement& z) const { return sub(zero(), z); }

AElement QuotientRing::mul(const AElement& z, const AElement& w) const {
  check(z, "a_mul");
  check(w, "a_mul");
  return from_poly(ring_->mul(lift(z), lift(w)));
}

AElement QuotientRing::mul_right(const AElement& z, const RingElement& c) const {
  check(z, "a_mul");
  std::vector<RingElement> out;
  for (const auto& a : z.coeffs()) out.push_back(base().mul(a, c));
  return AElement(std::move(out));
}

AElement QuotientRing::inner_x(const AElement& z) const {
  const AElement X = x();
  return sub(mul(z, X), mul(X, z));
}

AElement QuotientRing::tau(const AElement& z) const {
  check(z, "tau");
  AElement out = zero();
  AElement xj = one();
  const AElement X = x();
  for (std::size_t j = 0; j < m_; ++j) {
    out = add(out, mul(mul(y_[j], z), xj));
    xj = mul(xj, X);
  }
  return out;
}

Matrix QuotientRing::left_mul_matrix(const AElement& z) const {
  std::vector<Vec> cols;
  for (std::size_t q = 0; q < flat_dim(); ++q) cols.push_back(mul(z, basis_element(q)).flat());
  return Matrix::from_columns(cols, flat_dim(), coeff());
}

Matrix QuotientRing::right_mul_matrix(const AElement& z) const {
  std::vector<Vec> cols;
  for (std::size_t q = 0; q < flat_dim(); ++q) cols.push_back(mul(basis_element(q), z).flat());
  return Matrix::from_columns(cols, flat_dim(), coeff());
}

Submodule QuotientRing::twisted_centralizer(int k) const {
  const RingMap rho_k = ring_->rho_power(k);
  std::vector<Matrix> blocks;
  for (std::size_t b = 0; b < base().rank(); ++b) {
    const RingElement alpha = base().basis(b);
    blocks.push_back(left_mul_matrix(embed(alpha)) -
                     right_mul_matrix(embed(rho_k.apply(alpha))));
  }
  return kernel(vstack(blocks));
}

Submodule QuotientRing::center() const {
  return kernel_within(inner_x_matrix_, centralizer_of_b());
}

Submodule QuotientRing::tau_kernel() const { return kernel(tau_matrix_); }

Submodule QuotientRing::inner_x_image(const Submodule& s) const {
  return image_of(inner_x_matrix_, s);
}

std::string QuotientRing::to_string(const AElement& z) const {
  check(z, "to_string");
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = m_; i-- > 0;) {
    const RingElement& a = z.coeffs()[i];
    if (a.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const std::string c = base().to_string(a);
    if (i == 0) {
      os << c;
      continue;
    }
    os << (i == 1 ? std::string("x") : "x^" + std::to_string(i));
    if (!(a == base().one())) os << "*(" << c << ')';
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace skewsep
