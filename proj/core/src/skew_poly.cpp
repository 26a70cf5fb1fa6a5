#include "skewsep/skew_poly.hpp"

#include <sstream>

#include "skewsep/errors.hpp"

namespace skewsep {

SkewPoly::SkewPoly(std::vector<RingElement> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::shared_ptr<const SkewPolyRing> SkewPolyRing::create(BaseRing base, RingMap rho,
                                                         RingMap deriv) {
  std::vector<std::string> problems;
  for (auto& v : validate_ring(base)) problems.push_back("ring: " + v);
  for (auto& v : validate_automorphism(base, rho)) problems.push_back("rho: " + v);
  if (problems.empty()) {
    for (auto& v : validate_derivation(base, deriv, rho)) problems.push_back("D: " + v);
  }
  if (!problems.empty()) {
    std::string msg = "invalid skew polynomial ring data:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw UsageError(msg);
  }
  RingMap inv = rho.inverse();
  return std::shared_ptr<const SkewPolyRing>(
      new SkewPolyRing(std::move(base), std::move(rho), std::move(deriv), std::move(inv)));
}

SkewPolyRing::SkewPolyRing(BaseRing base, RingMap rho, RingMap deriv, RingMap rho_inv)
    : base_(std::move(base)), rho_(std::move(rho)), deriv_(std::move(deriv)),
      rho_inv_(std::move(rho_inv)) {}

RingMap SkewPolyRing::rho_power(int k) const {
  return k >= 0 ? rho_.power(static_cast<unsigned>(k))
                : rho_inv_.power(static_cast<unsigned>(-k));
}

const RingMap& SkewPolyRing::phi(std::size_t i, std::size_t j) const {
  if (j > i) {
    throw UsageError("phi: need j <= i, got (" + std::to_string(i) + ", " +
                     std::to_string(j) + ")");
  }
  std::lock_guard lock(phi_mutex_);
  if (auto it = phi_cache_.find({i, j}); it != phi_cache_.end()) return it->second;
  // Fill rows 0..i of the triangle; each row only needs the previous one.
  for (std::size_t a = 0; a <= i; ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      if (phi_cache_.contains({a, b})) continue;
      RingMap value;
      if (a == 0) {
        value = RingMap::identity(base_);
      } else if (b == 0) {
        value = deriv_.compose(phi_cache_.at({a - 1, 0}));
      } else if (a == b) {
        value = rho_.compose(phi_cache_.at({a - 1, a - 1}));
      } else {
        value = rho_.compose(phi_cache_.at({a - 1, b - 1})) +
                deriv_.compose(phi_cache_.at({a - 1, b}));
      }
      phi_cache_.emplace(std::make_pair(a, b), std::move(value));
    }
  }
  return phi_cache_.at({i, j});
}

void SkewPolyRing::check(const SkewPoly& f, const char* op) const {
  for (const auto& c : f.coeffs()) {
    if (c.size() != base_.rank()) {
      throw UsageError(std::string(op) + ": polynomial coefficients do not belong to this ring");
    }
  }
}

SkewPoly SkewPolyRing::constant(const RingElement& a) const {
  return SkewPoly({base_.element(a.coords())});
}

SkewPoly SkewPolyRing::monomial(std::size_t i, const RingElement& a) const {
  std::vector<RingElement> c(i + 1, base_.zero());
  c[i] = base_.element(a.coords());
  return SkewPoly(std::move(c));
}

SkewPoly SkewPolyRing::from_coeffs(std::vector<RingElement> coeffs) const {
  for (auto& c : coeffs) c = base_.element(c.coords());
  return SkewPoly(std::move(coeffs));
}

SkewPoly SkewPolyRing::from_left_coeffs(const std::vector<RingElement>& coeffs) const {
  SkewPoly out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    out = add(out, scalar_power_expand(coeffs[i], i));
  }
  return out;
}

SkewPoly SkewPolyRing::add(const SkewPoly& f, const SkewPoly& g) const {
  check(f, "poly_add");
  check(g, "poly_add");
  const std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
  std::vector<RingElement> c(n, base_.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (const auto* a = f.coeff(i)) c[i] = base_.add(c[i], *a);
    if (const auto* b = g.coeff(i)) c[i] = base_.add(c[i], *b);
  }
  return SkewPoly(std::move(c));
}

SkewPoly SkewPolyRing::neg(const SkewPoly& f) const {
  check(f, "poly_neg");
  std::vector<RingElement> c;
  for (const auto& a : f.coeffs()) c.push_back(base_.neg(a));
  return SkewPoly(std::move(c));
}

SkewPoly SkewPolyRing::sub(const SkewPoly& f, const SkewPoly& g) const {
  return add(f, neg(g));
}

SkewPoly SkewPolyRing::mul(const SkewPoly& f, const SkewPoly& g) const {
  check(f, "poly_mul");
  check(g, "poly_mul");
  if (f.is_zero() || g.is_zero()) return SkewPoly();
  const std::size_t df = f.coeffs().size() - 1;
  const std::size_t dg = g.coeffs().size() - 1;
  std::vector<RingElement> c(df + dg + 1, base_.zero());
  // X^i a_i X^j b_j = sum_k X^{i+k} Phi_{[j,k]}(a_i) b_j
  for (std::size_t i = 0; i <= df; ++i) {
    const RingElement& a = f.coeffs()[i];
    if (a.is_zero()) continue;
    for (std::size_t j = 0; j <= dg; ++j) {
      const RingElement& b = g.coeffs()[j];
      if (b.is_zero()) continue;
      for (std::size_t k = 0; k <= j; ++k) {
        const RingElement t = phi(j, k).apply(a);
        if (t.is_zero()) continue;
        c[i + k] = base_.add(c[i + k], base_.mul(t, b));
      }
    }
  }
  return SkewPoly(std::move(c));
}

SkewPoly SkewPolyRing::mul_right(const SkewPoly& f, const RingElement& c) const {
  check(f, "poly_mul");
  std::vector<RingElement> out;
  for (const auto& a : f.coeffs()) out.push_back(base_.mul(a, c));
  return SkewPoly(std::move(out));
}

SkewPoly SkewPolyRing::scalar_power_expand(const RingElement& alpha, std::size_t i) const {
  std::vector<RingElement> c;
  for (std::size_t j = 0; j <= i; ++j) c.push_back(phi(i, j).apply(alpha));
  return SkewPoly(std::move(c));
}

bool SkewPolyRing::is_monic(const SkewPoly& f) const {
  return !f.is_zero() && f.coeffs().back() == base_.one();
}

bool SkewPolyRing::coefficients_fixed_by_rho(const SkewPoly& f) const {
  for (const auto& a : f.coeffs())
    if (!(rho_.apply(a) == a)) return false;
  return true;
}

std::pair<SkewPoly, SkewPoly> SkewPolyRing::divmod_monic(const SkewPoly& g,
                                                         const SkewPoly& f) const {
  check(g, "divmod_monic");
  check(f, "divmod_monic");
  if (!is_monic(f) || f.degree() < 1) {
    throw UsageError("divmod_monic: divisor must be monic of degree >= 1");
  }
  const std::size_t m = static_cast<std::size_t>(f.degree());
  std::vector<RingElement> q;
  SkewPoly rem = g;
  while (rem.degree() >= static_cast<int>(m)) {
    // f * X^s c has leading term X^{m+s} c because a_m = 1.
    const std::size_t s = static_cast<std::size_t>(rem.degree()) - m;
    const RingElement c = rem.coeffs().back();
    if (q.size() < s + 1) q.resize(s + 1, base_.zero());
    q[s] = base_.add(q[s], c);
    const SkewPoly step = mul(f, monomial(s, c));
    rem = sub(rem, step);
  }
  return {SkewPoly(std::move(q)), rem};
}

R0Certificate SkewPolyRing::is_r0_lemma(const SkewPoly& f) const {
  check(f, "is_r0_lemma");
  if (!is_monic(f) || f.degree() < 1) {
    throw UsageError("is_r0_lemma: f must be monic of degree >= 1");
  }
  const std::size_t m = static_cast<std::size_t>(f.degree());
  const auto& a = f.coeffs();
  const RingMap rho_m = rho_.power(static_cast<unsigned>(m));
  R0Certificate cert;

  // (1) a_j rho^m(alpha) = sum_{i=j}^m Phi_{[i,j]}(alpha) a_i
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t b = 0; b < base_.rank(); ++b) {
      const RingElement alpha = base_.basis(b);
      const RingElement lhs = base_.mul(a[j], rho_m.apply(alpha));
      RingElement rhs = base_.zero();
      for (std::size_t i = j; i <= m; ++i) {
        rhs = base_.add(rhs, base_.mul(phi(i, j).apply(alpha), a[i]));
      }
      if (!(lhs == rhs)) {
        cert.in_r0 = false;
        cert.condition = 1;
        cert.j = j;
        cert.basis_index = b;
        cert.message = "condition (1) fails at j = " + std::to_string(j) + " for alpha = " +
                       base_.names()[b] + ": " + base_.to_string(lhs) +
                       " != " + base_.to_string(rhs);
        return cert;
      }
    }
  }

  // (2) D(a_i) = a_{i-1} - rho(a_{i-1}) + a_i (rho(a_{m-1}) - a_{m-1}),
  //     D(a_0) = a_0 (rho(a_{m-1}) - a_{m-1})
  const RingElement shift = base_.sub(rho_.apply(a[m - 1]), a[m - 1]);
  for (std::size_t i = 0; i < m; ++i) {
    RingElement rhs = base_.mul(a[i], shift);
    if (i > 0) rhs = base_.add(rhs, base_.sub(a[i - 1], rho_.apply(a[i - 1])));
    const RingElement lhs = deriv_.apply(a[i]);
    if (!(lhs == rhs)) {
      cert.in_r0 = false;
      cert.condition = 2;
      cert.i = i;
      cert.message = "condition (2) fails at i = " + std::to_string(i) + ": D(a_" +
                     std::to_string(i) + ") = " + base_.to_string(lhs) +
                     " but the required value is " + base_.to_string(rhs);
      return cert;
    }
  }
  return cert;
}

bool SkewPolyRing::is_r0_direct(const SkewPoly& f) const {
  check(f, "is_r0_direct");
  if (!is_monic(f) || f.degree() < 1) {
    throw UsageError("is_r0_direct: f must be monic of degree >= 1");
  }
  const std::size_t m = static_cast<std::size_t>(f.degree());
  const RingMap rho_m = rho_.power(static_cast<unsigned>(m));
  for (std::size_t b = 0; b < base_.rank(); ++b) {
    const RingElement alpha = base_.basis(b);
    if (!(mul(constant(alpha), f) == mul_right(f, rho_m.apply(alpha)))) return false;
  }
  const RingElement& top = f.coeffs()[m - 1];
  const SkewPoly shifted = sub(x(), constant(base_.sub(rho_.apply(top), top)));
  return mul(x(), f) == mul(f, shifted);
}

bool SkewPolyRing::check_cor01(const SkewPoly& f) const {
  const R0Certificate cert = is_r0_lemma(f);
  if (!cert.in_r0) throw UsageError("check_cor01: f is not in R0 (" + cert.message + ")");
  if (!coefficients_fixed_by_rho(f)) {
    throw UsageError("check_cor01: coefficients of f are not fixed by rho");
  }
  const Submodule fixed = fixed_subring(
      base_, {{rho_, FixMode::kFixedPoints}, {deriv_, FixMode::kKernel}});
  const Submodule center = centralizer_in_b(base_, fixed);
  for (const auto& a : f.coeffs())
    if (!sub_member(center, a.coords())) return false;
  return true;
}

std::vector<SkewPoly> SkewPolyRing::y_polys(const SkewPoly& f) const {
  check(f, "y_polys");
  if (!is_monic(f) || f.degree() < 1) throw UsageError("y_polys: f must be monic of degree >= 1");
  const std::size_t m = static_cast<std::size_t>(f.degree());
  std::vector<SkewPoly> ys;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<RingElement> c;
    for (std::size_t k = j; k < m; ++k) c.push_back(f.coeffs()[k + 1]);
    ys.emplace_back(std::move(c));
  }
  return ys;
}

bool SkewPolyRing::in_r1(const SkewPoly& g) const {
  check(g, "in_r1");
  for (std::size_t b = 0; b < base_.rank(); ++b) {
    const RingElement alpha = base_.basis(b);
    if (!(mul(constant(alpha), g) == mul_right(g, rho_.apply(alpha)))) return false;
  }
  return true;
}

std::vector<SkewPoly> SkewPolyRing::g_sequence(const SkewPoly& g1, std::size_t count) const {
  if (!in_r1(g1)) throw UsageError("g_sequence: g1 is not in R1");
  std::vector<SkewPoly> g{SkewPoly()};
  if (count == 0) return g;
  g.push_back(g1);
  const SkewPoly X = x();
  for (std::size_t j = 1; j < count; ++j) {
    g.push_back(add(mul(g[j], X), mul(monomial(j, base_.one()), g1)));
  }
  return g;
}

std::string SkewPolyRing::to_string(const SkewPoly& f) const {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    const RingElement& a = f.coeffs()[i];
    if (a.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const std::string c = base_.to_string(a);
    if (i == 0) {
      os << c;
      continue;
    }
    os << (i == 1 ? std::string("X") : "X^" + std::to_string(i));
    if (!(a == base_.one())) os << "*(" << c << ')';
  }
  return os.str();
}

}  // namespace skewsep
