#include "skewsep/separability.hpp"

#include "skewsep/errors.hpp"

namespace skewsep {

Vec flatten(const Matrix& m) { return m.entries(); }

Matrix unflatten(const Vec& v, std::size_t n, const CoeffRing& coeff) {
  if (v.size() != n * n) throw UsageError("unflatten: length is not n*n");
  Matrix m(n, n, coeff);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) m.set(p, q, v[p * n + q]);
  return m;
}

SeparabilityResult is_separable(const QuotientRing& a) {
  const int m = static_cast<int>(a.degree());
  const Submodule domain = a.twisted_centralizer(1 - m);
  SeparabilityResult out;
  auto sol = solve_within(a.tau_matrix(), domain, a.one().flat());
  if (!sol) return out;
  AElement u = a.from_flat(*sol);
  if (!sub_member(domain, u.flat()) || !(a.tau(u) == a.one())) {
    throw InternalError("is_separable: witness fails direct re-evaluation of tau(u) = 1");
  }
  out.separable = true;
  out.witness = std::move(u);
  return out;
}

WeakSeparability is_weakly_separable(const QuotientRing& a) {
  WeakSeparability out;
  out.s1 = sub_intersect(a.twisted_centralizer(1), a.tau_kernel());
  out.s2 = a.inner_x_image(a.centralizer_of_b());
  if (!sub_contains(out.s1, out.s2)) {
    throw InternalError("I_x(V) is not contained in A_1 ∩ Ker(tau)");
  }
  out.weakly_separable = sub_equal(out.s1, out.s2);
  return out;
}

namespace {

// C(A) from commutation with every k-basis element of A, independent of the
// V ∩ Ker(I_x) route.
Submodule center_by_commutation(const QuotientRing& a) {
  std::vector<Matrix> blocks;
  for (std::size_t q = 0; q < a.flat_dim(); ++q) {
    const AElement e = a.basis_element(q);
    blocks.push_back(a.right_mul_matrix(e) - a.left_mul_matrix(e));
  }
  return kernel(vstack(blocks));
}

}  // namespace

ExactnessReport exactness_report(const QuotientRing& a) {
  const Submodule v = a.centralizer_of_b();
  const Submodule a1 = a.twisted_centralizer(1);
  ExactnessReport out;
  out.exact_at_a1 =
      sub_equal(kernel_within(a.tau_matrix(), a1), image_of(a.inner_x_matrix(), v));
  out.ker_ix_is_center =
      sub_equal(kernel_within(a.inner_x_matrix(), v), center_by_commutation(a));
  return out;
}

DTypeReport d_type_checks(const QuotientRing& a) {
  if (!a.ring().is_derivation_type()) {
    throw UsageError("d_type_checks: rho is not the identity");
  }
  const Submodule v = a.centralizer_of_b();
  DTypeReport out;
  out.center = a.center();
  out.tau_image = image_of(a.tau_matrix(), v);
  out.weakly_separable =
      sub_equal(kernel_within(a.tau_matrix(), v), image_of(a.inner_x_matrix(), v));
  out.tau_v_in_center = sub_contains(out.center, out.tau_image);
  out.separable = out.weakly_separable && sub_equal(out.tau_image, out.center);
  out.agrees_with_general = out.weakly_separable == is_weakly_separable(a).weakly_separable &&
                            out.separable == is_separable(a).separable;
  return out;
}

Verdict decide(const QuotientRing& a) {
  Verdict out;
  auto sep = is_separable(a);
  out.separable = sep.separable;
  out.witness = std::move(sep.witness);
  auto ws = is_weakly_separable(a);
  out.weakly_separable = ws.weakly_separable;
  out.s1 = std::move(ws.s1);
  out.s2 = std::move(ws.s2);
  out.exactness = exactness_report(a);
  if (out.separable && !out.weakly_separable) {
    throw InternalError("separable but not weakly separable");
  }
  if (out.exactness.exact_at_a1 != out.weakly_separable) {
    throw InternalError("exactness at A_1 disagrees with the weak separability verdict");
  }
  if (!out.exactness.ker_ix_is_center) {
    throw InternalError("Ker(I_x|V) differs from C(A)");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Derivations

Matrix inner_derivation_matrix(const QuotientRing& a, const AElement& v) {
  return a.left_mul_matrix(v) - a.right_mul_matrix(v);
}

std::vector<Matrix> DerivationModule::basis(const QuotientRing& a) const {
  std::vector<Matrix> out;
  for (const auto& g : derivations.generators()) {
    out.push_back(unflatten(g, a.flat_dim(), a.coeff()));
  }
  return out;
}

DerivationModule derivation_module(const QuotientRing& a) {
  const std::size_t n = a.flat_dim();
  const std::size_t r = a.base().rank();
  const std::size_t unknowns = n * n;
  auto var = [n](std::size_t p, std::size_t q) { return p * n + q; };

  std::vector<Matrix> left, right;
  for (std::size_t q = 0; q < n; ++q) {
    const AElement e = a.basis_element(q);
    left.push_back(a.left_mul_matrix(e));
    right.push_back(a.right_mul_matrix(e));
  }

  std::vector<Vec> eqs;
  // delta(e_b) = 0 for the basis of B, i.e. column b of delta vanishes.
  for (std::size_t b = 0; b < r; ++b) {
    for (std::size_t p = 0; p < n; ++p) eqs.push_back(unit_vec(unknowns, var(p, b)));
  }
  // delta(z_i z_j) - delta(z_i) z_j - z_i delta(z_j) = 0, coordinate p.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec w = left[i].column(j);  // z_i z_j
      for (std::size_t p = 0; p < n; ++p) {
        Vec row(unknowns, Int(0));
        for (std::size_t q = 0; q < n; ++q) row[var(p, q)] += w[q];
        for (std::size_t s = 0; s < n; ++s) {
          row[var(s, i)] -= right[j](p, s);
          row[var(s, j)] -= left[i](p, s);
        }
        if (!is_zero_vec(row)) eqs.push_back(std::move(row));
      }
    }
  }

  DerivationModule out;
  out.derivations = kernel(Matrix::from_rows(eqs, unknowns, a.coeff()));
  std::vector<Vec> inner;
  for (const auto& v : a.centralizer_of_b().generators()) {
    inner.push_back(flatten(inner_derivation_matrix(a, a.from_flat(v))));
  }
  out.inner = hnf(unknowns, inner, a.coeff());
  return out;
}

OracleResult oracle_weakly_separable(const QuotientRing& a) {
  OracleResult out;
  out.module = derivation_module(a);
  out.weakly_separable = sub_equal(out.module.derivations, out.module.inner);
  const Vec x = a.x().flat();
  std::vector<Vec> images;
  for (const auto& delta : out.module.basis(a)) images.push_back(delta.apply(x));
  out.delta_x_image = hnf(a.flat_dim(), images, a.coeff());
  const Submodule s1 = sub_intersect(a.twisted_centralizer(1), a.tau_kernel());
  out.delta_x_matches = sub_equal(out.delta_x_image, s1);
  return out;
}

bool is_b_derivation(const QuotientRing& a, const Matrix& delta) {
  const std::size_t n = a.flat_dim();
  if (delta.rows() != n || delta.cols() != n) return false;
  for (std::size_t b = 0; b < a.base().rank(); ++b) {
    if (!is_zero_vec(delta.apply(a.embed(a.base().basis(b)).flat()))) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const AElement zi = a.basis_element(i);
    const AElement di = a.from_flat(delta.column(i));
    for (std::size_t j = 0; j < n; ++j) {
      const AElement zj = a.basis_element(j);
      const AElement dj = a.from_flat(delta.column(j));
      const AElement lhs = a.from_flat(delta.apply(a.mul(zi, zj).flat()));
      const AElement rhs = a.add(a.mul(di, zj), a.mul(zi, dj));
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

Matrix build_derivation_from_seed(const QuotientRing& a, const AElement& u) {
  const Submodule a1 = a.twisted_centralizer(1);
  if (!sub_member(a1, u.flat()) || !a.tau(u).is_zero()) {
    throw UsageError("build_derivation_from_seed: seed is not in A_1 ∩ Ker(tau)");
  }
  const SkewPolyRing& ring = a.ring();
  const std::size_t m = a.degree();
  const SkewPoly u0 = a.lift(u);
  std::vector<SkewPoly> g;
  try {
    g = ring.g_sequence(u0, m);
  } catch (const UsageError&) {
    throw InternalError("lift of a seed in A_1 is not in R_1");
  }
  // Delta(f) = sum_k g_k a_k must lie in fR.
  SkewPoly delta_f;
  const auto& coeffs = a.f().coeffs();
  for (std::size_t k = 1; k <= m; ++k) delta_f = ring.add(delta_f, ring.mul_right(g[k], coeffs[k]));
  if (!ring.divmod_monic(delta_f, a.f()).second.is_zero()) {
    throw InternalError("Delta(f) is not in fR for a seed in A_1 ∩ Ker(tau)");
  }
  // delta(x^i e_b) = g_i e_b + fR
  const std::size_t r = a.base().rank();
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t b = 0; b < r; ++b) {
      cols.push_back(a.from_poly(ring.mul_right(g[i], a.base().basis(b))).flat());
    }
  }
  return Matrix::from_columns(cols, a.flat_dim(), a.coeff());
}

}  // namespace skewsep
