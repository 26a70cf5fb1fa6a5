#include "invariants.hpp"

#include "skewsep/separability.hpp"

namespace skewsep::testing {

std::vector<std::string> audit_power_expansion(const SkewPolyRing& ring, std::size_t max_degree) {
  std::vector<std::string> failures;
  const BaseRing& b = ring.base();
  for (std::size_t e = 0; e < b.rank(); ++e) {
    const RingElement alpha = b.basis(e);
    SkewPoly repeated = ring.constant(alpha);
    for (std::size_t i = 0; i <= max_degree; ++i) {
      if (i > 0) repeated = ring.mul(repeated, ring.x());
      const SkewPoly expanded = ring.scalar_power_expand(alpha, i);
      if (!(expanded == repeated)) {
        failures.push_back("alpha X^" + std::to_string(i) + " for alpha = " + b.names()[e] +
                           ": expansion " + ring.to_string(expanded) + " vs product " +
                           ring.to_string(repeated));
      }
      for (std::size_t j = 0; j <= i; ++j) {
        const RingElement expected = ring.phi(i, j).apply(alpha);
        const RingElement* got = repeated.coeff(j);
        const bool ok = got ? *got == expected : expected.is_zero();
        if (!ok) {
          failures.push_back("coefficient " + std::to_string(j) + " of alpha X^" +
                             std::to_string(i) + " differs from Phi for alpha = " + b.names()[e]);
        }
      }
    }
  }
  return failures;
}

std::vector<std::string> audit_r0_agreement(const SkewPolyRing& ring, const SkewPoly& f) {
  const bool lemma = ring.is_r0_lemma(f).in_r0;
  const bool direct = ring.is_r0_direct(f);
  if (lemma == direct) return {};
  return {"R0 tests disagree on " + ring.to_string(f) + ": lemma " + (lemma ? "true" : "false") +
          ", direct " + (direct ? "true" : "false")};
}

std::vector<std::string> audit_quotient(const QuotientRing& a) {
  std::vector<std::string> failures;
  auto fail = [&](std::string what) { failures.push_back(std::move(what)); };
  const SkewPolyRing& ring = a.ring();
  const std::size_t m = a.degree();
  const int mi = static_cast<int>(m);
  const auto& coeffs = a.f().coeffs();
  const auto& y = a.y();
  const AElement x = a.x();

  // x y_j = y_{j-1} - a_j, x y_0 = -a_0
  for (std::size_t j = 0; j < m; ++j) {
    const AElement lhs = a.mul(x, y[j]);
    const AElement rhs = j == 0 ? a.neg(a.embed(coeffs[0]))
                                : a.sub(y[j - 1], a.embed(coeffs[j]));
    if (!(lhs == rhs)) fail("x y_" + std::to_string(j) + " recursion fails");
  }

  // a_i x = x a_i, y_i x = x y_i
  for (std::size_t i = 0; i < m; ++i) {
    const AElement ai = a.embed(coeffs[i]);
    if (!(a.mul(ai, x) == a.mul(x, ai))) fail("a_" + std::to_string(i) + " does not commute with x");
    if (!(a.mul(y[i], x) == a.mul(x, y[i]))) fail("y_" + std::to_string(i) + " does not commute with x");
  }

  const Submodule ker_tau = a.tau_kernel();
  for (int k = -mi; k <= mi; ++k) {
    const Submodule ak = a.twisted_centralizer(k);
    for (const auto& g : ak.generators()) {
      const AElement u = a.from_flat(g);
      for (std::size_t i = 0; i < m; ++i) {
        const AElement ai = a.embed(coeffs[i]);
        if (!(a.mul(ai, u) == a.mul(u, ai))) {
          fail("a_" + std::to_string(i) + " does not commute with a generator of A_" + std::to_string(k));
        }
      }
      if (!sub_member(ker_tau, a.inner_x(u).flat())) {
        fail("tau(I_x(u)) != 0 for a generator u of A_" + std::to_string(k));
      }
    }
  }

  const Submodule v = a.centralizer_of_b();
  const Submodule a1 = a.twisted_centralizer(1);
  const Submodule ixv = a.inner_x_image(v);
  if (!sub_contains(sub_intersect(ker_tau, a1), ixv)) fail("I_x(V) not inside Ker(tau) ∩ A_1");

  if (!exactness_report(a).ker_ix_is_center) fail("Ker(I_x|V) != C(A)");
  if (!ring.check_cor01(a.f())) fail("coefficients of f not in C(B^{rho,D})");

  if (ring.is_derivation_type()) {
    const DTypeReport d = d_type_checks(a);
    if (!d.tau_v_in_center) fail("tau(V) not inside C(A)");
    if (!d.agrees_with_general) fail("derivation-type verdicts disagree with the general ones");
  }

  const OracleResult o = oracle_weakly_separable(a);
  if (!o.delta_x_matches) fail("{delta(x)} != A_1 ∩ Ker(tau)");
  return failures;
}

std::vector<std::string> audit_seeded_derivations(const QuotientRing& a) {
  std::vector<std::string> failures;
  auto fail = [&](std::string what) { failures.push_back(std::move(what)); };
  const WeakSeparability ws = is_weakly_separable(a);
  const DerivationModule dm = derivation_module(a);
  const Submodule v = a.centralizer_of_b();
  const AElement x = a.x();

  std::vector<Vec> seeds = ws.s1.generators();
  for (const auto& g : ws.s2.generators()) seeds.push_back(g);
  for (const auto& seed : seeds) {
    const AElement u = a.from_flat(seed);
    const Matrix delta = build_derivation_from_seed(a, u);
    const std::string tag = " for seed " + a.to_string(u);
    if (!is_b_derivation(a, delta)) fail("seeded map is not a B-derivation" + tag);
    if (!(delta.apply(x.flat()) == u.flat())) fail("delta(x) != u" + tag);
    if (!sub_member(dm.derivations, flatten(delta))) fail("seeded derivation outside Der_B(A)" + tag);

    // delta(x^{k+1}) = sum_{j=0}^{k} x^{k-j} delta(x) x^j
    AElement xk = a.one();  // x^k
    for (std::size_t k = 0; k < 2 * a.degree(); ++k) {
      AElement sum = a.zero();
      std::vector<AElement> powers{a.one()};
      for (std::size_t j = 1; j <= k; ++j) powers.push_back(a.mul(powers.back(), x));
      for (std::size_t j = 0; j <= k; ++j) {
        sum = a.add(sum, a.mul(a.mul(powers[k - j], u), powers[j]));
      }
      const AElement xk1 = a.mul(xk, x);
      if (!(a.from_flat(delta.apply(xk1.flat())) == sum)) {
        fail("power rule fails at k = " + std::to_string(k) + tag);
      }
      xk = xk1;
    }

    if (sub_member(ws.s2, seed)) {
      auto pre = solve_within(a.inner_x_matrix(), v, seed);
      if (!pre) {
        fail("no v in V with I_x(v) = u although u is in I_x(V)" + tag);
      } else if (!(inner_derivation_matrix(a, a.from_flat(*pre)) == delta)) {
        fail("seeded derivation differs from the inner derivation" + tag);
      }
    }
  }
  return failures;
}

}  // namespace skewsep::testing
