#include "skewsep/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "skewsep/errors.hpp"
#include "skewsep/quotient_ring.hpp"
#include "skewsep/separability.hpp"

namespace skewsep {

std::vector<SkewPoly> monic_polynomials(const SkewPolyRing& ring, std::size_t degree) {
  const std::vector<RingElement> elems = ring.base().enumerate();
  std::vector<SkewPoly> out;
  std::vector<std::size_t> idx(degree, 0);
  for (;;) {
    std::vector<RingElement> c;
    for (std::size_t i = 0; i < degree; ++i) c.push_back(elems[idx[i]]);
    c.push_back(ring.base().one());
    out.emplace_back(std::move(c));
    // a_0 varies slowest
    std::size_t i = degree;
    while (i > 0) {
      --i;
      if (++idx[i] < elems.size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (degree == 0) return out;
  }
}

Classification classify(const std::shared_ptr<const SkewPolyRing>& ring, SkewPoly f,
                        bool run_oracle) {
  Classification c;
  c.f = std::move(f);
  c.in_r0 = ring->is_r0_lemma(c.f).in_r0;
  c.coefficients_fixed = ring->coefficients_fixed_by_rho(c.f);
  if (!c.in_scope()) return c;
  try {
    const auto a = QuotientRing::build(ring, c.f);
    const Verdict v = decide(*a);
    c.separable = v.separable;
    c.weakly_separable = v.weakly_separable;
    if (run_oracle) {
      const OracleResult o = oracle_weakly_separable(*a);
      c.oracle_run = true;
      c.oracle_weakly_separable = o.weakly_separable;
      c.delta_x_matches = o.delta_x_matches;
    }
  } catch (const InternalError& e) {
    c.internal_error = e.what();
  }
  return c;
}

std::vector<Classification> sweep(const std::shared_ptr<const SkewPolyRing>& ring,
                                  const SweepOptions& options) {
  if (!ring->base().coeff().is_finite()) {
    throw UsageError("sweep: the coefficient ring must be finite");
  }
  if (options.min_degree < 1 || options.min_degree > options.max_degree) {
    throw UsageError("sweep: need 1 <= min_degree <= max_degree");
  }
  std::vector<SkewPoly> polys;
  for (std::size_t d = options.min_degree; d <= options.max_degree; ++d) {
    auto batch = monic_polynomials(*ring, d);
    polys.insert(polys.end(), std::make_move_iterator(batch.begin()),
                 std::make_move_iterator(batch.end()));
  }
  std::vector<Classification> out(polys.size());
  unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(polys.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < polys.size(); i = next++) {
      out[i] = classify(ring, polys[i], options.run_oracle);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  return out;
}

}  // namespace skewsep
