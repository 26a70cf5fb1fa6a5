#include "classical.hpp"

namespace skewsep::testing {
namespace {

long mod(long v, long p) { return ((v % p) + p) % p; }

long inverse(long a, long p) {
  for (long t = 1; t < p; ++t)
    if (mod(a * t, p) == 1) return t;
  return 0;
}

void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

}  // namespace

PrimePoly derivative(const PrimePoly& f, long p) {
  PrimePoly out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(mod(static_cast<long>(i) * f[i], p));
  trim(out);
  return out;
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, long p) {
  for (auto& c : a) c = mod(c, p);
  for (auto& c : b) c = mod(c, p);
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    const long lead_inv = inverse(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
      const long q = mod(a.back() * lead_inv, p);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = mod(a[shift + i] - q * b[i], p);
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const long inv = inverse(a.back(), p);
    for (auto& c : a) c = mod(c * inv, p);
  }
  return a;
}

bool classically_separable(const PrimePoly& f, long p) {
  return poly_gcd(f, derivative(f, p), p).size() == 1;
}

}  // namespace skewsep::testing
