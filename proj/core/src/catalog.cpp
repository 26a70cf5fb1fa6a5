#include "skewsep/catalog.hpp"

#include "skewsep/errors.hpp"

namespace skewsep::catalog {

namespace {

struct Table {
  std::size_t rank;
  Vec c;
  explicit Table(std::size_t r) : rank(r), c(r * r * r, Int(0)) {}
  void set(std::size_t i, std::size_t j, std::size_t k) { c[(i * rank + j) * rank + k] = 1; }
};

}  // namespace

BaseRing scalar_ring(const CoeffRing& coeff) {
  return BaseRing(coeff, 1, Vec{Int(1)}, Vec{Int(1)}, {"1"});
}

BaseRing product_ring(const CoeffRing& coeff, std::size_t copies) {
  Table t(copies);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < copies; ++i) {
    t.set(i, i, i);
    names.push_back("p" + std::to_string(i));
  }
  return BaseRing(coeff, copies, t.c, Vec(copies, Int(1)), names);
}

BaseRing upper_triangular(const CoeffRing& coeff) {
  // 0 = e11, 1 = e12, 2 = e22
  Table t(3);
  t.set(0, 0, 0);
  t.set(0, 1, 1);
  t.set(1, 2, 1);
  t.set(2, 2, 2);
  return BaseRing(coeff, 3, t.c, Vec{Int(1), Int(0), Int(1)}, {"e11", "e12", "e22"});
}

BaseRing matrix_ring(const CoeffRing& coeff) {
  // e_{ab} with index 2a+b for a, b in {0, 1}
  Table t(4);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t d = 0; d < 2; ++d) t.set(2 * a + b, 2 * b + d, 2 * a + d);
  return BaseRing(coeff, 4, t.c, Vec{Int(1), Int(0), Int(0), Int(1)},
                  {"e11", "e12", "e21", "e22"});
}

BaseRing cyclic_group_algebra(const CoeffRing& coeff, std::size_t order) {
  Table t(order);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < order; ++i) {
    names.push_back("g" + std::to_string(i));
    for (std::size_t j = 0; j < order; ++j) t.set(i, j, (i + j) % order);
  }
  return BaseRing(coeff, order, t.c, unit_vec(order, 0), names);
}

RingMap upper_triangular_corner_derivation(const BaseRing& ring) {
  if (ring.rank() != 3) throw UsageError("corner derivation needs the rank-3 triangular ring");
  Matrix m(3, 3, ring.coeff());
  m.set(1, 1, Int(1));
  return RingMap(m);
}

RingMap inner_twisted_derivation(const BaseRing& ring, const RingMap& rho,
                                 const RingElement& c) {
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    const RingElement e = ring.basis(i);
    cols.push_back(ring.sub(ring.mul(e, c), ring.mul(c, rho.apply(e))).coords());
  }
  return RingMap(Matrix::from_columns(cols, ring.rank(), ring.coeff()));
}

RingMap conjugation(const BaseRing& ring, const RingElement& u, const RingElement& u_inv) {
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    cols.push_back(ring.mul(ring.mul(u, ring.basis(i)), u_inv).coords());
  }
  return RingMap(Matrix::from_columns(cols, ring.rank(), ring.coeff()));
}

RingMap permutation(const BaseRing& ring, const std::vector<std::size_t>& perm) {
  if (perm.size() != ring.rank()) throw UsageError("permutation: wrong length");
  Matrix m(ring.rank(), ring.rank(), ring.coeff());
  for (std::size_t i = 0; i < perm.size(); ++i) m.set(perm[i], i, Int(1));
  return RingMap(m);
}

}  // namespace skewsep::catalog
