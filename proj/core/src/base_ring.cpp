#include "skewsep/base_ring.hpp"

#include <sstream>

#include "skewsep/errors.hpp"

namespace skewsep {

BaseRing::BaseRing(CoeffRing coeff, std::size_t rank, Vec structure, Vec unit,
                   std::vector<std::string> names)
    : coeff_(std::move(coeff)), rank_(rank), structure_(std::move(structure)),
      names_(std::move(names)) {
  if (rank_ == 0) throw UsageError("BaseRing: rank must be at least 1");
  if (structure_.size() != rank_ * rank_ * rank_) {
    throw UsageError("BaseRing: expected " + std::to_string(rank_ * rank_ * rank_) +
                     " structure constants, got " + std::to_string(structure_.size()));
  }
  if (unit.size() != rank_) {
    throw UsageError("BaseRing: unit has " + std::to_string(unit.size()) +
                     " coordinates, expected " + std::to_string(rank_));
  }
  if (names_.empty()) {
    for (std::size_t i = 0; i < rank_; ++i) names_.push_back("e" + std::to_string(i));
  } else if (names_.size() != rank_) {
    throw UsageError("BaseRing: " + std::to_string(names_.size()) +
                     " basis names for rank " + std::to_string(rank_));
  }
  coeff_.reduce_in_place(structure_);
  coeff_.reduce_in_place(unit);
  unit_ = RingElement(std::move(unit));
}

void BaseRing::check(const RingElement& a, const char* op) const {
  if (a.size() != rank_) {
    throw UsageError(std::string(op) + ": element with " + std::to_string(a.size()) +
                     " coordinates in a ring of rank " + std::to_string(rank_));
  }
}

RingElement BaseRing::element(Vec coords) const {
  if (coords.size() != rank_) {
    throw UsageError("BaseRing::element: " + std::to_string(coords.size()) +
                     " coordinates for rank " + std::to_string(rank_));
  }
  coeff_.reduce_in_place(coords);
  return RingElement(std::move(coords));
}

RingElement BaseRing::zero() const { return RingElement(zero_vec(rank_)); }

RingElement BaseRing::basis(std::size_t i) const {
  if (i >= rank_) throw UsageError("BaseRing::basis: index out of range");
  return RingElement(unit_vec(rank_, i));
}

RingElement BaseRing::scalar(const Int& c) const { return scale(unit_, c); }

RingElement BaseRing::add(const RingElement& a, const RingElement& b) const {
  check(a, "ring add");
  check(b, "ring add");
  Vec v(rank_);
  for (std::size_t i = 0; i < rank_; ++i) v[i] = a[i] + b[i];
  coeff_.reduce_in_place(v);
  return RingElement(std::move(v));
}

RingElement BaseRing::sub(const RingElement& a, const RingElement& b) const {
  check(a, "ring sub");
  check(b, "ring sub");
  Vec v(rank_);
  for (std::size_t i = 0; i < rank_; ++i) v[i] = a[i] - b[i];
  coeff_.reduce_in_place(v);
  return RingElement(std::move(v));
}

RingElement BaseRing::neg(const RingElement& a) const { return sub(zero(), a); }

RingElement BaseRing::scale(const RingElement& a, const Int& c) const {
  check(a, "ring scale");
  Vec v(rank_);
  for (std::size_t i = 0; i < rank_; ++i) v[i] = a[i] * c;
  coeff_.reduce_in_place(v);
  return RingElement(std::move(v));
}

RingElement BaseRing::mul(const RingElement& a, const RingElement& b) const {
  check(a, "ring_mul");
  check(b, "ring_mul");
  Vec v(rank_, Int(0));
  for (std::size_t i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j) {
      if (b[j] == 0) continue;
      const Int ab = a[i] * b[j];
      const Int* c = &structure_[(i * rank_ + j) * rank_];
      for (std::size_t k = 0; k < rank_; ++k) {
        if (c[k] != 0) v[k] += ab * c[k];
      }
    }
  }
  coeff_.reduce_in_place(v);
  return RingElement(std::move(v));
}

Matrix BaseRing::left_mul_matrix(const RingElement& a) const {
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < rank_; ++i) cols.push_back(mul(a, basis(i)).coords());
  return Matrix::from_columns(cols, rank_, coeff_);
}

Matrix BaseRing::right_mul_matrix(const RingElement& a) const {
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < rank_; ++i) cols.push_back(mul(basis(i), a).coords());
  return Matrix::from_columns(cols, rank_, coeff_);
}

std::string BaseRing::to_string(const RingElement& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (a[i] != 1) os << a[i].get_str() << '*';
    os << names_[i];
  }
  if (first) os << '0';
  return os.str();
}

std::vector<RingElement> BaseRing::enumerate() const {
  if (!coeff_.is_finite()) throw UsageError("BaseRing::enumerate: k is infinite");
  const Int& n = coeff_.modulus();
  std::vector<RingElement> out;
  Vec digits(rank_, Int(0));
  for (;;) {
    out.emplace_back(digits);
    std::size_t i = 0;
    while (i < rank_) {
      if (++digits[i] < n) break;
      digits[i] = 0;
      ++i;
    }
    if (i == rank_) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// RingMap

RingMap::RingMap(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw UsageError("RingMap: matrix must be square");
  }
}

RingMap RingMap::identity(const BaseRing& ring) {
  return RingMap(Matrix::identity(ring.rank(), ring.coeff()));
}

RingMap RingMap::zero(const BaseRing& ring) {
  return RingMap(Matrix(ring.rank(), ring.rank(), ring.coeff()));
}

RingElement RingMap::apply(const RingElement& a) const {
  if (a.size() != rank()) {
    throw UsageError("RingMap::apply: element of the wrong rank");
  }
  return RingElement(matrix_.apply(a.coords()));
}

RingMap RingMap::compose(const RingMap& other) const {
  return RingMap(matrix_ * other.matrix_);
}

RingMap RingMap::power(unsigned k) const {
  RingMap result(Matrix::identity(rank(), matrix_.coeff()));
  for (unsigned i = 0; i < k; ++i) result = compose(result);
  return result;
}

RingMap RingMap::inverse() const {
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < rank(); ++i) {
    auto sol = solve(matrix_, unit_vec(rank(), i));
    if (!sol) throw UsageError("RingMap::inverse: matrix is not invertible");
    cols.push_back(sol->particular);
  }
  return RingMap(Matrix::from_columns(cols, rank(), matrix_.coeff()));
}

bool RingMap::is_identity() const {
  return matrix_ == Matrix::identity(rank(), matrix_.coeff());
}

// ---------------------------------------------------------------------------
// Validation

std::vector<std::string> validate_ring(const BaseRing& ring) {
  std::vector<std::string> violations;
  const auto& names = ring.names();
  const std::size_t r = ring.rank();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const RingElement ij = ring.mul(ring.basis(i), ring.basis(j));
      for (std::size_t k = 0; k < r; ++k) {
        const RingElement left = ring.mul(ij, ring.basis(k));
        const RingElement right = ring.mul(ring.basis(i), ring.mul(ring.basis(j), ring.basis(k)));
        if (!(left == right)) {
          violations.push_back("associativity fails on (" + names[i] + ", " + names[j] +
                               ", " + names[k] + "): " + ring.to_string(left) +
                               " != " + ring.to_string(right));
        }
      }
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    const RingElement e = ring.basis(i);
    if (!(ring.mul(ring.one(), e) == e)) {
      violations.push_back("unit is not a left identity on " + names[i]);
    }
    if (!(ring.mul(e, ring.one()) == e)) {
      violations.push_back("unit is not a right identity on " + names[i]);
    }
  }
  return violations;
}

std::vector<std::string> validate_automorphism(const BaseRing& ring, const RingMap& rho) {
  std::vector<std::string> violations;
  if (rho.rank() != ring.rank() || !(rho.matrix().coeff() == ring.coeff())) {
    violations.push_back("automorphism has the wrong shape for this ring");
    return violations;
  }
  const auto& names = ring.names();
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    for (std::size_t j = 0; j < ring.rank(); ++j) {
      const RingElement lhs = ring.mul(rho.apply(ring.basis(i)), rho.apply(ring.basis(j)));
      const RingElement rhs = rho.apply(ring.mul(ring.basis(i), ring.basis(j)));
      if (!(lhs == rhs)) {
        violations.push_back("not multiplicative on (" + names[i] + ", " + names[j] + ")");
      }
    }
  }
  if (!(rho.apply(ring.one()) == ring.one())) violations.push_back("does not fix 1");
  if (!ring.coeff().is_unit(determinant(rho.matrix()))) {
    violations.push_back("not invertible");
  }
  return violations;
}

std::vector<std::string> validate_derivation(const BaseRing& ring, const RingMap& deriv,
                                             const RingMap& rho) {
  std::vector<std::string> violations;
  if (deriv.rank() != ring.rank() || !(deriv.matrix().coeff() == ring.coeff())) {
    violations.push_back("derivation has the wrong shape for this ring");
    return violations;
  }
  const auto& names = ring.names();
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    const RingElement a = ring.basis(i);
    for (std::size_t j = 0; j < ring.rank(); ++j) {
      const RingElement b = ring.basis(j);
      const RingElement lhs = deriv.apply(ring.mul(a, b));
      const RingElement rhs = ring.add(ring.mul(deriv.apply(a), rho.apply(b)),
                                       ring.mul(a, deriv.apply(b)));
      if (!(lhs == rhs)) {
        violations.push_back("twisted Leibniz rule fails on (" + names[i] + ", " + names[j] +
                             ")");
      }
    }
  }
  if (!deriv.apply(ring.one()).is_zero()) violations.push_back("D(1) != 0");
  return violations;
}

Submodule fixed_subring(const BaseRing& ring, const std::vector<MapCondition>& conditions) {
  if (conditions.empty()) return Submodule::full(ring.rank(), ring.coeff());
  std::vector<Matrix> blocks;
  const Matrix id = Matrix::identity(ring.rank(), ring.coeff());
  for (const auto& c : conditions) {
    blocks.push_back(c.mode == FixMode::kFixedPoints ? c.map.matrix() - id : c.map.matrix());
  }
  return kernel(vstack(blocks));
}

Submodule centralizer_in_b(const BaseRing& ring, const Submodule& s) {
  if (s.ambient_dim() != ring.rank() || !(s.coeff() == ring.coeff())) {
    throw UsageError("centralizer_in_b: submodule does not live in B");
  }
  const auto gens = s.generators();
  if (gens.empty()) return s;
  // Commutator with each generator, evaluated on the generators of S.
  std::vector<Matrix> blocks;
  for (const auto& t : gens) {
    const RingElement te(t);
    blocks.push_back(ring.right_mul_matrix(te) - ring.left_mul_matrix(te));
  }
  return kernel_within(vstack(blocks), s);
}

}  // namespace skewsep
