#pragma once

// The base ring B: a free k-module of rank r with multiplication given by
// structure constants, plus k-linear endomorphisms of B (automorphisms,
// twisted derivations and everything composed from them).

#include <cstddef>
#include <string>
#include <vector>

#include "skewsep/linalg.hpp"

namespace skewsep {

/// Coordinates of an element of B in the basis e_0..e_{r-1}.
class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(Vec coords) : coords_(std::move(coords)) {}

  const Vec& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  const Int& operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const { return is_zero_vec(coords_); }

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  Vec coords_;
};

class RingMap;

class BaseRing {
 public:
  /// `structure[(i*r + j)*r + k]` is the coefficient of e_k in e_i*e_j.
  /// Only shapes are checked here; see validate_ring for the ring axioms.
  BaseRing(CoeffRing coeff, std::size_t rank, Vec structure, Vec unit,
           std::vector<std::string> names = {});

  const CoeffRing& coeff() const noexcept { return coeff_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const Int& structure(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_[(i * rank_ + j) * rank_ + k];
  }

  RingElement element(Vec coords) const;
  RingElement zero() const;
  RingElement one() const { return unit_; }
  RingElement basis(std::size_t i) const;
  RingElement scalar(const Int& c) const;

  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement neg(const RingElement& a) const;
  RingElement scale(const RingElement& a, const Int& c) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;

  /// Matrix of z -> a*z (resp. z -> z*a) on k^r.
  Matrix left_mul_matrix(const RingElement& a) const;
  Matrix right_mul_matrix(const RingElement& a) const;

  std::string to_string(const RingElement& a) const;

  /// Every element of B, for finite k. Intended for small exhaustive sweeps.
  std::vector<RingElement> enumerate() const;

 private:
  void check(const RingElement& a, const char* op) const;

  CoeffRing coeff_;
  std::size_t rank_;
  Vec structure_;
  RingElement unit_;
  std::vector<std::string> names_;
};

/// A k-linear endomorphism of B; column i of the matrix is the image of e_i.
class RingMap {
 public:
  RingMap() = default;
  explicit RingMap(Matrix matrix);

  static RingMap identity(const BaseRing& ring);
  static RingMap zero(const BaseRing& ring);

  const Matrix& matrix() const noexcept { return matrix_; }
  std::size_t rank() const noexcept { return matrix_.rows(); }

  RingElement apply(const RingElement& a) const;
  /// this o other
  RingMap compose(const RingMap& other) const;
  RingMap power(unsigned k) const;
  /// Inverse over k; throws UsageError when the matrix is not invertible.
  RingMap inverse() const;
  bool is_identity() const;
  bool is_zero() const { return matrix_.is_zero(); }

  friend RingMap operator+(const RingMap& a, const RingMap& b) {
    return RingMap(a.matrix_ + b.matrix_);
  }
  friend RingMap operator-(const RingMap& a, const RingMap& b) {
    return RingMap(a.matrix_ - b.matrix_);
  }
  friend bool operator==(const RingMap&, const RingMap&) = default;

 private:
  Matrix matrix_;
};

/// Ring axiom violations (associativity on basis triples, unit laws).
/// Empty when B is a valid associative unital ring.
std::vector<std::string> validate_ring(const BaseRing& ring);

/// Empty when rho is multiplicative on basis pairs, fixes 1, and is
/// invertible over k.
std::vector<std::string> validate_automorphism(const BaseRing& ring, const RingMap& rho);

/// Empty when D(ab) = D(a)rho(b) + aD(b) on basis pairs and D(1) = 0.
std::vector<std::string> validate_derivation(const BaseRing& ring, const RingMap& deriv,
                                             const RingMap& rho);

enum class FixMode { kFixedPoints, kKernel };

struct MapCondition {
  RingMap map;
  FixMode mode;
};

/// Elements fixed by (kFixedPoints) or killed by (kKernel) every listed map.
Submodule fixed_subring(const BaseRing& ring, const std::vector<MapCondition>& conditions);

/// {a in S : a*s = s*a for all s in S}.
Submodule centralizer_in_b(const BaseRing& ring, const Submodule& s);

}  // namespace skewsep
