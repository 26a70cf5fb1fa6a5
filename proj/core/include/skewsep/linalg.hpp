#pragma once

// Exact linear algebra over Z and Z/n.
//
// Every problem over Z/n is lifted to Z and solved there with n*e_i
// generators (or n*I columns) adjoined, so a single Hermite/Smith engine
// serves both coefficient rings and composite moduli need no special
// treatment.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace skewsep {

using Int = mpz_class;
using Vec = std::vector<Int>;

/// The coefficient ring k: Z when the modulus is 0, Z/n otherwise.
class CoeffRing {
 public:
  CoeffRing() = default;
  explicit CoeffRing(Int modulus);

  static CoeffRing integers() { return CoeffRing(); }
  static CoeffRing modulo(long n) { return CoeffRing(Int(n)); }

  const Int& modulus() const noexcept { return modulus_; }
  bool is_integers() const noexcept { return modulus_ == 0; }
  bool is_finite() const noexcept { return modulus_ != 0; }

  /// Canonical representative: identity over Z, the residue in [0, n) over Z/n.
  Int reduce(const Int& v) const;
  void reduce_in_place(Int& v) const;
  void reduce_in_place(Vec& v) const;
  bool is_unit(const Int& v) const;

  std::string to_string() const;

  friend bool operator==(const CoeffRing& a, const CoeffRing& b) {
    return a.modulus_ == b.modulus_;
  }

 private:
  Int modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const CoeffRing& k);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
std::string vec_to_string(const Vec& v);

/// Dense row-major matrix. Entries are canonical for the coefficient ring.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, CoeffRing coeff = {});

  static Matrix identity(std::size_t n, CoeffRing coeff = {});
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols,
                          CoeffRing coeff = {});
  static Matrix from_columns(const std::vector<Vec>& columns, std::size_t rows,
                             CoeffRing coeff = {});

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const CoeffRing& coeff() const noexcept { return coeff_; }

  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, const Int& v);

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  /// Matrix-vector product m*v.
  Vec apply(const Vec& v) const;
  Matrix transposed() const;
  bool is_zero() const;

  /// Entries as plain integers, row by row.
  std::vector<Vec> to_rows() const;
  /// Flattened row-major entries.
  const Vec& entries() const noexcept { return data_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.coeff_ == b.coeff_ &&
           a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  CoeffRing coeff_;
  Vec data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Stack matrices with equal column counts on top of each other.
Matrix vstack(std::span<const Matrix> blocks);

/// Determinant of a square matrix, computed over Z by fraction-free
/// elimination and then reduced into the coefficient ring.
Int determinant(const Matrix& m);

/// A subgroup of k^N, stored as the canonical row Hermite basis of the
/// corresponding lattice in Z^N. Over Z/n that lattice contains n*Z^N, so
/// the basis always has N rows and the rows with pivot n are exactly n*e_i.
class Submodule {
 public:
  Submodule() = default;

  static Submodule zero(std::size_t dim, CoeffRing coeff = {});
  static Submodule full(std::size_t dim, CoeffRing coeff = {});

  std::size_t ambient_dim() const noexcept { return dim_; }
  const CoeffRing& coeff() const noexcept { return coeff_; }

  /// Canonical Hermite rows of the lifted lattice.
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  /// Rows that are nonzero in k^N; they generate the subgroup.
  std::vector<Vec> generators() const;
  /// Number of generators. Over Z this is the rank; over Z/p it is the
  /// dimension.
  std::size_t rank() const;
  /// Number of elements (finite coefficient rings only).
  Int order() const;
  bool is_zero() const { return rank() == 0; }
  /// Generators as the columns of a matrix (dim x rank).
  Matrix generator_matrix() const;

  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.dim_ == b.dim_ && a.coeff_ == b.coeff_ && a.basis_ == b.basis_;
  }

 private:
  friend Submodule hnf(std::size_t dim, std::span<const Vec> gens,
                       const CoeffRing& coeff);

  std::size_t dim_ = 0;
  CoeffRing coeff_;
  std::vector<Vec> basis_;
};

/// Canonical Hermite basis of the subgroup generated by `gens`.
Submodule hnf(std::size_t dim, std::span<const Vec> gens,
              const CoeffRing& coeff = {});

struct SmithForm {
  /// min(rows, cols) diagonal entries, each dividing the next (over Z).
  Vec diag;
  Matrix u;   // rows x rows, invertible
  Matrix vt;  // cols x cols, invertible; u * m * vt is diagonal
};

SmithForm snf(const Matrix& m);

struct Solution {
  Vec particular;
  Submodule kernel;
};

/// All solutions of m*x = b over the coefficient ring, or nullopt when the
/// system has none.
std::optional<Solution> solve(const Matrix& m, const Vec& b);

/// {x : m*x = 0} as a subgroup of k^cols.
Submodule kernel(const Matrix& m);
/// m(k^cols) as a subgroup of k^rows.
Submodule image(const Matrix& m);

/// m(S).
Submodule image_of(const Matrix& m, const Submodule& s);
/// {s in S : m*s = 0}.
Submodule kernel_within(const Matrix& m, const Submodule& s);
/// Some s in S with m*s = b.
std::optional<Vec> solve_within(const Matrix& m, const Submodule& s,
                                 const Vec& b);

bool sub_member(const Submodule& a, const Vec& v);
/// b is a subset of a.
bool sub_contains(const Submodule& a, const Submodule& b);
bool sub_equal(const Submodule& a, const Submodule& b);
Submodule sub_intersect(const Submodule& a, const Submodule& b);
Submodule sub_sum(const Submodule& a, const Submodule& b);

}  // namespace skewsep
