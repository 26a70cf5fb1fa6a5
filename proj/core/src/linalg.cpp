#include "skewsep/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "skewsep/errors.hpp"

namespace skewsep {

// ---------------------------------------------------------------------------
// CoeffRing

CoeffRing::CoeffRing(Int modulus) : modulus_(std::move(modulus)) {
  if (modulus_ < 0 || modulus_ == 1) {
    throw UsageError("coefficient modulus must be 0 or at least 2, got " +
                     modulus_.get_str());
  }
}

Int CoeffRing::reduce(const Int& v) const {
  Int r = v;
  reduce_in_place(r);
  return r;
}

void CoeffRing::reduce_in_place(Int& v) const {
  if (modulus_ != 0) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
  }
}

void CoeffRing::reduce_in_place(Vec& v) const {
  if (modulus_ != 0) {
    for (auto& e : v) reduce_in_place(e);
  }
}

bool CoeffRing::is_unit(const Int& v) const {
  if (modulus_ == 0) return v == 1 || v == -1;
  Int g;
  mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
  return g == 1;
}

std::string CoeffRing::to_string() const {
  return modulus_ == 0 ? std::string("Z") : "Z/" + modulus_.get_str();
}

std::ostream& operator<<(std::ostream& os, const CoeffRing& k) {
  return os << k.to_string();
}

Vec zero_vec(std::size_t n) { return Vec(n, Int(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Int(0));
  v.at(i) = 1;
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& e) { return e == 0; });
}

std::string vec_to_string(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, CoeffRing coeff)
    : rows_(rows), cols_(cols), coeff_(std::move(coeff)),
      data_(rows * cols, Int(0)) {}

Matrix Matrix::identity(std::size_t n, CoeffRing coeff) {
  Matrix m(n, n, std::move(coeff));
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols,
                         CoeffRing coeff) {
  Matrix m(rows.size(), cols, std::move(coeff));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw UsageError("Matrix::from_rows: row " + std::to_string(i) +
                       " has length " + std::to_string(rows[i].size()) +
                       ", expected " + std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& columns, std::size_t rows,
                            CoeffRing coeff) {
  Matrix m(rows, columns.size(), std::move(coeff));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) {
      throw UsageError("Matrix::from_columns: column " + std::to_string(j) +
                       " has length " + std::to_string(columns[j].size()) +
                       ", expected " + std::to_string(rows));
    }
    for (std::size_t i = 0; i < rows; ++i) m.set(i, j, columns[j][i]);
  }
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, const Int& v) {
  Int& slot = data_.at(i * cols_ + j);
  slot = v;
  coeff_.reduce_in_place(slot);
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::column(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = data_[i * cols_ + j];
  return c;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) {
    throw UsageError("Matrix::apply: vector length " + std::to_string(v.size()) +
                     " does not match " + std::to_string(cols_) + " columns");
  }
  Vec out(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    Int& acc = out[i];
    const Int* row = &data_[i * cols_];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (row[j] != 0 && v[j] != 0) acc += row[j] * v[j];
    }
    coeff_.reduce_in_place(acc);
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_, coeff_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const { return is_zero_vec(data_); }

std::vector<Vec> Matrix::to_rows() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_ || !(a.coeff_ == b.coeff_)) {
    throw UsageError("Matrix product: incompatible operands");
  }
  Matrix c(a.rows_, b.cols_, a.coeff_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Int& bkj = b(k, j);
        if (bkj != 0) c.data_[i * c.cols_ + j] += aik * bkj;
      }
    }
  }
  a.coeff_.reduce_in_place(c.data_);
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.coeff_ == b.coeff_)) {
    throw UsageError("Matrix sum: incompatible operands");
  }
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  c.coeff_.reduce_in_place(c.data_);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.coeff_ == b.coeff_)) {
    throw UsageError("Matrix difference: incompatible operands");
  }
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  c.coeff_.reduce_in_place(c.data_);
  return c;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j).get_str();
    }
  }
  return os << ']';
}

Matrix vstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) return Matrix();
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols || !(b.coeff() == blocks.front().coeff())) {
      throw UsageError("vstack: blocks disagree on columns or coefficients");
    }
    rows += b.rows();
  }
  Matrix out(rows, cols, blocks.front().coeff());
  std::size_t r = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i, ++r)
      for (std::size_t j = 0; j < cols; ++j) out.set(r, j, b(i, j));
  }
  return out;
}

Int determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw UsageError("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return m.coeff().reduce(Int(1));
  std::vector<Vec> a = m.to_rows();
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return Int(0);
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
    }
    prev = a[k][k];
  }
  return m.coeff().reduce(sign * a[n - 1][n - 1]);
}

// ---------------------------------------------------------------------------
// Hermite normal form engine

namespace {

inline bool nonzero(const Int& v) { return sgn(v) != 0; }
inline bool nonzero(std::int64_t v) { return v != 0; }
inline bool negative(const Int& v) { return sgn(v) < 0; }
inline bool negative(std::int64_t v) { return v < 0; }
inline bool abs_less(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
inline bool abs_less(std::int64_t a, std::int64_t b) {
  return std::llabs(a) < std::llabs(b);
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline void mod_reduce(Int& v, const Int& n) {
  mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
}
inline void mod_reduce(std::int64_t& v, std::int64_t n) {
  v %= n;
  if (v < 0) v += n;
}

// Column-by-column row echelon form with smallest-absolute-value pivots.
// When `modulus` is nonzero, the lattice is augmented by modulus*Z^dim: the
// generator modulus*e_c joins the candidates at column c and every entry is
// kept in [0, modulus).
template <class T>
std::vector<std::vector<T>> hermite_rows(std::vector<std::vector<T>> active,
                                         std::size_t dim, const T& modulus) {
  const bool finite = nonzero(modulus);
  auto normalize = [&](std::vector<T>& row, std::size_t from) {
    if (!finite) return;
    for (std::size_t j = from; j < dim; ++j) mod_reduce(row[j], modulus);
  };
  auto is_zero_from = [&](const std::vector<T>& row, std::size_t from) {
    for (std::size_t j = from; j < dim; ++j)
      if (nonzero(row[j])) return false;
    return true;
  };

  for (auto& r : active) normalize(r, 0);
  std::erase_if(active, [&](const std::vector<T>& r) { return is_zero_from(r, 0); });

  std::vector<std::vector<T>> result;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < dim; ++c) {
    if (finite) {
      std::vector<T> e(dim, T(0));
      e[c] = modulus;
      active.push_back(std::move(e));
    }
    std::size_t pivot = active.size();
    for (;;) {
      std::size_t best = active.size();
      for (std::size_t i = 0; i < active.size(); ++i) {
        if (nonzero(active[i][c]) &&
            (best == active.size() || abs_less(active[i][c], active[best][c]))) {
          best = i;
        }
      }
      if (best == active.size()) break;
      bool clean = true;
      const T p = active[best][c];
      const std::vector<T>& prow = active[best];
      for (std::size_t i = 0; i < active.size(); ++i) {
        if (i == best || !nonzero(active[i][c])) continue;
        T q = active[i][c] / p;
        if (nonzero(q)) {
          auto& row = active[i];
          for (std::size_t j = c; j < dim; ++j) {
            if (nonzero(prow[j])) row[j] -= q * prow[j];
          }
          normalize(row, c);
        }
        if (nonzero(active[i][c])) clean = false;
      }
      if (clean) {
        pivot = best;
        break;
      }
    }
    if (pivot != active.size()) {
      std::vector<T> row = std::move(active[pivot]);
      active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot));
      if (negative(row[c])) {
        for (auto& e : row) e = -e;
      }
      result.push_back(std::move(row));
      pivot_cols.push_back(c);
    }
    std::erase_if(active,
                  [&](const std::vector<T>& r) { return is_zero_from(r, c + 1); });
  }

  for (std::size_t i = 0; i < result.size(); ++i) {
    const std::size_t c = pivot_cols[i];
    const T p = result[i][c];
    for (std::size_t k = 0; k < i; ++k) {
      T q = floor_div(result[k][c], p);
      if (!nonzero(q)) continue;
      for (std::size_t j = c; j < dim; ++j) {
        if (nonzero(result[i][j])) result[k][j] -= q * result[i][j];
      }
      normalize(result[k], c);
    }
  }
  return result;
}

constexpr long kSmallModulusLimit = 1L << 31;

std::vector<Vec> hermite(std::vector<Vec> rows, std::size_t dim, const Int& modulus) {
  for (const auto& r : rows) {
    if (r.size() != dim) {
      throw UsageError("hnf: generator of length " + std::to_string(r.size()) +
                       " in ambient dimension " + std::to_string(dim));
    }
  }
  if (modulus > 0 && modulus < kSmallModulusLimit) {
    const std::int64_t n = modulus.get_si();
    std::vector<std::vector<std::int64_t>> small;
    small.reserve(rows.size());
    Int tmp;
    for (const auto& r : rows) {
      std::vector<std::int64_t> s(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        mpz_fdiv_r(tmp.get_mpz_t(), r[j].get_mpz_t(), modulus.get_mpz_t());
        s[j] = tmp.get_si();
      }
      small.push_back(std::move(s));
    }
    auto out = hermite_rows<std::int64_t>(std::move(small), dim, n);
    std::vector<Vec> big;
    big.reserve(out.size());
    for (const auto& r : out) {
      Vec b(dim);
      for (std::size_t j = 0; j < dim; ++j) b[j] = static_cast<long>(r[j]);
      big.push_back(std::move(b));
    }
    return big;
  }
  return hermite_rows<Int>(std::move(rows), dim, modulus);
}

std::size_t pivot_of(const Vec& row) {
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) return j;
  return row.size();
}

void require_compatible(const Submodule& a, const Submodule& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim() || !(a.coeff() == b.coeff())) {
    throw UsageError(std::string(op) + ": submodules live in different ambient spaces (" +
                     std::to_string(a.ambient_dim()) + " over " + a.coeff().to_string() +
                     " vs " + std::to_string(b.ambient_dim()) + " over " +
                     b.coeff().to_string() + ")");
  }
}

// Integer Smith form with transforms, on plain row lists.
struct IntSmith {
  Vec diag;
  std::vector<Vec> u;
  std::vector<Vec> v;
};

IntSmith smith_integer(std::vector<Vec> a, std::size_t rows, std::size_t cols) {
  std::vector<Vec> u(rows, zero_vec(rows));
  std::vector<Vec> v(cols, zero_vec(cols));
  for (std::size_t i = 0; i < rows; ++i) u[i][i] = 1;
  for (std::size_t i = 0; i < cols; ++i) v[i][i] = 1;

  auto swap_rows = [&](std::size_t i, std::size_t k) {
    std::swap(a[i], a[k]);
    std::swap(u[i], u[k]);
  };
  auto swap_cols = [&](std::size_t j, std::size_t k) {
    for (auto& r : a) std::swap(r[j], r[k]);
    for (auto& r : v) std::swap(r[j], r[k]);
  };
  // row_i += q * row_k
  auto add_row = [&](std::size_t i, std::size_t k, const Int& q) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] += q * a[k][j];
    for (std::size_t j = 0; j < rows; ++j) u[i][j] += q * u[k][j];
  };
  auto add_col = [&](std::size_t j, std::size_t k, const Int& q) {
    for (std::size_t i = 0; i < rows; ++i) a[i][j] += q * a[i][k];
    for (std::size_t i = 0; i < cols; ++i) v[i][j] += q * v[i][k];
  };

  const std::size_t n = std::min(rows, cols);
  Vec diag(n, Int(0));
  for (std::size_t t = 0; t < n; ++t) {
    bool exhausted = false;
    for (;;) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (bi == rows || mpz_cmpabs(a[i][j].get_mpz_t(), a[bi][bj].get_mpz_t()) < 0)) {
            bi = i;
            bj = j;
          }
      if (bi == rows) {
        exhausted = true;
        break;
      }
      if (bi != t) swap_rows(bi, t);
      if (bj != t) swap_cols(bj, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Int q = a[i][t] / a[t][t];
        if (q != 0) add_row(i, t, -q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Int q = a[t][j] / a[t][t];
        if (q != 0) add_col(j, t, -q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      add_row(t, bad, Int(1));
    }
    if (exhausted) break;
    if (a[t][t] < 0) {
      for (auto& e : a[t]) e = -e;
      for (auto& e : u[t]) e = -e;
    }
    diag[t] = a[t][t];
  }
  return {std::move(diag), std::move(u), std::move(v)};
}

// Solve M x = b over Z. Kernel generators are columns of V past the rank.
std::optional<std::pair<Vec, std::vector<Vec>>> solve_integer(
    const std::vector<Vec>& m, std::size_t rows, std::size_t cols, const Vec& b) {
  IntSmith s = smith_integer(m, rows, cols);
  Vec c(rows, Int(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < rows; ++j)
      if (s.u[i][j] != 0) c[i] += s.u[i][j] * b[j];

  const std::size_t n = std::min(rows, cols);
  Vec y(cols, Int(0));
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i) {
    if (s.diag[i] == 0) {
      if (c[i] != 0) return std::nullopt;
      free.push_back(i);
    } else {
      if (!mpz_divisible_p(c[i].get_mpz_t(), s.diag[i].get_mpz_t())) return std::nullopt;
      y[i] = c[i] / s.diag[i];
    }
  }
  for (std::size_t i = n; i < rows; ++i)
    if (c[i] != 0) return std::nullopt;
  for (std::size_t i = n; i < cols; ++i) free.push_back(i);

  Vec x(cols, Int(0));
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (s.v[i][j] != 0 && y[j] != 0) x[i] += s.v[i][j] * y[j];
  std::vector<Vec> kernel;
  for (std::size_t f : free) {
    Vec k(cols);
    for (std::size_t i = 0; i < cols; ++i) k[i] = s.v[i][f];
    kernel.push_back(std::move(k));
  }
  return std::make_pair(std::move(x), std::move(kernel));
}

}  // namespace

// ---------------------------------------------------------------------------
// Submodule

Submodule hnf(std::size_t dim, std::span<const Vec> gens, const CoeffRing& coeff) {
  Submodule s;
  s.dim_ = dim;
  s.coeff_ = coeff;
  s.basis_ = hermite(std::vector<Vec>(gens.begin(), gens.end()), dim, coeff.modulus());
  return s;
}

Submodule Submodule::zero(std::size_t dim, CoeffRing coeff) {
  return hnf(dim, {}, coeff);
}

Submodule Submodule::full(std::size_t dim, CoeffRing coeff) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < dim; ++i) gens.push_back(unit_vec(dim, i));
  return hnf(dim, gens, coeff);
}

std::vector<Vec> Submodule::generators() const {
  if (coeff_.is_integers()) return basis_;
  std::vector<Vec> out;
  for (const auto& row : basis_) {
    if (row[pivot_of(row)] != coeff_.modulus()) out.push_back(row);
  }
  return out;
}

std::size_t Submodule::rank() const {
  if (coeff_.is_integers()) return basis_.size();
  return static_cast<std::size_t>(
      std::count_if(basis_.begin(), basis_.end(), [&](const Vec& row) {
        return row[pivot_of(row)] != coeff_.modulus();
      }));
}

Int Submodule::order() const {
  if (coeff_.is_integers()) {
    throw UsageError("Submodule::order: subgroup of Z^N is infinite");
  }
  Int total;
  mpz_pow_ui(total.get_mpz_t(), coeff_.modulus().get_mpz_t(), dim_);
  for (const auto& row : basis_) total /= row[pivot_of(row)];
  return total;
}

Matrix Submodule::generator_matrix() const {
  return Matrix::from_columns(generators(), dim_, coeff_);
}

bool sub_member(const Submodule& a, const Vec& v) {
  if (v.size() != a.ambient_dim()) {
    throw UsageError("sub_member: vector length " + std::to_string(v.size()) +
                     " in ambient dimension " + std::to_string(a.ambient_dim()));
  }
  Vec w = v;
  a.coeff().reduce_in_place(w);
  for (const auto& row : a.basis()) {
    const std::size_t c = pivot_of(row);
    if (w[c] == 0) continue;
    if (!mpz_divisible_p(w[c].get_mpz_t(), row[c].get_mpz_t())) return false;
    Int q = w[c] / row[c];
    for (std::size_t j = c; j < w.size(); ++j) w[j] -= q * row[j];
    a.coeff().reduce_in_place(w);
  }
  return is_zero_vec(w);
}

bool sub_contains(const Submodule& a, const Submodule& b) {
  require_compatible(a, b, "sub_contains");
  return std::all_of(b.basis().begin(), b.basis().end(),
                     [&](const Vec& v) { return sub_member(a, v); });
}

bool sub_equal(const Submodule& a, const Submodule& b) {
  require_compatible(a, b, "sub_equal");
  return a.basis() == b.basis();
}

Submodule sub_intersect(const Submodule& a, const Submodule& b) {
  require_compatible(a, b, "sub_intersect");
  const std::size_t n = a.ambient_dim();
  // Rows (a_i | a_i) and (b_j | 0): the lattice elements with vanishing
  // first half carry the intersection in their second half. The doubled
  // lattice contains modulus*Z^{2n} whenever both inputs do.
  std::vector<Vec> rows;
  for (const auto& r : a.basis()) {
    Vec w(2 * n);
    for (std::size_t j = 0; j < n; ++j) w[j] = w[n + j] = r[j];
    rows.push_back(std::move(w));
  }
  for (const auto& r : b.basis()) {
    Vec w(2 * n, Int(0));
    for (std::size_t j = 0; j < n; ++j) w[j] = r[j];
    rows.push_back(std::move(w));
  }
  auto h = hermite(std::move(rows), 2 * n, a.coeff().modulus());
  std::vector<Vec> gens;
  for (const auto& r : h) {
    if (pivot_of(r) >= n) gens.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());
  }
  return hnf(n, gens, a.coeff());
}

Submodule sub_sum(const Submodule& a, const Submodule& b) {
  require_compatible(a, b, "sub_sum");
  std::vector<Vec> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return hnf(a.ambient_dim(), gens, a.coeff());
}

// ---------------------------------------------------------------------------
// Maps

Submodule image(const Matrix& m) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return hnf(m.rows(), cols, m.coeff());
}

Submodule kernel(const Matrix& m) {
  const Int& modulus = m.coeff().modulus();
  const std::size_t cols = m.cols();

  // A tall system first collapses to a Hermite basis of its row space,
  // which has the same kernel.
  std::vector<Vec> eqs = m.to_rows();
  if (eqs.size() > cols) {
    eqs = hermite(std::move(eqs), cols, modulus);
    if (m.coeff().is_finite()) {
      std::erase_if(eqs, [&](const Vec& r) { return r[pivot_of(r)] == modulus; });
    }
  }
  const std::size_t r = eqs.size();
  // Lattice rows (column j of the system | e_j). Over Z/n the n*e_i
  // adjoined by the engine on the first block realize congruences, those on
  // the second block the implicit n*Z^cols of the kernel.
  std::vector<Vec> rows;
  rows.reserve(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    Vec w(r + cols, Int(0));
    for (std::size_t i = 0; i < r; ++i) w[i] = eqs[i][j];
    w[r + j] = 1;
    rows.push_back(std::move(w));
  }
  auto h = hermite(std::move(rows), r + cols, modulus);
  std::vector<Vec> gens;
  for (const auto& row : h) {
    if (pivot_of(row) >= r) gens.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(r), row.end());
  }
  return hnf(cols, gens, m.coeff());
}

Submodule image_of(const Matrix& m, const Submodule& s) {
  if (s.ambient_dim() != m.cols() || !(s.coeff() == m.coeff())) {
    throw UsageError("image_of: submodule does not live in the map's domain");
  }
  std::vector<Vec> gens;
  for (const auto& g : s.generators()) gens.push_back(m.apply(g));
  return hnf(m.rows(), gens, m.coeff());
}

Submodule kernel_within(const Matrix& m, const Submodule& s) {
  if (s.ambient_dim() != m.cols() || !(s.coeff() == m.coeff())) {
    throw UsageError("kernel_within: submodule does not live in the map's domain");
  }
  const Matrix g = s.generator_matrix();
  const Submodule k = kernel(m * g);
  std::vector<Vec> gens;
  for (const auto& c : k.generators()) gens.push_back(g.apply(c));
  return hnf(s.ambient_dim(), gens, s.coeff());
}

std::optional<Vec> solve_within(const Matrix& m, const Submodule& s, const Vec& b) {
  if (s.ambient_dim() != m.cols() || !(s.coeff() == m.coeff())) {
    throw UsageError("solve_within: submodule does not live in the map's domain");
  }
  const Matrix g = s.generator_matrix();
  auto sol = solve(m * g, b);
  if (!sol) return std::nullopt;
  return g.apply(sol->particular);
}

SmithForm snf(const Matrix& m) {
  IntSmith s = smith_integer(m.to_rows(), m.rows(), m.cols());
  SmithForm out;
  out.diag = std::move(s.diag);
  m.coeff().reduce_in_place(out.diag);
  out.u = Matrix::from_rows(s.u, m.rows(), m.coeff());
  out.vt = Matrix::from_rows(s.v, m.cols(), m.coeff());
  return out;
}

std::optional<Solution> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) {
    throw UsageError("solve: right-hand side of length " + std::to_string(b.size()) +
                     " for " + std::to_string(m.rows()) + " equations");
  }
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<Vec> lifted = m.to_rows();
  std::size_t lifted_cols = cols;
  if (m.coeff().is_finite()) {
    // m x + n y = b over Z
    for (std::size_t i = 0; i < rows; ++i) {
      lifted[i].resize(cols + rows, Int(0));
      lifted[i][cols + i] = m.coeff().modulus();
    }
    lifted_cols = cols + rows;
  }
  Vec rhs = b;
  m.coeff().reduce_in_place(rhs);
  auto sol = solve_integer(lifted, rows, lifted_cols, rhs);
  if (!sol) return std::nullopt;
  Solution out;
  out.particular.assign(sol->first.begin(), sol->first.begin() + static_cast<std::ptrdiff_t>(cols));
  m.coeff().reduce_in_place(out.particular);
  std::vector<Vec> gens;
  for (auto& k : sol->second) {
    k.resize(cols);
    gens.push_back(std::move(k));
  }
  out.kernel = hnf(cols, gens, m.coeff());
  return out;
}

}  // namespace skewsep
