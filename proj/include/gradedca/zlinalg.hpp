#pragma once

// Exact integer linear algebra over arbitrary-precision integers: Hermite
// normal form, saturated kernel bases, rank, and integer linear solving.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace gradedca {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols = 0);
  /// A single column built from `values`.
  static IntMatrix column(const std::vector<long>& values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Entry converted to long; throws InputError if it does not fit.
  long at(std::size_t i, std::size_t j) const;

  IntMatrix transpose() const;
  IntMatrix row_block(std::size_t first, std::size_t count) const;
  IntMatrix col_block(std::size_t first, std::size_t count) const;
  std::vector<mpz_class> row(std::size_t i) const;
  std::vector<mpz_class> col(std::size_t j) const;

  /// Stack `below` underneath this matrix (column counts must agree).
  IntMatrix vstack(const IntMatrix& below) const;
  /// Place `right` beside this matrix (row counts must agree).
  IntMatrix hstack(const IntMatrix& right) const;

  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const mpz_class& s, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  /// Rows as nested vectors of long (throws if an entry does not fit).
  std::vector<std::vector<long>> to_rows() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

struct HermiteForm {
  IntMatrix h;  // row-style Hermite normal form
  IntMatrix u;  // unimodular, u * m == h
};

/// Row-style HNF: echelon, positive pivots, entries above each pivot reduced
/// into [0, pivot). Already-reduced input comes back with u == identity.
HermiteForm hermite_normal_form(const IntMatrix& m);

/// Columns form a lattice basis of {v in Z^cols : m v = 0}, in canonical
/// (row-HNF of the transposed basis) form. Result is cols x (cols - rank).
IntMatrix kernel_basis(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

/// Integer solution x of a * x == b when `a` has full column rank.
/// Returns nullopt when no integer solution exists.
std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b);

/// Determinant of a square matrix (fraction-free Bareiss elimination).
mpz_class determinant(const IntMatrix& m);

}  // namespace gradedca
