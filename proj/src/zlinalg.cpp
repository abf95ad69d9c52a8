#include "gradedca/zlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "gradedca/error.hpp"

namespace gradedca {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, mpz_class(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("IntMatrix: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::column(const std::vector<long>& values) {
  IntMatrix m(values.size(), 1);
  for (std::size_t i = 0; i < values.size(); ++i) m(i, 0) = values[i];
  return m;
}

long IntMatrix::at(std::size_t i, std::size_t j) const {
  const mpz_class& v = (*this)(i, j);
  if (!v.fits_slong_p()) throw InputError("IntMatrix: entry does not fit in a machine integer");
  return v.get_si();
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
  IntMatrix b(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) b(i, j) = (*this)(first + i, j);
  return b;
}

IntMatrix IntMatrix::col_block(std::size_t first, std::size_t count) const {
  IntMatrix b(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) b(i, j) = (*this)(i, first + j);
  return b;
}

std::vector<mpz_class> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<mpz_class> IntMatrix::col(std::size_t j) const {
  std::vector<mpz_class> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::vstack(const IntMatrix& below) const {
  if (below.rows_ == 0) return *this;
  if (rows_ == 0) return below;
  if (below.cols_ != cols_) throw InputError("vstack: column count mismatch");
  IntMatrix s(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), s.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(),
            s.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return s;
}

IntMatrix IntMatrix::hstack(const IntMatrix& right) const {
  if (right.rows_ != rows_) throw InputError("hstack: row count mismatch");
  IntMatrix s(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) s(i, cols_ + j) = right(i, j);
  }
  return s;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product: dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum: dimension mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference: dimension mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

IntMatrix operator*(const mpz_class& s, const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& v : c.data_) v *= s;
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::vector<long>> IntMatrix::to_rows() const {
  std::vector<std::vector<long>> out(rows_, std::vector<long>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j);
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// row[target] -= q * row[source]
void sub_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const mpz_class& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) -= q * m(source, j);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.rows())};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  const std::size_t rows = h.rows();
  std::size_t r = 0;
  mpz_class q;
  for (std::size_t c = 0; c < h.cols() && r < rows; ++c) {
    bool has_pivot = false;
    // Euclid on the column: bring the smallest nonzero entry up, reduce the rest.
    for (;;) {
      std::size_t piv = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        if (piv == rows || abs(h(i, c)) < abs(h(piv, c))) piv = i;
      }
      if (piv == rows) break;
      has_pivot = true;
      swap_rows(h, r, piv);
      swap_rows(u, r, piv);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        sub_row_multiple(h, i, r, q);
        sub_row_multiple(u, i, r, q);
        if (h(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!has_pivot) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (q == 0) continue;
      sub_row_multiple(h, i, r, q);
      sub_row_multiple(u, i, r, q);
    }
    ++r;
  }
  return out;
}

namespace {

std::size_t nonzero_rows(const IntMatrix& h) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool nz = false;
    for (std::size_t j = 0; j < h.cols() && !nz; ++j) nz = h(i, j) != 0;
    if (nz) r = i + 1;
  }
  return r;
}

}  // namespace

std::size_t rank(const IntMatrix& m) { return nonzero_rows(hermite_normal_form(m).h); }

IntMatrix kernel_basis(const IntMatrix& m) {
  const std::size_t n = m.cols();
  if (n == 0) return IntMatrix(0, 0);
  // Rows of u paired with zero rows of HNF(m^T) span the left kernel of m^T.
  HermiteForm hf = hermite_normal_form(m.transpose());
  const std::size_t rk = nonzero_rows(hf.h);
  const std::size_t k = n - rk;
  if (k == 0) return IntMatrix(n, 0);
  IntMatrix basis = hf.u.row_block(rk, k);
  return hermite_normal_form(basis).h.transpose();
}

std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw InputError("solve_integer: row count mismatch");
  const std::size_t d = a.cols();
  HermiteForm hf = hermite_normal_form(a);
  if (nonzero_rows(hf.h) != d) throw InputError("solve_integer: matrix lacks full column rank");
  for (std::size_t i = 0; i < d; ++i)
    if (hf.h(i, i) == 0) throw InputError("solve_integer: matrix lacks full column rank");
  IntMatrix rhs = hf.u * b;
  for (std::size_t i = d; i < rhs.rows(); ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j)
      if (rhs(i, j) != 0) return std::nullopt;
  IntMatrix x(d, b.cols());
  for (std::size_t col = 0; col < b.cols(); ++col) {
    for (std::size_t ii = d; ii-- > 0;) {
      mpz_class v = rhs(ii, col);
      for (std::size_t j = ii + 1; j < d; ++j) v -= hf.h(ii, j) * x(j, col);
      if (!mpz_divisible_p(v.get_mpz_t(), hf.h(ii, ii).get_mpz_t())) return std::nullopt;
      mpz_divexact(x(ii, col).get_mpz_t(), v.get_mpz_t(), hf.h(ii, ii).get_mpz_t());
    }
  }
  return x;
}

mpz_class determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace gradedca
