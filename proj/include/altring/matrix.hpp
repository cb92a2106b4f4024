#ifndef ALTRING_MATRIX_HPP
#define ALTRING_MATRIX_HPP

#include <altring/scalar.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace altring {

template <FieldScalar S>
using Vec = std::vector<S>;

template <FieldScalar S>
Vec<S> zero_vec(const Field& f, std::size_t n) {
  return Vec<S>(n, S::zero(f));
}

template <FieldScalar S>
Vec<S> unit_vec(const Field& f, std::size_t n, std::size_t i) {
  auto v = zero_vec<S>(f, n);
  v[i] = S::one(f);
  return v;
}

template <FieldScalar S>
bool is_zero_vec(std::span<const S> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <FieldScalar S>
Vec<S> operator+(Vec<S> a, const Vec<S>& b) {
  if (a.size() != b.size()) throw Error(Errc::dimension_mismatch, "vector sum");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <FieldScalar S>
Vec<S> operator-(Vec<S> a, const Vec<S>& b) {
  if (a.size() != b.size()) throw Error(Errc::dimension_mismatch, "vector difference");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <FieldScalar S>
Vec<S> operator*(const S& c, Vec<S> a) {
  for (auto& x : a) x *= c;
  return a;
}

/// `y += c * x`
template <FieldScalar S>
void axpy(std::span<S> y, const S& c, std::span<const S> x) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += c * x[i];
}

template <FieldScalar S>
std::string vec_to_string(std::span<const S> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += v[i].to_string();
  }
  return out;
}

/// Dense row-major matrix over one field.
template <FieldScalar S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, S::zero(f)) {}

  static Matrix identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S::one(f);
    return m;
  }

  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vec<S>>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(Errc::dimension_mismatch, "row length");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vec<S>>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw Error(Errc::dimension_mismatch, "column length");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<S> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const S> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Vec<S> row_vec(std::size_t i) const { auto r = row(i); return Vec<S>(r.begin(), r.end()); }
  Vec<S> col_vec(std::size_t j) const {
    Vec<S> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec<S> apply(std::span<const S> x) const {
    if (x.size() != cols_) throw Error(Errc::dimension_mismatch, "matrix-vector product");
    auto y = zero_vec<S>(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!x[j].is_zero() && !(*this)(i, j).is_zero()) y[i] += (*this)(i, j) * x[j];
    return y;
  }
  Vec<S> apply(const Vec<S>& x) const { return apply(std::span<const S>(x)); }

  /// Appends the rows of `o` below this matrix.
  void append_rows(const Matrix& o) {
    if (rows_ == 0 && cols_ == 0) { *this = o; return; }
    if (o.cols_ != cols_) throw Error(Errc::dimension_mismatch, "stacking");
    data_.insert(data_.end(), o.data_.begin(), o.data_.end());
    rows_ += o.rows_;
  }

  void append_row(std::span<const S> r) {
    if (r.size() != cols_) throw Error(Errc::dimension_mismatch, "row length");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  Matrix& operator+=(const Matrix& o) {
    check_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const S& c) {
    for (auto& x : data_) x *= c;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const S& c, Matrix a) { return a *= c; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::dimension_mismatch, "matrix product");
    require_same_field(a.field_, b.field_);
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (aik.is_zero()) continue;
        axpy<S>(c.row(i), aik, b.row(k));
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
      out += "[" + vec_to_string<S>(row(i)) + "]";
      if (i + 1 < rows_) out += "\n";
    }
    return out;
  }

 private:
  void check_shape(const Matrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw Error(Errc::dimension_mismatch, "matrix shapes");
    require_same_field(field_, o.field_);
  }

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// Commutator of two square matrices viewed as operators.
template <FieldScalar S>
Matrix<S> operator_commutator(const Matrix<S>& a, const Matrix<S>& b) {
  return a * b - b * a;
}

}  // namespace altring

#endif  // ALTRING_MATRIX_HPP
