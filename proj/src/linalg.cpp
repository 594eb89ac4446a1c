#include "tpsurf/linalg.hpp"

#include <sstream>
#include <utility>

#include "tpsurf/error.hpp"

namespace tpsurf {

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols, const Field& field)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar::in(field, 0)) {}

ScalarMatrix ScalarMatrix::identity(std::size_t n, const Field& field) {
  ScalarMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::in(field, 1);
  return m;
}

ScalarMatrix ScalarMatrix::from_columns(const std::vector<std::vector<Scalar>>& columns, std::size_t rows) {
  ScalarMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) fail(ErrorCode::InvalidInput, "exact_linalg::from_columns", "ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<Scalar> ScalarMatrix::column(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ScalarMatrix ScalarMatrix::to_field(const Field& f) const {
  ScalarMatrix m = *this;
  for (auto& x : m.data_) x = x.to_field(f);
  return m;
}

Field ScalarMatrix::field() const {
  for (const auto& x : data_) {
    if (!x.is_rational()) return x.field();
  }
  return Field::rationals();
}

std::string ScalarMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << '[';
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << (*this)(r, c).to_string();
    out << "]\n";
  }
  return out.str();
}

ScalarMatrix operator*(const ScalarMatrix& lhs, const ScalarMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) fail(ErrorCode::InvalidInput, "exact_linalg::multiply", "dimension mismatch");
  ScalarMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Scalar& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (!rhs(k, j).is_zero()) out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

std::vector<Scalar> operator*(const ScalarMatrix& lhs, std::span<const Scalar> v) {
  if (lhs.cols_ != v.size()) fail(ErrorCode::InvalidInput, "exact_linalg::multiply", "dimension mismatch");
  std::vector<Scalar> out(lhs.rows_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      if (!lhs(i, k).is_zero() && !v[k].is_zero()) out[i] += lhs(i, k) * v[k];
    }
  }
  return out;
}

bool operator==(const ScalarMatrix& lhs, const ScalarMatrix& rhs) {
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
}

namespace detail {

std::vector<std::size_t> rref_mod(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols,
                                  std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && a[sel * cols + col] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != row) {
      for (std::size_t k = col; k < cols; ++k) std::swap(a[sel * cols + k], a[row * cols + k]);
    }
    std::uint64_t* prow = &a[row * cols];
    std::uint64_t inv = inv_mod(prow[col], p);
    for (std::size_t k = col; k < cols; ++k) prow[k] = mul_mod(prow[k], inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row) continue;
      std::uint64_t* r = &a[i * cols];
      std::uint64_t f = r[col];
      if (f == 0) continue;
      for (std::size_t k = col; k < cols; ++k) {
        if (prow[k]) r[k] = sub_mod(r[k], mul_mod(f, prow[k], p), p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::uint64_t det_mod(std::vector<std::uint64_t> a, std::size_t n, std::uint64_t p) {
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t sel = k;
    while (sel < n && a[sel * n + k] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a[sel * n + j], a[k * n + j]);
      det = det == 0 ? 0 : p - det;
    }
    std::uint64_t piv = a[k * n + k];
    det = mul_mod(det, piv, p);
    std::uint64_t inv = inv_mod(piv, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      std::uint64_t f = mul_mod(a[i * n + k], inv, p);
      if (f == 0) continue;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a[k * n + j]) a[i * n + j] = sub_mod(a[i * n + j], mul_mod(f, a[k * n + j], p), p);
      }
    }
  }
  return det;
}

mpz_class det_bareiss(std::vector<mpz_class> a, std::size_t n) {
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  mpz_class t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t sel = k + 1;
      while (sel < n && a[sel * n + k] == 0) ++sel;
      if (sel == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a[sel * n + j], a[k * n + j]);
      sign = -sign;
    }
    const mpz_class& piv = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_mul(t.get_mpz_t(), a[i * n + j].get_mpz_t(), piv.get_mpz_t());
        mpz_submul(t.get_mpz_t(), a[i * n + k].get_mpz_t(), a[k * n + j].get_mpz_t());
        mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = piv;
  }
  mpz_class det = a[n * n - 1];
  return sign < 0 ? mpz_class(-det) : det;
}

}  // namespace detail

namespace {

std::vector<std::uint64_t> residues(const ScalarMatrix& m, std::uint64_t p) {
  std::vector<std::uint64_t> a(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& x = m(r, c);
      a[r * m.cols() + c] = x.is_rational() ? detail::reduce_rational(x.rational(), p) : x.residue();
    }
  }
  return a;
}

// Gauss-Jordan over Q, first nonzero pivot in each column.
std::vector<std::size_t> rref_rational(std::vector<mpq_class>& a, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  mpq_class inv, t;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && sgn(a[sel * cols + col]) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != row) {
      for (std::size_t k = col; k < cols; ++k) std::swap(a[sel * cols + k], a[row * cols + k]);
    }
    mpq_class* prow = &a[row * cols];
    if (prow[col] != 1) {
      mpq_inv(inv.get_mpq_t(), prow[col].get_mpq_t());
      for (std::size_t k = col; k < cols; ++k) {
        if (sgn(prow[k]) != 0) prow[k] *= inv;
      }
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row) continue;
      mpq_class* r = &a[i * cols];
      if (sgn(r[col]) == 0) continue;
      mpq_class f = r[col];
      for (std::size_t k = col; k < cols; ++k) {
        if (sgn(prow[k]) == 0) continue;
        mpq_mul(t.get_mpq_t(), f.get_mpq_t(), prow[k].get_mpq_t());
        r[k] -= t;
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RowEchelon rref(const ScalarMatrix& m) {
  Field f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  RowEchelon out{ScalarMatrix(rows, cols, f), {}};
  if (f.is_rational()) {
    std::vector<mpq_class> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m(r, c).rational();
    out.pivots = rref_rational(a, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) out.reduced(r, c) = Scalar(std::move(a[r * cols + c]));
  } else {
    const std::uint64_t p = f.characteristic();
    auto a = residues(m, p);
    out.pivots = detail::rref_mod(a, rows, cols, p);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) out.reduced(r, c) = Scalar::residue_of(a[r * cols + c], p);
  }
  return out;
}

std::size_t rank(const ScalarMatrix& m) { return rref(m).pivots.size(); }

std::vector<std::vector<Scalar>> kernel_from_echelon(const RowEchelon& e, std::size_t cols) {
  Field f = e.reduced.field();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols, Scalar::in(f, 0));
    v[free] = Scalar::in(f, 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Scalar>> kernel_basis(const ScalarMatrix& m) { return kernel_from_echelon(rref(m), m.cols()); }

Scalar det_scalar(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::NonSquare, "exact_linalg::det_scalar", "matrix is not square");
  const std::size_t n = m.rows();
  Field f = m.field();
  if (!f.is_rational()) {
    const std::uint64_t p = f.characteristic();
    return Scalar::residue_of(detail::det_mod(residues(m, p), n, p), p);
  }
  // clear denominators row by row, then integer Bareiss
  std::vector<mpz_class> a(n * n);
  mpz_class scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).rational().get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) {
      const mpq_class& q = m(r, c).rational();
      a[r * n + c] = q.get_num() * (l / q.get_den());
    }
    scale *= l;
  }
  return Scalar(mpq_class(detail::det_bareiss(std::move(a), n), scale));
}

std::optional<ScalarMatrix> inverse(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::NonSquare, "exact_linalg::inverse", "matrix is not square");
  const std::size_t n = m.rows();
  Field f = m.field();
  ScalarMatrix aug(n, 2 * n, f);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c).to_field(f);
    aug(r, n + r) = Scalar::in(f, 1);
  }
  auto e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  ScalarMatrix inv(n, n, f);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

std::optional<std::vector<Scalar>> solve(const ScalarMatrix& m, std::span<const Scalar> rhs) {
  if (rhs.size() != m.rows()) fail(ErrorCode::InvalidInput, "exact_linalg::solve", "dimension mismatch");
  Field f = m.field();
  for (const auto& x : rhs) {
    if (!x.is_rational()) f = x.field();
  }
  ScalarMatrix aug(m.rows(), m.cols() + 1, f);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c).to_field(f);
    aug(r, m.cols()) = rhs[r].to_field(f);
  }
  auto e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols(), Scalar::in(f, 0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

std::size_t rank_mod(const ScalarMatrix& m, std::uint64_t p) {
  auto a = residues(m, p);
  return detail::rref_mod(a, m.rows(), m.cols(), p).size();
}

}  // namespace tpsurf
