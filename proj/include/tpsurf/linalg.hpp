#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tpsurf/scalar.hpp"

namespace tpsurf {

/// Dense row-major matrix over Scalar.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols, const Field& field = Field::rationals());
  static ScalarMatrix identity(std::size_t n, const Field& field = Field::rationals());
  /// Columns given as vectors of equal length.
  static ScalarMatrix from_columns(const std::vector<std::vector<Scalar>>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Scalar> column(std::size_t c) const;

  ScalarMatrix transpose() const;
  ScalarMatrix to_field(const Field& f) const;
  /// F_p if any entry is a residue, Q otherwise.
  Field field() const;
  std::string to_string() const;

  friend ScalarMatrix operator*(const ScalarMatrix& lhs, const ScalarMatrix& rhs);
  friend std::vector<Scalar> operator*(const ScalarMatrix& lhs, std::span<const Scalar> v);
  friend bool operator==(const ScalarMatrix& lhs, const ScalarMatrix& rhs);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  ScalarMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivots are the first nonzero entry scanning
/// each column top to bottom.
RowEchelon rref(const ScalarMatrix& m);
std::size_t rank(const ScalarMatrix& m);
/// Basis of the right null space, one vector per free column (ascending),
/// with a 1 in that free position.
std::vector<std::vector<Scalar>> kernel_basis(const ScalarMatrix& m);
/// Kernel basis read off an existing echelon form of a matrix with `cols` columns.
std::vector<std::vector<Scalar>> kernel_from_echelon(const RowEchelon& e, std::size_t cols);
Scalar det_scalar(const ScalarMatrix& m);
std::optional<ScalarMatrix> inverse(const ScalarMatrix& m);
/// Some x with m x = rhs, or nullopt.
std::optional<std::vector<Scalar>> solve(const ScalarMatrix& m, std::span<const Scalar> rhs);

/// Rank of a rational matrix reduced mod p; throws DivisionByZero if p
/// divides a denominator.
std::size_t rank_mod(const ScalarMatrix& m, std::uint64_t p);

namespace detail {

/// In-place reduced row echelon over F_p on a row-major array; returns pivot columns.
std::vector<std::size_t> rref_mod(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols,
                                  std::uint64_t p);
std::uint64_t det_mod(std::vector<std::uint64_t> a, std::size_t n, std::uint64_t p);
/// Fraction-free (Bareiss) determinant of an integer matrix.
mpz_class det_bareiss(std::vector<mpz_class> a, std::size_t n);

}  // namespace detail

}  // namespace tpsurf
