#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tpsurf/linalg.hpp"
#include "tpsurf/poly.hpp"
#include "tpsurf/strand.hpp"

namespace tpsurf {

/// c0 T0 + c1 T1 + c2 T2 + c3 T3
using LinearForm = std::array<Scalar, 4>;

struct StrandColumn {
  std::size_t syzygy = 0;  // index into the syzygy list
  BiPoly::Exps cofactor{};
};

/// Matrix of linear forms in T for d1 restricted to one bidegree.
class StrandMatrix {
 public:
  BiDegree nu;
  std::vector<BiPoly::Exps> row_monomials;  // monomial_basis(nu)
  std::vector<StrandColumn> columns;

  StrandMatrix() = default;
  StrandMatrix(BiDegree nu, std::size_t cols, const Field& field);

  std::size_t rows() const noexcept { return row_monomials.size(); }
  std::size_t cols() const noexcept { return columns.size(); }
  bool is_square() const noexcept { return rows() == cols(); }
  LinearForm& at(std::size_t r, std::size_t c) { return entries_[r * cols() + c]; }
  const LinearForm& at(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }
  TPoly entry(std::size_t r, std::size_t c) const;
  Field field() const { return field_; }

  /// Substitutes T = point.
  ScalarMatrix evaluate(const std::array<Scalar, 4>& point) const;
  /// (4 rows) x cols matrix whose block i holds the T_i coefficients; its rank
  /// is the dimension of the span of the columns as syzygies.
  ScalarMatrix coefficient_matrix() const;
  /// Number of columns contributed by each syzygy.
  std::vector<std::size_t> column_counts(std::size_t syzygies) const;

 private:
  Field field_ = Field::rationals();
  std::vector<LinearForm> entries_;
};

/// Column (sigma, m) has row-mu entry sum_i [mu](m sigma_i) T_i, for every
/// m in monomial_basis(nu - bideg sigma).
StrandMatrix assemble_strand(const std::vector<SyzygyVector>& syzygies, BiDegree nu, const Field& field);

/// Strand nu = (2a-1, b-1); throws NotSquare unless the matrix is 2ab x 2ab.
StrandMatrix assemble_d1(const std::vector<SyzygyVector>& syzygies, int a, int b, const Field& field);

enum class DetBackend { FractionFree, Interpolation, Both };
DetBackend parse_backend(const std::string& name);
const char* to_string(DetBackend b);

/// det of a square matrix of linear forms; homogeneous of degree rows().
TPoly det_tpoly(const StrandMatrix& m, DetBackend backend = DetBackend::Interpolation);

struct ImplicitResult {
  TPoly delta;
  TPoly f;
  int e = 1;
  int deg_f = 0;
  /// false when no e > 1 passed the re-powering check and e = 1 was used.
  bool perfect_power = false;
};

/// Primitive integer form with positive leading coefficient over Q; monic over F_p.
TPoly normalize(const TPoly& f);

/// Largest e such that delta is a scalar times an e-th power, with the root.
ImplicitResult extract_root(const TPoly& delta);

/// Multiplicities of the squarefree factors of delta restricted to a line.
std::vector<int> line_multiplicities(const TPoly& delta);

/// F(p0, p1, p2, p3) == 0.
bool verify_implicit(const TPoly& f, const Generators& p);

/// f = c g for a nonzero scalar c.
bool proportional(const TPoly& f, const TPoly& g);

}  // namespace tpsurf
