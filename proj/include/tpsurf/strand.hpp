#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "tpsurf/linalg.hpp"
#include "tpsurf/poly.hpp"

namespace tpsurf {

using Generators = std::array<BiPoly, 4>;

/// Four k-linearly independent forms of bidegree (a,b) spanning U.
struct SurfaceInput {
  int a = 0;
  int b = 0;
  Generators p;

  /// Validates bidegrees, nonvanishing and linear independence.
  static SurfaceInput make(int a, int b, Generators p);
  BiDegree degree() const { return {a, b}; }
  Field field() const;
};

/// Coefficient matrix of the generators on monomial_basis(a,b): one column per generator.
ScalarMatrix generator_matrix(const Generators& p, BiDegree deg);

/// A first syzygy of bidegree `bidegree` on some fixed generator tuple.
struct SyzygyVector {
  std::array<BiPoly, 4> entries;
  BiDegree bidegree;

  /// sum_i entries[i] * gens[i]
  BiPoly apply(const Generators& gens) const;
  bool annihilates(const Generators& gens) const { return apply(gens).is_zero(); }
  /// Concatenated coefficient vectors of the entries on monomial_basis(bidegree).
  std::vector<Scalar> to_vector() const;
  static SyzygyVector from_vector(std::span<const Scalar> v, BiDegree deg);
  /// m * sigma for a monomial m.
  SyzygyVector shifted(const BiPoly::Exps& m) const;
  bool is_zero() const;
};

/// Matrix of (R_deg)^4 -> R_{deg+(a,b)}, (x_i) -> sum x_i p_i, in monomial bases.
/// Column i*|basis(deg)| + j corresponds to generator i times basis monomial j.
ScalarMatrix multiplication_matrix(const SurfaceInput& u, BiDegree deg);

/// dim of (I_U)_deg; 0 unless deg >= (a,b).
std::size_t ideal_component_dim(const SurfaceInput& u, BiDegree deg);

struct Certificate {
  bool certified = false;
  /// The N with (I_U)_{N,N} = R_{N,N}; meaningful only when certified.
  int level = 0;
  int cap = 0;
};

/// Searches N = max(a,b)..cap for (I_U)_{N,N} = R_{N,N}. cap <= 0 means 2(a+b).
Certificate basepoint_free_certificate(const SurfaceInput& u, int cap = 0);

/// Basis of the syzygies of bidegree deg, in kernel_basis order.
std::vector<SyzygyVector> syzygy_strand(const SurfaceInput& u, BiDegree deg);

struct TableEntry {
  BiDegree deg;
  int multiplicity = 0;
};

struct SyzygyTable {
  BiDegree box;
  std::vector<TableEntry> entries;
  /// One representative per minimal syzygy, in sweep order.
  std::vector<SyzygyVector> minimal;

  /// The multiset of bidegrees, sorted by (c,d).
  std::vector<BiDegree> multiset() const;
};

struct TableOptions {
  /// Compute each strand kernel on reversed columns; the table must not change.
  bool reverse_columns = false;
};

/// Bidegrees of minimal first syzygies inside the box, swept by total
/// degree then c. box defaults to (3a, 3b+1).
SyzygyTable minimal_syzygy_table(const SurfaceInput& u, std::optional<BiDegree> box = std::nullopt,
                                 TableOptions options = {});

}  // namespace tpsurf
