#pragma once

#include <array>
#include <vector>

#include "tpsurf/strand.hpp"

namespace tpsurf {

/// Input that passed the hypothesis gate, together with its (0,2) syzygy.
struct QuadSyzygy {
  SurfaceInput input;     // possibly the swapped input
  bool swapped = false;   // true when the syzygy was found in bidegree (2,0)
  SyzygyVector q;         // bidegree (0,2)
};

/// s <-> u, t <-> v and (a,b) -> (b,a).
SurfaceInput swap_symmetry(const SurfaceInput& u);

/// Checks b >= 3, no linear syzygy and a (0,2) syzygy (or a (2,0) one with
/// a >= 3, after swapping). The syzygy is scaled so its first nonzero
/// coordinate is 1.
QuadSyzygy require_hypotheses(const SurfaceInput& u, const Certificate& cert);

struct FVector {
  std::vector<BiPoly> f;
  ScalarMatrix phi;  // f_j = sum_i phi(i,j) p_i
};

/// phi(i,j) = coefficient of the j-th monomial of R_{0,2} (u^2, uv, v^2) in Q_i.
FVector build_fvector(const SurfaceInput& u, const SyzygyVector& q);

enum class Subcase { None, I, II };
const char* to_string(Subcase s);

struct CaseReport {
  int dim_v = 0;
  Subcase subcase = Subcase::None;
  std::vector<Scalar> kernel;  // (d0', d1', d2') spanning ker phi, dim 2 only
  std::array<Scalar, 2> d;     // (d0, d1) in the normalized g's, dim 2 only
  BiPoly g0, g1, h;            // dim 2 only
  BiPoly alpha, beta;          // dim 3 only
  /// Normalized generators: (h g0, h g1, p_i, p_j) or (alpha v, beta v - alpha u, -beta u, p_k).
  Generators generators;
  /// generators = p * reindex, i.e. generators[j] = sum_i reindex(i,j) p_i.
  ScalarMatrix reindex;
  std::vector<std::size_t> retained;
};

CaseReport classify(const SurfaceInput& u, const FVector& fv);

struct GeneralizedV {
  int dim_v = 0;
  std::vector<BiPoly> f;
};

/// f_j = sum_i (coefficient of the j-th monomial of R_{c,d} in sigma_i) p_i.
GeneralizedV generalized_V(const SurfaceInput& u, const SyzygyVector& sigma);

}  // namespace tpsurf
