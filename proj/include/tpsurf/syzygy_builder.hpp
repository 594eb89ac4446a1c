#pragma once

#include <array>
#include <utility>
#include <vector>

#include "tpsurf/quad.hpp"

namespace tpsurf {

/// Linear forms (c0, c1) in u,v with u^e v^(3-e) = c0 g0 + c1 g1, for the
/// g's of the given subcase.
std::pair<BiPoly, BiPoly> cubic_decompose(Subcase subcase, const std::array<Scalar, 2>& d, int u_power);

/// g0, g1 of a subcase in the normalized form.
std::pair<BiPoly, BiPoly> quadratic_pair(Subcase subcase, const std::array<Scalar, 2>& d);

/// (q0, q1) of bidegree (a, b-2) with p = q0 g0 + q1 g1. Each monomial sheds
/// u^3, u^2v, uv^2 or v^3 according to its u-exponent (>=3, 2, 1, 0).
std::pair<BiPoly, BiPoly> decompose_in_g(const BiPoly& p, Subcase subcase, const std::array<Scalar, 2>& d);

struct Dim2Data {
  std::array<BiPoly, 2> q;  // p2 = q0 g0 + q1 g1
  std::array<BiPoly, 2> r;  // p3 = r0 g0 + r1 g1
};

struct Dim3Data {
  std::array<BiPoly, 2> q;  // alpha = q0 u + q1 v^2
  std::array<BiPoly, 2> r;  // beta = r0 u^2 + r1 v
  std::array<BiPoly, 2> m;  // p3 = m0 u^2 + m1 v^2
};

/// Syzygies on report.generators, each checked exactly.
struct SyzygySet {
  std::vector<SyzygyVector> syzygies;  // Q, S1, S2 (, S3)
  std::vector<std::string> names;
};

Dim2Data decompose_dim2(const CaseReport& report, int b);
SyzygySet build_dim2_syzygies(const CaseReport& report, const Dim2Data& data, int a, int b);

Dim3Data decompose_dim3(const CaseReport& report, int b);
/// Kernel vector N of the 4x4 matrix [Q | S1 | S2 | S3] restricted to rows; see build_dim3_syzygies.
std::array<BiPoly, 4> kernel_vector_n(const CaseReport& report, const Dim3Data& data);
/// Also checks M N = 0 for M = [Q S1 S2 S3].
SyzygySet build_dim3_syzygies(const CaseReport& report, const Dim3Data& data, int a, int b);

/// Dispatches on report.dim_v.
SyzygySet build_syzygies(const CaseReport& report, int a, int b);

/// Maps syzygies on generators = p * reindex back to syzygies on p.
SyzygyVector to_original_basis(const SyzygyVector& s, const ScalarMatrix& reindex);

/// True if M N = 0 where M has the syzygies as columns.
bool annihilates_kernel_vector(const std::vector<SyzygyVector>& columns, const std::array<BiPoly, 4>& n);

}  // namespace tpsurf
