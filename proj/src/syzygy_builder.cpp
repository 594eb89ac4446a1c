#include "tpsurf/syzygy_builder.hpp"

#include "tpsurf/error.hpp"

namespace tpsurf {

namespace {

BiPoly lin(const Scalar& cu, const Scalar& cv) { return uv_monomial(1, 0, cu) + uv_monomial(0, 1, cv); }

SyzygyVector make_syzygy(std::array<BiPoly, 4> entries, BiDegree deg, const Generators& gens, const char* name) {
  for (const auto& e : entries) {
    if (!e.is_zero() && !is_bihomogeneous_of(e, deg)) {
      fail(ErrorCode::InternalContract, "syzygy_builder::build",
           std::string(name) + " has an entry outside bidegree " + deg.to_string());
    }
  }
  SyzygyVector s{std::move(entries), deg};
  if (!s.annihilates(gens)) {
    fail(ErrorCode::InternalContract, "syzygy_builder::build", std::string(name) + " is not a syzygy");
  }
  return s;
}

// Monomial exponents with the given u/v exponents removed.
BiPoly::Exps strip(const BiPoly::Exps& e, int du, int dv) {
  return bimonomial(e[0], e[1], e[2] - du, e[3] - dv);
}

}  // namespace

std::pair<BiPoly, BiPoly> quadratic_pair(Subcase subcase, const std::array<Scalar, 2>& d) {
  if (subcase == Subcase::I) {
    return {uv_monomial(1, 1) + uv_monomial(0, 2, d[0]), uv_monomial(2, 0) + uv_monomial(0, 2, d[1])};
  }
  if (subcase == Subcase::II) {
    return {uv_monomial(0, 2) + uv_monomial(1, 1, d[0]), uv_monomial(2, 0) + uv_monomial(1, 1, d[1])};
  }
  fail(ErrorCode::InternalContract, "syzygy_builder::quadratic_pair", "no quadratic pair outside dim V = 2");
}

std::pair<BiPoly, BiPoly> cubic_decompose(Subcase subcase, const std::array<Scalar, 2>& d, int u_power) {
  const char* origin = "syzygy_builder::cubic_decompose";
  if (u_power < 0 || u_power > 3) fail(ErrorCode::InvalidInput, origin, "u exponent must be in 0..3");
  const Scalar& d0 = d[0];
  const Scalar& d1 = d[1];
  const Scalar zero = d0 - d0;
  if (subcase == Subcase::I) {
    Scalar den = d0 * d0 + d1;
    if (den.is_zero()) fail(ErrorCode::DenominatorZero, origin, "d0^2 + d1 = 0");
    Scalar k = den.inverse();
    switch (u_power) {
      case 3: return {lin(-d0 * d1 * k, -d1 * d1 * k), lin(Scalar(1), d0 * d1 * k)};
      case 2: return {lin(d1 * k, -d0 * d1 * k), lin(zero, d0 * d0 * k)};
      case 1: return {lin(d0 * k, d1 * k), lin(zero, -d0 * k)};
      default: return {lin(-k, d0 * k), lin(zero, k)};
    }
  }
  if (subcase == Subcase::II) {
    Scalar den = d0 * d1 - Scalar(1);
    if (den.is_zero()) fail(ErrorCode::DenominatorZero, origin, "d0 d1 - 1 = 0");
    Scalar k = den.inverse();
    switch (u_power) {
      case 3: return {lin(-d1 * d1 * k, zero), lin(Scalar(1), d1 * k)};
      case 2: return {lin(d1 * k, zero), lin(zero, -k)};
      case 1: return {lin(-k, zero), lin(zero, d0 * k)};
      default: return {lin(d0 * k, Scalar(1)), lin(zero, -d0 * d0 * k)};
    }
  }
  fail(ErrorCode::InternalContract, origin, "no cubic decomposition outside dim V = 2");
}

std::pair<BiPoly, BiPoly> decompose_in_g(const BiPoly& p, Subcase subcase, const std::array<Scalar, 2>& d) {
  std::array<std::pair<BiPoly, BiPoly>, 4> chunks;
  for (int e = 0; e <= 3; ++e) chunks[static_cast<std::size_t>(e)] = cubic_decompose(subcase, d, e);
  BiPoly q0, q1;
  for (const auto& [e, c] : p.terms()) {
    const int eu = e[2], ev = e[3];
    if (eu + ev < 3) fail(ErrorCode::DegreeTooSmall, "syzygy_builder::decompose_in_g", "needs degree >= 3 in u,v");
    const int take_u = eu >= 3 ? 3 : eu;
    const auto& [c0, c1] = chunks[static_cast<std::size_t>(take_u)];
    BiPoly cofactor = BiPoly::monomial(strip(e, take_u, 3 - take_u), c);
    q0 += cofactor * c0;
    q1 += cofactor * c1;
  }
  return {q0, q1};
}

Dim2Data decompose_dim2(const CaseReport& report, int b) {
  if (b < 3) fail(ErrorCode::DegreeTooSmall, "syzygy_builder::decompose_in_g", "needs b >= 3");
  Dim2Data data;
  auto [q0, q1] = decompose_in_g(report.generators[2], report.subcase, report.d);
  auto [r0, r1] = decompose_in_g(report.generators[3], report.subcase, report.d);
  data.q = {q0, q1};
  data.r = {r0, r1};
  if (!(q0 * report.g0 + q1 * report.g1 == report.generators[2]) ||
      !(r0 * report.g0 + r1 * report.g1 == report.generators[3])) {
    fail(ErrorCode::InternalContract, "syzygy_builder::decompose_in_g", "decomposition does not re-expand");
  }
  return data;
}

SyzygySet build_dim2_syzygies(const CaseReport& report, const Dim2Data& data, int a, int b) {
  const auto& g = report.generators;
  const BiDegree low{a, b - 2};
  SyzygySet set;
  set.syzygies.push_back(make_syzygy({report.g1, -report.g0, BiPoly(), BiPoly()}, {0, 2}, g, "Q"));
  set.syzygies.push_back(make_syzygy({data.q[0], data.q[1], -report.h, BiPoly()}, low, g, "S1"));
  set.syzygies.push_back(make_syzygy({data.r[0], data.r[1], BiPoly(), -report.h}, low, g, "S2"));
  set.names = {"Q", "S1", "S2"};
  return set;
}

Dim3Data decompose_dim3(const CaseReport& report, int b) {
  const char* origin = "syzygy_builder::decompose_dim3";
  if (b < 3) fail(ErrorCode::DegreeTooSmall, origin, "needs b >= 3");
  Dim3Data data;
  for (const auto& [e, c] : report.alpha.terms()) {
    if (e[2] >= 1) data.q[0].add_term(strip(e, 1, 0), c);
    else data.q[1].add_term(strip(e, 0, 2), c);
  }
  for (const auto& [e, c] : report.beta.terms()) {
    if (e[3] >= 1) data.r[1].add_term(strip(e, 0, 1), c);
    else data.r[0].add_term(strip(e, 2, 0), c);
  }
  for (const auto& [e, c] : report.generators[3].terms()) {
    if (e[2] >= 2) data.m[0].add_term(strip(e, 2, 0), c);
    else data.m[1].add_term(strip(e, 0, 2), c);
  }
  const BiPoly u = uv_monomial(1, 0), v = uv_monomial(0, 1), u2 = uv_monomial(2, 0), v2 = uv_monomial(0, 2);
  if (!(data.q[0] * u + data.q[1] * v2 == report.alpha) || !(data.r[0] * u2 + data.r[1] * v == report.beta) ||
      !(data.m[0] * u2 + data.m[1] * v2 == report.generators[3])) {
    fail(ErrorCode::InternalContract, origin, "decomposition does not re-expand");
  }
  return data;
}

std::array<BiPoly, 4> kernel_vector_n(const CaseReport& report, const Dim3Data& data) {
  const BiPoly u = uv_monomial(1, 0), v = uv_monomial(0, 1);
  return {data.m[0] * (data.q[1] * u - data.r[1]) + data.m[1] * (data.r[0] * v - data.q[0]), report.generators[3],
          report.beta, report.alpha};
}

bool annihilates_kernel_vector(const std::vector<SyzygyVector>& columns, const std::array<BiPoly, 4>& n) {
  if (columns.size() != 4) return false;
  for (std::size_t row = 0; row < 4; ++row) {
    BiPoly sum;
    for (std::size_t j = 0; j < 4; ++j) sum += columns[j].entries[row] * n[j];
    if (!sum.is_zero()) return false;
  }
  return true;
}

SyzygySet build_dim3_syzygies(const CaseReport& report, const Dim3Data& data, int a, int b) {
  const auto& g = report.generators;
  const BiPoly u = uv_monomial(1, 0), v = uv_monomial(0, 1);
  const auto& [q0, q1] = data.q;
  const auto& [r0, r1] = data.r;
  const auto& [m0, m1] = data.m;
  SyzygySet set;
  set.syzygies.push_back(make_syzygy({uv_monomial(2, 0), uv_monomial(1, 1), uv_monomial(0, 2), BiPoly()}, {0, 2}, g, "Q"));
  set.syzygies.push_back(make_syzygy({-(q1 * u) + r1, -(r0 * u) - q1 * v, q0 - r0 * v, BiPoly()}, {a, b - 2}, g, "S1"));
  set.syzygies.push_back(make_syzygy({-(m1 * v), m0 * u, m0 * v, report.alpha}, {a, b - 1}, g, "S2"));
  set.syzygies.push_back(make_syzygy({m1 * u, m1 * v, -(m0 * u), -report.beta}, {a, b - 1}, g, "S3"));
  set.names = {"Q", "S1", "S2", "S3"};
  if (!annihilates_kernel_vector(set.syzygies, kernel_vector_n(report, data))) {
    fail(ErrorCode::InternalContract, "syzygy_builder::build_dim3_syzygies", "M N != 0");
  }
  return set;
}

SyzygySet build_syzygies(const CaseReport& report, int a, int b) {
  if (report.dim_v == 2) return build_dim2_syzygies(report, decompose_dim2(report, b), a, b);
  if (report.dim_v == 3) return build_dim3_syzygies(report, decompose_dim3(report, b), a, b);
  fail(ErrorCode::InternalContract, "syzygy_builder::build", "dim V must be 2 or 3");
}

SyzygyVector to_original_basis(const SyzygyVector& s, const ScalarMatrix& reindex) {
  SyzygyVector out;
  out.bidegree = s.bidegree;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (!reindex(i, j).is_zero() && !s.entries[j].is_zero()) out.entries[i] += s.entries[j] * reindex(i, j);
    }
  }
  return out;
}

}  // namespace tpsurf
