#include "tpsurf/quad.hpp"

#include "tpsurf/error.hpp"

namespace tpsurf {

namespace {

BiPoly combination(const Generators& p, const ScalarMatrix& m, std::size_t col) {
  BiPoly sum;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!m(i, col).is_zero()) sum += p[i] * m(i, col);
  }
  return sum;
}

SyzygyVector normalized(const SyzygyVector& q) {
  for (const auto& x : q.to_vector()) {
    if (x.is_zero()) continue;
    Scalar inv = x.inverse();
    SyzygyVector out = q;
    for (auto& e : out.entries) e *= inv;
    return out;
  }
  return q;
}

// Lexicographically first set of unit vectors completing `cols` to a basis of k^4.
std::vector<std::size_t> complete_basis(const std::vector<std::vector<Scalar>>& cols, const Field& field) {
  const std::size_t need = 4 - cols.size();
  std::vector<std::size_t> idx(need);
  auto try_set = [&](const std::vector<std::size_t>& set) {
    auto all = cols;
    for (auto i : set) {
      std::vector<Scalar> e(4, Scalar::in(field, 0));
      e[i] = Scalar::in(field, 1);
      all.push_back(std::move(e));
    }
    return rank(ScalarMatrix::from_columns(all, 4)) == 4;
  };
  if (need == 1) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (try_set({i})) return {i};
    }
  } else if (need == 2) {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        if (try_set({i, j})) return {i, j};
      }
  }
  fail(ErrorCode::InternalContract, "quad_analyzer::classify", "cannot complete the selected forms to a basis of U");
}

}  // namespace

SurfaceInput swap_symmetry(const SurfaceInput& u) {
  SurfaceInput out{u.b, u.a, {}};
  for (std::size_t i = 0; i < 4; ++i) out.p[i] = swap_factors(u.p[i]);
  return out;
}

QuadSyzygy require_hypotheses(const SurfaceInput& u, const Certificate& cert) {
  const char* origin = "quad_analyzer::require_hypotheses";
  if (!cert.certified) {
    fail(ErrorCode::NotCertifiedBasepointFree, origin,
         "could not certify that U is basepoint free: (I_U)_{N,N} != R_{N,N} for all N <= " + std::to_string(cert.cap));
  }
  if (!syzygy_strand(u, {0, 1}).empty() || !syzygy_strand(u, {1, 0}).empty()) {
    fail(ErrorCode::HasLinearSyzygy, origin,
         "I_U has a linear first syzygy; this input needs the linear-syzygy method, which is not supported");
  }
  auto q02 = syzygy_strand(u, {0, 2});
  if (!q02.empty()) {
    if (u.b < 3) fail(ErrorCode::DegreeTooSmall, origin, "a (0,2) syzygy requires b >= 3, got b = " + std::to_string(u.b));
    return {u, false, normalized(q02.front())};
  }
  if (!syzygy_strand(u, {2, 0}).empty()) {
    if (u.a < 3) fail(ErrorCode::DegreeTooSmall, origin, "a (2,0) syzygy requires a >= 3, got a = " + std::to_string(u.a));
    SurfaceInput sw = swap_symmetry(u);
    auto q = syzygy_strand(sw, {0, 2});
    if (q.empty()) fail(ErrorCode::InternalContract, origin, "swapped input lost its quadratic syzygy");
    return {sw, true, normalized(q.front())};
  }
  fail(ErrorCode::NoQuadraticSyzygy, origin, "I_U has no first syzygy of bidegree (0,2) or (2,0)");
}

FVector build_fvector(const SurfaceInput& u, const SyzygyVector& q) {
  const char* origin = "quad_analyzer::build_fvector";
  if (!(q.bidegree == BiDegree{0, 2})) fail(ErrorCode::InternalContract, origin, "syzygy is not of bidegree (0,2)");
  FVector fv;
  fv.phi = ScalarMatrix(4, 3, u.field());
  for (std::size_t i = 0; i < 4; ++i) {
    auto c = coefficient_vector(q.entries[i], {0, 2});
    for (std::size_t j = 0; j < 3; ++j) fv.phi(i, j) = c[j];
  }
  for (std::size_t j = 0; j < 3; ++j) fv.f.push_back(combination(u.p, fv.phi, j));
  BiPoly check = fv.f[0] * uv_monomial(2, 0) + fv.f[1] * uv_monomial(1, 1) + fv.f[2] * uv_monomial(0, 2);
  if (!check.is_zero()) fail(ErrorCode::InternalContract, origin, "[f0,f1,f2] is not a syzygy on [u^2,uv,v^2]");
  if (fv.f[0].is_zero() || fv.f[2].is_zero()) fail(ErrorCode::InternalContract, origin, "f0 or f2 vanishes");
  return fv;
}

const char* to_string(Subcase s) {
  switch (s) {
    case Subcase::I: return "i";
    case Subcase::II: return "ii";
    case Subcase::None: break;
  }
  return "none";
}

CaseReport classify(const SurfaceInput& u, const FVector& fv) {
  const char* origin = "quad_analyzer::classify";
  const Field field = u.field();
  const auto& phi = fv.phi;
  CaseReport rep;
  rep.dim_v = static_cast<int>(rank(phi));
  rep.reindex = ScalarMatrix(4, 4, field);

  std::vector<std::vector<Scalar>> selected;
  if (rep.dim_v == 2) {
    auto ker = kernel_basis(phi);
    if (ker.size() != 1) fail(ErrorCode::InternalContract, origin, "kernel of phi is not one-dimensional");
    rep.kernel = ker.front();
    const Scalar &k0 = rep.kernel[0], &k1 = rep.kernel[1], &k2 = rep.kernel[2];
    BiPoly target;  // f_i with h g1 = -f_i
    std::size_t col1 = 0;
    if (!k2.is_zero()) {
      // f2 = d1 f0 + d0 f1 rearranges the syzygy as f0 (u^2 + d1 v^2) = -f1 (uv + d0 v^2)
      rep.subcase = Subcase::I;
      rep.d = {-k1 / k2, -k0 / k2};
      if ((rep.d[0] * rep.d[0] + rep.d[1]).is_zero()) {
        fail(ErrorCode::NonvanishingViolated, origin, "subcase i requires d0^2 + d1 != 0");
      }
      rep.g0 = uv_monomial(1, 1) + uv_monomial(0, 2, rep.d[0]);
      rep.g1 = uv_monomial(2, 0) + uv_monomial(0, 2, rep.d[1]);
      col1 = 1;
    } else {
      if (k1.is_zero()) fail(ErrorCode::InternalContract, origin, "kernel of phi forces f0 = 0");
      rep.subcase = Subcase::II;
      rep.d = {-k2 / k1, -k0 / k1};
      if ((rep.d[0] * rep.d[1] - Scalar(1)).is_zero()) {
        fail(ErrorCode::NonvanishingViolated, origin, "subcase ii requires d0 d1 - 1 != 0");
      }
      rep.g0 = uv_monomial(0, 2) + uv_monomial(1, 1, rep.d[0]);
      rep.g1 = uv_monomial(2, 0) + uv_monomial(1, 1, rep.d[1]);
      col1 = 2;
    }
    BiPoly h = exact_divide(fv.f[0], rep.g0);
    Scalar lambda = h.leading().second.inverse();
    rep.h = h * lambda;
    rep.generators[0] = rep.h * rep.g0;
    rep.generators[1] = rep.h * rep.g1;
    if (!(rep.generators[1] == -(fv.f[col1] * lambda))) {
      fail(ErrorCode::InternalContract, origin, "h g1 does not reproduce the expected f");
    }
    std::vector<Scalar> c0(4), c1(4);
    for (std::size_t i = 0; i < 4; ++i) {
      c0[i] = phi(i, 0) * lambda;
      c1[i] = -(phi(i, col1) * lambda);
    }
    selected = {c0, c1};
  } else if (rep.dim_v == 3) {
    rep.subcase = Subcase::None;
    rep.alpha = exact_divide(fv.f[0], uv_monomial(0, 1));
    rep.beta = exact_divide(-fv.f[2], uv_monomial(1, 0));
    if (!(fv.f[1] == rep.beta * uv_monomial(0, 1) - rep.alpha * uv_monomial(1, 0))) {
      fail(ErrorCode::InternalContract, origin, "f1 != beta v - alpha u");
    }
    for (std::size_t j = 0; j < 3; ++j) {
      rep.generators[j] = fv.f[j];
      selected.push_back(phi.column(j));
    }
  } else {
    fail(ErrorCode::InternalContract, origin, "dim V = " + std::to_string(rep.dim_v) + " is outside 2..3");
  }

  rep.retained = complete_basis(selected, field);
  for (std::size_t j = 0; j < selected.size(); ++j)
    for (std::size_t i = 0; i < 4; ++i) rep.reindex(i, j) = selected[j][i];
  for (std::size_t k = 0; k < rep.retained.size(); ++k) {
    const std::size_t j = selected.size() + k;
    rep.reindex(rep.retained[k], j) = Scalar::in(field, 1);
    rep.generators[j] = u.p[rep.retained[k]];
  }
  for (std::size_t j = 0; j < 4; ++j) {
    if (!(combination(u.p, rep.reindex, j) == rep.generators[j])) {
      fail(ErrorCode::InternalContract, origin, "reindex matrix does not reproduce generator " + std::to_string(j));
    }
  }
  return rep;
}

GeneralizedV generalized_V(const SurfaceInput& u, const SyzygyVector& sigma) {
  const std::size_t n = monomial_count(sigma.bidegree);
  ScalarMatrix coeffs(4, n, u.field());
  for (std::size_t i = 0; i < 4; ++i) {
    auto c = coefficient_vector(sigma.entries[i], sigma.bidegree);
    for (std::size_t j = 0; j < n; ++j) coeffs(i, j) = c[j];
  }
  GeneralizedV out;
  out.dim_v = static_cast<int>(rank(coeffs));
  for (std::size_t j = 0; j < n; ++j) out.f.push_back(combination(u.p, coeffs, j));
  return out;
}

}  // namespace tpsurf
