#include "tpsurf/implicit.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "tpsurf/error.hpp"

namespace tpsurf {

StrandMatrix::StrandMatrix(BiDegree nu_, std::size_t cols, const Field& field)
    : nu(nu_), row_monomials(monomial_basis(nu_)), columns(cols), field_(field) {
  LinearForm zero;
  zero.fill(Scalar::in(field, 0));
  entries_.assign(rows() * cols, zero);
}

TPoly StrandMatrix::entry(std::size_t r, std::size_t c) const {
  TPoly p;
  for (std::size_t i = 0; i < 4; ++i) {
    TPoly::Exps e{};
    e[i] = 1;
    p.add_term(e, at(r, c)[i]);
  }
  return p;
}

ScalarMatrix StrandMatrix::evaluate(const std::array<Scalar, 4>& point) const {
  ScalarMatrix m(rows(), cols(), field_);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) {
      const auto& lf = at(r, c);
      Scalar sum = Scalar::in(field_, 0);
      for (std::size_t i = 0; i < 4; ++i) {
        if (!lf[i].is_zero() && !point[i].is_zero()) sum += lf[i] * point[i];
      }
      m(r, c) = std::move(sum);
    }
  }
  return m;
}

ScalarMatrix StrandMatrix::coefficient_matrix() const {
  ScalarMatrix m(4 * rows(), cols(), field_);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t c = 0; c < cols(); ++c) m(i * rows() + r, c) = at(r, c)[i];
  return m;
}

std::vector<std::size_t> StrandMatrix::column_counts(std::size_t syzygies) const {
  std::vector<std::size_t> counts(syzygies, 0);
  for (const auto& col : columns) {
    if (col.syzygy < syzygies) ++counts[col.syzygy];
  }
  return counts;
}

StrandMatrix assemble_strand(const std::vector<SyzygyVector>& syzygies, BiDegree nu, const Field& field) {
  std::vector<StrandColumn> cols;
  for (std::size_t s = 0; s < syzygies.size(); ++s) {
    auto diff = nu.minus(syzygies[s].bidegree);
    if (!diff) {
      fail(ErrorCode::InvalidInput, "implicit_engine::assemble_d1",
           "syzygy of bidegree " + syzygies[s].bidegree.to_string() + " does not fit in strand " + nu.to_string());
    }
    for (const auto& m : monomial_basis(*diff)) cols.push_back({s, m});
  }
  StrandMatrix out(nu, cols.size(), field);
  out.columns = cols;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto& sigma = syzygies[cols[c].syzygy];
    const auto& m = cols[c].cofactor;
    for (std::size_t i = 0; i < 4; ++i) {
      for (const auto& [e, coef] : sigma.entries[i].terms()) {
        BiPoly::Exps x;
        for (std::size_t k = 0; k < 4; ++k) x[k] = static_cast<std::uint16_t>(e[k] + m[k]);
        out.at(monomial_index(x, nu), c)[i] += coef;
      }
    }
  }
  return out;
}

StrandMatrix assemble_d1(const std::vector<SyzygyVector>& syzygies, int a, int b, const Field& field) {
  StrandMatrix m = assemble_strand(syzygies, {2 * a - 1, b - 1}, field);
  const std::size_t n = static_cast<std::size_t>(2 * a * b);
  if (m.rows() != n || m.cols() != n) {
    fail(ErrorCode::NotSquare, "implicit_engine::assemble_d1",
         "strand matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
             std::to_string(n) + "x" + std::to_string(n));
  }
  return m;
}

DetBackend parse_backend(const std::string& name) {
  if (name == "ff") return DetBackend::FractionFree;
  if (name == "interp") return DetBackend::Interpolation;
  if (name == "both") return DetBackend::Both;
  fail(ErrorCode::InvalidInput, "implicit_engine::det_tpoly", "unknown determinant backend '" + name + "'");
}

const char* to_string(DetBackend b) {
  switch (b) {
    case DetBackend::FractionFree: return "ff";
    case DetBackend::Interpolation: return "interp";
    case DetBackend::Both: return "both";
  }
  return "?";
}

namespace {

TPoly::Exps texp(int a, int b, int c, int d) {
  return {static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(c),
          static_cast<std::uint16_t>(d)};
}

TPoly det_fraction_free(const StrandMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<TPoly> a(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m.entry(r, c);
  if (n == 0) return TPoly(Scalar::in(m.field(), 1));
  TPoly prev(Scalar::in(m.field(), 1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k].is_zero()) {
      std::size_t sel = k + 1;
      while (sel < n && a[sel * n + k].is_zero()) ++sel;
      if (sel == n) return TPoly();
      for (std::size_t j = k; j < n; ++j) std::swap(a[sel * n + j], a[k * n + j]);
      negate = !negate;
    }
    const TPoly& piv = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const TPoly& lead = a[i * n + k];
      for (std::size_t j = k + 1; j < n; ++j) {
        TPoly t = a[i * n + j] * piv;
        if (!lead.is_zero() && !a[k * n + j].is_zero()) t -= lead * a[k * n + j];
        a[i * n + j] = exact_divide(t, prev);
      }
    }
    prev = piv;
  }
  TPoly det = a[n * n - 1];
  return negate ? -det : det;
}

// Newton divided differences in place on v[0..m] with nodes 0..m.
void divided_differences(std::vector<Scalar*>& v, const std::vector<Scalar>& inv) {
  const std::size_t m = v.size() - 1;
  for (std::size_t l = 1; l <= m; ++l) {
    for (std::size_t i = m; i >= l; --i) {
      *v[i] = (*v[i] - *v[i - 1]) * inv[l];
    }
  }
}

// Newton coefficients (nodes 0..m-1) to monomial coefficients, in place.
void newton_to_monomial(std::vector<Scalar*>& v, const Field& field) {
  const std::size_t m = v.size() - 1;
  std::vector<Scalar> poly{*v[m]};
  for (std::size_t i = m; i-- > 0;) {
    // poly := poly * (x - i) + c_i
    std::vector<Scalar> next(poly.size() + 1, Scalar::in(field, 0));
    const Scalar node = Scalar::in(field, static_cast<long>(i));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      if (!node.is_zero()) next[k] -= poly[k] * node;
    }
    next[0] += *v[i];
    poly = std::move(next);
  }
  for (std::size_t k = 0; k <= m; ++k) *v[k] = k < poly.size() ? poly[k] : Scalar::in(field, 0);
}

TPoly det_interpolation(const StrandMatrix& m) {
  const Field field = m.field();
  const int deg = static_cast<int>(m.rows());
  if (!field.is_rational() && field.characteristic() <= static_cast<std::uint64_t>(deg)) return det_fraction_free(m);
  const std::size_t side = static_cast<std::size_t>(deg) + 1;
  auto idx = [side](int i, int j, int k) { return (static_cast<std::size_t>(k) * side + j) * side + i; };
  std::vector<Scalar> val(side * side * side);
  for (int k = 0; k <= deg; ++k)
    for (int j = 0; j + k <= deg; ++j)
      for (int i = 0; i + j + k <= deg; ++i) {
        std::array<Scalar, 4> pt{Scalar::in(field, i), Scalar::in(field, j), Scalar::in(field, k), Scalar::in(field, 1)};
        val[idx(i, j, k)] = det_scalar(m.evaluate(pt));
      }
  std::vector<Scalar> inv(side);
  for (std::size_t l = 1; l < side; ++l) inv[l] = Scalar::in(field, static_cast<long>(l)).inverse();

  // each axis in turn: fibers are initial segments of the lower set i+j+k <= deg
  auto fiber = [&](int axis, int p, int q) {
    std::vector<Scalar*> v;
    for (int t = 0; t + p + q <= deg; ++t) {
      if (axis == 0) v.push_back(&val[idx(t, p, q)]);
      else if (axis == 1) v.push_back(&val[idx(p, t, q)]);
      else v.push_back(&val[idx(p, q, t)]);
    }
    return v;
  };
  for (int axis = 0; axis < 3; ++axis)
    for (int p = 0; p <= deg; ++p)
      for (int q = 0; p + q <= deg; ++q) {
        auto v = fiber(axis, p, q);
        divided_differences(v, inv);
      }
  for (int axis = 0; axis < 3; ++axis)
    for (int p = 0; p <= deg; ++p)
      for (int q = 0; p + q <= deg; ++q) {
        auto v = fiber(axis, p, q);
        newton_to_monomial(v, field);
      }
  TPoly det;
  for (int k = 0; k <= deg; ++k)
    for (int j = 0; j + k <= deg; ++j)
      for (int i = 0; i + j + k <= deg; ++i) det.add_term(texp(i, j, k, deg - i - j - k), val[idx(i, j, k)]);
  return det;
}

}  // namespace

TPoly det_tpoly(const StrandMatrix& m, DetBackend backend) {
  if (!m.is_square()) fail(ErrorCode::NonSquare, "implicit_engine::det_tpoly", "strand matrix is not square");
  switch (backend) {
    case DetBackend::FractionFree: return det_fraction_free(m);
    case DetBackend::Interpolation: return det_interpolation(m);
    case DetBackend::Both: {
      TPoly a = det_fraction_free(m);
      TPoly b = det_interpolation(m);
      if (!(a == b)) fail(ErrorCode::InternalContract, "implicit_engine::det_tpoly", "determinant backends disagree");
      return a;
    }
  }
  return TPoly();
}

TPoly normalize(const TPoly& f) {
  if (f.is_zero()) return f;
  Field field = f.field();
  if (!field.is_rational()) return f * f.leading().second.inverse();
  mpz_class lcm = 1, gcd = 0;
  for (const auto& [e, c] : f.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
  for (const auto& [e, c] : f.terms()) {
    mpz_class num = c.rational().get_num() * (lcm / c.rational().get_den());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), num.get_mpz_t());
  }
  mpq_class scale(lcm, gcd);
  scale.canonicalize();
  if (sgn(f.leading().second.rational()) < 0) scale = -scale;
  return f * Scalar(scale);
}

namespace {

using UPoly = std::vector<Scalar>;  // coefficient of lambda^k at index k

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Scalar(static_cast<long>(k)));
  trim(d);
  return d;
}

UPoly sub(UPoly a, const UPoly& b) {
  if (b.empty()) return a;
  if (a.size() < b.size()) a.resize(b.size(), Scalar::in(b.back().field(), 0));
  for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  trim(a);
  return a;
}

// quotient and remainder; b nonzero
std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  UPoly q(a.size() - b.size() + 1);
  Scalar inv = b.back().inverse();
  for (std::size_t k = a.size() - 1;; --k) {
    Scalar c = a[k] * inv;
    q[k - (b.size() - 1)] = c;
    if (!c.is_zero()) {
      for (std::size_t j = 0; j < b.size(); ++j) a[k - (b.size() - 1) + j] -= c * b[j];
    }
    if (k == b.size() - 1) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

UPoly monic(UPoly p) {
  trim(p);
  if (p.empty()) return p;
  Scalar inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Yun's squarefree decomposition; returns multiplicities of nontrivial factors.
std::vector<int> squarefree_multiplicities(const UPoly& f) {
  std::vector<int> mult;
  UPoly fd = derivative(f);
  UPoly a = gcd(f, fd);
  UPoly b = divmod(f, a).first;
  UPoly c = divmod(fd, a).first;
  UPoly d = sub(c, derivative(b));
  for (int i = 1; b.size() > 1; ++i) {
    UPoly ai = gcd(b, d);
    UPoly nb = divmod(b, ai).first;
    UPoly nc = divmod(d, ai).first;
    if (ai.size() > 1) mult.push_back(i);
    b = std::move(nb);
    d = sub(nc, derivative(b));
    if (i > static_cast<int>(f.size())) break;
  }
  return mult;
}

Scalar eval_at(const TPoly& f, const std::array<Scalar, 4>& pt) { return f.evaluate(pt); }

// f(X + w) for a point w.
TPoly translate(const TPoly& f, const std::array<Scalar, 4>& w) {
  const Field field = f.field();
  const int deg = std::max(f.total_degree(), 0);
  // expansions[i][k] = (X_i + w_i)^k as (power, coefficient) pairs
  std::array<std::vector<std::vector<std::pair<int, Scalar>>>, 4> expansions;
  for (std::size_t i = 0; i < 4; ++i) {
    auto& ex = expansions[i];
    ex.push_back({{0, Scalar::in(field, 1)}});
    for (int k = 1; k <= deg; ++k) {
      if (w[i].is_zero()) {
        ex.push_back({{k, Scalar::in(field, 1)}});
        continue;
      }
      std::vector<Scalar> coeffs(static_cast<std::size_t>(k) + 1, Scalar::in(field, 0));
      for (const auto& [pw, c] : ex.back()) {
        coeffs[static_cast<std::size_t>(pw) + 1] += c;
        coeffs[static_cast<std::size_t>(pw)] += c * w[i];
      }
      std::vector<std::pair<int, Scalar>> row;
      for (int pw = 0; pw <= k; ++pw) {
        if (!coeffs[static_cast<std::size_t>(pw)].is_zero()) row.push_back({pw, coeffs[static_cast<std::size_t>(pw)]});
      }
      ex.push_back(std::move(row));
    }
  }
  TPoly out;
  for (const auto& [e, c] : f.terms()) {
    for (const auto& [p0, c0] : expansions[0][e[0]])
      for (const auto& [p1, c1] : expansions[1][e[1]]) {
        Scalar c01 = c * c0 * c1;
        for (const auto& [p2, c2] : expansions[2][e[2]]) {
          Scalar c012 = c01 * c2;
          for (const auto& [p3, c3] : expansions[3][e[3]]) out.add_term(texp(p0, p1, p2, p3), c012 * c3);
        }
      }
  }
  return out;
}

std::optional<std::array<Scalar, 4>> nonvanishing_point(const TPoly& f) {
  const Field field = f.field();
  auto s = [&](long x) { return Scalar::in(field, x); };
  std::vector<std::array<Scalar, 4>> tries = {
      {s(0), s(0), s(0), s(1)}, {s(1), s(0), s(0), s(0)}, {s(0), s(1), s(0), s(0)},
      {s(0), s(0), s(1), s(0)}, {s(1), s(1), s(1), s(1)},
  };
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (int k = 0; k < 40; ++k) tries.push_back({s(dist(rng)), s(dist(rng)), s(dist(rng)), s(dist(rng))});
  for (const auto& w : tries) {
    if (!eval_at(f, w).is_zero()) return w;
  }
  return std::nullopt;
}

std::optional<TPoly> try_root(const TPoly& delta, int e) {
  const Field field = delta.field();
  const int deg = delta.total_degree();
  const int target = deg / e;
  if (!field.is_rational() && field.characteristic() <= static_cast<std::uint64_t>(deg)) return std::nullopt;
  auto w = nonvanishing_point(delta);
  if (!w) return std::nullopt;
  const Scalar dw = eval_at(delta, *w);
  auto g = (translate(delta, *w) * dw.inverse()).homogeneous_components();
  std::vector<TPoly> r{TPoly(Scalar::in(field, 1))};
  for (int k = 1; k <= target; ++k) {
    TPoly acc;
    for (int j = 1; j <= k && j < static_cast<int>(g.size()); ++j) {
      if (g[static_cast<std::size_t>(j)].is_zero() || r[static_cast<std::size_t>(k - j)].is_zero()) continue;
      const long weight = j - static_cast<long>(e) * (k - j);
      if (weight == 0) continue;
      acc += (g[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k - j)]) * Scalar::in(field, weight);
    }
    r.push_back(acc * Scalar::in(field, static_cast<long>(e) * k).inverse());
  }
  TPoly series;
  for (const auto& part : r) series += part;
  std::array<Scalar, 4> back;
  for (std::size_t i = 0; i < 4; ++i) back[i] = -(*w)[i];
  TPoly f = translate(series, back);
  if (!f.is_homogeneous() || f.total_degree() != target) return std::nullopt;
  if (!(f.pow(static_cast<unsigned>(e)) * dw == delta)) return std::nullopt;
  return f;
}

}  // namespace

std::vector<int> line_multiplicities(const TPoly& delta) {
  const Field field = delta.field();
  const int deg = delta.total_degree();
  if (deg <= 0) return {};
  if (!field.is_rational() && field.characteristic() <= static_cast<std::uint64_t>(deg)) return {};
  std::mt19937_64 rng(0x11e5);
  std::uniform_int_distribution<long> dist(-20, 20);
  auto draw = [&] {
    std::array<Scalar, 4> p;
    for (auto& x : p) x = Scalar::in(field, dist(rng));
    return p;
  };
  auto base = draw();
  std::array<Scalar, 4> dir = draw();
  for (int k = 0; k < 100 && eval_at(delta, dir).is_zero(); ++k) dir = draw();
  if (eval_at(delta, dir).is_zero()) return {};
  // delta(base + lambda dir) at lambda = 0..deg, then Newton interpolation
  std::vector<Scalar> y;
  for (int l = 0; l <= deg; ++l) {
    std::array<Scalar, 4> pt;
    for (std::size_t i = 0; i < 4; ++i) pt[i] = base[i] + dir[i] * Scalar::in(field, l);
    y.push_back(eval_at(delta, pt));
  }
  for (int l = 1; l <= deg; ++l)
    for (int i = deg; i >= l; --i) y[i] = (y[i] - y[i - 1]) * Scalar::in(field, l).inverse();
  UPoly poly{y[static_cast<std::size_t>(deg)]};
  for (int i = deg; i-- > 0;) {
    UPoly next(poly.size() + 1, Scalar::in(field, 0));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * Scalar::in(field, i);
    }
    next[0] += y[static_cast<std::size_t>(i)];
    poly = std::move(next);
  }
  trim(poly);
  return squarefree_multiplicities(poly);
}

ImplicitResult extract_root(const TPoly& delta) {
  const char* origin = "implicit_engine::extract_root";
  if (delta.is_zero()) fail(ErrorCode::ZeroDeterminant, origin, "determinant is identically zero");
  if (!delta.is_homogeneous()) fail(ErrorCode::InvalidInput, origin, "determinant is not homogeneous");
  const int deg = delta.total_degree();
  ImplicitResult res;
  res.delta = delta;
  auto mult = line_multiplicities(delta);
  int g = deg;
  if (!mult.empty()) {
    g = 0;
    for (int m : mult) g = std::gcd(g, m);
    g = std::gcd(g, deg);
  }
  for (int e = g; e > 1; --e) {
    if (g % e != 0) continue;
    if (auto f = try_root(delta, e)) {
      res.f = normalize(*f);
      res.e = e;
      res.deg_f = deg / e;
      res.perfect_power = true;
      return res;
    }
  }
  res.f = normalize(delta);
  res.e = 1;
  res.deg_f = deg;
  return res;
}

namespace {

std::vector<long> grid_values(int count) {
  std::vector<long> v;
  for (long k = 0; static_cast<int>(v.size()) < count; ++k) {
    v.push_back(k);
    if (k > 0 && static_cast<int>(v.size()) < count) v.push_back(-k);
  }
  return v;
}

bool all_integer(const TPoly& f, const Generators& p) {
  for (const auto& [e, c] : f.terms()) {
    if (!c.is_rational() || c.rational().get_den() != 1) return false;
  }
  for (const auto& g : p)
    for (const auto& [e, c] : g.terms()) {
      if (!c.is_rational() || c.rational().get_den() != 1) return false;
    }
  return true;
}

// Evaluates F(p(s,1,u,1)) over a grid with exact integers.
bool vanishes_on_grid_integer(const TPoly& f, const Generators& p, const std::vector<long>& sv,
                              const std::vector<long>& uv, int deg_f) {
  std::vector<std::pair<TPoly::Exps, mpz_class>> fterms;
  for (const auto& [e, c] : f.terms()) fterms.push_back({e, c.rational().get_num()});
  std::array<std::vector<std::pair<BiPoly::Exps, mpz_class>>, 4> pterms;
  for (std::size_t i = 0; i < 4; ++i)
    for (const auto& [e, c] : p[i].terms()) pterms[i].push_back({e, c.rational().get_num()});
  std::array<std::vector<mpz_class>, 4> powers;
  mpz_class term, sum, spow, upow;
  for (long s : sv) {
    for (long u : uv) {
      for (std::size_t i = 0; i < 4; ++i) {
        mpz_class x = 0;
        for (const auto& [e, c] : pterms[i]) {
          mpz_ui_pow_ui(spow.get_mpz_t(), static_cast<unsigned long>(std::labs(s)), e[0]);
          if (s < 0 && (e[0] & 1)) spow = -spow;
          mpz_ui_pow_ui(upow.get_mpz_t(), static_cast<unsigned long>(std::labs(u)), e[2]);
          if (u < 0 && (e[2] & 1)) upow = -upow;
          x += c * spow * upow;
        }
        powers[i].assign(static_cast<std::size_t>(deg_f) + 1, 1);
        for (int k = 1; k <= deg_f; ++k) powers[i][static_cast<std::size_t>(k)] = powers[i][static_cast<std::size_t>(k) - 1] * x;
      }
      sum = 0;
      for (const auto& [e, c] : fterms) {
        term = c;
        for (std::size_t i = 0; i < 4; ++i) {
          if (e[i]) term *= powers[i][e[i]];
        }
        sum += term;
      }
      if (sum != 0) return false;
    }
  }
  return true;
}

}  // namespace

bool verify_implicit(const TPoly& f, const Generators& p) {
  if (f.is_zero()) return true;
  auto bideg = bidegree(p[0]);
  if (!bideg) fail(ErrorCode::InvalidInput, "implicit_engine::verify_implicit", "generators are not bihomogeneous");
  if (!f.is_homogeneous()) {
    for (const auto& part : f.homogeneous_components()) {
      if (!verify_implicit(part, p)) return false;
    }
    return true;
  }
  const int deg_f = f.total_degree();
  const int sa = deg_f * bideg->c, sb = deg_f * bideg->d;
  Field field = f.field();
  for (const auto& g : p) {
    if (!g.field().is_rational()) field = g.field();
  }
  if (!field.is_rational() && field.characteristic() <= static_cast<std::uint64_t>(std::max(sa, sb))) {
    return substitute(f, p).is_zero();
  }
  // F(p) has bidegree (sa, sb); dehomogenized at t = v = 1 it is determined by a grid
  const auto sv = grid_values(sa + 1);
  const auto uv = grid_values(sb + 1);
  if (field.is_rational() && all_integer(f, p)) return vanishes_on_grid_integer(f, p, sv, uv, deg_f);
  for (long s : sv) {
    for (long u : uv) {
      std::array<Scalar, 4> pt{Scalar::in(field, s), Scalar::in(field, 1), Scalar::in(field, u), Scalar::in(field, 1)};
      std::array<Scalar, 4> img;
      for (std::size_t i = 0; i < 4; ++i) img[i] = p[i].evaluate(pt);
      if (!f.evaluate(img).is_zero()) return false;
    }
  }
  return true;
}

bool proportional(const TPoly& f, const TPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  TPoly a = f, b = g;
  Field ff = f.field(), fg = g.field();
  if (!(ff == fg)) {
    if (!ff.is_rational() && !fg.is_rational()) return false;
    if (ff.is_rational()) a = a.to_field(fg);
    else b = b.to_field(ff);
    if (a.is_zero() || b.is_zero()) return false;
  }
  if (a.size() != b.size()) return false;
  Scalar c = a.leading().second / b.leading().second;
  return a == b * c;
}

}  // namespace tpsurf
