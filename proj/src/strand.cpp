#include "tpsurf/strand.hpp"

#include <algorithm>
#include <numeric>

#include "tpsurf/error.hpp"

namespace tpsurf {

namespace {

constexpr std::uint64_t kScreenPrime = 2305843009213693951ull;  // 2^61 - 1

}  // namespace

ScalarMatrix generator_matrix(const Generators& p, BiDegree deg) {
  std::vector<std::vector<Scalar>> cols;
  for (const auto& g : p) cols.push_back(coefficient_vector(g, deg));
  return ScalarMatrix::from_columns(cols, monomial_count(deg));
}

SurfaceInput SurfaceInput::make(int a, int b, Generators p) {
  const char* origin = "strand_toolkit::SurfaceInput";
  if (a < 1 || b < 1) fail(ErrorCode::InvalidInput, origin, "bidegree components must be at least 1");
  std::optional<Field> field;
  for (std::size_t i = 0; i < 4; ++i) {
    if (p[i].is_zero()) fail(ErrorCode::InvalidInput, origin, "p" + std::to_string(i) + " is zero");
    if (!is_bihomogeneous_of(p[i], {a, b})) {
      fail(ErrorCode::InvalidInput, origin,
           "p" + std::to_string(i) + " is not bihomogeneous of bidegree " + BiDegree{a, b}.to_string());
    }
    Field f = p[i].field();
    if (!f.is_rational()) {
      if (field && !(*field == f)) fail(ErrorCode::FieldMismatch, origin, "generators over different fields");
      field = f;
    }
  }
  if (field) {
    for (auto& g : p) g = g.to_field(*field);
  }
  if (rank(generator_matrix(p, {a, b})) != 4) {
    fail(ErrorCode::InvalidInput, origin, "generators are linearly dependent");
  }
  return SurfaceInput{a, b, std::move(p)};
}

Field SurfaceInput::field() const {
  for (const auto& g : p) {
    if (!g.field().is_rational()) return g.field();
  }
  return Field::rationals();
}

BiPoly SyzygyVector::apply(const Generators& gens) const {
  BiPoly sum;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!entries[i].is_zero()) sum += entries[i] * gens[i];
  }
  return sum;
}

std::vector<Scalar> SyzygyVector::to_vector() const {
  std::vector<Scalar> v;
  v.reserve(4 * monomial_count(bidegree));
  for (const auto& e : entries) {
    auto c = coefficient_vector(e, bidegree);
    v.insert(v.end(), c.begin(), c.end());
  }
  return v;
}

SyzygyVector SyzygyVector::from_vector(std::span<const Scalar> v, BiDegree deg) {
  const std::size_t n = monomial_count(deg);
  if (v.size() != 4 * n) fail(ErrorCode::InternalContract, "strand_toolkit::from_vector", "wrong vector length");
  SyzygyVector s;
  s.bidegree = deg;
  for (std::size_t i = 0; i < 4; ++i) s.entries[i] = from_coefficients(v.subspan(i * n, n), deg);
  return s;
}

SyzygyVector SyzygyVector::shifted(const BiPoly::Exps& m) const {
  SyzygyVector s;
  s.bidegree = {bidegree.c + m[0] + m[1], bidegree.d + m[2] + m[3]};
  for (std::size_t i = 0; i < 4; ++i) s.entries[i] = entries[i].shifted(m);
  return s;
}

bool SyzygyVector::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const BiPoly& e) { return e.is_zero(); });
}

std::vector<BiDegree> SyzygyTable::multiset() const {
  std::vector<BiDegree> out;
  for (const auto& e : entries) {
    for (int k = 0; k < e.multiplicity; ++k) out.push_back(e.deg);
  }
  std::sort(out.begin(), out.end(), [](BiDegree x, BiDegree y) { return x.c != y.c ? x.c < y.c : x.d < y.d; });
  return out;
}

ScalarMatrix multiplication_matrix(const SurfaceInput& u, BiDegree deg) {
  const Field field = u.field();
  const BiDegree target = deg + u.degree();
  const auto basis = monomial_basis(deg);
  const std::size_t n = basis.size();
  ScalarMatrix m(monomial_count(target), 4 * n, field);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [e, c] : u.p[i].terms()) {
        BiPoly::Exps x;
        for (std::size_t k = 0; k < 4; ++k) x[k] = static_cast<std::uint16_t>(e[k] + basis[j][k]);
        m(monomial_index(x, target), i * n + j) = c;
      }
    }
  }
  return m;
}

std::size_t ideal_component_dim(const SurfaceInput& u, BiDegree deg) {
  auto diff = deg.minus(u.degree());
  if (!diff) return 0;
  return rank(multiplication_matrix(u, *diff));
}

Certificate basepoint_free_certificate(const SurfaceInput& u, int cap) {
  Certificate cert;
  cert.cap = cap > 0 ? cap : 2 * (u.a + u.b);
  const bool rational = u.field().is_rational();
  for (int n = std::max(u.a, u.b); n <= cert.cap; ++n) {
    const std::size_t full = static_cast<std::size_t>((n + 1) * (n + 1));
    auto m = multiplication_matrix(u, {n - u.a, n - u.b});
    if (m.cols() < full) continue;
    std::size_t r = 0;
    bool screened = false;
    if (rational) {
      // rank mod p never exceeds the rank over Q, so a full rank mod p is a proof
      try {
        screened = rank_mod(m, kScreenPrime) == full;
      } catch (const Error&) {
        screened = false;
      }
    }
    r = screened ? full : rank(m);
    if (r == full) {
      cert.certified = true;
      cert.level = n;
      return cert;
    }
  }
  return cert;
}

namespace {

// Kernel of the multiplication map in one bidegree, optionally computed on a
// column permutation; vectors are returned in the original column order.
struct StrandKernel {
  std::vector<std::size_t> perm;  // permuted column j is original column perm[j]
  std::vector<std::size_t> free;  // free columns (permuted indexing), ascending
  std::vector<std::vector<Scalar>> basis;  // original indexing

  std::size_t dim() const { return free.size(); }
  // Coordinates of a kernel element in this basis: its entries at the free columns.
  std::vector<Scalar> coordinates(const std::vector<Scalar>& v) const {
    std::vector<Scalar> c(free.size());
    for (std::size_t k = 0; k < free.size(); ++k) c[k] = v[perm[free[k]]];
    return c;
  }
};

StrandKernel strand_kernel(const SurfaceInput& u, BiDegree deg, bool reverse) {
  auto m = multiplication_matrix(u, deg);
  StrandKernel k;
  k.perm.resize(m.cols());
  std::iota(k.perm.begin(), k.perm.end(), 0);
  if (reverse) {
    std::reverse(k.perm.begin(), k.perm.end());
    ScalarMatrix mp(m.rows(), m.cols(), m.field());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t j = 0; j < m.cols(); ++j) mp(r, j) = m(r, k.perm[j]);
    m = std::move(mp);
  }
  auto e = rref(m);
  std::vector<bool> pivot(m.cols(), false);
  for (auto c : e.pivots) pivot[c] = true;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!pivot[j]) k.free.push_back(j);
  }
  for (auto& v : kernel_from_echelon(e, m.cols())) {
    std::vector<Scalar> orig(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) orig[k.perm[j]] = std::move(v[j]);
    k.basis.push_back(std::move(orig));
  }
  return k;
}

}  // namespace

std::vector<SyzygyVector> syzygy_strand(const SurfaceInput& u, BiDegree deg) {
  auto k = strand_kernel(u, deg, false);
  std::vector<SyzygyVector> out;
  for (const auto& v : k.basis) {
    auto s = SyzygyVector::from_vector(v, deg);
    if (!s.annihilates(u.p)) fail(ErrorCode::InternalContract, "strand_toolkit::syzygy_strand", "kernel vector is not a syzygy");
    out.push_back(std::move(s));
  }
  return out;
}

SyzygyTable minimal_syzygy_table(const SurfaceInput& u, std::optional<BiDegree> box, TableOptions options) {
  SyzygyTable table;
  table.box = box.value_or(BiDegree{3 * u.a, 3 * u.b + 1});
  const Field field = u.field();
  for (int total = 0; total <= table.box.c + table.box.d; ++total) {
    for (int c = 0; c <= table.box.c; ++c) {
      const int d = total - c;
      if (d < 0 || d > table.box.d) continue;
      const BiDegree deg{c, d};
      auto k = strand_kernel(u, deg, options.reverse_columns);
      if (k.dim() == 0) continue;

      // span of m * sigma for previously found minimal sigma, in kernel coordinates
      std::vector<std::vector<Scalar>> rows;
      for (const auto& sigma : table.minimal) {
        auto diff = deg.minus(sigma.bidegree);
        if (!diff || (diff->c == 0 && diff->d == 0)) continue;
        for (const auto& m : monomial_basis(*diff)) rows.push_back(k.coordinates(sigma.shifted(m).to_vector()));
      }
      std::vector<bool> covered(k.dim(), false);
      if (!rows.empty()) {
        ScalarMatrix span(rows.size(), k.dim(), field);
        for (std::size_t r = 0; r < rows.size(); ++r)
          for (std::size_t j = 0; j < k.dim(); ++j) span(r, j) = rows[r][j];
        for (auto piv : rref(span).pivots) covered[piv] = true;
      }
      int count = 0;
      for (std::size_t j = 0; j < k.dim(); ++j) {
        if (covered[j]) continue;
        table.minimal.push_back(SyzygyVector::from_vector(k.basis[j], deg));
        ++count;
      }
      if (count > 0) table.entries.push_back({deg, count});
    }
  }
  return table;
}

}  // namespace tpsurf
