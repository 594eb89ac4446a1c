#include "tpsurf/oracle.hpp"

#include <random>

#include "tpsurf/error.hpp"
#include "tpsurf/syzygy_builder.hpp"

namespace tpsurf {

namespace {

constexpr std::uint64_t kRankPrimes[] = {2305843009213693951ull, 4611686018427387847ull};

// Arithmetic mod p with a fast path for 2^31 - 1.
struct ModP {
  std::uint64_t p;
  bool mersenne31;
  explicit ModP(std::uint64_t prime) : p(prime), mersenne31(prime == kOraclePrime) {}
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (mersenne31) {
      std::uint64_t x = a * b;
      x = (x & kOraclePrime) + (x >> 31);
      x = (x & kOraclePrime) + (x >> 31);
      return x >= kOraclePrime ? x - kOraclePrime : x;
    }
    return detail::mul_mod(a, b, p);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return detail::add_mod(a, b, p); }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return detail::sub_mod(a, b, p); }
  std::uint64_t of(long x) const {
    long r = x % static_cast<long>(p);
    return r < 0 ? static_cast<std::uint64_t>(r + static_cast<long>(p)) : static_cast<std::uint64_t>(r);
  }
};

std::uint64_t residue_of(const Scalar& c, std::uint64_t p) {
  return c.is_rational() ? detail::reduce_rational(c.rational(), p) : c.residue();
}

std::vector<TPoly::Exps> t_monomials(int deg) {
  std::vector<TPoly::Exps> out;
  for (int i = deg; i >= 0; --i)
    for (int j = deg - i; j >= 0; --j)
      for (int k = deg - i - j; k >= 0; --k) {
        out.push_back({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j), static_cast<std::uint16_t>(k),
                       static_cast<std::uint16_t>(deg - i - j - k)});
      }
  return out;
}

}  // namespace

TPoly sample_implicitize(const SurfaceInput& u, int deg_f, SampleOptions options) {
  const char* origin = "oracle_suite::sample_implicitize";
  if (deg_f < 1) fail(ErrorCode::InvalidInput, origin, "degree must be positive");
  const Field field = u.field();
  const std::uint64_t prime = field.is_rational() ? options.prime : field.characteristic();
  const ModP mod(prime);
  const auto monos = t_monomials(deg_f);
  const std::size_t n = monos.size();
  const std::size_t budget = 2 * n;

  std::array<std::vector<std::pair<BiPoly::Exps, std::uint64_t>>, 4> pterms;
  for (std::size_t i = 0; i < 4; ++i)
    for (const auto& [e, c] : u.p[i].terms()) pterms[i].push_back({e, residue_of(c, prime)});

  auto power = [&](std::uint64_t x, int k) {
    std::uint64_t r = 1;
    for (int j = 0; j < k; ++j) r = mod.mul(r, x);
    return r;
  };

  for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
    std::mt19937_64 rng(options.seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(attempt));
    std::uniform_int_distribution<long> dist(-options.range, options.range);
    auto sample_row = [&] {
      std::array<std::uint64_t, 4> st{mod.of(dist(rng)), mod.of(dist(rng)), mod.of(dist(rng)), mod.of(dist(rng))};
      std::array<std::vector<std::uint64_t>, 4> pw;
      for (std::size_t i = 0; i < 4; ++i) {
        std::uint64_t x = 0;
        for (const auto& [e, c] : pterms[i]) {
          std::uint64_t t = c;
          for (std::size_t k = 0; k < 4; ++k) t = mod.mul(t, power(st[k], e[k]));
          x = mod.add(x, t);
        }
        pw[i].assign(static_cast<std::size_t>(deg_f) + 1, 1);
        for (int k = 1; k <= deg_f; ++k) pw[i][static_cast<std::size_t>(k)] = mod.mul(pw[i][static_cast<std::size_t>(k) - 1], x);
      }
      std::vector<std::uint64_t> row(n);
      for (std::size_t j = 0; j < n; ++j) {
        const auto& e = monos[j];
        row[j] = mod.mul(mod.mul(pw[0][e[0]], pw[1][e[1]]), mod.mul(pw[2][e[2]], pw[3][e[3]]));
      }
      return row;
    };

    // incremental elimination; row_of[c] is the pivot row for column c (pivot normalized to 1)
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<int> row_of(n, -1);
    std::size_t used = 0;
    bool overfull = false;
    while (rows.size() + 1 < n && used < budget) {
      auto r = sample_row();
      ++used;
      std::size_t lead = n;
      for (std::size_t c = 0; c < n; ++c) {
        if (r[c] == 0) continue;
        if (row_of[c] < 0) {
          lead = c;
          break;
        }
        const auto& pr = rows[static_cast<std::size_t>(row_of[c])];
        const std::uint64_t f = prime - r[c];
        for (std::size_t k = c; k < n; ++k) {
          if (pr[k]) r[k] = mod.add(r[k], mod.mul(f, pr[k]));
        }
      }
      if (lead == n) continue;
      const std::uint64_t inv = detail::inv_mod(r[lead], prime);
      for (std::size_t k = lead; k < n; ++k) r[k] = mod.mul(r[k], inv);
      row_of[lead] = static_cast<int>(rows.size());
      rows.push_back(std::move(r));
    }
    if (rows.size() + 1 != n) {
      if (rows.size() >= n) overfull = true;
      if (overfull) break;
      continue;
    }
    std::size_t free_col = 0;
    while (row_of[free_col] >= 0) ++free_col;
    std::vector<std::uint64_t> x(n, 0);
    x[free_col] = 1;
    for (std::size_t c = n; c-- > 0;) {
      if (row_of[c] < 0) continue;
      const auto& pr = rows[static_cast<std::size_t>(row_of[c])];
      std::uint64_t s = 0;
      for (std::size_t k = c + 1; k < n; ++k) {
        if (pr[k] && x[k]) s = mod.add(s, mod.mul(pr[k], x[k]));
      }
      x[c] = s == 0 ? 0 : prime - s;
    }
    // the remaining sample budget must also vanish
    bool ok = true;
    for (; used < budget && ok; ++used) {
      auto r = sample_row();
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (x[k]) s = mod.add(s, mod.mul(r[k], x[k]));
      }
      ok = s == 0;
    }
    if (!ok) continue;
    TPoly f;
    for (std::size_t k = 0; k < n; ++k) {
      if (x[k]) f.add_term(monos[k], Scalar::residue_of(x[k], prime));
    }
    return normalize(f);
  }
  fail(ErrorCode::KernelNotUnique, origin,
       "no one-dimensional space of degree-" + std::to_string(deg_f) + " forms vanishes on the samples");
}

std::size_t multi_prime_rank(const ScalarMatrix& m, std::span<const std::uint64_t> primes) {
  const Field field = m.field();
  if (!field.is_rational()) return rank(m);
  if (primes.empty()) primes = kRankPrimes;
  std::optional<std::size_t> agreed;
  for (auto p : primes) {
    std::size_t r = 0;
    try {
      r = rank_mod(m, p);
    } catch (const Error&) {
      return rank(m);
    }
    if (agreed && *agreed != r) return rank(m);
    agreed = r;
  }
  return agreed.value_or(rank(m));
}

namespace {

// Incremental exact span of vectors; keeps reduced rows keyed by pivot.
class Span {
 public:
  explicit Span(std::size_t dim) : dim_(dim), row_of_(dim, -1) {}
  /// True if v was independent of the current span (and is now added).
  bool add(std::vector<Scalar> v) {
    for (std::size_t c = 0; c < dim_; ++c) {
      if (v[c].is_zero()) continue;
      if (row_of_[c] < 0) {
        Scalar inv = v[c].inverse();
        for (std::size_t k = c; k < dim_; ++k) {
          if (!v[k].is_zero()) v[k] *= inv;
        }
        row_of_[c] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
      }
      const auto& pr = rows_[static_cast<std::size_t>(row_of_[c])];
      Scalar f = v[c];
      for (std::size_t k = c; k < dim_; ++k) {
        if (!pr[k].is_zero()) v[k] -= f * pr[k];
      }
    }
    return false;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<int> row_of_;
  std::vector<std::vector<Scalar>> rows_;
};

}  // namespace

FullStrand full_strand_d1(const SurfaceInput& u, BiDegree nu) {
  const Field field = u.field();
  const std::size_t dim = 4 * monomial_count(nu);
  Span span(dim);
  std::vector<SyzygyVector> kept;
  FullStrand out;
  for (int c = 0; c <= nu.c; ++c) {
    for (int d = 0; d <= nu.d; ++d) {
      auto diff = nu.minus({c, d});
      for (const auto& sigma : syzygy_strand(u, {c, d})) {
        for (const auto& m : monomial_basis(*diff)) {
          auto prod = sigma.shifted(m);
          ++out.candidates;
          if (span.add(prod.to_vector())) kept.push_back(std::move(prod));
        }
      }
    }
  }
  out.matrix = assemble_strand(kept, nu, field);
  out.rank = multi_prime_rank(out.matrix.coefficient_matrix());
  return out;
}

bool same_column_space(const StrandMatrix& sub, const StrandMatrix& full) {
  ScalarMatrix a = sub.coefficient_matrix();
  ScalarMatrix b = full.coefficient_matrix();
  if (a.rows() != b.rows()) return false;
  ScalarMatrix both(a.rows(), a.cols() + b.cols(), a.field());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) both(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) both(r, a.cols() + c) = b(r, c);
  }
  const std::size_t ra = multi_prime_rank(a), rb = multi_prime_rank(b), rboth = multi_prime_rank(both);
  return ra == rb && rb == rboth;
}

PlantKind parse_plant_kind(const std::string& name) {
  if (name == "dim2_i") return PlantKind::Dim2I;
  if (name == "dim2_ii") return PlantKind::Dim2II;
  if (name == "dim3") return PlantKind::Dim3;
  fail(ErrorCode::InvalidInput, "oracle_suite::plant_instance", "unknown kind '" + name + "' (dim2_i, dim2_ii, dim3)");
}

const char* to_string(PlantKind k) {
  switch (k) {
    case PlantKind::Dim2I: return "dim2_i";
    case PlantKind::Dim2II: return "dim2_ii";
    case PlantKind::Dim3: return "dim3";
  }
  return "?";
}

namespace {

class Drawer {
 public:
  Drawer(std::uint64_t seed, Field field) : rng_(seed), field_(field) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Scalar scalar(long lo, long hi) { return Scalar::in(field_, integer(lo, hi)); }
  BiPoly poly(BiDegree deg) {
    BiPoly p;
    while (p.is_zero()) {
      for (const auto& m : monomial_basis(deg)) p.add_term(m, scalar(-3, 3));
    }
    return p;
  }
  BiPoly uv_form(int n) { return poly({0, n}); }
  ScalarMatrix invertible(std::size_t n) {
    while (true) {
      ScalarMatrix m(n, n, field_);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = scalar(-2, 2);
      if (!det_scalar(m).is_zero()) return m;
    }
  }

 private:
  std::mt19937_64 rng_;
  Field field_;
};

Generators apply_basis_change(const Generators& g, const ScalarMatrix& m) {
  Generators out;
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i) {
      if (!m(i, j).is_zero()) out[j] += g[i] * m(i, j);
    }
  return out;
}

}  // namespace

PlantedInstance plant_instance(PlantKind kind, int a, int b, std::uint64_t seed, const Field& field, int max_attempts) {
  const char* origin = "oracle_suite::plant_instance";
  if (a < 1 || b < 3) fail(ErrorCode::DegreeTooSmall, origin, "needs a >= 1 and b >= 3");
  Drawer draw(seed, field);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    PlantedInstance inst;
    inst.kind = kind;
    inst.attempts = attempt;
    Generators planted;
    if (kind == PlantKind::Dim3) {
      inst.alpha = draw.poly({a, b - 1});
      inst.beta = draw.poly({a, b - 1});
      const BiPoly u = uv_monomial(1, 0), v = uv_monomial(0, 1);
      planted = {inst.alpha * v, inst.beta * v - inst.alpha * u, -(inst.beta * u), draw.poly({a, b})};
    } else {
      const Subcase sc = kind == PlantKind::Dim2I ? Subcase::I : Subcase::II;
      if (sc == Subcase::I) {
        do {
          inst.d = {draw.scalar(-3, 3), draw.scalar(-3, 3)};
        } while ((inst.d[0] * inst.d[0] + inst.d[1]).is_zero());
      } else {
        // a nonzero d0 is classified as subcase i under the subcase precedence
        inst.d = {Scalar::in(field, 0), draw.scalar(-3, 3)};
      }
      auto [g0, g1] = quadratic_pair(sc, inst.d);
      inst.h = draw.poly({a, b - 2});
      planted = {inst.h * g0, inst.h * g1, draw.poly({a, b}), draw.poly({a, b})};
    }
    inst.basis_change = draw.invertible(4);
    try {
      inst.input = SurfaceInput::make(a, b, apply_basis_change(planted, inst.basis_change));
      auto cert = basepoint_free_certificate(inst.input);
      auto quad = require_hypotheses(inst.input, cert);
      if (quad.swapped) continue;
      auto report = classify(quad.input, build_fvector(quad.input, quad.q));
      const bool match = kind == PlantKind::Dim3 ? report.dim_v == 3
                         : kind == PlantKind::Dim2I ? (report.dim_v == 2 && report.subcase == Subcase::I)
                                                   : (report.dim_v == 2 && report.subcase == Subcase::II);
      if (match) return inst;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InternalContract) throw;
    }
  }
  fail(ErrorCode::GenerationExhausted, origin,
       std::string("no ") + to_string(kind) + " instance after " + std::to_string(max_attempts) + " draws");
}

SurfaceInput plant_zero_n(int a, int b, int n, std::uint64_t seed, const Field& field, int max_attempts) {
  const char* origin = "oracle_suite::plant_zero_n";
  if (n < 1 || b < n + 1) fail(ErrorCode::DegreeTooSmall, origin, "needs b >= n + 1");
  Drawer draw(seed, field);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    BiPoly g0 = draw.uv_form(n), g1 = draw.uv_form(n), h = draw.poly({a, b - n});
    Generators planted{h * g0, h * g1, draw.poly({a, b}), draw.poly({a, b})};
    try {
      auto u = SurfaceInput::make(a, b, apply_basis_change(planted, draw.invertible(4)));
      if (!basepoint_free_certificate(u).certified) continue;
      bool lower = false;
      for (int m = 1; m < n && !lower; ++m) lower = !syzygy_strand(u, {0, m}).empty();
      if (!lower && !syzygy_strand(u, {1, 0}).empty()) lower = true;
      if (!lower) return u;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InternalContract) throw;
    }
  }
  fail(ErrorCode::GenerationExhausted, origin, "no admissible instance after " + std::to_string(max_attempts) + " draws");
}

ConjectureReport conjecture_experiment(const SurfaceInput& u, int max_n) {
  ConjectureReport rep;
  const BiDegree nu{2 * u.a - 1, u.b - 1};
  rep.target = static_cast<std::size_t>(2 * u.a * u.b);
  std::optional<SyzygyVector> c;
  for (int n = 1; n <= max_n && !c; ++n) {
    auto strand = syzygy_strand(u, {0, n});
    if (!strand.empty()) {
      rep.n = n;
      c = strand.front();
    }
  }
  if (!c || u.b < rep.n + 1) return rep;
  rep.dim_v = generalized_V(u, *c).dim_v;
  rep.syz_nu = syzygy_strand(u, nu).size();

  const std::size_t dim = 4 * monomial_count(nu);
  auto add_multiples = [&](Span& span, const SyzygyVector& s) {
    for (const auto& m : monomial_basis(*nu.minus(s.bidegree))) span.add(s.shifted(m).to_vector());
  };
  const BiDegree low{u.a, u.b - rep.n};
  Span with_c(dim);
  add_multiples(with_c, *c);
  rep.span_c = with_c.rank();

  auto low_strand = syzygy_strand(u, low);
  Span low_span(4 * monomial_count(low));
  if (auto rest = low.minus(c->bidegree)) {
    for (const auto& m : monomial_basis(*rest)) low_span.add(c->shifted(m).to_vector());
  }
  const std::size_t c_in_low = low_span.rank();
  rep.new_at_low = low_strand.size() - c_in_low;

  Span all = with_c;
  for (const auto& s : low_strand) add_multiples(all, s);
  rep.span_all = all.rank();

  if (rep.dim_v == 2 && rep.new_at_low >= 2 && low_strand.size() >= 2) {
    // two generic combinations of the (a, b-n) syzygies
    std::mt19937_64 rng(0xc0ffee);
    std::uniform_int_distribution<long> dist(-50, 50);
    const Field field = u.field();
    Span two = with_c;
    for (int k = 0; k < 2; ++k) {
      SyzygyVector s{{}, low};
      for (const auto& t : low_strand)
        for (std::size_t i = 0; i < 4; ++i) s.entries[i] += t.entries[i] * Scalar::in(field, dist(rng));
      add_multiples(two, s);
    }
    rep.supports = two.rank() == rep.target && rep.syz_nu == rep.target;
  }
  return rep;
}

}  // namespace tpsurf
