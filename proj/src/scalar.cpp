#include "tpsurf/scalar.hpp"

#include <charconv>

#include "tpsurf/error.hpp"

namespace tpsurf {

namespace {

constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 63;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = detail::mul_mod(r, b, m);
    b = detail::mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // deterministic Miller-Rabin witnesses for 64-bit integers
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p <= 2 || p >= kMaxPrime || !is_prime(p)) {
    fail(ErrorCode::InvalidInput, "scalars_polys::Field", "not an odd prime below 2^63: " + std::to_string(p));
  }
  return Field{p};
}

Field Field::parse(std::string_view text) {
  if (text == "qq" || text == "QQ") return rationals();
  if (text.size() > 3 && text.substr(0, 3) == "fp:") {
    std::uint64_t p = 0;
    auto body = text.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec == std::errc() && ptr == body.data() + body.size()) return prime(p);
  }
  fail(ErrorCode::ParseError, "scalars_polys::Field", "expected qq or fp:<p>, got '" + std::string(text) + "'");
}

std::string Field::name() const { return is_rational() ? "qq" : "fp:" + std::to_string(p_); }

namespace detail {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) fail(ErrorCode::DivisionByZero, "scalars_polys::inverse", "zero has no inverse mod " + std::to_string(p));
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a % p;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_rational(const mpq_class& q, std::uint64_t p) {
  std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) {
    fail(ErrorCode::DivisionByZero, "scalars_polys::to_field", q.get_str() + " has a denominator divisible by " + std::to_string(p));
  }
  return den == 1 ? num : mul_mod(num, inv_mod(den, p), p);
}

}  // namespace detail

Scalar::Scalar(mpq_class q) : rep_(std::move(q)) {
  std::get<0>(rep_).canonicalize();
}

Scalar Scalar::residue_of(std::uint64_t v, std::uint64_t p) { return Scalar(Residue{v % p, p}); }

Scalar Scalar::in(const Field& f, const mpq_class& q) {
  if (f.is_rational()) return Scalar(q);
  return Scalar(Residue{detail::reduce_rational(q, f.characteristic()), f.characteristic()});
}

Scalar Scalar::to_field(const Field& f) const {
  if (f.is_rational()) {
    if (!is_rational()) fail(ErrorCode::FieldMismatch, "scalars_polys::to_field", "cannot lift a residue to Q");
    return *this;
  }
  if (is_rational()) return in(f, std::get<0>(rep_));
  if (std::get<1>(rep_).p != f.characteristic()) {
    fail(ErrorCode::FieldMismatch, "scalars_polys::to_field", "residues of different primes");
  }
  return *this;
}

std::uint64_t Scalar::characteristic() const noexcept {
  return is_rational() ? 0 : std::get<1>(rep_).p;
}

Field Scalar::field() const { return is_rational() ? Field::rationals() : Field(std::get<1>(rep_).p); }

bool Scalar::is_zero() const noexcept {
  return is_rational() ? sgn(std::get<0>(rep_)) == 0 : std::get<1>(rep_).v == 0;
}

bool Scalar::is_one() const noexcept {
  return is_rational() ? std::get<0>(rep_) == 1 : std::get<1>(rep_).v == 1;
}

int Scalar::sign() const noexcept {
  if (is_rational()) return sgn(std::get<0>(rep_));
  return std::get<1>(rep_).v == 0 ? 0 : 1;
}

const mpq_class& Scalar::rational() const {
  if (!is_rational()) fail(ErrorCode::FieldMismatch, "scalars_polys::rational", "scalar is a residue");
  return std::get<0>(rep_);
}

std::uint64_t Scalar::residue() const {
  if (is_rational()) fail(ErrorCode::FieldMismatch, "scalars_polys::residue", "scalar is rational");
  return std::get<1>(rep_).v;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "scalars_polys::inverse", "inverse of zero");
  if (is_rational()) {
    mpq_class r;
    mpq_inv(r.get_mpq_t(), std::get<0>(rep_).get_mpq_t());
    return Scalar(std::move(r));
  }
  const auto& m = std::get<1>(rep_);
  return Scalar(Residue{detail::inv_mod(m.v, m.p), m.p});
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(mpq_class(-std::get<0>(rep_)));
  const auto& m = std::get<1>(rep_);
  return Scalar(Residue{m.v == 0 ? 0 : m.p - m.v, m.p});
}

std::uint64_t Scalar::unify(Scalar& lhs, const Scalar& rhs, Scalar& rhs_copy, const Scalar*& rhs_ptr) {
  std::uint64_t pl = lhs.characteristic();
  std::uint64_t pr = rhs.characteristic();
  rhs_ptr = &rhs;
  if (pl == pr) return pl;
  if (pl == 0) {
    lhs = Scalar(Residue{detail::reduce_rational(std::get<0>(lhs.rep_), pr), pr});
    return pr;
  }
  if (pr == 0) {
    rhs_copy = Scalar(Residue{detail::reduce_rational(std::get<0>(rhs.rep_), pl), pl});
    rhs_ptr = &rhs_copy;
    return pl;
  }
  fail(ErrorCode::FieldMismatch, "scalars_polys::arith", "residues of different primes");
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  Scalar tmp;
  const Scalar* r = nullptr;
  std::uint64_t p = unify(*this, rhs, tmp, r);
  if (p == 0) {
    std::get<0>(rep_) += std::get<0>(r->rep_);
  } else {
    auto& m = std::get<1>(rep_);
    m.v = detail::add_mod(m.v, std::get<1>(r->rep_).v, p);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  Scalar tmp;
  const Scalar* r = nullptr;
  std::uint64_t p = unify(*this, rhs, tmp, r);
  if (p == 0) {
    std::get<0>(rep_) -= std::get<0>(r->rep_);
  } else {
    auto& m = std::get<1>(rep_);
    m.v = detail::sub_mod(m.v, std::get<1>(r->rep_).v, p);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  Scalar tmp;
  const Scalar* r = nullptr;
  std::uint64_t p = unify(*this, rhs, tmp, r);
  if (p == 0) {
    std::get<0>(rep_) *= std::get<0>(r->rep_);
  } else {
    auto& m = std::get<1>(rep_);
    m.v = detail::mul_mod(m.v, std::get<1>(r->rep_).v, p);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) fail(ErrorCode::DivisionByZero, "scalars_polys::divide", "division by zero");
  Scalar tmp;
  const Scalar* r = nullptr;
  std::uint64_t p = unify(*this, rhs, tmp, r);
  if (p == 0) {
    std::get<0>(rep_) /= std::get<0>(r->rep_);
  } else {
    auto& m = std::get<1>(rep_);
    m.v = detail::mul_mod(m.v, detail::inv_mod(std::get<1>(r->rep_).v, p), p);
  }
  return *this;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  std::uint64_t pl = lhs.characteristic();
  std::uint64_t pr = rhs.characteristic();
  if (pl == pr) {
    if (pl == 0) return std::get<0>(lhs.rep_) == std::get<0>(rhs.rep_);
    return std::get<1>(lhs.rep_).v == std::get<1>(rhs.rep_).v;
  }
  if (pl != 0 && pr != 0) return false;
  try {
    if (pl == 0) return detail::reduce_rational(std::get<0>(lhs.rep_), pr) == std::get<1>(rhs.rep_).v;
    return std::get<1>(lhs.rep_).v == detail::reduce_rational(std::get<0>(rhs.rep_), pl);
  } catch (const Error&) {
    return false;
  }
}

std::string Scalar::to_string() const {
  if (is_rational()) return std::get<0>(rep_).get_str();
  return std::to_string(std::get<1>(rep_).v);
}

Scalar pow(Scalar base, unsigned exponent) {
  Scalar result = Scalar::in(base.field(), 1);
  while (exponent) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace tpsurf
