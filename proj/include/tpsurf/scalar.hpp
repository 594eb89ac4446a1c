#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace tpsurf {

/// The coefficient field: the rationals, or F_p for an odd prime p < 2^63.
class Field {
 public:
  static Field rationals() noexcept { return Field{0}; }
  static Field prime(std::uint64_t p);
  /// Accepts "qq" or "fp:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
/// Residue of q in F_p; throws DivisionByZero when p divides the denominator.
std::uint64_t reduce_rational(const mpq_class& q, std::uint64_t p);

}  // namespace detail

/// An exact field element. Rational values promote to F_p when combined
/// with a residue, so integer literals work in either field; combining
/// residues of different primes throws FieldMismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) : rep_(mpq_class(n)) {}  // NOLINT: literals convert implicitly
  explicit Scalar(mpq_class q);
  static Scalar residue_of(std::uint64_t v, std::uint64_t p);
  static Scalar in(const Field& f, const mpq_class& q);
  static Scalar in(const Field& f, long n) { return in(f, mpq_class(n)); }

  /// Q -> F_p reduction (identity if already in the target field).
  Scalar to_field(const Field& f) const;

  bool is_rational() const noexcept { return rep_.index() == 0; }
  std::uint64_t characteristic() const noexcept;
  Field field() const;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// Sign of a rational; 0 or 1 for residues.
  int sign() const noexcept;

  const mpq_class& rational() const;
  std::uint64_t residue() const;

  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  /// Integers and "num/den" for rationals; the canonical residue in [0,p) otherwise.
  std::string to_string() const;

 private:
  struct Residue {
    std::uint64_t v;
    std::uint64_t p;
  };
  explicit Scalar(Residue r) : rep_(r) {}
  // Common prime of both operands (0 for Q); rewrites a rational operand as a residue.
  static std::uint64_t unify(Scalar& lhs, const Scalar& rhs, Scalar& rhs_copy, const Scalar*& rhs_ptr);

  std::variant<mpq_class, Residue> rep_;
};

Scalar pow(Scalar base, unsigned exponent);

}  // namespace tpsurf
