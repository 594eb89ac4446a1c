#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tpsurf/scalar.hpp"

namespace tpsurf {

template <std::size_t N>
using Exponents = std::array<std::uint16_t, N>;

/// Lexicographic order, larger monomials first.
template <std::size_t N>
struct LexDescending {
  bool operator()(const Exponents<N>& a, const Exponents<N>& b) const { return b < a; }
};

/// Graded reverse lexicographic order, larger monomials first.
template <std::size_t N>
struct GrevlexDescending {
  bool operator()(const Exponents<N>& a, const Exponents<N>& b) const {
    unsigned da = 0, db = 0;
    for (std::size_t i = 0; i < N; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db;
    for (std::size_t i = N; i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

/// k[s,t,u,v], bigraded by bideg s,t = (1,0) and bideg u,v = (0,1).
struct RVars {
  static constexpr std::size_t count = 4;
  static constexpr std::array<std::string_view, 4> names{"s", "t", "u", "v"};
  using Order = LexDescending<4>;
};

/// k[T0,T1,T2,T3]; grevlex so that printed forms list terms the usual way.
struct TVars {
  static constexpr std::size_t count = 4;
  static constexpr std::array<std::string_view, 4> names{"T0", "T1", "T2", "T3"};
  using Order = GrevlexDescending<4>;
};

/// k[s,t,u,v] (x) k[T0..T3].
struct RTVars {
  static constexpr std::size_t count = 8;
  static constexpr std::array<std::string_view, 8> names{"s", "t", "u", "v", "T0", "T1", "T2", "T3"};
  using Order = LexDescending<8>;
};

/// Sparse polynomial over Scalar. Terms are kept in the variable set's
/// monomial order and no zero coefficient is ever stored.
template <class Vars>
class SparsePoly {
 public:
  static constexpr std::size_t kVars = Vars::count;
  using Exps = Exponents<kVars>;
  using Order = typename Vars::Order;
  using TermMap = std::map<Exps, Scalar, Order>;

  SparsePoly() = default;
  explicit SparsePoly(const Scalar& constant);
  static SparsePoly monomial(const Exps& e, const Scalar& c = Scalar(1));
  static SparsePoly variable(std::size_t index);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Scalar coefficient(const Exps& e) const;
  /// Largest term in the monomial order; precondition: nonzero.
  const std::pair<const Exps, Scalar>& leading() const;

  /// Total degree, or -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  /// Splits into homogeneous components, indexed by total degree.
  std::vector<SparsePoly> homogeneous_components() const;

  void add_term(const Exps& e, const Scalar& c);

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& rhs);
  SparsePoly& operator-=(const SparsePoly& rhs);
  SparsePoly& operator*=(const Scalar& c);
  friend SparsePoly operator+(SparsePoly lhs, const SparsePoly& rhs) { return lhs += rhs; }
  friend SparsePoly operator-(SparsePoly lhs, const SparsePoly& rhs) { return lhs -= rhs; }
  friend SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs) { return multiply(lhs, rhs); }
  friend SparsePoly operator*(const Scalar& c, SparsePoly p) { return p *= c; }
  friend SparsePoly operator*(SparsePoly p, const Scalar& c) { return p *= c; }
  friend bool operator==(const SparsePoly& lhs, const SparsePoly& rhs) { return lhs.terms_ == rhs.terms_; }

  static SparsePoly multiply(const SparsePoly& lhs, const SparsePoly& rhs);
  SparsePoly pow(unsigned exponent) const;
  /// Multiplies by x^e (a monomial with coefficient 1).
  SparsePoly shifted(const Exps& e) const;

  Scalar evaluate(std::span<const Scalar> point) const;
  SparsePoly to_field(const Field& f) const;
  /// Field of the coefficients: F_p if any coefficient is a residue mod p.
  Field field() const;

  std::string to_string() const;
  static SparsePoly parse(std::string_view text, const Field& field = Field::rationals());

 private:
  TermMap terms_;
};

using BiPoly = SparsePoly<RVars>;
using TPoly = SparsePoly<TVars>;
using RSPoly = SparsePoly<RTVars>;

extern template class SparsePoly<RVars>;
extern template class SparsePoly<TVars>;
extern template class SparsePoly<RTVars>;

/// p = q * r exactly; throws NotDivisible / DivisionByZero.
template <class Vars>
SparsePoly<Vars> exact_divide(const SparsePoly<Vars>& p, const SparsePoly<Vars>& q);

extern template SparsePoly<RVars> exact_divide(const SparsePoly<RVars>&, const SparsePoly<RVars>&);
extern template SparsePoly<TVars> exact_divide(const SparsePoly<TVars>&, const SparsePoly<TVars>&);

/// Bidegree (c,d): degree c in s,t and degree d in u,v.
struct BiDegree {
  int c = 0;
  int d = 0;

  friend BiDegree operator+(BiDegree x, BiDegree y) { return {x.c + y.c, x.d + y.d}; }
  friend bool operator==(BiDegree, BiDegree) = default;
  /// Componentwise order.
  bool le(BiDegree other) const { return c <= other.c && d <= other.d; }
  /// Partial subtraction; nullopt if a component would go negative.
  std::optional<BiDegree> minus(BiDegree other) const;
  std::string to_string() const;
};

/// Bidegree of a nonzero bihomogeneous polynomial, nullopt otherwise.
std::optional<BiDegree> bidegree(const BiPoly& p);
bool is_bihomogeneous_of(const BiPoly& p, BiDegree deg);

/// Monomials of R_{c,d}: e_s descending, then e_u descending. Size (c+1)(d+1).
std::vector<BiPoly::Exps> monomial_basis(BiDegree deg);
std::size_t monomial_count(BiDegree deg);
/// Position of a monomial of bidegree deg inside monomial_basis(deg).
std::size_t monomial_index(const BiPoly::Exps& e, BiDegree deg);
inline BiPoly::Exps bimonomial(int es, int et, int eu, int ev) {
  return {static_cast<std::uint16_t>(es), static_cast<std::uint16_t>(et), static_cast<std::uint16_t>(eu),
          static_cast<std::uint16_t>(ev)};
}

/// Coordinates of p (bihomogeneous of bidegree deg, or zero) on monomial_basis(deg).
std::vector<Scalar> coefficient_vector(const BiPoly& p, BiDegree deg);
BiPoly from_coefficients(std::span<const Scalar> coeffs, BiDegree deg);

/// s <-> u, t <-> v.
BiPoly swap_factors(const BiPoly& p);

/// Monomial u^e v^f (bidegree (0, e+f)).
inline BiPoly uv_monomial(int e, int f, const Scalar& c = Scalar(1)) {
  return BiPoly::monomial(bimonomial(0, 0, e, f), c);
}

/// Embeds a T-polynomial and a bigraded polynomial into R (x) S.
RSPoly embed(const BiPoly& p);
RSPoly embed(const TPoly& p);

/// Substitutes T_i -> polys[i].
BiPoly substitute(const TPoly& f, std::span<const BiPoly> polys);

/// Linear change of coordinates: T_i -> sum_j m[i][j] T_j.
TPoly linear_substitute(const TPoly& f, const std::array<std::array<Scalar, 4>, 4>& m);

}  // namespace tpsurf
