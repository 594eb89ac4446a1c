#include "tpsurf/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tpsurf/error.hpp"

namespace tpsurf {

template <class Vars>
SparsePoly<Vars>::SparsePoly(const Scalar& constant) {
  if (!constant.is_zero()) terms_.emplace(Exps{}, constant);
}

template <class Vars>
SparsePoly<Vars> SparsePoly<Vars>::monomial(const Exps& e, const Scalar& c) {
  SparsePoly p;
  p.add_term(e, c);
  return p;
}

template <class Vars>
SparsePoly<Vars> SparsePoly<Vars>::variable(std::size_t index) {
  Exps e{};
  e.at(index) = 1;
  return monomial(e);
}

template <class Vars>
Scalar SparsePoly<Vars>::coefficient(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

template <class Vars>
const std::pair<const typename SparsePoly<Vars>::Exps, Scalar>& SparsePoly<Vars>::leading() const {
  if (terms_.empty()) fail(ErrorCode::InternalContract, "scalars_polys::leading", "zero polynomial has no leading term");
  return *terms_.begin();
}

template <class Vars>
int SparsePoly<Vars>::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto x : e) d += x;
    deg = std::max(deg, d);
  }
  return deg;
}

template <class Vars>
bool SparsePoly<Vars>::is_homogeneous() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto x : e) d += x;
    if (deg >= 0 && d != deg) return false;
    deg = d;
  }
  return true;
}

template <class Vars>
std::vector<SparsePoly<Vars>> SparsePoly<Vars>::homogeneous_components() const {
  std::vector<SparsePoly> parts(static_cast<std::size_t>(std::max(total_degree(), -1) + 1));
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto x : e) d += x;
    parts[static_cast<std::size_t>(d)].terms_.emplace(e, c);
  }
  return parts;
}

template <class Vars>
void SparsePoly<Vars>::add_term(const Exps& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <class Vars>
SparsePoly<Vars> SparsePoly<Vars>::operator-() const {
  SparsePoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
  return r;
}

template <class Vars>
SparsePoly<Vars>& SparsePoly<Vars>::operator+=(const SparsePoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

template <class Vars>
SparsePoly<Vars>& SparsePoly<Vars>::operator-=(const SparsePoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

template <class Vars>
SparsePoly<Vars>& SparsePoly<Vars>::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

template <class Vars>
SparsePoly<Vars> SparsePoly<Vars>::multiply(const SparsePoly& lhs, const SparsePoly& rhs) {
  SparsePoly r;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exps e;
      for (std::size_t i = 0; i < kVars; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

template <class Vars>
SparsePoly<Vars> SparsePoly<Vars>::pow(unsigned exponent) const {
  SparsePoly result(Scalar::in(field(), 1));
  SparsePoly base = *this;
  while (exponent) {
    if (exponent & 1) result = multiply(result, base);
    exponent >>= 1;
    if (exponent) base = multiply(base, base);
  }
  return result;
}

template <class Vars>
SparsePoly<Vars> SparsePoly<Vars>::shifted(const Exps& shift) const {
  SparsePoly r;
  for (const auto& [e, c] : terms_) {
    Exps x;
    for (std::size_t i = 0; i < kVars; ++i) x[i] = static_cast<std::uint16_t>(e[i] + shift[i]);
    r.terms_.emplace_hint(r.terms_.end(), x, c);
  }
  return r;
}

template <class Vars>
Scalar SparsePoly<Vars>::evaluate(std::span<const Scalar> point) const {
  if (point.size() != kVars) fail(ErrorCode::InvalidInput, "scalars_polys::evaluate", "point has wrong arity");
  std::array<std::vector<Scalar>, kVars> powers;
  for (std::size_t i = 0; i < kVars; ++i) powers[i].push_back(Scalar(1));
  Scalar sum;
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < kVars; ++i) {
      while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * point[i]);
      if (e[i]) term *= powers[i][e[i]];
    }
    sum += term;
  }
  return sum;
}

template <class Vars>
SparsePoly<Vars> SparsePoly<Vars>::to_field(const Field& f) const {
  SparsePoly r;
  for (const auto& [e, c] : terms_) r.add_term(e, c.to_field(f));
  return r;
}

template <class Vars>
Field SparsePoly<Vars>::field() const {
  for (const auto& [e, c] : terms_) {
    if (!c.is_rational()) return c.field();
  }
  return Field::rationals();
}

template <class Vars>
std::string SparsePoly<Vars>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool negative = c.is_rational() && c.sign() < 0;
    Scalar magnitude = negative ? -c : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    bool need_star = false;
    if (!magnitude.is_one() || constant) {
      out << magnitude.to_string();
      need_star = true;
    }
    for (std::size_t i = 0; i < kVars; ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << '*';
      out << Vars::names[i];
      if (e[i] > 1) out << '^' << e[i];
      need_star = true;
    }
  }
  return out.str();
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, const char* origin) : text_(text), origin_(origin) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  // +1, -1, or 0 when no sign is present; accepts U+2212 as minus.
  int sign() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '+') {
      ++pos_;
      return 1;
    }
    if (pos_ < text_.size() && text_[pos_] == '-') {
      ++pos_;
      return -1;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return -1;
    }
    return 0;
  }
  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }
  bool consume(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  template <std::size_t N>
  int variable(const std::array<std::string_view, N>& names) {
    skip_space();
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < N; ++i) {
      if (text_.substr(pos_, names[i].size()) == names[i] && names[i].size() > best_len) {
        best = static_cast<int>(i);
        best_len = names[i].size();
      }
    }
    if (best >= 0) pos_ += best_len;
    return best;
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, origin_,
         what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  const char* origin_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class Vars>
SparsePoly<Vars> SparsePoly<Vars>::parse(std::string_view text, const Field& field) {
  TermParser in(text, "scalars_polys::parse");
  SparsePoly result;
  if (in.done()) in.error("empty polynomial");
  bool first = true;
  while (!in.done()) {
    int sign = in.sign();
    if (!first && sign == 0) in.error("expected '+' or '-'");
    if (sign == 0) sign = 1;
    first = false;

    mpq_class coeff(sign);
    bool any = false;
    if (in.peek_digit()) {
      mpz_class num(in.digits());
      mpz_class den(1);
      if (in.consume('/')) den = mpz_class(in.digits());
      if (den == 0) in.error("zero denominator");
      coeff *= mpq_class(num, den);
      coeff.canonicalize();
      any = true;
    }
    Exps e{};
    while (true) {
      bool star = in.consume('*');
      int var = in.variable(Vars::names);
      if (var < 0) {
        if (star) in.error("expected a variable after '*'");
        break;
      }
      unsigned power = 1;
      if (in.consume('^')) power = static_cast<unsigned>(std::stoul(in.digits()));
      e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(e[static_cast<std::size_t>(var)] + power);
      any = true;
    }
    if (!any) in.error("expected a term");
    result.add_term(e, Scalar::in(field, coeff));
  }
  return result;
}

template <class Vars>
SparsePoly<Vars> exact_divide(const SparsePoly<Vars>& p, const SparsePoly<Vars>& q) {
  using Poly = SparsePoly<Vars>;
  if (q.is_zero()) fail(ErrorCode::DivisionByZero, "scalars_polys::exact_divide", "divisor is zero");
  const auto& [lq, lc] = q.leading();
  Scalar lc_inv = lc.inverse();
  Poly remainder = p;
  Poly quotient;
  while (!remainder.is_zero()) {
    const auto& [lr, rc] = remainder.leading();
    typename Poly::Exps e;
    for (std::size_t i = 0; i < Poly::kVars; ++i) {
      if (lr[i] < lq[i]) {
        fail(ErrorCode::NotDivisible, "scalars_polys::exact_divide",
             "'" + p.to_string() + "' is not divisible by '" + q.to_string() + "'");
      }
      e[i] = static_cast<std::uint16_t>(lr[i] - lq[i]);
    }
    Scalar c = rc * lc_inv;
    quotient.add_term(e, c);
    remainder -= q.shifted(e) * c;
  }
  return quotient;
}

template class SparsePoly<RVars>;
template class SparsePoly<TVars>;
template class SparsePoly<RTVars>;
template SparsePoly<RVars> exact_divide(const SparsePoly<RVars>&, const SparsePoly<RVars>&);
template SparsePoly<TVars> exact_divide(const SparsePoly<TVars>&, const SparsePoly<TVars>&);

std::optional<BiDegree> BiDegree::minus(BiDegree other) const {
  if (other.c > c || other.d > d) return std::nullopt;
  return BiDegree{c - other.c, d - other.d};
}

std::string BiDegree::to_string() const { return "(" + std::to_string(c) + "," + std::to_string(d) + ")"; }

std::optional<BiDegree> bidegree(const BiPoly& p) {
  std::optional<BiDegree> deg;
  for (const auto& [e, c] : p.terms()) {
    BiDegree here{e[0] + e[1], e[2] + e[3]};
    if (deg && !(*deg == here)) return std::nullopt;
    deg = here;
  }
  return deg;
}

bool is_bihomogeneous_of(const BiPoly& p, BiDegree deg) {
  return std::all_of(p.terms().begin(), p.terms().end(), [&](const auto& t) {
    return t.first[0] + t.first[1] == deg.c && t.first[2] + t.first[3] == deg.d;
  });
}

std::size_t monomial_count(BiDegree deg) {
  if (deg.c < 0 || deg.d < 0) return 0;
  return static_cast<std::size_t>((deg.c + 1) * (deg.d + 1));
}

std::vector<BiPoly::Exps> monomial_basis(BiDegree deg) {
  std::vector<BiPoly::Exps> basis;
  basis.reserve(monomial_count(deg));
  for (int i = deg.c; i >= 0; --i) {
    for (int j = deg.d; j >= 0; --j) basis.push_back(bimonomial(i, deg.c - i, j, deg.d - j));
  }
  return basis;
}

std::size_t monomial_index(const BiPoly::Exps& e, BiDegree deg) {
  return static_cast<std::size_t>((deg.c - e[0]) * (deg.d + 1) + (deg.d - e[2]));
}

std::vector<Scalar> coefficient_vector(const BiPoly& p, BiDegree deg) {
  std::vector<Scalar> v(monomial_count(deg));
  for (const auto& [e, c] : p.terms()) {
    if (e[0] + e[1] != deg.c || e[2] + e[3] != deg.d) {
      fail(ErrorCode::InternalContract, "scalars_polys::coefficient_vector",
           "'" + p.to_string() + "' is not of bidegree " + deg.to_string());
    }
    v[monomial_index(e, deg)] = c;
  }
  return v;
}

BiPoly from_coefficients(std::span<const Scalar> coeffs, BiDegree deg) {
  auto basis = monomial_basis(deg);
  BiPoly p;
  for (std::size_t i = 0; i < basis.size() && i < coeffs.size(); ++i) p.add_term(basis[i], coeffs[i]);
  return p;
}

BiPoly swap_factors(const BiPoly& p) {
  BiPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(bimonomial(e[2], e[3], e[0], e[1]), c);
  return r;
}

RSPoly embed(const BiPoly& p) {
  RSPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term({e[0], e[1], e[2], e[3], 0, 0, 0, 0}, c);
  return r;
}

RSPoly embed(const TPoly& p) {
  RSPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term({0, 0, 0, 0, e[0], e[1], e[2], e[3]}, c);
  return r;
}

BiPoly substitute(const TPoly& f, std::span<const BiPoly> polys) {
  if (polys.size() != 4) fail(ErrorCode::InvalidInput, "scalars_polys::substitute", "need four polynomials");
  std::array<std::vector<BiPoly>, 4> powers;
  for (std::size_t i = 0; i < 4; ++i) powers[i].push_back(BiPoly(Scalar(1)));
  BiPoly sum;
  for (const auto& [e, c] : f.terms()) {
    BiPoly term(c);
    for (std::size_t i = 0; i < 4; ++i) {
      while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * polys[i]);
      if (e[i]) term = term * powers[i][e[i]];
    }
    sum += term;
  }
  return sum;
}

TPoly linear_substitute(const TPoly& f, const std::array<std::array<Scalar, 4>, 4>& m) {
  std::array<TPoly, 4> forms;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) forms[i] += TPoly::variable(j) * m[i][j];
  }
  std::array<std::vector<TPoly>, 4> powers;
  for (std::size_t i = 0; i < 4; ++i) powers[i].push_back(TPoly(Scalar(1)));
  TPoly sum;
  for (const auto& [e, c] : f.terms()) {
    TPoly term(c);
    for (std::size_t i = 0; i < 4; ++i) {
      while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * forms[i]);
      if (e[i]) term = term * powers[i][e[i]];
    }
    sum += term;
  }
  return sum;
}

}  // namespace tpsurf
