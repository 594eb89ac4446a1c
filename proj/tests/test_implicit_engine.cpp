#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "examples.hpp"
#include "tpsurf/error.hpp"
#include "tpsurf/implicit.hpp"
#include "tpsurf/quad.hpp"
#include "tpsurf/syzygy_builder.hpp"

using namespace tpsurf;

namespace {

TPoly T(const char* s) { return TPoly::parse(s); }

std::vector<SyzygyVector> ex12_syzygies() {
  auto u = examples::ex12();
  auto q = require_hypotheses(u, basepoint_free_certificate(u));
  auto r = classify(q.input, build_fvector(q.input, q.q));
  std::vector<SyzygyVector> out;
  for (const auto& s : build_syzygies(r, 2, 3).syzygies) out.push_back(to_original_basis(s, r.reindex));
  return out;
}

// The displayed 12 x 12 representation of d1; entries are +-T_k or 0.
StrandMatrix displayed_d1() {
  const char* rows[12] = {
      "-1 0 0 0 -2 0 0 0 -3 0 0 0", "0 0 0 0 1 -2 0 0 0 -3 0 0", "0 0 0 0 0 1 0 0 0 0 0 0",
      "0 -1 0 0 0 0 -2 0 0 0 -3 0", "0 0 0 0 0 0 1 -2 0 0 0 -3", "0 0 0 0 0 0 0 1 0 0 0 0",
      "0 0 -1 0 0 0 0 0 0 0 0 0",  "0 0 0 0 -2 0 0 0 -3 0 0 0", "0 0 0 0 0 -2 0 0 0 -3 0 0",
      "0 0 0 -1 0 0 0 0 0 0 0 0",  "0 0 0 0 0 0 -2 0 0 0 -3 0", "0 0 0 0 0 0 0 -2 0 0 0 -3"};
  // positions of T0 (written separately to keep the table readable)
  const int t0[][2] = {{2, 0}, {5, 1}, {6, 8}, {7, 9}, {8, 2}, {9, 10}, {10, 11}, {11, 3}};
  StrandMatrix m({3, 2}, 12, Field::rationals());
  for (std::size_t r = 0; r < 12; ++r) {
    std::istringstream in(rows[r]);
    for (std::size_t c = 0; c < 12; ++c) {
      int code = 0;
      in >> code;
      LinearForm lf{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
      if (code != 0) lf[static_cast<std::size_t>(std::abs(code))] = Scalar(code > 0 ? 1 : -1);
      m.at(r, c) = lf;
    }
  }
  for (auto [r, c] : t0) m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c))[0] = Scalar(1);
  return m;
}

StrandMatrix random_linear_matrix(std::mt19937_64& rng, std::size_t n, const Field& f) {
  std::uniform_int_distribution<long> d(-3, 3);
  StrandMatrix m({static_cast<int>(n) - 1, 0}, n, f);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t k = 0; k < 4; ++k) m.at(r, c)[k] = Scalar::in(f, d(rng));
  return m;
}

}  // namespace

TEST_CASE("golden input strand matrix") {
  auto syz = ex12_syzygies();
  auto m = assemble_d1(syz, 2, 3, Field::rationals());
  CHECK(m.rows() == 12);
  CHECK(m.cols() == 12);
  CHECK(m.nu == BiDegree{3, 2});
  CHECK(m.column_counts(3) == std::vector<std::size_t>{4, 4, 4});
  CHECK(rank(m.coefficient_matrix()) == 12);
  // entries are linear forms
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto e = m.entry(r, c);
      CHECK((e.is_zero() || (e.is_homogeneous() && e.total_degree() == 1)));
    }
  // dropping a syzygy breaks squareness
  syz.pop_back();
  CHECK_THROWS_AS(assemble_d1(syz, 2, 3, Field::rationals()), Error);
}

TEST_CASE("determinant of the displayed d1") {
  const TPoly f = T(examples::kEx12F);
  auto m = displayed_d1();
  for (auto backend : {DetBackend::FractionFree, DetBackend::Interpolation, DetBackend::Both}) {
    auto delta = det_tpoly(m, backend);
    CHECK(proportional(delta, f.pow(2)));
  }
}

TEST_CASE("determinant of the assembled strand") {
  auto m = assemble_d1(ex12_syzygies(), 2, 3, Field::rationals());
  auto delta = det_tpoly(m, DetBackend::Both);
  CHECK(delta.is_homogeneous());
  CHECK(delta.total_degree() == 12);
  CHECK(proportional(delta, T(examples::kEx12F).pow(2)));
}

TEST_CASE("determinant backends agree with pointwise evaluation") {
  std::mt19937_64 rng(43);
  for (const Field& f : {Field::rationals(), Field::prime(1000003), Field::prime(5)}) {
    for (int i = 0; i < 3; ++i) {
      auto m = random_linear_matrix(rng, 6, f);
      auto ff = det_tpoly(m, DetBackend::FractionFree);
      auto ip = det_tpoly(m, DetBackend::Interpolation);
      CHECK(ff == ip);
      std::array<Scalar, 4> pt{Scalar::in(f, 2), Scalar::in(f, -3), Scalar::in(f, 5), Scalar::in(f, 7)};
      CHECK(ff.evaluate(pt) == det_scalar(m.evaluate(pt)));
    }
  }
}

TEST_CASE("diagonal T0 matrix") {
  StrandMatrix m({5, 0}, 6, Field::rationals());
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) m.at(r, c) = {Scalar(r == c ? 1 : 0), Scalar(0), Scalar(0), Scalar(0)};
  CHECK(det_tpoly(m) == T("T0^6"));
  CHECK(det_tpoly(m, DetBackend::FractionFree) == T("T0^6"));
}

TEST_CASE("root extraction") {
  auto r = extract_root(T("T0 + T1").pow(4));
  CHECK(r.f == T("T0 + T1"));
  CHECK(r.e == 4);
  CHECK(r.deg_f == 1);
  CHECK(r.perfect_power);

  const TPoly f = T(examples::kEx12F);
  auto r2 = extract_root(f.pow(2) * Scalar(mpq_class(-3, 7)));
  CHECK(r2.f == f);
  CHECK(r2.e == 2);

  auto g = T("T0^2*T1 - T2^3 + T0*T1*T3");
  auto r3 = extract_root(g.pow(3));
  CHECK(proportional(r3.f, g));
  CHECK(r3.e == 3);

  // a product of distinct factors is not a power
  auto sq = T("T0*T1 - T2*T3") * T("T0^2 + T1*T2");
  auto r4 = extract_root(sq);
  CHECK(r4.e == 1);
  CHECK(proportional(r4.f, sq));

  // g^2 h^2 = (gh)^2 even though the factors differ
  auto r5 = extract_root(sq.pow(2));
  CHECK(r5.e == 2);
  CHECK(proportional(r5.f, sq));

  CHECK_THROWS_AS(extract_root(TPoly()), Error);
  CHECK_THROWS_AS(extract_root(T("T0^2 + T1")), Error);

  const Field p = Field::prime(1000003);
  auto rp = extract_root(f.to_field(p).pow(2));
  CHECK(rp.e == 2);
  CHECK(proportional(rp.f, f.to_field(p)));
}

TEST_CASE("line multiplicities") {
  auto m = line_multiplicities(T(examples::kEx12F).pow(2));
  REQUIRE_FALSE(m.empty());
  for (int x : m) CHECK(x % 2 == 0);
}

TEST_CASE("normalization") {
  CHECK(normalize(T("-2*T0^2 + 4*T1*T2")) == T("T0^2 - 2*T1*T2"));
  CHECK(normalize(T("1/2*T0 + 1/3*T1")) == T("3*T0 + 2*T1"));
  auto fp = normalize(T("3*T0 + 6*T1").to_field(Field::prime(7)));
  CHECK(fp == T("T0 + 2*T1").to_field(Field::prime(7)));
}

TEST_CASE("verify_implicit") {
  auto u = examples::ex12();
  CHECK(verify_implicit(T(examples::kEx12F), u.p));
  CHECK_FALSE(verify_implicit(T("T0"), u.p));
  CHECK(verify_implicit(TPoly(), u.p));
  CHECK_FALSE(verify_implicit(T(examples::kEx12F) + T("T0^6"), u.p));
  auto up = u.p;
  for (auto& x : up) x = x.to_field(Field::prime(13));
  CHECK(verify_implicit(T(examples::kEx12F).to_field(Field::prime(13)), up));
}

TEST_CASE("proportional") {
  CHECK(proportional(T("2*T0 + 4*T1"), T("-T0 - 2*T1")));
  CHECK_FALSE(proportional(T("T0 + T1"), T("T0 - T1")));
  CHECK(proportional(T("2*T0 + 4*T1"), T("T0 + 2*T1").to_field(Field::prime(101))));
  CHECK_FALSE(proportional(TPoly(), T("T0")));
}

TEST_CASE("backend names") {
  CHECK(parse_backend("ff") == DetBackend::FractionFree);
  CHECK(parse_backend("interp") == DetBackend::Interpolation);
  CHECK(parse_backend("both") == DetBackend::Both);
  CHECK_THROWS_AS(parse_backend("lu"), Error);
  CHECK(std::string(to_string(DetBackend::Both)) == "both");
}
