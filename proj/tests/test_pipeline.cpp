#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "examples.hpp"
#include "tpsurf/error.hpp"
#include "tpsurf/pipeline.hpp"
#include "tpsurf/report.hpp"

using namespace tpsurf;

namespace {

TPoly T(const char* s) { return TPoly::parse(s); }

ErrorCode error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalContract;
}

const char* kEx12Text =
    "# comment\n"
    "field: qq\n"
    "a: 2\n"
    "b = 3\n"
    "seed: 9\n"
    "cap: 12\n"
    "box: 6,4\n"
    "\n"
    "p0: s^2*u^3+t^2*u^2*v\n"
    "p1: s^2*u*v^2+t^2*v^3\n"
    "p2: s^2*v^3\n"
    "p3: t^2*u^3\n";

}  // namespace

TEST_CASE("input parsing") {
  auto in = parse_input(kEx12Text);
  CHECK(in.input.p == examples::ex12().p);
  CHECK(in.seed == 9u);
  CHECK(in.cap == 12);
  CHECK(in.box == BiDegree{6, 4});

  // bare generators in order
  auto bare = parse_input("a: 2\nb: 3\ns^2*u^3+t^2*u^2*v\ns^2*u*v^2+t^2*v^3\ns^2*v^3\nt^2*u^3\n");
  CHECK(bare.input.p == examples::ex12().p);
  CHECK_FALSE(bare.seed.has_value());

  auto fp = parse_input(kEx12Text, Field::prime(101));
  CHECK(fp.input.field() == Field::prime(101));

  CHECK(error_of([] { parse_input("a: 2\np0: s^2*u^3\n"); }) == ErrorCode::ParseError);
  CHECK(error_of([] { parse_input("b: 3\n"); }) == ErrorCode::ParseError);
  CHECK(error_of([] { parse_input("a: x\nb: 3\n"); }) == ErrorCode::ParseError);
  CHECK(error_of([] { parse_input("colour: red\na: 2\nb: 3\n"); }) == ErrorCode::ParseError);
  CHECK(error_of([] { parse_input("a: 2\nb: 3\np0: s^2*u^3+\np1: 1\np2: 1\np3: 1\n"); }) == ErrorCode::ParseError);
  CHECK(error_of([] { read_input("/nonexistent/file.tps"); }) == ErrorCode::InvalidInput);
  CHECK(parse_bidegree("7,9") == BiDegree{7, 9});
  CHECK(error_of([] { parse_bidegree("7"); }) == ErrorCode::ParseError);
}

TEST_CASE("format_input round trip") {
  auto u = examples::ex61();
  auto back = parse_input(format_input(u, 4));
  CHECK(back.input.p == u.p);
  CHECK(back.input.a == 3);
  CHECK(back.seed == 4u);
}

TEST_CASE("golden input end to end") {
  auto res = run_pipeline(examples::ex12());
  CHECK(res.verified);
  CHECK(res.implicit.f == T(examples::kEx12F));
  CHECK(res.implicit.e == 2);
  CHECK(res.implicit.deg_f == 6);
  CHECK(res.column_counts == std::vector<std::size_t>{4, 4, 4});
  CHECK(res.analysis.report.dim_v == 2);
}

TEST_CASE("JSON report") {
  auto u = examples::ex12();
  auto j1 = envelope("implicitize", pipeline_json(run_pipeline(u))).dump();
  auto j2 = envelope("implicitize", pipeline_json(run_pipeline(u))).dump();
  CHECK(j1 == j2);
  auto j = Json::parse(j1);
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["command"] == "implicitize");
  CHECK(j["implicit"]["F"] == examples::kEx12F);
  CHECK(j["implicit"]["e"] == 2);
  CHECK(j["verified"] == true);

  Error e(ErrorCode::NoQuadraticSyzygy, "quad_analyzer::require_hypotheses", "none");
  auto ej = to_json(e);
  CHECK(ej["code"] == "NoQuadraticSyzygy");
  CHECK(ej["hypothesis"] == true);
}

TEST_CASE("pipeline over F_p") {
  const Field p = Field::prime(1000003);
  auto u = examples::ex12();
  for (auto& x : u.p) x = x.to_field(p);
  auto res = run_pipeline(u);
  CHECK(res.verified);
  CHECK(res.implicit.f == T(examples::kEx12F).to_field(p));

  auto small = examples::ex12();
  for (auto& x : small.p) x = x.to_field(Field::prime(11));
  CHECK(error_of([&] { run_pipeline(small); }) == ErrorCode::InvalidInput);
}

TEST_CASE("backends give the same answer") {
  auto u = examples::ex12();
  for (auto b : {DetBackend::FractionFree, DetBackend::Both}) {
    PipelineOptions o;
    o.backend = b;
    CHECK(run_pipeline(u, o).implicit.f == T(examples::kEx12F));
  }
}

TEST_CASE("a (2,0) syzygy goes through the swap") {
  auto w = swap_symmetry(examples::ex12());
  auto res = run_pipeline(w);
  CHECK(res.analysis.quad.swapped);
  CHECK(res.verified);
  CHECK(res.implicit.f == T(examples::kEx12F));
}

TEST_CASE("rejections") {
  CHECK(error_of([] { run_pipeline(examples::ex62()); }) == ErrorCode::NoQuadraticSyzygy);
  PipelineOptions o;
  o.cap = 4;
  CHECK(error_of([&] { run_pipeline(examples::ex12(), o); }) == ErrorCode::NotCertifiedBasepointFree);
}

TEST_CASE("a change of basis transforms F by the inverse") {
  auto u = examples::ex12();
  const TPoly f = T(examples::kEx12F);
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> d(-2, 2);
  int done = 0;
  while (done < 5) {
    ScalarMatrix b(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) b(i, j) = Scalar(d(rng));
    auto inv = inverse(b);
    if (!inv) continue;
    ++done;
    Generators p;
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t i = 0; i < 4; ++i) p[j] += u.p[i] * b(i, j);
    auto res = run_pipeline(SurfaceInput::make(2, 3, p));
    std::array<std::array<Scalar, 4>, 4> m;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m[i][j] = (*inv)(j, i);
    CHECK(res.verified);
    CHECK(res.implicit.e == 2);
    CHECK(proportional(res.implicit.f, linear_substitute(f, m)));
  }
}
