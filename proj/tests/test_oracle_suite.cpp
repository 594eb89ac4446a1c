#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "examples.hpp"
#include "tpsurf/error.hpp"
#include "tpsurf/oracle.hpp"
#include "tpsurf/pipeline.hpp"

using namespace tpsurf;

namespace {

TPoly T(const char* s) { return TPoly::parse(s); }

CaseReport classify_input(const SurfaceInput& u) {
  auto q = require_hypotheses(u, basepoint_free_certificate(u));
  return classify(q.input, build_fvector(q.input, q.q));
}

}  // namespace

TEST_CASE("sampling recovers the golden input implicit equation") {
  auto u = examples::ex12();
  auto f = sample_implicitize(u, 6);
  CHECK(proportional(f, T(examples::kEx12F)));
  CHECK(f.field().characteristic() == kOraclePrime);
  // one degree too low: only the zero form vanishes
  CHECK_THROWS_AS(sample_implicitize(u, 5), Error);
  // one degree too high: T_k F all vanish
  try {
    sample_implicitize(u, 7);
    FAIL("expected KernelNotUnique");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::KernelNotUnique);
  }
}

TEST_CASE("sampling over F_p uses the input's prime") {
  const Field p = Field::prime(1000003);
  auto u = examples::ex12();
  for (auto& x : u.p) x = x.to_field(p);
  auto f = sample_implicitize(u, 6);
  CHECK(f.field() == p);
  CHECK(proportional(f, T(examples::kEx12F).to_field(p)));
}

TEST_CASE("multi-prime rank") {
  ScalarMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = Scalar(static_cast<long>(i * 3 + j + 1));
  CHECK(multi_prime_rank(m) == 2);
  m(2, 2) = Scalar(mpq_class(1, 3));
  CHECK(multi_prime_rank(m) == 3);
  // singular mod 7 only: the primes must not be fooled
  ScalarMatrix n(2, 2);
  n(0, 0) = Scalar(7);
  n(1, 1) = Scalar(1);
  const std::uint64_t small[] = {7, 11};
  CHECK(multi_prime_rank(n, small) == 2);
  CHECK(multi_prime_rank(n) == 2);
}

TEST_CASE("full strand of the golden input") {
  auto u = examples::ex12();
  auto full = full_strand_d1(u, {3, 2});
  CHECK(full.rank == 12);
  CHECK(full.matrix.cols() == 12);
  CHECK(full.candidates > 12);
  auto res = run_pipeline(u);
  CHECK(same_column_space(res.strand, full.matrix));
  // a proper subset of the columns spans less
  auto few = res.strand_syzygies;
  few.pop_back();
  StrandMatrix part = assemble_strand(few, {3, 2}, Field::rationals());
  CHECK_FALSE(same_column_space(part, full.matrix));
}

TEST_CASE("plant kinds") {
  CHECK(parse_plant_kind("dim2_i") == PlantKind::Dim2I);
  CHECK(parse_plant_kind("dim2_ii") == PlantKind::Dim2II);
  CHECK(parse_plant_kind("dim3") == PlantKind::Dim3);
  CHECK(std::string(to_string(PlantKind::Dim2II)) == "dim2_ii");
  CHECK_THROWS_AS(parse_plant_kind("dim4"), Error);
  CHECK_THROWS_AS(plant_instance(PlantKind::Dim3, 2, 2, 1), Error);
}

TEST_CASE("planted instances classify as planted") {
  for (auto kind : {PlantKind::Dim2I, PlantKind::Dim2II, PlantKind::Dim3}) {
    auto inst = plant_instance(kind, 2, 3, 11);
    auto r = classify_input(inst.input);
    if (kind == PlantKind::Dim3) {
      CHECK(r.dim_v == 3);
    } else {
      CHECK(r.dim_v == 2);
      CHECK(r.subcase == (kind == PlantKind::Dim2I ? Subcase::I : Subcase::II));
    }
    // deterministic under the seed
    auto again = plant_instance(kind, 2, 3, 11);
    CHECK(again.input.p == inst.input.p);
    auto other = plant_instance(kind, 2, 3, 12);
    CHECK_FALSE(other.input.p == inst.input.p);
  }
}

TEST_CASE("planted instance over F_p") {
  const Field p = Field::prime(10007);
  auto inst = plant_instance(PlantKind::Dim2I, 2, 3, 5, p);
  CHECK(inst.input.p[0].field() == p);
  auto res = run_pipeline(inst.input);
  CHECK(res.verified);
  CHECK(res.implicit.e * res.implicit.deg_f == 12);
}

TEST_CASE("(0,n) plants and the low-strand experiment") {
  auto u = plant_zero_n(2, 4, 3, 21);
  CHECK(syzygy_strand(u, {0, 2}).empty());
  CHECK(syzygy_strand(u, {0, 3}).size() == 1);

  auto rep = conjecture_experiment(examples::ex12(), 4);
  CHECK(rep.n == 2);
  CHECK(rep.dim_v == 2);
  CHECK(rep.target == 12);
  CHECK(rep.syz_nu == 12);
  CHECK(rep.new_at_low == 2);
  CHECK(rep.span_all == 12);
  CHECK(rep.supports);

  auto r3 = conjecture_experiment(plant_zero_n(2, 5, 3, 21), 4);
  CHECK(r3.n == 3);
  CHECK(r3.dim_v == 2);
  CHECK(r3.new_at_low == 2);
  CHECK(r3.span_all == r3.target);
  CHECK(r3.supports);

  // b = 4 < 2n - 1: nothing new in bidegree (a, b - n) and the strand is not filled
  auto r4 = conjecture_experiment(u, 4);
  CHECK(r4.n == 3);
  CHECK(r4.dim_v == 2);
  CHECK(r4.new_at_low == 0);
  CHECK(r4.span_all < r4.target);
  CHECK_FALSE(r4.supports);
}
