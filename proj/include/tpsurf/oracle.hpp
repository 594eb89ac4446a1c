#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tpsurf/implicit.hpp"
#include "tpsurf/quad.hpp"
#include "tpsurf/strand.hpp"

namespace tpsurf {

/// Mersenne prime 2^31 - 1, the default oracle modulus.
inline constexpr std::uint64_t kOraclePrime = 2147483647ull;

struct SampleOptions {
  std::uint64_t seed = 1;
  int max_retries = 3;
  /// Modulus for rational inputs; inputs over F_p use their own p.
  std::uint64_t prime = kOraclePrime;
  /// Sample coordinates are drawn from [-range, range].
  long range = 1000;
};

/// The degree-deg_f form vanishing on sampled image points, over F_p.
/// Throws KernelNotUnique when the kernel is not one-dimensional.
TPoly sample_implicitize(const SurfaceInput& u, int deg_f, SampleOptions options = {});

/// Rank over F_p for each prime; a disagreement triggers an exact rank in the matrix's own field.
std::size_t multi_prime_rank(const ScalarMatrix& m, std::span<const std::uint64_t> primes = {});

struct FullStrand {
  StrandMatrix matrix;     // one column per independent syzygy of bidegree nu
  std::size_t rank = 0;    // rank of the column span (coefficient matrix)
  std::size_t candidates = 0;  // products m * sigma considered before deduplication
};

/// d1 in strand nu from every syzygy of every bidegree <= nu, deduplicated by rank.
FullStrand full_strand_d1(const SurfaceInput& u, BiDegree nu);

/// True if the columns of `sub` lie in the span of the columns of `full` and have the same rank.
bool same_column_space(const StrandMatrix& sub, const StrandMatrix& full);

enum class PlantKind { Dim2I, Dim2II, Dim3 };
PlantKind parse_plant_kind(const std::string& name);
const char* to_string(PlantKind k);

struct PlantedInstance {
  PlantKind kind = PlantKind::Dim2I;
  SurfaceInput input;
  std::array<Scalar, 2> d;  // dim 2 only
  BiPoly h, alpha, beta;    // planted h (dim 2) or alpha, beta (dim 3)
  ScalarMatrix basis_change;  // input.p = planted generators * basis_change
  int attempts = 0;
};

/// Random instance of the given shape passing the certificate, the
/// hypothesis gate and classification as the planted kind.
PlantedInstance plant_instance(PlantKind kind, int a, int b, std::uint64_t seed,
                               const Field& field = Field::rationals(), int max_attempts = 100);

/// Random U = (h g0, h g1, p2, p3) with g0, g1 binary forms of degree n, passing the
/// certificate and having no (0,m) syzygy for m < n.
SurfaceInput plant_zero_n(int a, int b, int n, std::uint64_t seed, const Field& field = Field::rationals(),
                          int max_attempts = 100);

/// Outcome of testing whether {C, S1, S2} can determine d1 when C has bidegree (0,n).
struct ConjectureReport {
  int n = 0;                 // minimal n with a (0,n) syzygy, 0 if none up to the bound
  int dim_v = 0;
  std::size_t target = 0;    // 2ab
  std::size_t syz_nu = 0;    // dim Syz_{2a-1,b-1}
  std::size_t span_c = 0;    // dim of the multiples of C in the strand
  std::size_t span_all = 0;  // together with all multiples of Syz_{(a,b-n)}
  std::size_t new_at_low = 0;  // dim Syz_{(a,b-n)} modulo multiples of C
  /// dim V = 2, exactly two new syzygies in (a,b-n) and they fill the strand.
  bool supports = false;
};

ConjectureReport conjecture_experiment(const SurfaceInput& u, int max_n);

}  // namespace tpsurf
