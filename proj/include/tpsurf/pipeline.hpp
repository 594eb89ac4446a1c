#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tpsurf/implicit.hpp"
#include "tpsurf/quad.hpp"
#include "tpsurf/strand.hpp"
#include "tpsurf/syzygy_builder.hpp"

namespace tpsurf {

/// Parsed input file: "key: value" header lines (field, a, b, seed, cap, box)
/// followed by the four generators, either bare or as "p0: ...".
/// Blank lines and lines starting with '#' are ignored.
struct InputFile {
  SurfaceInput input;
  std::optional<std::uint64_t> seed;
  std::optional<int> cap;
  std::optional<BiDegree> box;
};

/// field_override replaces the header's field (coefficients are reduced into it).
InputFile parse_input(std::string_view text, std::optional<Field> field_override = std::nullopt);
InputFile read_input(const std::string& path, std::optional<Field> field_override = std::nullopt);
std::string format_input(const SurfaceInput& u, std::optional<std::uint64_t> seed = std::nullopt);

/// "c,d"
BiDegree parse_bidegree(std::string_view text);

struct PipelineOptions {
  int cap = 0;  // certificate bound, <= 0 for 2(a+b)
  DetBackend backend = DetBackend::Interpolation;
};

struct Analysis {
  SurfaceInput input;
  Certificate cert;
  QuadSyzygy quad;  // quad.input is the (possibly swapped) input everything below refers to
  FVector fvector;
  CaseReport report;
};

/// Certificate, hypothesis gate and classification.
Analysis analyze(const SurfaceInput& u, const PipelineOptions& options = {});

struct PipelineResult {
  Analysis analysis;
  SyzygySet syzygies;                         // on report.generators
  std::vector<SyzygyVector> strand_syzygies;  // the same, on quad.input.p
  StrandMatrix strand;
  std::vector<std::size_t> column_counts;
  ImplicitResult implicit;
  bool verified = false;  // F(p) == 0 on the original input
};

/// Full run; over F_p requires p > 2ab.
PipelineResult run_pipeline(const SurfaceInput& u, const PipelineOptions& options = {});

}  // namespace tpsurf
