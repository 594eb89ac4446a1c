#pragma once

#include <string>

#include <json.hpp>

#include "tpsurf/error.hpp"
#include "tpsurf/oracle.hpp"
#include "tpsurf/pipeline.hpp"

namespace tpsurf {

/// Keys are emitted sorted, so equal inputs give byte-identical dumps.
using Json = nlohmann::json;

inline constexpr const char* kReportSchema = "tpsurf.report/1";

Json to_json(const BiDegree& d);
Json to_json(const ScalarMatrix& m);
Json to_json(const SurfaceInput& u);
Json to_json(const Certificate& c);
Json to_json(const SyzygyVector& s);
Json to_json(const CaseReport& r);
Json to_json(const SyzygyTable& t);
Json to_json(const ConjectureReport& r);
Json to_json(const Error& e);
Json to_json(const ImplicitResult& r, bool with_delta = false);

Json analysis_json(const Analysis& an);
Json pipeline_json(const PipelineResult& res, bool with_delta = false);

/// {"schema": ..., "command": command} merged with body.
Json envelope(const std::string& command, Json body);

}  // namespace tpsurf
