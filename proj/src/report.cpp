#include "tpsurf/report.hpp"

namespace tpsurf {

Json to_json(const BiDegree& d) { return Json::array({d.c, d.d}); }

Json to_json(const ScalarMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const SurfaceInput& u) {
  Json p = Json::array();
  for (const auto& g : u.p) p.push_back(g.to_string());
  return {{"field", u.field().name()}, {"a", u.a}, {"b", u.b}, {"p", p}};
}

Json to_json(const Certificate& c) {
  Json j{{"certified", c.certified}, {"cap", c.cap}};
  j["level"] = c.certified ? Json(c.level) : Json(nullptr);
  return j;
}

Json to_json(const SyzygyVector& s) {
  Json e = Json::array();
  for (const auto& x : s.entries) e.push_back(x.to_string());
  return {{"bidegree", to_json(s.bidegree)}, {"entries", e}};
}

Json to_json(const CaseReport& r) {
  Json j{{"dimV", r.dim_v}, {"subcase", to_string(r.subcase)}, {"reindex", to_json(r.reindex)}};
  Json gens = Json::array();
  for (const auto& g : r.generators) gens.push_back(g.to_string());
  j["generators"] = gens;
  if (r.dim_v == 2) {
    j["d"] = Json::array({r.d[0].to_string(), r.d[1].to_string()});
    Json k = Json::array();
    for (const auto& x : r.kernel) k.push_back(x.to_string());
    j["kernel"] = k;
    j["g0"] = r.g0.to_string();
    j["g1"] = r.g1.to_string();
    j["h"] = r.h.to_string();
  } else if (r.dim_v == 3) {
    j["alpha"] = r.alpha.to_string();
    j["beta"] = r.beta.to_string();
  }
  return j;
}

Json to_json(const SyzygyTable& t) {
  Json entries = Json::array();
  for (const auto& e : t.entries) entries.push_back({{"c", e.deg.c}, {"d", e.deg.d}, {"multiplicity", e.multiplicity}});
  return {{"box", to_json(t.box)}, {"entries", entries}};
}

Json to_json(const ConjectureReport& r) {
  return {{"n", r.n},           {"dimV", r.dim_v},         {"target", r.target},
          {"syz_nu", r.syz_nu}, {"span_C", r.span_c},      {"span_all", r.span_all},
          {"new_at_low", r.new_at_low}, {"supports", r.supports}};
}

Json to_json(const Error& e) {
  return {{"code", std::string(to_string(e.code()))}, {"origin", e.origin()}, {"message", e.detail()},
          {"hypothesis", is_hypothesis_failure(e.code())}};
}

Json to_json(const ImplicitResult& r, bool with_delta) {
  Json j{{"F", r.f.to_string()}, {"degF", r.deg_f}, {"e", r.e}, {"Delta_degree", r.delta.total_degree()},
         {"perfect_power", r.perfect_power}};
  if (with_delta) j["Delta"] = r.delta.to_string();
  return j;
}

Json analysis_json(const Analysis& an) {
  return {{"input", to_json(an.input)},
          {"certificate", to_json(an.cert)},
          {"swapped", an.quad.swapped},
          {"Q", to_json(an.quad.q)},
          {"case", to_json(an.report)}};
}

Json pipeline_json(const PipelineResult& res, bool with_delta) {
  Json j = analysis_json(res.analysis);
  Json syz = Json::array();
  for (std::size_t i = 0; i < res.syzygies.syzygies.size(); ++i) {
    Json s = to_json(res.syzygies.syzygies[i]);
    s["name"] = res.syzygies.names[i];
    s["on_input"] = to_json(res.strand_syzygies[i])["entries"];
    s["columns"] = res.column_counts[i];
    syz.push_back(std::move(s));
  }
  j["syzygies"] = syz;
  j["strand"] = {{"nu", to_json(res.strand.nu)}, {"rows", res.strand.rows()}, {"cols", res.strand.cols()}};
  j["implicit"] = to_json(res.implicit, with_delta);
  j["verified"] = res.verified;
  return j;
}

Json envelope(const std::string& command, Json body) {
  body["schema"] = kReportSchema;
  body["command"] = command;
  return body;
}

}  // namespace tpsurf
