// tpsurf: implicit equations of tensor product surfaces with a quadratic syzygy.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tpsurf/oracle.hpp"
#include "tpsurf/pipeline.hpp"
#include "tpsurf/report.hpp"

using namespace tpsurf;

namespace {

enum Exit { kOk = 0, kInternal = 1, kHypothesis = 2, kInput = 3 };

struct Common {
  std::string file;
  std::string field;
  int cap = 0;
  std::string json_path;
  std::optional<std::uint64_t> seed;
};

std::optional<Field> field_override(const Common& c) {
  if (c.field.empty()) return std::nullopt;
  return Field::parse(c.field);
}

InputFile load(const Common& c) {
  auto in = read_input(c.file, field_override(c));
  if (c.cap > 0) in.cap = c.cap;
  if (c.seed) in.seed = c.seed;
  return in;
}

// JSON goes to the path, or to stdout for "-"; returns true when stdout was used.
bool emit_json(const std::string& path, const Json& j) {
  if (path.empty()) return false;
  const std::string text = j.dump(2) + "\n";
  if (path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidInput, "cli_frontend::run", "cannot write '" + path + "'");
  out << text;
  return false;
}

const char* hypothesis_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotCertifiedBasepointFree: return "U is basepoint free";
    case ErrorCode::HasLinearSyzygy: return "I_U has no linear syzygy";
    case ErrorCode::NoQuadraticSyzygy: return "I_U has a minimal first syzygy of bidegree (0,2)";
    case ErrorCode::DegreeTooSmall: return "b >= 3";
    default: return "";
  }
}

void print_poly_list(std::ostream& os, const std::array<BiPoly, 4>& v) {
  os << "[";
  for (std::size_t i = 0; i < 4; ++i) os << (i ? ", " : "") << v[i].to_string();
  os << "]";
}

void print_analysis(std::ostream& os, const Analysis& an) {
  const auto& u = an.input;
  os << "input        " << u.field().name() << ", bidegree " << u.degree().to_string() << "\n";
  os << "certificate  basepoint free, (I_U)_{N,N} = R_{N,N} at N = " << an.cert.level << "\n";
  if (an.quad.swapped) os << "symmetry     syzygy found in bidegree (2,0); working with s<->u, t<->v\n";
  os << "quadratic    ";
  print_poly_list(os, an.quad.q.entries);
  os << "\n";
  const auto& r = an.report;
  os << "dim V        " << r.dim_v << "\n";
  if (r.dim_v == 2) {
    os << "subcase      " << to_string(r.subcase) << ", d = (" << r.d[0].to_string() << ", " << r.d[1].to_string()
       << ")\n";
    os << "g0, g1       " << r.g0.to_string() << ", " << r.g1.to_string() << "\n";
    os << "h            " << r.h.to_string() << "\n";
  } else {
    os << "alpha        " << r.alpha.to_string() << "\n";
    os << "beta         " << r.beta.to_string() << "\n";
  }
}

void print_result(std::ostream& os, const PipelineResult& res) {
  print_analysis(os, res.analysis);
  for (std::size_t i = 0; i < res.syzygies.syzygies.size(); ++i) {
    const auto& s = res.strand_syzygies[i];
    os << res.syzygies.names[i] << std::string(13 - std::min<std::size_t>(12, res.syzygies.names[i].size()), ' ')
       << s.bidegree.to_string() << " ";
    print_poly_list(os, s.entries);
    os << "  (" << res.column_counts[i] << " columns)\n";
  }
  os << "strand       " << res.strand.nu.to_string() << ", " << res.strand.rows() << " x " << res.strand.cols() << "\n";
  os << "F            " << res.implicit.f.to_string() << "\n";
  os << "deg F        " << res.implicit.deg_f << "\n";
  os << "e            " << res.implicit.e << (res.implicit.perfect_power ? "" : " (no perfect power found)") << "\n";
  os << "verified     " << (res.verified ? "yes" : "NO") << "\n";
}

int cmd_implicitize(const Common& c, const std::string& backend, bool with_delta) {
  auto in = load(c);
  PipelineOptions opt;
  opt.cap = in.cap.value_or(0);
  opt.backend = parse_backend(backend);
  auto res = run_pipeline(in.input, opt);
  if (!emit_json(c.json_path, envelope("implicitize", pipeline_json(res, with_delta)))) print_result(std::cout, res);
  if (!res.verified) {
    std::cerr << "error: F does not vanish on the parametrization\n";
    return kInternal;
  }
  return kOk;
}

int cmd_analyze(const Common& c) {
  auto in = load(c);
  PipelineOptions opt;
  opt.cap = in.cap.value_or(0);
  auto an = analyze(in.input, opt);
  if (!emit_json(c.json_path, envelope("analyze", analysis_json(an)))) print_analysis(std::cout, an);
  return kOk;
}

int cmd_table(const Common& c, const std::string& box_text, bool reverse) {
  auto in = load(c);
  std::optional<BiDegree> box = in.box;
  if (!box_text.empty()) box = parse_bidegree(box_text);
  TableOptions opt;
  opt.reverse_columns = reverse;
  auto table = minimal_syzygy_table(in.input, box, opt);
  Json body{{"input", to_json(in.input)}, {"table", to_json(table)}};
  if (!emit_json(c.json_path, envelope("table", body))) {
    std::cout << "minimal first syzygies in box " << table.box.to_string() << ":";
    for (const auto& d : table.multiset()) std::cout << " " << d.to_string();
    std::cout << "\n";
    for (const auto& e : table.entries) std::cout << "  " << e.deg.to_string() << " x" << e.multiplicity << "\n";
  }
  return kOk;
}

// Pipeline on one input cross-checked against the independent oracles.
Json oracle_record(const SurfaceInput& u, std::uint64_t seed, bool& ok) {
  Json rec{{"input", to_json(u)}};
  try {
    auto res = run_pipeline(u);
    rec["dimV"] = res.analysis.report.dim_v;
    rec["subcase"] = to_string(res.analysis.report.subcase);
    rec["swapped"] = res.analysis.quad.swapped;
    rec["F"] = res.implicit.f.to_string();
    rec["e"] = res.implicit.e;
    rec["degF"] = res.implicit.deg_f;
    rec["verified"] = res.verified;
    const auto& w = res.analysis.quad.input;
    auto full = full_strand_d1(w, res.strand.nu);
    const std::size_t rank = multi_prime_rank(res.strand.coefficient_matrix());
    const bool same = same_column_space(res.strand, full.matrix);
    rec["strand_rank"] = rank;
    rec["full_strand_rank"] = full.rank;
    rec["same_column_space"] = same;
    bool sample_ok = false;
    try {
      SampleOptions so;
      so.seed = seed;
      sample_ok = proportional(sample_implicitize(u, res.implicit.deg_f, so), res.implicit.f);
    } catch (const Error& e) {
      rec["sample_error"] = to_json(e);
    }
    rec["sample_agrees"] = sample_ok;
    ok = res.verified && same && sample_ok && rank == static_cast<std::size_t>(2 * w.a * w.b);
  } catch (const Error& e) {
    rec["error"] = to_json(e);
    ok = false;
  }
  rec["ok"] = ok;
  return rec;
}

struct OracleArgs {
  int batch = 0;
  std::string kind = "dim2_i";
  int a = 2, b = 3;
  int conjecture = 0;
};

int cmd_oracle(const Common& c, const OracleArgs& o) {
  const std::uint64_t seed = c.seed.value_or(1);
  std::vector<Json> records;
  bool all_ok = true;
  auto push = [&](Json rec) {
    if (c.json_path.empty()) std::cout << rec.dump() << "\n";
    records.push_back(std::move(rec));
  };
  if (o.conjecture > 0) {
    if (!c.file.empty()) {
      auto rep = conjecture_experiment(load(c).input, o.conjecture);
      push({{"conjecture", to_json(rep)}});
    } else {
      for (int i = 0; i < std::max(1, o.batch); ++i) {
        auto u = plant_zero_n(o.a, o.b, o.conjecture, seed + static_cast<std::uint64_t>(i), field_override(c).value_or(Field::rationals()));
        push({{"input", to_json(u)}, {"conjecture", to_json(conjecture_experiment(u, o.conjecture))}});
      }
    }
  } else if (o.batch > 0) {
    const auto kind = parse_plant_kind(o.kind);
    for (int i = 0; i < o.batch; ++i) {
      const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
      auto inst = plant_instance(kind, o.a, o.b, s, field_override(c).value_or(Field::rationals()));
      bool ok = false;
      Json rec = oracle_record(inst.input, s, ok);
      rec["kind"] = o.kind;
      rec["seed"] = s;
      all_ok = all_ok && ok;
      push(std::move(rec));
    }
  } else {
    if (c.file.empty()) throw Error(ErrorCode::InvalidInput, "cli_frontend::oracle", "give an input file, --batch or --conjecture");
    bool ok = false;
    push(oracle_record(load(c).input, seed, ok));
    all_ok = ok;
  }
  if (!c.json_path.empty()) {
    Json arr = Json::array();
    for (auto& r : records) arr.push_back(std::move(r));
    emit_json(c.json_path, envelope("oracle", {{"records", arr}, {"ok", all_ok}}));
  }
  return all_ok ? kOk : kInternal;
}

int cmd_plant(const Common& c, const std::string& kind_name, int a, int b, const std::string& out_path) {
  const std::uint64_t seed = c.seed.value_or(1);
  const Field field = field_override(c).value_or(Field::rationals());
  auto inst = plant_instance(parse_plant_kind(kind_name), a, b, seed, field);
  const std::string text = "# planted " + kind_name + "\n" + format_input(inst.input, seed);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorCode::InvalidInput, "cli_frontend::plant", "cannot write '" + out_path + "'");
    out << text;
  }
  Json body{{"input", to_json(inst.input)}, {"kind", kind_name}, {"seed", seed}, {"attempts", inst.attempts}};
  emit_json(c.json_path, envelope("plant", body));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  // implicitize is the default subcommand
  static const std::vector<std::string> kCommands{"implicitize", "table", "analyze", "oracle", "plant"};
  std::vector<std::string> args(argv, argv + argc);
  if (args.size() > 1 && args[1][0] != '-' &&
      std::find(kCommands.begin(), kCommands.end(), args[1]) == kCommands.end()) {
    args.insert(args.begin() + 1, "implicitize");
  }

  CLI::App app{"Implicit equations of tensor product surfaces with a quadratic syzygy"};
  app.require_subcommand(1);
  Common common;
  std::uint64_t seed_value = 0;

  auto add_common = [&](CLI::App* sub, bool file_required) {
    auto* f = sub->add_option("file", common.file, "input file");
    if (file_required) f->required();
    sub->add_option("--field", common.field, "coefficient field: qq or fp:<p>");
    sub->add_option("--cap", common.cap, "largest N tried by the basepoint certificate");
    sub->add_option("--json", common.json_path, "write the JSON report to a path ('-' for stdout)");
    sub->add_option("--seed", seed_value, "random seed");
  };

  std::string backend = "interp";
  bool with_delta = false;
  auto* implicitize = app.add_subcommand("implicitize", "run the full pipeline (default)");
  add_common(implicitize, true);
  implicitize->add_option("--det-backend", backend, "ff, interp or both")->check(CLI::IsMember({"ff", "interp", "both"}));
  implicitize->add_flag("--delta", with_delta, "include the determinant in the JSON report");

  std::string box;
  bool reverse = false;
  auto* table = app.add_subcommand("table", "bidegrees of the minimal first syzygies");
  add_common(table, true);
  table->add_option("--box", box, "upper bound c,d of the bidegrees swept");
  table->add_flag("--reverse-columns", reverse, "compute strand kernels on reversed columns");

  auto* analyze_cmd = app.add_subcommand("analyze", "stop after classification");
  add_common(analyze_cmd, true);

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "cross-check against the independent oracles");
  add_common(oracle, false);
  oracle->add_option("--batch", oracle_args.batch, "number of planted instances");
  oracle->add_option("--kind", oracle_args.kind, "dim2_i, dim2_ii or dim3");
  oracle->add_option("-a", oracle_args.a, "bidegree a of planted instances");
  oracle->add_option("-b", oracle_args.b, "bidegree b of planted instances");
  oracle->add_option("--conjecture", oracle_args.conjecture, "(0,n) experiment up to this n");

  std::string plant_kind = "dim2_i", plant_out;
  int plant_a = 2, plant_b = 3;
  auto* plant = app.add_subcommand("plant", "generate a random instance of a given shape");
  plant->add_option("kind", plant_kind, "dim2_i, dim2_ii or dim3")->required();
  plant->add_option("-a", plant_a, "bidegree a");
  plant->add_option("-b", plant_b, "bidegree b");
  plant->add_option("-o,--output", plant_out, "write the input file here");
  plant->add_option("--field", common.field, "coefficient field: qq or fp:<p>");
  plant->add_option("--json", common.json_path, "write a JSON record");
  plant->add_option("--seed", seed_value, "random seed");

  std::vector<const char*> cargv;
  for (const auto& s : args) cargv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }
  if (app.get_subcommands().front()->count("--seed") > 0) common.seed = seed_value;

  auto* sub = app.get_subcommands().front();
  try {
    if (sub == implicitize) return cmd_implicitize(common, backend, with_delta);
    if (sub == table) return cmd_table(common, box, reverse);
    if (sub == analyze_cmd) return cmd_analyze(common);
    if (sub == oracle) return cmd_oracle(common, oracle_args);
    return cmd_plant(common, plant_kind, plant_a, plant_b, plant_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (is_hypothesis_failure(e.code())) {
      std::cerr << "rejected: the input violates the hypothesis \"" << hypothesis_name(e.code()) << "\"\n";
    }
    try {
      emit_json(common.json_path, envelope(sub->get_name(), {{"error", to_json(e)}}));
    } catch (const Error&) {
    }
    if (is_hypothesis_failure(e.code())) return kHypothesis;
    if (e.code() == ErrorCode::InvalidInput || e.code() == ErrorCode::ParseError) return kInput;
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
}
