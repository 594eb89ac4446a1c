#include "tpsurf/pipeline.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "tpsurf/error.hpp"

namespace tpsurf {

namespace {

constexpr const char* kParse = "cli_frontend::parse_input";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <class T>
T parse_number(std::string_view text, const std::string& what) {
  text = trim(text);
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorCode::ParseError, kParse, "bad " + what + " '" + std::string(text) + "'");
  }
  return value;
}

// Splits "key: value" or "key = value"; the key must be a bare word.
std::optional<std::pair<std::string, std::string_view>> split_key(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) ++i;
  if (i == 0) return std::nullopt;
  std::size_t j = i;
  while (j < line.size() && (line[j] == ' ' || line[j] == '\t')) ++j;
  if (j >= line.size() || (line[j] != ':' && line[j] != '=')) return std::nullopt;
  return std::pair{std::string(line.substr(0, i)), trim(line.substr(j + 1))};
}

}  // namespace

BiDegree parse_bidegree(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) fail(ErrorCode::ParseError, kParse, "expected c,d");
  return {parse_number<int>(text.substr(0, comma), "bidegree"), parse_number<int>(text.substr(comma + 1), "bidegree")};
}

InputFile parse_input(std::string_view text, std::optional<Field> field_override) {
  Field field = Field::rationals();
  std::optional<int> a, b;
  InputFile out;
  std::vector<std::string> polys(4);
  std::size_t bare = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto kv = split_key(line);
    if (kv && kv->first.size() == 2 && kv->first[0] == 'p' && kv->first[1] >= '0' && kv->first[1] <= '3') {
      polys[static_cast<std::size_t>(kv->first[1] - '0')] = std::string(kv->second);
      continue;
    }
    if (kv && kv->first == "field") field = Field::parse(kv->second);
    else if (kv && kv->first == "a") a = parse_number<int>(kv->second, "a");
    else if (kv && kv->first == "b") b = parse_number<int>(kv->second, "b");
    else if (kv && kv->first == "seed") out.seed = parse_number<std::uint64_t>(kv->second, "seed");
    else if (kv && kv->first == "cap") out.cap = parse_number<int>(kv->second, "cap");
    else if (kv && kv->first == "box") out.box = parse_bidegree(kv->second);
    else if (kv && (kv->first == "s" || kv->first == "t" || kv->first == "u" || kv->first == "v")) {
      fail(ErrorCode::ParseError, kParse, "unexpected '" + kv->first + "' assignment");
    } else if (kv) {
      fail(ErrorCode::ParseError, kParse, "unknown key '" + kv->first + "'");
    } else {
      if (bare >= 4) fail(ErrorCode::ParseError, kParse, "more than four generators");
      polys[bare++] = std::string(line);
    }
  }
  if (!a || !b) fail(ErrorCode::ParseError, kParse, "header must give a and b");
  if (field_override) field = *field_override;
  Generators p;
  for (std::size_t i = 0; i < 4; ++i) {
    if (polys[i].empty()) fail(ErrorCode::ParseError, kParse, "missing generator p" + std::to_string(i));
    p[i] = BiPoly::parse(polys[i], field);
  }
  out.input = SurfaceInput::make(*a, *b, std::move(p));
  return out;
}

InputFile read_input(const std::string& path, std::optional<Field> field_override) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::InvalidInput, "cli_frontend::read_input", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_input(ss.str(), field_override);
}

std::string format_input(const SurfaceInput& u, std::optional<std::uint64_t> seed) {
  std::ostringstream out;
  out << "field: " << u.field().name() << "\n";
  out << "a: " << u.a << "\nb: " << u.b << "\n";
  if (seed) out << "seed: " << *seed << "\n";
  for (std::size_t i = 0; i < 4; ++i) out << "p" << i << ": " << u.p[i].to_string() << "\n";
  return out.str();
}

Analysis analyze(const SurfaceInput& u, const PipelineOptions& options) {
  Analysis an;
  an.input = u;
  an.cert = basepoint_free_certificate(u, options.cap);
  an.quad = require_hypotheses(u, an.cert);
  an.fvector = build_fvector(an.quad.input, an.quad.q);
  an.report = classify(an.quad.input, an.fvector);
  return an;
}

PipelineResult run_pipeline(const SurfaceInput& u, const PipelineOptions& options) {
  const char* origin = "cli_frontend::run";
  const Field field = u.field();
  const std::uint64_t two_ab = static_cast<std::uint64_t>(2 * u.a * u.b);
  if (!field.is_rational() && field.characteristic() <= two_ab) {
    fail(ErrorCode::InvalidInput, origin, "the field characteristic must exceed 2ab = " + std::to_string(two_ab));
  }
  PipelineResult res;
  res.analysis = analyze(u, options);
  const auto& q = res.analysis.quad;
  const auto& report = res.analysis.report;
  res.syzygies = build_syzygies(report, q.input.a, q.input.b);
  for (const auto& s : res.syzygies.syzygies) {
    auto t = to_original_basis(s, report.reindex);
    if (!t.annihilates(q.input.p)) fail(ErrorCode::InternalContract, origin, "reindexed syzygy does not annihilate U");
    res.strand_syzygies.push_back(std::move(t));
  }
  res.strand = assemble_d1(res.strand_syzygies, q.input.a, q.input.b, field);
  res.column_counts = res.strand.column_counts(res.strand_syzygies.size());
  TPoly delta = det_tpoly(res.strand, options.backend);
  if (delta.is_zero()) fail(ErrorCode::ZeroDeterminant, origin, "the strand determinant vanishes");
  if (delta.total_degree() != static_cast<int>(two_ab) || !delta.is_homogeneous()) {
    fail(ErrorCode::InternalContract, origin, "determinant is not homogeneous of degree 2ab");
  }
  res.implicit = extract_root(delta);
  if (res.implicit.e * res.implicit.deg_f != static_cast<int>(two_ab)) {
    fail(ErrorCode::InternalContract, origin, "e * deg F != 2ab");
  }
  res.verified = verify_implicit(res.implicit.f, u.p);
  return res;
}

}  // namespace tpsurf
