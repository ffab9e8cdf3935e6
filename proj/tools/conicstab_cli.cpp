// Copyright 2026 The conicstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end. Every subcommand delegates to one library
// operation; inputs arrive as a JSON document (--input FILE, "-" or no flag
// for standard input) or as flags for the generator commands. Exit codes:
// 0 definitive answer, 1 invalid input, 2 internal disagreement between the
// closed-form classifier and the search oracle (never masked).

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "conicstab/conic_param.hpp"
#include "conicstab/generate.hpp"
#include "json_io.hpp"

namespace {

using namespace conicstab;
using io::Json;

struct Ctx {
  std::string input_path;     // empty or "-" = standard input
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t cases = 500;
  std::size_t n = 0;
  std::string k;    // vertices: optional hypersimplex level
  std::string eps;  // boggi
};

std::string read_input(const Ctx& ctx) {
  if (ctx.input_path.empty() || ctx.input_path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream f(ctx.input_path);
  if (!f) throw io::ParseError("cannot open input file: " + ctx.input_path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

io::ConfigDocument load_document(const Ctx& ctx) {
  return io::parse_document_text(read_input(ctx));
}

const PointedConic& need_config(const io::ConfigDocument& doc) {
  if (!doc.config) throw io::ParseError("$.conic / $.points: required by this command");
  return *doc.config;
}

const Linearization& need_linearization(const io::ConfigDocument& doc) {
  if (!doc.linearization) throw io::ParseError("$.linearization: required by this command");
  return *doc.linearization;
}

const MarkedTree& need_tree(const io::ConfigDocument& doc) {
  if (!doc.tree) throw io::ParseError("$.tree: required by this command");
  return *doc.tree;
}

int emit(const Ctx& ctx, const Json& j, const std::string& text) {
  if (ctx.format == "json")
    std::cout << io::dump(j);
  else
    std::cout << text;
  return 0;
}

std::string marks_text(const std::vector<int>& marks) {
  std::string s = "{";
  for (std::size_t i = 0; i < marks.size(); ++i)
    s += (i ? "," : "") + std::to_string(marks[i]);
  return s + "}";
}

std::string inequalities_text(const std::vector<InequalityRecord>& records) {
  std::ostringstream out;
  for (const auto& iq : records) {
    out << "  " << iq.label << ": " << io::rat(iq.lhs) << " vs " << io::rat(iq.rhs);
    if (iq.lhs > iq.rhs)
      out << "  VIOLATED";
    else if (iq.lhs == iq.rhs)
      out << "  TIGHT";
    out << "\n";
  }
  return out.str();
}

std::string walls_text(const std::vector<Wall>& walls) {
  std::ostringstream out;
  for (const Wall& w : walls) out << "  " << marks_text(w.marks) << " at level " << io::rat(w.level) << "\n";
  return out.str();
}

std::string tree_text(const MarkedTree& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.components.size(); ++i) {
    out << "  component " << i << ":";
    for (const auto& cl : t.components[i].clusters) out << " " << marks_text(cl);
    out << "\n";
  }
  out << "  edges:";
  for (const auto& [a, b] : t.edges) out << " (" << a << "," << b << ")";
  out << "\n";
  return out.str();
}

std::string image_text(const ConicImage& img) {
  std::ostringstream out;
  if (img.kind == ConicImageKind::NonSingular) {
    out << "  nonsingular image, clusters:";
    for (const auto& cl : img.clusters) out << " " << marks_text(cl);
    out << "\n";
  } else {
    out << "  nodal image\n  left:";
    for (const auto& cl : img.left) out << " " << marks_text(cl);
    out << "\n  right:";
    for (const auto& cl : img.right) out << " " << marks_text(cl);
    out << "\n  node marks: " << marks_text(img.node) << "\n";
  }
  return out.str();
}

// --- subcommands -------------------------------------------------------------

int run_classify(const Ctx& ctx) {
  io::ConfigDocument doc = load_document(ctx);
  const PointedConic& config = need_config(doc);
  const Linearization& lin = need_linearization(doc);
  StabilityReport rep = classify_report(config, lin);
  std::vector<Wall> walls = walls_at(normalize(lin));

  Json j = Json::object();
  j["command"] = "classify";
  j["verdict"] = to_string(rep.verdict);
  j["kind"] = to_string(rep.kind);
  if (rep.node) j["node"] = rep.node->str();
  j["linearization"] = io::linearization_json(lin);
  j["inequalities"] = io::inequalities_json(rep.inequalities);
  if (!rep.note.empty()) j["note"] = rep.note;
  j["walls"] = io::walls_json(walls);
  j["on_wall"] = !walls.empty();

  std::ostringstream text;
  text << to_string(rep.verdict) << "\n";
  text << "conic: " << to_string(rep.kind);
  if (rep.node) text << ", node " << rep.node->str();
  text << "\n";
  if (!rep.note.empty()) text << "note: " << rep.note << "\n";
  text << inequalities_text(rep.inequalities);
  text << "walls hit: " << walls.size() << "\n" << walls_text(walls);
  return emit(ctx, j, text.str());
}

int run_oracle(const Ctx& ctx) {
  io::ConfigDocument doc = load_document(ctx);
  const PointedConic& config = need_config(doc);
  const Linearization& lin = need_linearization(doc);
  OracleOutcome out = oracle_classify(config, lin);
  Verdict closed = classify(config, lin);
  bool agree = out.verdict == closed;

  Json j = Json::object();
  j["command"] = "oracle";
  j["verdict"] = to_string(out.verdict);
  j["max_mu"] = io::rat(out.max_mu);
  j["argmax_b"] = io::rat(out.argmax_b);
  j["frames_checked"] = out.frames_checked;
  j["witness_frame"] = io::frame_json(out.witness_frame);
  j["closed_form_verdict"] = to_string(closed);
  j["agreement"] = agree;

  std::ostringstream text;
  text << to_string(out.verdict) << "\n";
  text << "max mu: " << io::rat(out.max_mu) << " at b = " << io::rat(out.argmax_b) << " over "
       << out.frames_checked << " frames\n";
  text << "closed form: " << to_string(closed) << (agree ? " (agreement)" : " (MISMATCH)") << "\n";
  int rc = emit(ctx, j, text.str());
  if (!agree) {
    std::cerr << "error: oracle and closed-form classifier disagree\n";
    return 2;
  }
  return rc;
}

int run_mu(const Ctx& ctx) {
  io::ConfigDocument doc = load_document(ctx);
  const PointedConic& config = need_config(doc);
  const Linearization& lin = need_linearization(doc);
  Mat3 frame = doc.frame ? *doc.frame : Mat3::identity();
  MuProfile prof = mu_profile(config, lin, frame);

  Json j = Json::object();
  j["command"] = "mu";
  j["maximum"] = io::rat(prof.maximum);
  j["argmax_b"] = io::rat(prof.argmax);
  Json pieces = Json::array();
  for (const auto& p : prof.pieces) {
    Json piece = Json::object();
    piece["lo"] = io::rat(p.lo);
    piece["hi"] = io::rat(p.hi);
    piece["slope"] = io::rat(p.f.slope);
    piece["intercept"] = io::rat(p.f.intercept);
    pieces.push_back(std::move(piece));
  }
  j["pieces"] = std::move(pieces);

  std::ostringstream text;
  text << "mu maximum " << io::rat(prof.maximum) << " at b = " << io::rat(prof.argmax) << "\n";
  for (const auto& p : prof.pieces)
    text << "  [" << io::rat(p.lo) << ", " << io::rat(p.hi) << "]: " << io::rat(p.f.slope)
         << " * b + " << io::rat(p.f.intercept) << "\n";
  return emit(ctx, j, text.str());
}

int run_normalize(const Ctx& ctx) {
  io::ConfigDocument doc = load_document(ctx);
  const Linearization& lin = need_linearization(doc);
  NormalizedLinearization nl = normalize(lin);
  bool effective = is_effective(nl);

  Json j = Json::object();
  j["command"] = "normalize";
  j["regime"] = to_string(nl.regime);
  j["scale"] = io::rat(nl.scale);
  j["linearization"] = io::linearization_json(nl.lin);
  j["effective"] = effective;

  std::ostringstream text;
  text << to_string(nl.regime) << " (scale " << io::rat(nl.scale) << ")\n";
  text << "gamma: " << io::rat(nl.lin.gamma) << "\nc:";
  for (const auto& w : nl.lin.c) text << " " << io::rat(w);
  text << "\neffective: " << (effective ? "yes" : "no") << "\n";
  return emit(ctx, j, text.str());
}

int run_walls(const Ctx& ctx) {
  io::ConfigDocument doc = load_document(ctx);
  const Linearization& lin = need_linearization(doc);
  NormalizedLinearization nl = normalize(lin);
  std::vector<Wall> walls = walls_at(nl);

  Json j = Json::object();
  j["command"] = "walls";
  j["regime"] = to_string(nl.regime);
  j["count"] = walls.size();
  j["walls"] = io::walls_json(walls);

  std::ostringstream text;
  text << walls.size() << " wall" << (walls.size() == 1 ? "" : "s") << " ("
       << to_string(nl.regime) << ")\n"
       << walls_text(walls);
  return emit(ctx, j, text.str());
}

int run_chamber_id(const Ctx& ctx) {
  io::ConfigDocument doc = load_document(ctx);
  const Linearization& lin = need_linearization(doc);
  ChamberSignature sig = chamber_signature(normalize(lin));
  std::string signs;
  for (int s : sig.signs) signs += s > 0 ? '+' : (s < 0 ? '-' : '0');

  Json j = Json::object();
  j["command"] = "chamber-id";
  j["regime"] = to_string(sig.regime);
  j["n"] = sig.n;
  j["signature"] = signs;
  j["on_wall"] = sig.on_wall();

  std::ostringstream text;
  text << to_string(sig.regime) << " " << signs << "\n"
       << "on wall: " << (sig.on_wall() ? "yes" : "no") << "\n";
  return emit(ctx, j, text.str());
}

int run_crossings(const Ctx& ctx) {
  io::ConfigDocument doc = load_document(ctx);
  const Linearization& from = need_linearization(doc);
  if (!doc.linearization2)
    throw io::ParseError("$.linearization2: required by crossings (segment endpoint)");
  const Linearization& to = *doc.linearization2;
  std::vector<WallCrossing> crossings = segment_crossings(from, to);

  Json j = Json::object();
  j["command"] = "crossings";
  j["count"] = crossings.size();
  Json arr = Json::array();
  for (const auto& x : crossings) {
    Json cx = Json::object();
    cx["t"] = io::rat(x.t);
    cx["marks"] = x.marks;
    cx["level"] = io::rat(x.level);
    cx["regime"] = to_string(x.regime);
    arr.push_back(std::move(cx));
  }
  j["crossings"] = std::move(arr);

  std::ostringstream text;
  text << crossings.size() << " crossing" << (crossings.size() == 1 ? "" : "s") << "\n";
  for (const auto& x : crossings)
    text << "  t = " << io::rat(x.t) << ": " << marks_text(x.marks) << " at level "
         << io::rat(x.level) << " (" << to_string(x.regime) << ")\n";
  return emit(ctx, j, text.str());
}

int run_vertices(const Ctx& ctx) {
  if (ctx.n == 0) throw io::ParseError("--n: required by vertices");
  Json j = Json::object();
  j["command"] = "vertices";
  j["n"] = ctx.n;
  std::ostringstream text;

  if (!ctx.k.empty()) {
    Rational k = parse_rational(ctx.k);
    auto verts = hypersimplex_vertices(k, ctx.n);
    j["k"] = io::rat(k);
    j["count"] = verts.size();
    Json arr = Json::array();
    for (const auto& v : verts) arr.push_back(io::rational_array(v));
    j["vertices"] = std::move(arr);
    text << verts.size() << " vertices of the hypersimplex at k = " << io::rat(k) << ", n = "
         << ctx.n << "\n";
    for (const auto& v : verts) {
      text << " ";
      for (const auto& x : v) text << " " << io::rat(x);
      text << "\n";
    }
    return emit(ctx, j, text.str());
  }

  Delta3Assembly asmb = delta3_assembly(ctx.n);
  Integer count = delta3_vertex_count(ctx.n);
  j["total"] = count.str();
  auto face_json = [](const std::vector<Linearization>& face) {
    Json arr = Json::array();
    for (const auto& lin : face) arr.push_back(io::linearization_json(lin));
    return arr;
  };
  j["gamma0_face_count"] = asmb.gamma0_face.size();
  j["gamma1_face_count"] = asmb.gamma1_face.size();
  j["gamma0_face"] = face_json(asmb.gamma0_face);
  j["gamma1_face"] = face_json(asmb.gamma1_face);

  text << count.str() << " vertices (gamma = 0 face: " << asmb.gamma0_face.size()
       << ", gamma = 1 face: " << asmb.gamma1_face.size() << ")\n";
  auto face_text = [&](const char* name, const std::vector<Linearization>& face) {
    text << name << ":\n";
    for (const auto& lin : face) {
      text << "  (" << io::rat(lin.gamma) << ";";
      for (const auto& w : lin.c) text << " " << io::rat(w);
      text << ")\n";
    }
  };
  face_text("gamma = 0 face", asmb.gamma0_face);
  face_text("gamma = 1 face", asmb.gamma1_face);
  return emit(ctx, j, text.str());
}

int run_hassett(const Ctx& ctx) {
  io::ConfigDocument doc = load_document(ctx);
  const MarkedTree& tree = need_tree(doc);
  const Linearization& lin = need_linearization(doc);
  validate_tree(tree);
  bool stable = is_hassett_stable(tree, lin.c);
  bool dm = is_dm_stable(tree);
  MarkedTree sorted = tree;
  detail::sort_clusters(sorted);
  std::vector<std::size_t> violating = detail::violating_components(sorted, lin.c);

  Json j = Json::object();
  j["command"] = "hassett";
  j["hassett_stable"] = stable;
  j["dm_stable"] = dm;
  j["violating_components"] = violating;

  std::ostringstream text;
  text << (stable ? "HASSETT_STABLE" : "NOT_HASSETT_STABLE") << "\n";
  text << "stable for unit weights: " << (dm ? "yes" : "no") << "\n";
  if (!violating.empty()) {
    text << "violating components:";
    for (std::size_t i : violating) text << " " << i;
    text << "\n";
  }
  return emit(ctx, j, text.str());
}

int run_reduce(const Ctx& ctx) {
  io::ConfigDocument doc = load_document(ctx);
  const MarkedTree& tree = need_tree(doc);
  const Linearization& lin = need_linearization(doc);
  std::vector<std::string> warnings;
  MarkedTree reduced = reduce(tree, lin.c, &warnings);

  Json j = Json::object();
  j["command"] = "reduce";
  j["tree"] = io::tree_json(reduced);
  j["chain"] = is_chain(reduced);
  j["warnings"] = warnings;

  std::ostringstream text;
  text << "reduced to " << reduced.components.size() << " component"
       << (reduced.components.size() == 1 ? "" : "s") << (is_chain(reduced) ? " (chain)" : "")
       << "\n"
       << tree_text(reduced);
  for (const auto& w : warnings) text << "warning: " << w << "\n";
  return emit(ctx, j, text.str());
}

int run_image(const Ctx& ctx) {
  io::ConfigDocument doc = load_document(ctx);
  const MarkedTree& tree = need_tree(doc);
  const Linearization& lin = need_linearization(doc);
  ConicImage img = conic_image(tree, lin);

  Json j = Json::object();
  j["command"] = "image";
  j["image"] = io::image_json(img);
  return emit(ctx, j, image_text(img));
}

int run_pipeline(const Ctx& ctx) {
  io::ConfigDocument doc = load_document(ctx);
  const MarkedTree& tree = need_tree(doc);
  const Linearization& lin = need_linearization(doc);
  PipelineResult r = semistable_reduction_pipeline(tree, lin);

  Json j = Json::object();
  j["command"] = "pipeline";
  j["verdict"] = to_string(r.verdict);
  j["regime"] = to_string(r.normalized.regime);
  j["normalized"] = io::linearization_json(r.normalized.lin);
  j["on_wall"] = r.on_wall;
  j["reduced"] = io::tree_json(r.reduced);
  j["image"] = io::image_json(r.image);
  j["warnings"] = r.warnings;

  std::ostringstream text;
  text << to_string(r.verdict) << "\n";
  text << "on wall: " << (r.on_wall ? "yes" : "no") << "\n";
  text << "reduced tree:\n" << tree_text(r.reduced);
  text << image_text(r.image);
  for (const auto& w : r.warnings) text << "warning: " << w << "\n";
  return emit(ctx, j, text.str());
}

int run_fcurve(const Ctx& ctx) {
  io::ConfigDocument doc = load_document(ctx);
  if (!doc.partition) throw io::ParseError("$.partition: required by fcurve (4 blocks)");
  const Linearization& lin = need_linearization(doc);
  bool contracted = fcurve_contracted(*doc.partition, lin);
  NormalizedLinearization nl = normalize(lin);
  bool hassett = fcurve_hassett_contracted(*doc.partition, nl.lin.c);
  std::vector<Rational> x = detail::sorted_block_weights(*doc.partition, nl.lin.c);

  Json j = Json::object();
  j["command"] = "fcurve";
  j["contracted"] = contracted;
  j["hassett_contracted"] = hassett;
  j["sorted_block_weights"] = io::rational_array(x);

  std::ostringstream text;
  text << (contracted ? "CONTRACTED" : "NOT_CONTRACTED") << "\n";
  text << "contracted already on the moduli side: " << (hassett ? "yes" : "no") << "\n";
  text << "sorted block weights:";
  for (const auto& w : x) text << " " << io::rat(w);
  text << "\n";
  return emit(ctx, j, text.str());
}

int run_boggi(const Ctx& ctx) {
  if (ctx.n == 0) throw io::ParseError("--n: required by boggi");
  if (ctx.eps.empty()) throw io::ParseError("--eps: required by boggi");
  Rational eps = parse_rational(ctx.eps);
  Linearization lin = boggi2_linearization(ctx.n, eps);

  Json j = Json::object();
  j["command"] = "boggi";
  j["n"] = ctx.n;
  j["eps"] = io::rat(eps);
  j["linearization"] = io::linearization_json(lin);

  std::ostringstream text;
  text << "gamma: " << io::rat(lin.gamma) << "\nc:";
  for (const auto& w : lin.c) text << " " << io::rat(w);
  text << "\n";

  if (ctx.input_path.empty()) return emit(ctx, j, text.str());

  // With a configuration supplied, also check the equivalence: semistable
  // under this linearization exactly when marks 1 and 2 stay clear of
  // singularities and collisions.
  io::ConfigDocument doc = load_document(ctx);
  const PointedConic& config = need_config(doc);
  Verdict verdict = classify(config, lin);
  bool i_stable = is_I_stable(config, {1, 2});
  bool agree = is_semistable(verdict) == i_stable;
  j["verdict"] = to_string(verdict);
  j["i_stable"] = i_stable;
  j["agreement"] = agree;
  text << "verdict: " << to_string(verdict) << "\n";
  text << "marks {1,2} modularly stable: " << (i_stable ? "yes" : "no") << "\n";
  text << (agree ? "agreement\n" : "MISMATCH\n");
  int rc = emit(ctx, j, text.str());
  if (!agree) {
    std::cerr << "error: GIT semistability disagrees with modular stability for I = {1,2}\n";
    return 2;
  }
  return rc;
}

int run_compare_sl2(const Ctx& ctx) {
  io::ConfigDocument doc = load_document(ctx);
  const PointedConic& config = need_config(doc);
  const Linearization& lin = need_linearization(doc);
  ConicClass cls = classify_conic(config.form);
  if (cls.kind != ConicKind::NonSingular)
    throw io::ParseError("compare-sl2: the conic must be nonsingular");
  ConicParametrization par(config.form, config.points[0]);
  std::vector<P1Point> params;
  for (const auto& p : config.points) params.push_back(par.param_of(p));

  Verdict conic_verdict = classify(config, lin);
  Verdict sl2_verdict = classify_sl2(params, lin.c);
  Rational total(0);
  for (const auto& w : lin.c) total += w;
  bool regime_applies = lin.gamma > total / 2;
  bool agree = conic_verdict == sl2_verdict;

  Json j = Json::object();
  j["command"] = "compare-sl2";
  j["conic_verdict"] = to_string(conic_verdict);
  j["sl2_verdict"] = to_string(sl2_verdict);
  Json jp = Json::array();
  for (const auto& t : params) jp.push_back(t.str());
  j["params"] = std::move(jp);
  j["regime_applies"] = regime_applies;
  j["agreement"] = agree;

  std::ostringstream text;
  text << "conic: " << to_string(conic_verdict) << "\nline:  " << to_string(sl2_verdict) << "\n";
  text << "gamma above c/2 (regime of the identification): " << (regime_applies ? "yes" : "no")
       << "\n";
  text << (agree ? "agreement\n" : (regime_applies ? "MISMATCH\n" : "differ (outside regime)\n"));
  int rc = emit(ctx, j, text.str());
  if (regime_applies && !agree) {
    std::cerr << "error: conic and line verdicts disagree inside the identification regime\n";
    return 2;
  }
  return rc;
}

int cmd_selftest(const Ctx& ctx) {
  SelftestReport rep = conicstab::run_selftest(ctx.seed, ctx.cases);

  Json j = Json::object();
  j["command"] = "selftest";
  j["cases"] = rep.cases;
  j["mismatches"] = rep.mismatches;
  j["smooth_cases"] = rep.smooth_cases;
  j["split_cases"] = rep.split_cases;
  Json verdicts = Json::object();
  verdicts["stable"] = rep.stable;
  verdicts["strictly_semistable"] = rep.strictly_semistable;
  verdicts["unstable"] = rep.unstable;
  j["verdicts"] = std::move(verdicts);
  j["passed"] = rep.passed();
  j["details"] = rep.mismatch_details;

  std::ostringstream text;
  text << (rep.passed() ? "PASS" : "FAIL") << ": " << rep.mismatches << " mismatches in "
       << rep.cases << " cases (" << rep.smooth_cases << " nonsingular, " << rep.split_cases
       << " split; verdicts " << rep.stable << "/" << rep.strictly_semistable << "/"
       << rep.unstable << " S/SSS/U)\n";
  for (const auto& d : rep.mismatch_details) text << "  " << d << "\n";
  int rc = emit(ctx, j, text.str());
  if (!rep.passed()) {
    std::cerr << "error: classifier/oracle disagreement detected\n";
    return 2;
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact GIT stability of pointed plane conics under fractional linearizations"};
  app.require_subcommand(1);

  Ctx ctx;
  std::function<int(const Ctx&)> runner;

  auto add = [&](const char* name, const char* help, std::function<int(const Ctx&)> fn,
                 bool takes_input) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (takes_input)
      sub->add_option("--input", ctx.input_path, "JSON input file ('-' or omit for stdin)");
    sub->add_option("--format", ctx.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->callback([&runner, fn] { runner = fn; });
    return sub;
  };

  add("classify", "Closed-form stability verdict of a pointed conic", run_classify, true);
  add("oracle", "Search verdict over the adapted frame family, checked against the closed form",
      run_oracle, true);
  add("mu", "Piecewise-linear weight profile of a configuration in one frame", run_mu, true);
  add("normalize", "Scale a linearization to its comparison section", run_normalize, true);
  add("walls", "Subset-sum walls through a linearization", run_walls, true);
  add("chamber-id", "Sign vector identifying the linearization's chamber", run_chamber_id, true);
  add("crossings", "Walls met by the segment between two linearizations", run_crossings, true);
  CLI::App* vertices =
      add("vertices", "Vertices of the linearization polytope (or one hypersimplex slice)",
          run_vertices, false);
  vertices->add_option("--n", ctx.n, "Number of marks")->required();
  vertices->add_option("--k", ctx.k, "List the hypersimplex slice at this level instead");
  add("hassett", "Weighted stability of a marked tree", run_hassett, true);
  add("reduce", "Contract components violating the weighted stability inequality", run_reduce,
      true);
  add("image", "Planar image of a stable chain", run_image, true);
  add("pipeline", "Reduce, contract to the plane, and classify", run_pipeline, true);
  add("fcurve", "Whether the quotient map contracts the family of a four-block partition",
      run_fcurve, true);
  CLI::App* boggi = add("boggi", "The two-heavy-marks linearization family (optionally check a "
                        "configuration against modular stability)", run_boggi, true);
  boggi->add_option("--n", ctx.n, "Number of marks")->required();
  boggi->add_option("--eps", ctx.eps, "Excess weight parameter in (0, 1)")->required();
  add("compare-sl2", "Conic verdict against the weighted-points-on-a-line verdict",
      run_compare_sl2, true);
  CLI::App* selftest = add("selftest", "Randomized classifier/oracle agreement sweep",
                           cmd_selftest, false);
  selftest->add_option("--cases", ctx.cases, "Number of random cases (default 500)");
  selftest->add_option("--seed", ctx.seed, "Random seed (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return runner(ctx);
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
