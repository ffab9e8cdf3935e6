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
// JSON wire formats for the command-line tool and the fixture runner. Every
// rational travels as a string "p/q" (integers allowed), never as a float, so
// values survive the round trip exactly. Parse errors name the offending
// document path. Serialization uses ordered maps and a fixed indent so that
// identical inputs produce byte-identical output.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "conicstab/linearization.hpp"
#include "conicstab/mu.hpp"
#include "conicstab/oracle.hpp"
#include "conicstab/polytope.hpp"
#include "conicstab/projective.hpp"
#include "conicstab/rational.hpp"
#include "conicstab/selftest.hpp"
#include "conicstab/stability.hpp"
#include "conicstab/trees.hpp"

namespace conicstab::io {

using Json = nlohmann::ordered_json;

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Everything a command may read from one input document; each field is
// present only if the document carries it, and commands check for what they
// need by name.
struct ConfigDocument {
  std::optional<PointedConic> config;          // "conic" + "points"
  std::optional<Linearization> linearization;  // "linearization"
  std::optional<Linearization> linearization2;
  std::optional<MarkedTree> tree;
  std::optional<FCurvePartition> partition;
  std::optional<Mat3> frame;  // "frame": three basis columns
};

namespace detail {

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

inline const Json& member(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing");
  return *it;
}

inline Rational rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
  if (!j.is_string()) fail(path, "expected a rational as a string \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

inline std::vector<Rational> rational_list(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of rationals");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(rational(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

// Rational homogeneous coordinates scale to the canonical integer vector.
inline Vec3 integer_vector(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) fail(path, "expected 3 homogeneous coordinates");
  std::array<Rational, 3> r;
  for (std::size_t i = 0; i < 3; ++i) r[i] = rational(j[i], path + "[" + std::to_string(i) + "]");
  Integer common(1);
  for (const auto& x : r) common = common / boost::multiprecision::gcd(common, den(x)) * den(x);
  Vec3 v;
  for (std::size_t i = 0; i < 3; ++i) v[i] = num(r[i]) * (common / den(r[i]));
  return v;
}

inline Linearization linearization(const Json& j, const std::string& path) {
  Rational gamma = rational(member(j, path, "gamma"), path + ".gamma");
  std::vector<Rational> c = rational_list(member(j, path, "c"), path + ".c");
  return Linearization(std::move(gamma), std::move(c));
}

inline PointedConic pointed_conic(const Json& conic, const Json& points, const std::string& path) {
  if (!conic.is_array() || conic.size() != 6)
    fail(path + ".conic", "expected 6 coefficients (xx, xy, xz, yy, yz, zz)");
  std::array<Rational, 6> r;
  for (std::size_t i = 0; i < 6; ++i)
    r[i] = rational(conic[i], path + ".conic[" + std::to_string(i) + "]");
  Integer common(1);
  for (const auto& x : r) common = common / boost::multiprecision::gcd(common, den(x)) * den(x);
  std::array<Integer, 6> a;
  bool all_zero = true;
  for (std::size_t i = 0; i < 6; ++i) {
    a[i] = num(r[i]) * (common / den(r[i]));
    all_zero = all_zero && a[i] == 0;
  }
  if (all_zero) fail(path + ".conic", "all coefficients vanish");

  if (!points.is_array() || points.empty()) fail(path + ".points", "expected a nonempty array");
  std::vector<ProjPoint> pts;
  for (std::size_t i = 0; i < points.size(); ++i)
    pts.emplace_back(integer_vector(points[i], path + ".points[" + std::to_string(i) + "]"));
  try {
    return PointedConic(ConicForm(a), std::move(pts));
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

inline MarkedTree marked_tree(const Json& j, const std::string& path) {
  MarkedTree t;
  const Json& comps = member(j, path, "components");
  if (!comps.is_array() || comps.empty()) fail(path + ".components", "expected a nonempty array");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::string cpath = path + ".components[" + std::to_string(i) + "]";
    const Json& clusters = member(comps[i], cpath, "clusters");
    if (!clusters.is_array()) fail(cpath + ".clusters", "expected an array of mark lists");
    TreeComponent comp;
    for (std::size_t k = 0; k < clusters.size(); ++k) {
      const Json& cl = clusters[k];
      std::string clpath = cpath + ".clusters[" + std::to_string(k) + "]";
      if (!cl.is_array() || cl.empty()) fail(clpath, "expected a nonempty list of mark indices");
      std::vector<int> marks;
      for (const auto& m : cl) {
        if (!m.is_number_integer()) fail(clpath, "marks are 1-based integers");
        marks.push_back(m.get<int>());
      }
      comp.clusters.push_back(std::move(marks));
    }
    t.components.push_back(std::move(comp));
  }
  if (j.contains("edges")) {
    const Json& edges = j["edges"];
    if (!edges.is_array()) fail(path + ".edges", "expected an array of index pairs");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Json& e = edges[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        fail(path + ".edges[" + std::to_string(i) + "]", "expected a pair [i, j]");
      t.edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
    }
  }
  return t;
}

inline FCurvePartition partition(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 4) fail(path, "expected exactly 4 blocks of mark indices");
  FCurvePartition p;
  p.blocks.resize(4);
  for (std::size_t b = 0; b < 4; ++b) {
    const Json& block = j[b];
    std::string bpath = path + "[" + std::to_string(b) + "]";
    if (!block.is_array() || block.empty()) fail(bpath, "expected a nonempty list of mark indices");
    for (const auto& m : block) {
      if (!m.is_number_integer()) fail(bpath, "marks are 1-based integers");
      p.blocks[b].push_back(m.get<int>());
    }
  }
  return p;
}

inline Mat3 frame(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) fail(path, "expected 3 basis columns");
  Vec3 cols[3];
  for (std::size_t i = 0; i < 3; ++i)
    cols[i] = integer_vector(j[i], path + "[" + std::to_string(i) + "]");
  return Mat3::from_columns(cols[0], cols[1], cols[2]);
}

}  // namespace detail

inline ConfigDocument parse_document(const Json& j) {
  if (!j.is_object()) detail::fail("$", "input document must be a JSON object");
  ConfigDocument doc;
  bool has_conic = j.contains("conic"), has_points = j.contains("points");
  if (has_conic != has_points) detail::fail("$", "\"conic\" and \"points\" must appear together");
  if (has_conic) doc.config = detail::pointed_conic(j["conic"], j["points"], "$");
  if (j.contains("linearization"))
    doc.linearization = detail::linearization(j["linearization"], "$.linearization");
  if (j.contains("linearization2"))
    doc.linearization2 = detail::linearization(j["linearization2"], "$.linearization2");
  if (j.contains("tree")) doc.tree = detail::marked_tree(j["tree"], "$.tree");
  if (j.contains("partition")) doc.partition = detail::partition(j["partition"], "$.partition");
  if (j.contains("frame")) doc.frame = detail::frame(j["frame"], "$.frame");
  return doc;
}

inline ConfigDocument parse_document_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("input is not valid JSON: ") + e.what());
  }
  return parse_document(j);
}

// --- serialization -----------------------------------------------------------

inline std::string rat(const Rational& r) { return format_rational(r); }

inline Json rational_array(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat(x));
  return a;
}

inline Json linearization_json(const Linearization& lin) {
  Json j = Json::object();
  j["gamma"] = rat(lin.gamma);
  j["c"] = rational_array(lin.c);
  return j;
}

inline Json walls_json(const std::vector<Wall>& walls) {
  Json a = Json::array();
  for (const Wall& w : walls) {
    Json jw = Json::object();
    jw["marks"] = w.marks;
    jw["level"] = rat(w.level);
    a.push_back(std::move(jw));
  }
  return a;
}

inline Json inequalities_json(const std::vector<InequalityRecord>& records) {
  Json a = Json::array();
  for (const auto& iq : records) {
    Json j = Json::object();
    j["label"] = iq.label;
    j["lhs"] = rat(iq.lhs);
    j["rhs"] = rat(iq.rhs);
    j["tight"] = iq.lhs == iq.rhs;
    j["violated"] = iq.lhs > iq.rhs;
    a.push_back(std::move(j));
  }
  return a;
}

inline Json tree_json(const MarkedTree& t) {
  Json j = Json::object();
  Json comps = Json::array();
  for (const auto& comp : t.components) {
    Json jc = Json::object();
    jc["clusters"] = comp.clusters;
    comps.push_back(std::move(jc));
  }
  j["components"] = std::move(comps);
  Json edges = Json::array();
  for (const auto& [a, b] : t.edges) edges.push_back(Json::array({a, b}));
  j["edges"] = std::move(edges);
  return j;
}

inline Json image_json(const ConicImage& img) {
  Json j = Json::object();
  if (img.kind == ConicImageKind::NonSingular) {
    j["kind"] = "nonsingular";
    j["clusters"] = img.clusters;
  } else {
    j["kind"] = "nodal";
    j["left"] = img.left;
    j["right"] = img.right;
    j["node_marks"] = img.node;
  }
  return j;
}

inline Json frame_json(const Mat3& m) {
  Json cols = Json::array();
  for (int c = 0; c < 3; ++c) {
    Json col = Json::array();
    Vec3 v = m.column(c);
    for (int i = 0; i < 3; ++i) col.push_back(v[i].str());
    cols.push_back(std::move(col));
  }
  return cols;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace conicstab::io
