//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "simplexgeom/documents.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "simplexgeom/error.hpp"

namespace simplexgeom {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &what) {
  throw GeometryError(ErrorKind::InvalidInput, what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + upto, '\n');
    fail("malformed JSON at line " + std::to_string(line) + ": " + e.what());
  }
}

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double number_at(const json &v, const std::string &field) {
  if (!v.is_number()) fail(field + ": expected a number");
  return v.get<double>();
}

}  // namespace

SimplexDocument parse_simplex_document(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("simplex document must be a JSON object");
  if (!doc.contains("n")) fail("missing field \"n\"");
  if (!doc.contains("edge_lengths")) fail("missing field \"edge_lengths\"");

  const json &n_field = doc["n"];
  if (!n_field.is_number_integer() || n_field.get<long long>() < 1) {
    fail("n: expected a positive integer");
  }
  const auto n = static_cast<std::size_t>(n_field.get<long long>());

  const json &rows = doc["edge_lengths"];
  if (!rows.is_array()) fail("edge_lengths: expected an array of rows");
  if (rows.size() != n + 1) {
    fail("edge_lengths: expected " + std::to_string(n + 1) + " rows for n = " +
         std::to_string(n) + ", found " + std::to_string(rows.size()));
  }
  std::vector<std::vector<double>> gamma(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const std::string row_name = "edge_lengths[" + std::to_string(i) + "]";
    if (!rows[i].is_array()) fail(row_name + ": expected an array");
    if (rows[i].size() != n + 1) {
      fail(row_name + ": expected " + std::to_string(n + 1) + " entries, found " +
           std::to_string(rows[i].size()));
    }
    for (std::size_t j = 0; j <= n; ++j) {
      const std::string name = row_name + "[" + std::to_string(j) + "]";
      const double v = number_at(rows[i][j], name);
      if (v < 0.0) fail(name + ": edge lengths must be nonnegative");
      gamma[i].push_back(v);
    }
  }

  std::optional<double> curvature;
  if (doc.contains("curvature") && !doc["curvature"].is_null()) {
    curvature = number_at(doc["curvature"], "curvature");
  }
  return {EdgeLengths(gamma), curvature};
}

SimplexDocument load_simplex_document(const std::filesystem::path &path) {
  try {
    return parse_simplex_document(read_file(path));
  } catch (const GeometryError &e) {
    throw GeometryError(e.kind(), path.string() + ": " + e.what());
  }
}

BarycentricPoint parse_point_document(std::string_view text, std::size_t vertex_count) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("point document must be a JSON object");
  if (!doc.contains("barycentric")) fail("missing field \"barycentric\"");
  const json &coords = doc["barycentric"];
  if (!coords.is_array()) fail("barycentric: expected an array");
  if (coords.size() != vertex_count) {
    fail("barycentric: expected " + std::to_string(vertex_count) +
         " coordinates, found " + std::to_string(coords.size()));
  }
  std::vector<double> c;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    c.push_back(number_at(coords[i], "barycentric[" + std::to_string(i) + "]"));
  }
  return BarycentricPoint(std::move(c));
}

BarycentricPoint load_point_document(const std::filesystem::path &path,
                                     std::size_t vertex_count) {
  try {
    return parse_point_document(read_file(path), vertex_count);
  } catch (const GeometryError &e) {
    throw GeometryError(e.kind(), path.string() + ": " + e.what());
  }
}

std::string format_number(double value, int significant_digits) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
  return buf;
}

std::string projection_to_json(const ProjectionResult &result) {
  json out;
  out["foot"] = std::vector<double>(result.foot.coords().begin(), result.foot.coords().end());
  if (result.foot_model) {
    out["foot_model"] = std::vector<double>(result.foot_model->coords().begin(),
                                            result.foot_model->coords().end());
  }
  out["altitude"] = result.altitude;
  out["inside_face"] = result.inside_face;
  return out.dump(2);
}

std::string embedding_to_json(const oracle::Embedding &emb) {
  std::string out = "{\n  \"model\": \"";
  out += oracle::to_string(emb.model);
  out += "\",\n  \"curvature\": " + format_number(emb.curvature.kappa, 17);
  out += ",\n  \"dimension\": " + std::to_string(emb.vertices.size() - 1);
  out += ",\n  \"vertices\": [";
  for (std::size_t i = 0; i < emb.vertices.size(); ++i) {
    out += i ? ",\n    [" : "\n    [";
    for (std::size_t k = 0; k < emb.vertices[i].size(); ++k) {
      if (k) out += ", ";
      out += format_number(emb.vertices[i][k], 17);
    }
    out += "]";
  }
  out += "\n  ]\n}\n";
  return out;
}

}  // namespace simplexgeom
