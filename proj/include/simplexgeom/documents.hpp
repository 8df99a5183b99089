//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SIMPLEXGEOM_DOCUMENTS_HPP_
#define SIMPLEXGEOM_DOCUMENTS_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "simplexgeom/oracle.hpp"
#include "simplexgeom/projection.hpp"
#include "simplexgeom/simplex.hpp"

// JSON file formats used by the command-line tool.
//
// Simplex document:  {"n": 3, "edge_lengths": [[0, 2, ...], ...], "curvature": -1}
//                    ("curvature" is optional)
// Point document:    {"barycentric": [0.25, 0.25, 0.25, 0.25]}
//
// Malformed documents raise GeometryError(InvalidInput) whose message names
// the offending line or field.

namespace simplexgeom {

struct SimplexDocument {
  EdgeLengths edges;
  std::optional<double> curvature;
};

SimplexDocument parse_simplex_document(std::string_view text);
SimplexDocument load_simplex_document(const std::filesystem::path &path);

/// `vertex_count` is the simplex the point belongs to; a mismatch is an error.
BarycentricPoint parse_point_document(std::string_view text, std::size_t vertex_count);
BarycentricPoint load_point_document(const std::filesystem::path &path,
                                     std::size_t vertex_count);

/// printf("%.*g") formatting; 12 digits is the human-readable report format.
std::string format_number(double value, int significant_digits = 12);

/// {"foot": [...], "foot_model": [...], "altitude": ..., "inside_face": ...}
/// with shortest round-trip numbers; foot_model only for curved results.
std::string projection_to_json(const ProjectionResult &result);

/// {"model": ..., "curvature": ..., "dimension": n, "vertices": [[...], ...]}
/// with every number written to 17 significant digits.
std::string embedding_to_json(const oracle::Embedding &emb);

}  // namespace simplexgeom

#endif  // SIMPLEXGEOM_DOCUMENTS_HPP_
