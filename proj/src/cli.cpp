//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "simplexgeom/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simplexgeom/documents.hpp"
#include "simplexgeom/error.hpp"
#include "simplexgeom/metrics.hpp"
#include "simplexgeom/oracle.hpp"
#include "simplexgeom/projection.hpp"
#include "simplexgeom/realizability.hpp"

namespace simplexgeom::cli {

namespace {

struct Options {
  std::string simplex_file;
  std::string point_x;
  std::string point_y;
  std::string geometry;
  double tol = kDefaultTolerance;
  std::size_t vertex = 0;
  std::vector<std::size_t> onto;
  std::size_t face_opposite = 0;
  std::string out_file;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
      return kInputError;
    case ErrorKind::InternalInconsistency:
    case ErrorKind::SingularFace:
    case ErrorKind::DegenerateMinor:
      return kNumericalFailure;
    default:
      return kGeometricFailure;
  }
}

Curvature resolve_curvature(const Options &opt, const SimplexDocument &doc) {
  if (!opt.geometry.empty()) {
    const auto c = parse_geometry(opt.geometry);
    if (!c) {
      throw GeometryError(ErrorKind::InvalidInput,
                          "--geometry must be euclidean, hyperbolic, spherical or "
                          "kappa=<value>, got \"" + opt.geometry + "\"");
    }
    return *c;
  }
  if (doc.curvature) return Curvature{*doc.curvature};
  return Curvature::euclidean();
}

void print_report(const RealizabilityReport &r, std::ostream &out) {
  out << to_string(r.verdict) << ", signature (" << r.signature.n_plus << ','
      << r.signature.n_minus << ')';
  if (r.signature.n_zero > 0) out << ", nullity " << r.signature.n_zero;
  out << "\neigenvalues:";
  for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
    out << (i ? ", " : " ") << format_number(r.eigenvalues[i]);
  }
  out << "\ndetail: " << r.detail << '\n';
}

int cmd_check(const Options &opt, std::ostream &out) {
  const SimplexDocument doc = load_simplex_document(opt.simplex_file);
  const RealizabilityReport r = check(doc.edges, resolve_curvature(opt, doc), opt.tol);
  print_report(r, out);
  return r.verdict == Verdict::Realizable ? kSuccess : kGeometricFailure;
}

int cmd_dist(const Options &opt, std::ostream &out, std::ostream &err) {
  const SimplexDocument doc = load_simplex_document(opt.simplex_file);
  const std::size_t count = doc.edges.vertex_count();
  const BarycentricPoint x = load_point_document(opt.point_x, count);
  const BarycentricPoint y = load_point_document(opt.point_y, count);
  if (x.outside()) err << "warning: " << opt.point_x << " lies outside the simplex\n";
  if (y.outside()) err << "warning: " << opt.point_y << " lies outside the simplex\n";
  out << format_number(distance(doc.edges, resolve_curvature(opt, doc), x, y, opt.tol))
      << '\n';
  return kSuccess;
}

int cmd_project(const Options &opt, std::ostream &out) {
  const SimplexDocument doc = load_simplex_document(opt.simplex_file);
  const Curvature c = resolve_curvature(opt, doc);
  const ProjectionResult r = opt.onto.empty()
                                 ? project(doc.edges, c, opt.vertex, opt.tol)
                                 : project_onto(doc.edges, c, opt.vertex, opt.onto, opt.tol);
  out << projection_to_json(r) << '\n';
  return kSuccess;
}

int cmd_volume(const Options &opt, std::ostream &out) {
  const SimplexDocument doc = load_simplex_document(opt.simplex_file);
  const Curvature c = resolve_curvature(opt, doc);
  if (c.kappa != 0.0) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "volume is only available for euclidean simplices");
  }
  const double v = opt.face_opposite == 0
                       ? euclidean_volume(doc.edges, opt.tol)
                       : euclidean_face_volume(doc.edges, opt.face_opposite, opt.tol);
  out << format_number(v) << '\n';
  return kSuccess;
}

int cmd_embed(const Options &opt, std::ostream &out) {
  const SimplexDocument doc = load_simplex_document(opt.simplex_file);
  const oracle::Embedding emb = oracle::embed(doc.edges, resolve_curvature(opt, doc), opt.tol);
  const std::string text = embedding_to_json(emb);
  if (opt.out_file.empty()) {
    out << text;
    return kSuccess;
  }
  std::ofstream file(opt.out_file, std::ios::binary);
  if (!file || !(file << text)) {
    throw GeometryError(ErrorKind::InvalidInput, "cannot write " + opt.out_file);
  }
  return kSuccess;
}

}  // namespace

std::optional<Curvature> parse_geometry(std::string_view text) {
  if (text == "euclidean") return Curvature::euclidean();
  if (text == "hyperbolic") return Curvature::hyperbolic();
  if (text == "spherical") return Curvature::spherical();
  constexpr std::string_view prefix = "kappa=";
  if (text.substr(0, prefix.size()) != prefix) return std::nullopt;
  const std::string value(text.substr(prefix.size()));
  if (value.empty()) return std::nullopt;
  try {
    std::size_t used = 0;
    const double k = std::stod(value, &used);
    if (used != value.size() || !std::isfinite(k)) return std::nullopt;
    return Curvature{k};
  } catch (const std::exception &) {
    return std::nullopt;
  }
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Geometry of constant-curvature simplices from edge lengths"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App *sub, bool with_geometry) {
    sub->add_option("simplex", opt.simplex_file, "Simplex JSON document")
        ->required()
        ->check(CLI::ExistingFile);
    if (with_geometry) {
      sub->add_option("--geometry", opt.geometry,
                      "euclidean | hyperbolic | spherical | kappa=<value>");
    }
    sub->add_option("--tol", opt.tol, "Relative eigenvalue tolerance")
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App *check_cmd = app.add_subcommand("check", "Realizability verdict and signature");
  add_common(check_cmd, true);

  CLI::App *dist_cmd = app.add_subcommand("dist", "Distance between two barycentric points");
  add_common(dist_cmd, true);
  dist_cmd->add_option("x", opt.point_x, "Point JSON document")
      ->required()
      ->check(CLI::ExistingFile);
  dist_cmd->add_option("y", opt.point_y, "Point JSON document")
      ->required()
      ->check(CLI::ExistingFile);

  CLI::App *project_cmd =
      app.add_subcommand("project", "Orthogonal projection of a vertex onto its opposite face");
  add_common(project_cmd, true);
  project_cmd->add_option("--vertex", opt.vertex, "Vertex to project (1-based)")
      ->required()
      ->check(CLI::PositiveNumber);
  project_cmd->add_option("--onto", opt.onto,
                          "Project onto the face spanned by these vertices instead");

  CLI::App *volume_cmd = app.add_subcommand("volume", "Euclidean volume of the simplex or a face");
  add_common(volume_cmd, true);
  volume_cmd->add_option("--face-opposite", opt.face_opposite,
                         "Volume of the face opposite this vertex (1-based)")
      ->check(CLI::PositiveNumber);

  CLI::App *embed_cmd = app.add_subcommand("embed", "Explicit model-space vertex coordinates");
  add_common(embed_cmd, true);
  embed_cmd->add_option("--out", opt.out_file, "Write the embedding here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (check_cmd->parsed()) return cmd_check(opt, out);
    if (dist_cmd->parsed()) return cmd_dist(opt, out, err);
    if (project_cmd->parsed()) return cmd_project(opt, out);
    if (volume_cmd->parsed()) return cmd_volume(opt, out);
    if (embed_cmd->parsed()) return cmd_embed(opt, out);
  } catch (const GeometryError &e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kInputError;
}

}  // namespace simplexgeom::cli
