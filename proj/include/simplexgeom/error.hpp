//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SIMPLEXGEOM_ERROR_HPP_
#define SIMPLEXGEOM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace simplexgeom {

enum class ErrorKind {
  InvalidInput,
  DegenerateMinor,
  SingularFace,
  WrongModel,
  OutsideLightCone,
  DegenerateDirection,
  NotRealizableInput,
  ProjectionDegenerate,
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can branch without parsing text.
class GeometryError : public std::runtime_error {
public:
  GeometryError(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace simplexgeom

#endif  // SIMPLEXGEOM_ERROR_HPP_
