//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "simplexgeom/error.hpp"

namespace simplexgeom {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DegenerateMinor: return "DegenerateMinor";
    case ErrorKind::SingularFace: return "SingularFace";
    case ErrorKind::WrongModel: return "WrongModel";
    case ErrorKind::OutsideLightCone: return "OutsideLightCone";
    case ErrorKind::DegenerateDirection: return "DegenerateDirection";
    case ErrorKind::NotRealizableInput: return "NotRealizableInput";
    case ErrorKind::ProjectionDegenerate: return "ProjectionDegenerate";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "UnknownError";
}

}  // namespace simplexgeom
