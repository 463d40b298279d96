// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#include "trishell/error.hpp"

namespace trishell {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::BadLabel: return "BadLabel";
    case ErrorCode::VertexNotFound: return "VertexNotFound";
    case ErrorCode::FaceNotFound: return "FaceNotFound";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::NotSurfaceLike: return "NotSurfaceLike";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::MixedRank: return "MixedRank";
    case ErrorCode::NotAShell: return "NotAShell";
    case ErrorCode::LabelClash: return "LabelClash";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::InvalidTriangulation: return "InvalidTriangulation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace trishell
