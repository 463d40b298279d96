// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace trishell {

enum class ErrorCode {
  EmptyInput,
  BadLabel,
  VertexNotFound,
  FaceNotFound,
  WrongDimension,
  NotCyclic,
  NotSurfaceLike,
  SizeLimit,
  BadOrder,
  NotBijective,
  MixedRank,
  NotAShell,
  LabelClash,
  BadParameter,
  InvalidTriangulation,
  ParseError,
};

const char* to_string(ErrorCode code);

/// Exception carrying a machine-readable code plus a human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace trishell
