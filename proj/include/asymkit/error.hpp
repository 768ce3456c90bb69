// Copyright 2026 The asymkit Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace asymkit {

enum class ErrorKind {
  InvalidParameter,
  SizeLimit,
  InvalidGroup,
  InvalidSubgroup,
  InvalidRep,
  InvalidState,
  InvalidChannel,
  DimensionMismatch,
  GroupMismatch,
  LabelMismatch,
  PureOnly,
  Tolerance,
  NumericalDegeneracy,
  NotInvariantIsometry,
  InvalidCharacteristicFunction,
  NonEndomorphic,
  NonPsd,
  Parse,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::SizeLimit: return "size-limit";
    case ErrorKind::InvalidGroup: return "invalid-group";
    case ErrorKind::InvalidSubgroup: return "invalid-subgroup";
    case ErrorKind::InvalidRep: return "invalid-rep";
    case ErrorKind::InvalidState: return "invalid-state";
    case ErrorKind::InvalidChannel: return "invalid-channel";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::GroupMismatch: return "group-mismatch";
    case ErrorKind::LabelMismatch: return "label-mismatch";
    case ErrorKind::PureOnly: return "pure-only";
    case ErrorKind::Tolerance: return "tolerance";
    case ErrorKind::NumericalDegeneracy: return "numerical-degeneracy";
    case ErrorKind::NotInvariantIsometry: return "not-an-invariant-isometry";
    case ErrorKind::InvalidCharacteristicFunction:
      return "invalid-characteristic-function";
    case ErrorKind::NonEndomorphic: return "non-endomorphic";
    case ErrorKind::NonPsd: return "non-psd";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

/// Every failure raised by the library. The message starts with the error
/// kind tag followed by the violated invariant, e.g.
/// "invalid-group: mul[0][g] = g for all g".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace asymkit
