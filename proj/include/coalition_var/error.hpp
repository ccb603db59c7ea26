/*
 * Copyright 2026 The coalition-var Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef COALITION_VAR_ERROR_HPP
#define COALITION_VAR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace coalition_var {

enum class ErrorKind {
  kMissingCoalition,
  kDuplicateCoalition,
  kTooManyPlayers,
  kPlayerInCoalition,
  kLengthMismatch,
  kTableShapeMismatch,
  kPlayerCountMismatch,
  kTooLargeForExactCheck,
  kNotSymmetric,
  kOutOfRange,
  kInvalidWeighting,
  kGameTooLargeForExact,
  kNumericalInstability,
  kEmptyInput,
  kTooManyPlayersForOracle,
  kInvalidOrdering,
  kInsufficientSamples,
  kInvalidArgument,
  kNegativeVariance,
  kZeroValue,
  kNegativeUncertainty,
  kDegenerateDenominators,
  kSizeNotRepresentable,
  kParse,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kMissingCoalition: return "MissingCoalition";
    case ErrorKind::kDuplicateCoalition: return "DuplicateCoalition";
    case ErrorKind::kTooManyPlayers: return "TooManyPlayers";
    case ErrorKind::kPlayerInCoalition: return "PlayerInCoalition";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kTableShapeMismatch: return "TableShapeMismatch";
    case ErrorKind::kPlayerCountMismatch: return "PlayerCountMismatch";
    case ErrorKind::kTooLargeForExactCheck: return "TooLargeForExactCheck";
    case ErrorKind::kNotSymmetric: return "NotSymmetric";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kInvalidWeighting: return "InvalidWeighting";
    case ErrorKind::kGameTooLargeForExact: return "GameTooLargeForExact";
    case ErrorKind::kNumericalInstability: return "NumericalInstability";
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kTooManyPlayersForOracle: return "TooManyPlayersForOracle";
    case ErrorKind::kInvalidOrdering: return "InvalidOrdering";
    case ErrorKind::kInsufficientSamples: return "InsufficientSamples";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kNegativeVariance: return "NegativeVariance";
    case ErrorKind::kZeroValue: return "ZeroValue";
    case ErrorKind::kNegativeUncertainty: return "NegativeUncertainty";
    case ErrorKind::kDegenerateDenominators: return "DegenerateDenominators";
    case ErrorKind::kSizeNotRepresentable: return "SizeNotRepresentable";
    case ErrorKind::kParse: return "Parse";
  }
  return "Unknown";
}

// All library failures are reported through this exception; kind() lets
// callers (the CLI in particular) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace coalition_var

#endif  // COALITION_VAR_ERROR_HPP
