/*
 * Copyright (c) 2026, the flotsam authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace flotsam {

enum class ErrorCode {
  // raster I/O
  UnsupportedTiffFeature,
  CorruptFile,
  DtypeMismatch,
  IoFailure,
  BadMagic,
  TruncatedPayload,
  NonIntegerMask,
  // spectral core
  OutOfBounds,
  InvalidPixel,
  ZeroVariance,
  LengthMismatch,
  BadFactor,
  InconsistentDims,
  // indices
  MissingBand,
  ZeroVarianceReference,
  TooFewWaterPixels,
  // classifier / evaluation
  GridMismatch,
  DegenerateHistogram,
  UnmappedCode,
  NoEvaluatedPixels,
  // synth
  BadAlpha,
  // catch-all for invalid configuration
  BadConfig,
};

const char* error_code_name(ErrorCode code);

/// All library failures are reported as Error; code() identifies the
/// condition so callers can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace flotsam
