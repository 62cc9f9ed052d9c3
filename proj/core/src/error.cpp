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

#include "flotsam/error.hpp"

namespace flotsam {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedTiffFeature: return "UnsupportedTiffFeature";
    case ErrorCode::CorruptFile: return "CorruptFile";
    case ErrorCode::DtypeMismatch: return "DtypeMismatch";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::TruncatedPayload: return "TruncatedPayload";
    case ErrorCode::NonIntegerMask: return "NonIntegerMask";
    case ErrorCode::OutOfBounds: return "OutOfBounds";
    case ErrorCode::InvalidPixel: return "InvalidPixel";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BadFactor: return "BadFactor";
    case ErrorCode::InconsistentDims: return "InconsistentDims";
    case ErrorCode::MissingBand: return "MissingBand";
    case ErrorCode::ZeroVarianceReference: return "ZeroVarianceReference";
    case ErrorCode::TooFewWaterPixels: return "TooFewWaterPixels";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::DegenerateHistogram: return "DegenerateHistogram";
    case ErrorCode::UnmappedCode: return "UnmappedCode";
    case ErrorCode::NoEvaluatedPixels: return "NoEvaluatedPixels";
    case ErrorCode::BadAlpha: return "BadAlpha";
    case ErrorCode::BadConfig: return "BadConfig";
  }
  return "UnknownError";
}

}  // namespace flotsam
