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

#include <optional>
#include <string>
#include <vector>

namespace flotsam {

/// One sensor band: id ("I8", "I8A"), human descriptor ("NIR"),
/// center wavelength in nm and native ground resolution in m.
struct BandInfo {
  std::string band;
  std::string descriptor;
  double wavelength_nm = 0.0;
  int resolution_m = 10;

  bool operator==(const BandInfo&) const = default;
};

enum class Sensor { S2A, S2B };

/// Ordered band metadata for a stack. Lookup is by descriptor; order matches
/// the plane order of the stack it describes.
class WavelengthTable {
 public:
  WavelengthTable() = default;
  explicit WavelengthTable(std::vector<BandInfo> bands);

  static const WavelengthTable& s2a();
  static const WavelengthTable& s2b();
  static const WavelengthTable& builtin(Sensor sensor);

  /// The 11-band layout MARIDA patches are delivered in: I1..I8, I8A, I11,
  /// I12 (the two 60 m atmospheric bands I9 and I10 are dropped).
  static WavelengthTable marida_subset(Sensor sensor);

  /// Placeholder table for files without band metadata. Descriptors are
  /// "B1".."Bn" with synthetic positive wavelengths; index math that needs a
  /// real band (NIR, Red, ...) will fail with MissingBand until the caller
  /// supplies a band order.
  static WavelengthTable generic(int band_count);

  std::size_t size() const { return bands_.size(); }
  bool empty() const { return bands_.empty(); }
  const BandInfo& at(std::size_t i) const { return bands_.at(i); }
  const std::vector<BandInfo>& bands() const { return bands_; }

  std::optional<std::size_t> find(const std::string& descriptor) const;
  /// find() or throw MissingBand naming the descriptor.
  std::size_t require(const std::string& descriptor) const;

  /// Finest (smallest) native resolution present.
  int finest_resolution() const;

  /// Subset table following a caller-supplied descriptor order. Every name
  /// must exist in this table.
  WavelengthTable reorder(const std::vector<std::string>& descriptors) const;

  bool operator==(const WavelengthTable&) const = default;

 private:
  std::vector<BandInfo> bands_;
};

// Canonical descriptors used by the index math.
inline constexpr const char* kBandCoastal = "Coastal";
inline constexpr const char* kBandBlue = "Blue";
inline constexpr const char* kBandGreen = "Green";
inline constexpr const char* kBandRed = "Red";
inline constexpr const char* kBandRedEdge1 = "Red Edge1";
inline constexpr const char* kBandRedEdge2 = "Red Edge2";
inline constexpr const char* kBandRedEdge3 = "Red Edge3";
inline constexpr const char* kBandNir = "NIR";
inline constexpr const char* kBandNarrowNir = "Narrow NIR";
inline constexpr const char* kBandWaterVapour = "Water Vapour";
inline constexpr const char* kBandSwirCirrus = "SWIR Cirrus";
inline constexpr const char* kBandSwir1 = "SWIR1";
inline constexpr const char* kBandSwir2 = "SWIR2";

}  // namespace flotsam
