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

#include "flotsam/wavelengths.hpp"

#include <algorithm>

#include "flotsam/error.hpp"

namespace flotsam {

WavelengthTable::WavelengthTable(std::vector<BandInfo> bands) : bands_(std::move(bands)) {
  for (const auto& b : bands_) {
    if (!(b.wavelength_nm > 0.0)) {
      throw Error(ErrorCode::BadConfig, "band " + b.band + " has non-positive wavelength");
    }
    if (b.resolution_m != 10 && b.resolution_m != 20 && b.resolution_m != 60) {
      throw Error(ErrorCode::BadConfig,
                  "band " + b.band + " has resolution outside {10, 20, 60} m");
    }
  }
}

namespace {

std::vector<BandInfo> sentinel2_bands(Sensor sensor) {
  const bool a = sensor == Sensor::S2A;
  return {
      {"I1", kBandCoastal, a ? 442.7 : 442.3, 60},
      {"I2", kBandBlue, a ? 492.4 : 492.1, 10},
      {"I3", kBandGreen, a ? 559.8 : 559.0, 10},
      {"I4", kBandRed, a ? 664.6 : 665.0, 10},
      {"I5", kBandRedEdge1, a ? 704.1 : 703.8, 20},
      {"I6", kBandRedEdge2, a ? 740.5 : 739.1, 20},
      {"I7", kBandRedEdge3, a ? 782.8 : 779.7, 20},
      {"I8", kBandNir, a ? 832.8 : 833.0, 10},
      {"I8A", kBandNarrowNir, a ? 864.7 : 864.0, 20},
      {"I9", kBandWaterVapour, a ? 945.1 : 943.2, 60},
      {"I10", kBandSwirCirrus, a ? 1373.5 : 1376.9, 60},
      {"I11", kBandSwir1, a ? 1613.7 : 1610.4, 20},
      {"I12", kBandSwir2, a ? 2202.4 : 2185.7, 20},
  };
}

}  // namespace

const WavelengthTable& WavelengthTable::s2a() {
  static const WavelengthTable table{sentinel2_bands(Sensor::S2A)};
  return table;
}

const WavelengthTable& WavelengthTable::s2b() {
  static const WavelengthTable table{sentinel2_bands(Sensor::S2B)};
  return table;
}

const WavelengthTable& WavelengthTable::builtin(Sensor sensor) {
  return sensor == Sensor::S2A ? s2a() : s2b();
}

WavelengthTable WavelengthTable::marida_subset(Sensor sensor) {
  auto all = sentinel2_bands(sensor);
  std::vector<BandInfo> kept;
  for (const auto& b : all) {
    if (b.descriptor == kBandWaterVapour || b.descriptor == kBandSwirCirrus) continue;
    kept.push_back(b);
  }
  return WavelengthTable(std::move(kept));
}

WavelengthTable WavelengthTable::generic(int band_count) {
  std::vector<BandInfo> bands;
  bands.reserve(static_cast<std::size_t>(band_count));
  for (int i = 0; i < band_count; ++i) {
    bands.push_back({"B" + std::to_string(i + 1), "B" + std::to_string(i + 1),
                     static_cast<double>(i + 1), 10});
  }
  return WavelengthTable(std::move(bands));
}

std::optional<std::size_t> WavelengthTable::find(const std::string& descriptor) const {
  for (std::size_t i = 0; i < bands_.size(); ++i) {
    if (bands_[i].descriptor == descriptor || bands_[i].band == descriptor) return i;
  }
  return std::nullopt;
}

std::size_t WavelengthTable::require(const std::string& descriptor) const {
  if (auto i = find(descriptor)) return *i;
  throw Error(ErrorCode::MissingBand, "stack has no band '" + descriptor + "'");
}

int WavelengthTable::finest_resolution() const {
  int finest = 60;
  for (const auto& b : bands_) finest = std::min(finest, b.resolution_m);
  return finest;
}

WavelengthTable WavelengthTable::reorder(const std::vector<std::string>& descriptors) const {
  std::vector<BandInfo> bands;
  bands.reserve(descriptors.size());
  for (const auto& name : descriptors) bands.push_back(bands_[require(name)]);
  return WavelengthTable(std::move(bands));
}

}  // namespace flotsam
