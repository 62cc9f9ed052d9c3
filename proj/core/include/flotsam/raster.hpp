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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flotsam/error.hpp"
#include "flotsam/wavelengths.hpp"

namespace flotsam {

enum class Dtype : std::uint32_t { Uint8 = 0, Uint16 = 1, Float32 = 2 };

std::size_t dtype_size(Dtype dtype);
const char* dtype_name(Dtype dtype);

/// A raster tag carried through read/write untouched (GeoTIFF geokeys,
/// tiepoints, ...). Values are kept as raw little-endian bytes of the
/// declared TIFF type; nothing in the library interprets them.
struct OpaqueTag {
  std::uint16_t tag = 0;
  std::uint16_t type = 0;
  std::uint32_t count = 0;
  std::vector<std::uint8_t> value;

  bool operator==(const OpaqueTag&) const = default;
};

struct RasterHeader {
  int width = 0;
  int height = 0;
  int band_count = 0;
  Dtype dtype = Dtype::Float32;
  double scale = 1.0;  // reflectance = stored_value * scale
  std::optional<double> nodata;

  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }

  void validate() const;

  bool operator==(const RasterHeader&) const = default;
};

/// One band of reflectance on its own grid (pre-harmonization grids differ
/// across bands). Values are scaled reflectance in double precision; valid
/// is 1 where the pixel is usable.
struct BandPlane {
  int width = 0;
  int height = 0;
  std::vector<double> values;
  std::vector<std::uint8_t> valid;

  static BandPlane filled(int width, int height, double value);

  std::size_t size() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
  double at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }
  bool is_valid(int x, int y) const {
    return valid[static_cast<std::size_t>(y) * width + x] != 0;
  }

  bool operator==(const BandPlane&) const = default;
};

/// Co-registered multi-band reflectance raster. Immutable after
/// construction; shareable across threads.
class BandStack {
 public:
  BandStack() = default;
  BandStack(RasterHeader header, std::vector<BandPlane> planes, WavelengthTable wavelengths,
            std::vector<OpaqueTag> opaque_tags = {});

  const RasterHeader& header() const { return header_; }
  int width() const { return header_.width; }
  int height() const { return header_.height; }
  int band_count() const { return header_.band_count; }
  const WavelengthTable& wavelengths() const { return wavelengths_; }
  const std::vector<BandPlane>& planes() const { return planes_; }
  const BandPlane& plane(std::size_t i) const { return planes_.at(i); }
  const std::vector<OpaqueTag>& opaque_tags() const { return opaque_tags_; }

  /// True when every plane is on the header grid.
  bool harmonized() const;

  /// Conjunction of per-band validity. Requires a harmonized stack.
  std::vector<std::uint8_t> combined_valid() const;

  std::optional<std::size_t> find_band(const std::string& descriptor) const {
    return wavelengths_.find(descriptor);
  }
  std::size_t require_band(const std::string& descriptor) const {
    return wavelengths_.require(descriptor);
  }

  bool operator==(const BandStack&) const = default;

 private:
  RasterHeader header_;
  std::vector<BandPlane> planes_;
  WavelengthTable wavelengths_;
  std::vector<OpaqueTag> opaque_tags_;
};

enum class IndexKind { NDVI, FDI, WCI };

const char* index_kind_name(IndexKind kind);
IndexKind parse_index_kind(const std::string& name);

/// Single-channel real-valued raster with a validity mask. Invalid pixels
/// hold 0.0 in the payload and must be skipped via the mask.
struct IndexMap {
  int width = 0;
  int height = 0;
  IndexKind kind = IndexKind::NDVI;
  std::vector<double> values;
  std::vector<std::uint8_t> valid;

  static IndexMap empty(int width, int height, IndexKind kind);

  std::size_t size() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
  std::size_t valid_count() const;
};

/// Prediction classes. Ground-truth ClassMaps carry raw dataset codes
/// instead until map_labels() brings them into this space.
enum class PixelClass : std::int32_t {
  Water = 0,
  Debris = 1,
  FloatingOther = 2,
  Wake = 3,
  Undetermined = 4,
};

inline constexpr std::int32_t kClassCount = 5;
inline constexpr std::int32_t kIgnoreLabel = -1;

const char* pixel_class_name(PixelClass c);
std::optional<PixelClass> parse_pixel_class(const std::string& name);

/// Single-channel categorical raster: predicted classes, mapped truth
/// (PixelClass codes plus kIgnoreLabel), or raw dataset codes.
struct ClassMap {
  int width = 0;
  int height = 0;
  std::vector<std::int32_t> labels;

  static ClassMap filled(int width, int height, std::int32_t label);

  std::size_t size() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
  std::int32_t at(int x, int y) const { return labels[static_cast<std::size_t>(y) * width + x]; }

  bool operator==(const ClassMap&) const = default;
};

/// A band stack paired with its ground-truth mask.
struct LabeledScene {
  BandStack stack;
  ClassMap truth;
  std::string scene_id;

  void validate() const;
};

}  // namespace flotsam
