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

#include "flotsam/raster.hpp"

#include <algorithm>

namespace flotsam {

std::size_t dtype_size(Dtype dtype) {
  switch (dtype) {
    case Dtype::Uint8: return 1;
    case Dtype::Uint16: return 2;
    case Dtype::Float32: return 4;
  }
  throw Error(ErrorCode::BadConfig, "unknown dtype");
}

const char* dtype_name(Dtype dtype) {
  switch (dtype) {
    case Dtype::Uint8: return "uint8";
    case Dtype::Uint16: return "uint16";
    case Dtype::Float32: return "float32";
  }
  return "?";
}

void RasterHeader::validate() const {
  if (width < 1 || height < 1) {
    throw Error(ErrorCode::BadConfig, "raster dimensions must be >= 1");
  }
  if (band_count < 1) {
    throw Error(ErrorCode::BadConfig, "band count must be >= 1");
  }
  if (!(scale > 0.0)) {
    throw Error(ErrorCode::BadConfig, "scale must be > 0");
  }
}

BandPlane BandPlane::filled(int width, int height, double value) {
  BandPlane p;
  p.width = width;
  p.height = height;
  p.values.assign(p.size(), value);
  p.valid.assign(p.size(), 1);
  return p;
}

BandStack::BandStack(RasterHeader header, std::vector<BandPlane> planes,
                     WavelengthTable wavelengths, std::vector<OpaqueTag> opaque_tags)
    : header_(header),
      planes_(std::move(planes)),
      wavelengths_(std::move(wavelengths)),
      opaque_tags_(std::move(opaque_tags)) {
  header_.validate();
  if (planes_.size() != static_cast<std::size_t>(header_.band_count)) {
    throw Error(ErrorCode::BadConfig, "plane count does not match header band_count");
  }
  if (!wavelengths_.empty() && wavelengths_.size() != planes_.size()) {
    throw Error(ErrorCode::BadConfig, "wavelength table length does not match band count");
  }
  for (const auto& p : planes_) {
    if (p.values.size() != p.size() || p.valid.size() != p.size()) {
      throw Error(ErrorCode::BadConfig, "plane payload length does not match its dimensions");
    }
  }
}

bool BandStack::harmonized() const {
  return std::all_of(planes_.begin(), planes_.end(), [&](const BandPlane& p) {
    return p.width == header_.width && p.height == header_.height;
  });
}

std::vector<std::uint8_t> BandStack::combined_valid() const {
  if (!harmonized()) {
    throw Error(ErrorCode::InconsistentDims, "combined validity needs a harmonized stack");
  }
  std::vector<std::uint8_t> mask(header_.pixel_count(), 1);
  for (const auto& p : planes_) {
    for (std::size_t i = 0; i < mask.size(); ++i) mask[i] &= p.valid[i];
  }
  return mask;
}

const char* index_kind_name(IndexKind kind) {
  switch (kind) {
    case IndexKind::NDVI: return "ndvi";
    case IndexKind::FDI: return "fdi";
    case IndexKind::WCI: return "wci";
  }
  return "?";
}

IndexKind parse_index_kind(const std::string& name) {
  if (name == "ndvi" || name == "NDVI") return IndexKind::NDVI;
  if (name == "fdi" || name == "FDI") return IndexKind::FDI;
  if (name == "wci" || name == "WCI") return IndexKind::WCI;
  throw Error(ErrorCode::BadConfig, "unknown index kind '" + name + "'");
}

IndexMap IndexMap::empty(int width, int height, IndexKind kind) {
  IndexMap m;
  m.width = width;
  m.height = height;
  m.kind = kind;
  m.values.assign(m.size(), 0.0);
  m.valid.assign(m.size(), 0);
  return m;
}

std::size_t IndexMap::valid_count() const {
  std::size_t n = 0;
  for (auto v : valid) n += v;
  return n;
}

const char* pixel_class_name(PixelClass c) {
  switch (c) {
    case PixelClass::Water: return "water";
    case PixelClass::Debris: return "debris";
    case PixelClass::FloatingOther: return "floating_other";
    case PixelClass::Wake: return "wake";
    case PixelClass::Undetermined: return "undetermined";
  }
  return "?";
}

std::optional<PixelClass> parse_pixel_class(const std::string& name) {
  for (std::int32_t c = 0; c < kClassCount; ++c) {
    if (name == pixel_class_name(static_cast<PixelClass>(c))) return static_cast<PixelClass>(c);
  }
  return std::nullopt;
}

ClassMap ClassMap::filled(int width, int height, std::int32_t label) {
  ClassMap m;
  m.width = width;
  m.height = height;
  m.labels.assign(m.size(), label);
  return m;
}

void LabeledScene::validate() const {
  if (stack.width() != truth.width || stack.height() != truth.height) {
    throw Error(ErrorCode::GridMismatch, "scene stack and truth mask have different grids");
  }
}

}  // namespace flotsam
