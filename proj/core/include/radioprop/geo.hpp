// SPDX-License-Identifier: Apache-2.0
//
// radioprop - propagation measurement analysis toolkit
// Copyright (C) 2026 radioprop contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RADIOPROP_GEO_HPP
#define RADIOPROP_GEO_HPP

#include <span>
#include <string>
#include <vector>

#include "radioprop/measurements.hpp"

namespace radioprop {

// Spherical Earth; sub-0.5% error at the sub-kilometer scales of drive
// tests, which is well below the pathloss-model uncertainty.
inline constexpr double earth_radius_m = 6371000.0;

// Great-circle distance between two WGS-84 points.
double haversine_m(const GeoPoint &a, const GeoPoint &b);

struct PositionedDistance {
    GeoPoint point;
    double d_hat_m; // model-estimated transmitter distance
};

// Comparison of a model-estimated distance against the geodesic distance to
// a known transmitter position. When the geodesic distance degenerates
// (below 1 m) the ratio is flagged rather than thrown so batch runs stay
// total.
struct DistanceCheck {
    double d_hat_m;
    double d_geo_m;
    double ratio;    // d_hat / d_geo; +infinity when degenerate
    bool degenerate; // d_geo_m < 1 m
};

std::vector<DistanceCheck> verify_distances(std::span<const PositionedDistance> rows,
                                            const GeoPoint &tower);

struct BoundingBox {
    double min_lat;
    double max_lat;
    double min_lon;
    double max_lon;
};

// Point layer for map export. Non-empty, single value kind, bounding box
// encloses every point.
struct HeatmapLayer {
    std::vector<MeasurementSample> points;
    SampleKind value_kind;
    BoundingBox bounding_box;
};

// Throws std::invalid_argument on an empty sample set or mixed kinds.
HeatmapLayer make_heatmap_layer(std::span<const MeasurementSample> samples);

enum class HeatmapFormat { csv, geojson };

// csv: the `lon,lat,val` measurement schema, lossless against
// parse_measurement_csv. geojson: an RFC 7946 FeatureCollection of Point
// features with a `val` property; coordinates are ordered [lon, lat].
std::string export_heatmap(const HeatmapLayer &layer, HeatmapFormat format);

} // namespace radioprop

#endif // RADIOPROP_GEO_HPP
