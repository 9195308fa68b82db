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

#include "radioprop/geo.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace radioprop {

namespace {

void check_point(const GeoPoint &p, const char *name) {
    if (!std::isfinite(p.lat_deg) || p.lat_deg < -90.0 || p.lat_deg > 90.0)
        throw std::invalid_argument(std::string(name) + ": latitude out of range [-90, 90]");
    if (!std::isfinite(p.lon_deg) || p.lon_deg < -180.0 || p.lon_deg > 180.0)
        throw std::invalid_argument(std::string(name) + ": longitude out of range [-180, 180]");
}

} // namespace

double haversine_m(const GeoPoint &a, const GeoPoint &b) {
    check_point(a, "a");
    check_point(b, "b");
    const double deg = std::numbers::pi / 180.0;
    const double dlat = (b.lat_deg - a.lat_deg) * deg;
    const double dlon = (b.lon_deg - a.lon_deg) * deg;
    const double s1 = std::sin(dlat / 2.0);
    const double s2 = std::sin(dlon / 2.0);
    const double h = s1 * s1 + std::cos(a.lat_deg * deg) * std::cos(b.lat_deg * deg) * s2 * s2;
    return 2.0 * earth_radius_m * std::asin(std::min(1.0, std::sqrt(h)));
}

std::vector<DistanceCheck> verify_distances(std::span<const PositionedDistance> estimates,
                                            const GeoPoint &tower) {
    check_point(tower, "tower");
    std::vector<DistanceCheck> out;
    out.reserve(estimates.size());
    for (const auto &e : estimates) {
        if (!std::isfinite(e.d_hat_m) || e.d_hat_m < 0.0)
            throw std::invalid_argument("estimated distance must be finite and non-negative");
        DistanceCheck c;
        c.d_hat_m = e.d_hat_m;
        c.d_geo_m = haversine_m(e.point, tower);
        c.degenerate = c.d_geo_m < 1.0;
        c.ratio = c.degenerate ? std::numeric_limits<double>::infinity()
                               : c.d_hat_m / c.d_geo_m;
        out.push_back(c);
    }
    return out;
}

HeatmapLayer make_heatmap_layer(std::span<const MeasurementSample> samples) {
    if (samples.empty())
        throw std::invalid_argument("heatmap needs at least one sample");
    HeatmapLayer layer;
    layer.value_kind = samples.front().kind;
    layer.points.assign(samples.begin(), samples.end());
    auto &bb = layer.bounding_box;
    bb.min_lat = bb.max_lat = samples.front().point.lat_deg;
    bb.min_lon = bb.max_lon = samples.front().point.lon_deg;
    for (const auto &s : samples) {
        if (s.kind != layer.value_kind)
            throw std::invalid_argument("heatmap samples must share one value kind");
        bb.min_lat = std::min(bb.min_lat, s.point.lat_deg);
        bb.max_lat = std::max(bb.max_lat, s.point.lat_deg);
        bb.min_lon = std::min(bb.min_lon, s.point.lon_deg);
        bb.max_lon = std::max(bb.max_lon, s.point.lon_deg);
    }
    return layer;
}

std::string export_heatmap(const HeatmapLayer &layer, HeatmapFormat format) {
    if (layer.points.empty())
        throw std::invalid_argument("heatmap layer has no points");
    if (format == HeatmapFormat::csv)
        return write_measurement_csv(layer.points);

    nlohmann::ordered_json doc;
    doc["type"] = "FeatureCollection";
    doc["bbox"] = {layer.bounding_box.min_lon, layer.bounding_box.min_lat,
                   layer.bounding_box.max_lon, layer.bounding_box.max_lat};
    doc["features"] = nlohmann::ordered_json::array();
    for (const auto &p : layer.points) {
        nlohmann::ordered_json feature;
        feature["type"] = "Feature";
        feature["geometry"] = {{"type", "Point"},
                               {"coordinates", {p.point.lon_deg, p.point.lat_deg}}};
        feature["properties"] = {{"val", p.val}};
        doc["features"].push_back(std::move(feature));
    }
    return doc.dump(2) + "\n";
}

} // namespace radioprop
