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

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>
#include <nlohmann/json.hpp>

#include "radioprop/geo.hpp"
#include "radioprop/pathloss.hpp"
#include "support/drive_test_data.hpp"
#include "support/test_rng.hpp"

using namespace radioprop;

TEST_CASE("haversine_m measures great-circle distance", "[geo]") {
    const GeoPoint a{13.0801464, 80.2260452};
    CHECK(haversine_m(a, a) == 0.0);
    CHECK_THAT(haversine_m({0.0, 0.0}, {0.0, 1.0}),
               Catch::Matchers::WithinAbs(111195.0, 1.0));
    CHECK(haversine_m(a, {13.0804985, 80.2257557}) ==
          haversine_m({13.0804985, 80.2257557}, a));
    CHECK_THROWS_AS(haversine_m({91.0, 0.0}, {0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(haversine_m({0.0, 181.0}, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("haversine properties hold on random points", "[geo][property]") {
    std::mt19937_64 rng(41);
    auto random_point = [&rng]() {
        return GeoPoint{-90.0 + 180.0 * test_support::next_uniform(rng),
                        -180.0 + 360.0 * test_support::next_uniform(rng)};
    };
    for (int i = 0; i < 1000; ++i) {
        const auto a = random_point();
        const auto b = random_point();
        const auto c = random_point();
        const double ab = haversine_m(a, b);
        const double bc = haversine_m(b, c);
        const double ac = haversine_m(a, c);
        CHECK(ab >= 0.0);
        CHECK(haversine_m(b, a) == ab);
        CHECK(ac <= ab + bc + 1e-6);
    }
    SECTION("distinct points are separated") {
        for (int i = 0; i < 200; ++i) {
            const auto a = random_point();
            GeoPoint b = a;
            b.lat_deg += (a.lat_deg > 0.0 ? -1.0 : 1.0) * 1e-4;
            CHECK(haversine_m(a, b) > 0.0);
        }
    }
}

TEST_CASE("verify_distances compares estimates against geometry", "[geo]") {
    SECTION("tower on top of the sample is flagged") {
        const GeoPoint p{13.08, 80.22};
        const auto checks = verify_distances(std::vector<PositionedDistance>{{p, 100.0}}, p);
        REQUIRE(checks.size() == 1);
        CHECK(checks[0].d_geo_m == 0.0);
        CHECK(checks[0].degenerate);
        CHECK(std::isinf(checks[0].ratio));
    }
    SECTION("tower 500 m due north gives ratio one") {
        const GeoPoint p{13.08, 80.22};
        const double dlat = 500.0 / (earth_radius_m * std::numbers::pi / 180.0);
        const GeoPoint tower{13.08 + dlat, 80.22};
        const auto checks =
            verify_distances(std::vector<PositionedDistance>{{p, 500.0}}, tower);
        REQUIRE(checks.size() == 1);
        CHECK_FALSE(checks[0].degenerate);
        CHECK_THAT(checks[0].ratio, Catch::Matchers::WithinAbs(1.0, 0.001));
    }
    SECTION("campaign rows against a nearby tower produce a full report") {
        const auto samples = parse_measurement_csv(
            test_support::make_measurement_csv(test_support::scenario2_rows));
        const auto estimates = estimate_distances(samples, {41.0}, {2.32});
        std::vector<PositionedDistance> rows;
        for (const auto &e : estimates)
            rows.push_back({e.sample.point, e.d_hat_m});
        const auto checks = verify_distances(rows, {13.0798, 80.2253});
        REQUIRE(checks.size() == test_support::scenario2_rows.size());
        for (const auto &c : checks) {
            CHECK(c.d_geo_m >= 0.0);
            CHECK(c.ratio > 0.0);
        }
    }
}

TEST_CASE("make_heatmap_layer wraps samples with their bounding box", "[geo]") {
    const auto samples = parse_measurement_csv(
        test_support::make_measurement_csv(test_support::scenario1_rows));
    const auto layer = make_heatmap_layer(samples);
    CHECK(layer.points.size() == 10);
    CHECK(layer.value_kind == SampleKind::rsrp);
    CHECK(layer.bounding_box.min_lat == 13.0801522);
    CHECK(layer.bounding_box.max_lat == 13.0804893);
    CHECK(layer.bounding_box.min_lon == 80.2251972);
    CHECK(layer.bounding_box.max_lon == 80.2260928);

    SECTION("bounding box encloses every point") {
        for (const auto &p : layer.points) {
            CHECK(p.point.lat_deg >= layer.bounding_box.min_lat);
            CHECK(p.point.lat_deg <= layer.bounding_box.max_lat);
            CHECK(p.point.lon_deg >= layer.bounding_box.min_lon);
            CHECK(p.point.lon_deg <= layer.bounding_box.max_lon);
        }
    }
    SECTION("empty input is rejected") {
        CHECK_THROWS_AS(make_heatmap_layer({}), std::invalid_argument);
    }
    SECTION("mixed value kinds are rejected") {
        std::vector<MeasurementSample> mixed = {make_sample(13.1, 80.5, -90.0),
                                                make_sample(13.2, 80.6, 42.5,
                                                            SampleKind::downlink_speed)};
        CHECK_THROWS_AS(make_heatmap_layer(mixed), std::invalid_argument);
    }
}

TEST_CASE("export_heatmap produces point features", "[geo]") {
    SECTION("single point") {
        const auto s = make_sample(13.1, 80.5, -90.0);
        const auto layer = make_heatmap_layer({&s, 1});
        const auto doc = nlohmann::json::parse(export_heatmap(layer, HeatmapFormat::geojson));
        CHECK(doc["type"] == "FeatureCollection");
        REQUIRE(doc["features"].size() == 1);
        const auto &f = doc["features"][0];
        CHECK(f["type"] == "Feature");
        CHECK(f["geometry"]["type"] == "Point");
        CHECK(f["geometry"]["coordinates"][0].get<double>() == 80.5);
        CHECK(f["geometry"]["coordinates"][1].get<double>() == 13.1);
        CHECK(f["properties"]["val"].get<double>() == -90.0);
    }
    SECTION("campaign rows") {
        const auto samples = parse_measurement_csv(
            test_support::make_measurement_csv(test_support::scenario1_rows));
        const auto doc = nlohmann::json::parse(
            export_heatmap(make_heatmap_layer(samples), HeatmapFormat::geojson));
        CHECK(doc["features"].size() == 10);
        REQUIRE(doc["bbox"].size() == 4);
        CHECK(doc["bbox"][0].get<double>() == 80.2251972);
        CHECK(doc["bbox"][1].get<double>() == 13.0801522);
        CHECK(doc["bbox"][2].get<double>() == 80.2260928);
        CHECK(doc["bbox"][3].get<double>() == 13.0804893);
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const auto &coords = doc["features"][i]["geometry"]["coordinates"];
            CHECK(coords[0].get<double>() == samples[i].point.lon_deg);
            CHECK(coords[1].get<double>() == samples[i].point.lat_deg);
        }
    }
    SECTION("csv export is a parse fixed point") {
        const std::string text = test_support::make_measurement_csv(test_support::scenario1_rows);
        const auto samples = parse_measurement_csv(text);
        const std::string exported =
            export_heatmap(make_heatmap_layer(samples), HeatmapFormat::csv);
        CHECK(exported == text);
        const auto reparsed = parse_measurement_csv(exported);
        CHECK(export_heatmap(make_heatmap_layer(reparsed), HeatmapFormat::csv) == exported);
    }
}
