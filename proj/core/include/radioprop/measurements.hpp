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

#ifndef RADIOPROP_MEASUREMENTS_HPP
#define RADIOPROP_MEASUREMENTS_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace radioprop {

// WGS-84 position in decimal degrees.
struct GeoPoint {
    double lat_deg = 0.0; // [-90, 90]
    double lon_deg = 0.0; // [-180, 180]
};

enum class SampleKind { rsrp, downlink_speed, uplink_speed };

// One geo-tagged observation from a drive-test CSV (`lon,lat,val` schema).
//
// The *_text members hold the exact decimal field text. Coordinates are kept
// verbatim so that re-emitting a file preserves every decimal place and
// nearby measurement positions stay distinguishable. Samples built from
// doubles get the shortest text that parses back to the same value.
struct MeasurementSample {
    GeoPoint point;
    double val = 0.0; // dBm for rsrp, Mbit/s for the speed kinds
    SampleKind kind = SampleKind::rsrp;
    std::string lon_text;
    std::string lat_text;
    std::string val_text;
};

bool operator==(const MeasurementSample &a, const MeasurementSample &b);

// Validating constructor from numeric values. Throws std::invalid_argument
// when an invariant fails (lat/lon range, non-finite val, or an rsrp value
// outside the [-160, -20] dBm sanity window).
MeasurementSample make_sample(double lat_deg, double lon_deg, double val,
                              SampleKind kind = SampleKind::rsrp);

// Shortest decimal text that round-trips to the same double.
std::string to_decimal_string(double v);

// Parses a `lon,lat,val` CSV. The header must be the first line and name
// exactly those three columns, in that order, case-insensitively; extra
// columns are rejected. Accepts \n or \r\n line endings and an optional
// UTF-8 BOM. Throws csv_error with the offending 1-based line number.
std::vector<MeasurementSample> parse_measurement_csv(std::string_view text,
                                                     SampleKind kind = SampleKind::rsrp);

// Emits the same schema with \n line endings. Field text is written
// verbatim, so parse -> write is byte-identical and write -> parse
// reproduces the samples exactly.
std::string write_measurement_csv(std::span<const MeasurementSample> samples);

// LTE RSRP measurement report code, RSRP_00 .. RSRP_97.
struct RsrpReportCode {
    int code = 0; // [0, 97]
};

// Half-open dBm interval [lo_dbm, hi_dbm). The boundary codes map to
// half-unbounded intervals (lo or hi is infinite).
struct DbmInterval {
    double lo_dbm;
    double hi_dbm;

    bool contains(double x_dbm) const { return lo_dbm <= x_dbm && x_dbm < hi_dbm; }
};

// Maps a dBm reading to its report code: code 0 below -140 dBm, code 97 at
// or above -44 dBm, and otherwise the unique k with -141+k <= rsrp < -140+k
// (1 dB reporting resolution). Throws std::invalid_argument on non-finite
// input.
RsrpReportCode quantize_rsrp(double rsrp_dbm);

// Inverse mapping to the reporting interval. Throws std::invalid_argument
// when the code is outside [0, 97].
DbmInterval dequantize_rsrp(RsrpReportCode code);

} // namespace radioprop

#endif // RADIOPROP_MEASUREMENTS_HPP
