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

#include "radioprop/measurements.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "radioprop/errors.hpp"

namespace radioprop {

namespace {

constexpr double rsrp_sane_lo_dbm = -160.0;
constexpr double rsrp_sane_hi_dbm = -20.0;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

// Strict, locale-independent parse of a whole field.
bool parse_field(std::string_view text, double &out) {
    if (text.empty())
        return false;
    const char *first = text.data();
    const char *last = text.data() + text.size();
    if (*first == '+') // from_chars rejects a leading plus
        ++first;
    const auto res = std::from_chars(first, last, out);
    return res.ec == std::errc{} && res.ptr == last;
}

void check_sample_values(double lat_deg, double lon_deg, double val, SampleKind kind,
                         std::size_t line) {
    auto fail = [line](const std::string &msg) -> void {
        if (line == 0)
            throw std::invalid_argument(msg);
        throw csv_error(line, msg);
    };
    if (!std::isfinite(lat_deg) || lat_deg < -90.0 || lat_deg > 90.0)
        fail("lat out of range [-90, 90]: " + to_decimal_string(lat_deg));
    if (!std::isfinite(lon_deg) || lon_deg < -180.0 || lon_deg > 180.0)
        fail("lon out of range [-180, 180]: " + to_decimal_string(lon_deg));
    if (!std::isfinite(val))
        fail("val is not finite");
    if (kind == SampleKind::rsrp && (val < rsrp_sane_lo_dbm || val > rsrp_sane_hi_dbm))
        fail("rsrp val outside sanity window [-160, -20] dBm: " + to_decimal_string(val));
}

} // namespace

std::string to_decimal_string(double v) {
    std::array<char, 32> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

bool operator==(const MeasurementSample &a, const MeasurementSample &b) {
    return a.kind == b.kind && a.lon_text == b.lon_text && a.lat_text == b.lat_text &&
           a.val_text == b.val_text;
}

MeasurementSample make_sample(double lat_deg, double lon_deg, double val, SampleKind kind) {
    check_sample_values(lat_deg, lon_deg, val, kind, 0);
    MeasurementSample s;
    s.point = {lat_deg, lon_deg};
    s.val = val;
    s.kind = kind;
    s.lat_text = to_decimal_string(lat_deg);
    s.lon_text = to_decimal_string(lon_deg);
    s.val_text = to_decimal_string(val);
    return s;
}

std::vector<MeasurementSample> parse_measurement_csv(std::string_view text, SampleKind kind) {
    if (text.starts_with("\xEF\xBB\xBF"))
        text.remove_prefix(3);

    std::vector<MeasurementSample> samples;
    bool header_seen = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        if (line.ends_with('\r'))
            line.remove_suffix(1);
        pos = eol + 1;
        ++line_no;

        if (!header_seen) {
            if (trim(line).empty())
                throw csv_error(line_no, "expected header \"lon,lat,val\", found an empty line");
            const auto fields = split_fields(line);
            if (fields.size() != 3 || !iequals(fields[0], "lon") || !iequals(fields[1], "lat") ||
                !iequals(fields[2], "val"))
                throw csv_error(line_no, "expected header \"lon,lat,val\", found \"" +
                                             std::string(line) + "\"");
            header_seen = true;
            continue;
        }

        if (trim(line).empty())
            continue;
        const auto fields = split_fields(line);
        if (fields.size() != 3)
            throw csv_error(line_no, "expected 3 fields, found " + std::to_string(fields.size()));

        MeasurementSample s;
        s.kind = kind;
        double lon = 0.0;
        double lat = 0.0;
        double val = 0.0;
        if (!parse_field(fields[0], lon))
            throw csv_error(line_no, "lon is not a number: \"" + std::string(fields[0]) + "\"");
        if (!parse_field(fields[1], lat))
            throw csv_error(line_no, "lat is not a number: \"" + std::string(fields[1]) + "\"");
        if (!parse_field(fields[2], val))
            throw csv_error(line_no, "val is not a number: \"" + std::string(fields[2]) + "\"");
        check_sample_values(lat, lon, val, kind, line_no);
        s.point = {lat, lon};
        s.val = val;
        s.lon_text = std::string(fields[0]);
        s.lat_text = std::string(fields[1]);
        s.val_text = std::string(fields[2]);
        samples.push_back(std::move(s));
    }
    if (!header_seen)
        throw csv_error(1, "missing header \"lon,lat,val\"");
    return samples;
}

std::string write_measurement_csv(std::span<const MeasurementSample> samples) {
    std::string out = "lon,lat,val\n";
    for (const auto &s : samples) {
        out += s.lon_text;
        out += ',';
        out += s.lat_text;
        out += ',';
        out += s.val_text;
        out += '\n';
    }
    return out;
}

RsrpReportCode quantize_rsrp(double rsrp_dbm) {
    if (!std::isfinite(rsrp_dbm))
        throw std::invalid_argument("rsrp must be finite");
    if (rsrp_dbm < -140.0)
        return {0};
    if (rsrp_dbm >= -44.0)
        return {97};
    // code k covers [-141 + k, -140 + k)
    return {static_cast<int>(std::floor(rsrp_dbm)) + 141};
}

DbmInterval dequantize_rsrp(RsrpReportCode code) {
    if (code.code < 0 || code.code > 97)
        throw std::invalid_argument("rsrp report code out of range [0, 97]: " +
                                    std::to_string(code.code));
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (code.code == 0)
        return {-inf, -140.0};
    if (code.code == 97)
        return {-44.0, inf};
    return {-141.0 + code.code, -140.0 + code.code};
}

} // namespace radioprop
