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

#include "radioprop/pathloss.hpp"

#include <cmath>
#include <stdexcept>

namespace radioprop {

namespace {

void require_finite(double v, const char *name) {
    if (!std::isfinite(v))
        throw std::invalid_argument(std::string(name) + " must be finite");
}

void require_positive(double v, const char *name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string(name) + " must be positive");
}

} // namespace

double log_distance_pl(const LogDistanceModel &model, double d_m) {
    require_positive(model.alpha, "alpha");
    require_positive(model.d0_m, "d0_m");
    require_finite(model.pl_d0_db, "pl_d0_db");
    if (model.pl_d0_db < 0.0)
        throw std::invalid_argument("pl_d0_db must be non-negative");
    if (!std::isfinite(d_m) || d_m < model.d0_m)
        throw std::invalid_argument("distance is inside the close-in reference distance");
    return model.pl_d0_db + 10.0 * model.alpha * std::log10(d_m / model.d0_m);
}

double fraunhofer_distance_m(const AntennaGeometry &geometry) {
    require_positive(geometry.largest_dimension_m, "largest_dimension_m");
    require_positive(geometry.fc_hz, "fc_hz");
    const double lambda_m = speed_of_light_mps / geometry.fc_hz;
    return 2.0 * geometry.largest_dimension_m * geometry.largest_dimension_m / lambda_m;
}

double received_power_dbm(const LinkBudget &lb, double pl_db) {
    require_finite(lb.pt_dbm, "pt_dbm");
    require_finite(pl_db, "pl_db");
    return lb.pt_dbm - pl_db;
}

double pathloss_from_rsrp_db(const LinkBudget &lb, double rsrp_dbm) {
    require_finite(lb.pt_dbm, "pt_dbm");
    require_finite(rsrp_dbm, "rsrp_dbm");
    return lb.pt_dbm - rsrp_dbm;
}

double umi_nlos_pl(const UmiNlosModel &model, double d_m) {
    require_positive(model.fc_ghz, "fc_ghz");
    if (!std::isfinite(d_m) || d_m < 1.0)
        throw std::invalid_argument("distance below the 1 m model floor");
    return 36.7 * std::log10(d_m) + 22.7 + 26.0 * std::log10(model.fc_ghz);
}

double invert_umi_nlos_m(const UmiNlosModel &model, double pl_db) {
    require_positive(model.fc_ghz, "fc_ghz");
    require_finite(pl_db, "pl_db");
    return std::pow(10.0, (pl_db - 22.7 - 26.0 * std::log10(model.fc_ghz)) / 36.7);
}

std::vector<DistanceEstimate> estimate_distances(std::span<const MeasurementSample> samples,
                                                 const LinkBudget &lb, const UmiNlosModel &model) {
    require_finite(lb.pt_dbm, "pt_dbm");
    require_positive(model.fc_ghz, "fc_ghz");
    std::vector<DistanceEstimate> out;
    out.reserve(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].kind != SampleKind::rsrp)
            throw std::invalid_argument("sample " + std::to_string(i) +
                                        " is not an rsrp measurement");
        const double pl = pathloss_from_rsrp_db(lb, samples[i].val);
        out.push_back({samples[i], pl, invert_umi_nlos_m(model, pl)});
    }
    return out;
}

std::string write_distance_csv(std::span<const DistanceEstimate> estimates) {
    std::string out = "lat,lon,rsrp_dbm,pl_db,d_hat_m\n";
    for (const auto &e : estimates) {
        out += e.sample.lat_text;
        out += ',';
        out += e.sample.lon_text;
        out += ',';
        out += e.sample.val_text;
        out += ',';
        out += to_decimal_string(e.pl_db);
        out += ',';
        out += std::to_string(std::llround(e.d_hat_m));
        out += '\n';
    }
    return out;
}

} // namespace radioprop
