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

#ifndef RADIOPROP_PATHLOSS_HPP
#define RADIOPROP_PATHLOSS_HPP

#include <span>
#include <string>
#include <vector>

#include "radioprop/measurements.hpp"

namespace radioprop {

inline constexpr double speed_of_light_mps = 299792458.0;

// Log-distance pathloss: PL(d) = PL(d0) + 10 * alpha * log10(d / d0).
struct LogDistanceModel {
    double alpha;    // pathloss exponent, > 0
    double d0_m;     // close-in reference distance, > 0
    double pl_d0_db; // pathloss at d0, >= 0
};

// Urban-micro NLoS pathloss at carrier fc (GHz):
// PL(d) = 36.7 log10(d) + 22.7 + 26 log10(fc), d in meters.
struct UmiNlosModel {
    double fc_ghz; // > 0
};

struct LinkBudget {
    double pt_dbm; // effective transmit power
};

struct AntennaGeometry {
    double largest_dimension_m; // D, > 0
    double fc_hz;               // > 0
};

// Throws std::invalid_argument when the model is invalid or d_m < d0_m (the
// model has no meaning inside the reference distance).
double log_distance_pl(const LogDistanceModel &model, double d_m);

// Far-field boundary 2*D^2/lambda.
double fraunhofer_distance_m(const AntennaGeometry &geometry);

// Mean received power: Pt - PL.
double received_power_dbm(const LinkBudget &lb, double pl_db);

// Pathloss implied by a received RSRP reading: Pt - RSRP.
double pathloss_from_rsrp_db(const LinkBudget &lb, double rsrp_dbm);

// Throws std::invalid_argument when d_m < 1 m. The coefficients come from
// the ITU urban-micro evaluation tables, which specify the model for larger
// distances; the 1 m floor keeps the inverse total on pathloss values seen
// in practice.
double umi_nlos_pl(const UmiNlosModel &model, double d_m);

// Exact algebraic inverse of umi_nlos_pl:
// d = 10^((PL - 22.7 - 26 log10(fc)) / 36.7).
double invert_umi_nlos_m(const UmiNlosModel &model, double pl_db);

struct DistanceEstimate {
    MeasurementSample sample;
    double pl_db;
    double d_hat_m; // unrounded; reports round to the nearest meter
};

// Per-sample composition of pathloss_from_rsrp_db and invert_umi_nlos_m,
// preserving row order. Throws std::invalid_argument when a sample is not
// of kind rsrp.
std::vector<DistanceEstimate> estimate_distances(std::span<const MeasurementSample> samples,
                                                 const LinkBudget &lb, const UmiNlosModel &model);

// CSV report with columns `lat,lon,rsrp_dbm,pl_db,d_hat_m`; distances are
// rounded to the nearest meter.
std::string write_distance_csv(std::span<const DistanceEstimate> estimates);

} // namespace radioprop

#endif // RADIOPROP_PATHLOSS_HPP
