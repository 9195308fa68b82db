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
//
// Batch front-end. Subcommands:
//   distances  estimate transmitter distance per RSRP sample
//   shadow     fit a log-normal shadow fading model to dBm samples
//   fading     simulate or analyze a small-scale fading capture
//   heatmap    convert measurement CSV to a map layer (csv or geojson)
//
// Exit codes: 0 success, 1 data or model error, 2 usage error.
// Output files are written to a temporary sibling and renamed on success,
// so a failing run never leaves a partial file behind.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "radioprop/errors.hpp"
#include "radioprop/geo.hpp"
#include "radioprop/measurements.hpp"
#include "radioprop/pathloss.hpp"
#include "radioprop/shadowing.hpp"
#include "radioprop/smallscale.hpp"

namespace {

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::byte> read_binary_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in)
        throw std::runtime_error("cannot open input file: " + path);
    const auto size = static_cast<std::size_t>(in.tellg());
    std::vector<std::byte> bytes(size);
    in.seekg(0);
    in.read(reinterpret_cast<char *>(bytes.data()), static_cast<std::streamsize>(size));
    if (!in)
        throw std::runtime_error("cannot read input file: " + path);
    return bytes;
}

// "-" or empty targets the output stream; real paths are written atomically.
void write_output(const std::string &path, const std::string &content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open output file: " + tmp);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out)
            throw std::runtime_error("cannot write output file: " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw std::runtime_error("cannot move " + tmp + " to " + path + ": " + ec.message());
}

void write_binary_output(const std::string &path, const std::vector<std::byte> &bytes) {
    write_output(path, std::string(reinterpret_cast<const char *>(bytes.data()), bytes.size()));
}

// Shadow inputs are either the measurement CSV schema or one dBm value per
// line; a comma in the first non-empty line picks the former.
std::vector<double> load_dbm_samples(const std::string &text) {
    std::string::size_type scan = 0;
    std::string first_line;
    while (scan < text.size()) {
        auto eol = text.find('\n', scan);
        if (eol == std::string::npos)
            eol = text.size();
        first_line = text.substr(scan, eol - scan);
        if (first_line.find_first_not_of(" \t\r") != std::string::npos)
            break;
        first_line.clear();
        scan = eol + 1;
    }

    std::vector<double> values;
    if (first_line.find(',') != std::string::npos) {
        const auto samples = radioprop::parse_measurement_csv(text);
        values.reserve(samples.size());
        for (const auto &s : samples)
            values.push_back(s.val);
        return values;
    }

    std::size_t line_no = 0;
    std::string::size_type pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string::npos)
            eol = text.size();
        std::string line = text.substr(pos, eol - pos);
        ++line_no;
        pos = eol + 1;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto b = line.find_first_not_of(" \t");
        if (b == std::string::npos)
            continue;
        const auto e = line.find_last_not_of(" \t");
        const std::string field = line.substr(b, e - b + 1);
        double v = 0.0;
        const char *begin = field.data();
        const char *end = begin + field.size();
        auto [ptr, err] = std::from_chars(begin, end, v);
        if (err != std::errc() || ptr != end)
            throw radioprop::csv_error(line_no, "not a number: '" + field + "'");
        values.push_back(v);
    }
    return values;
}

radioprop::HeatmapFormat parse_heatmap_format(const std::string &name) {
    if (name == "csv")
        return radioprop::HeatmapFormat::csv;
    return radioprop::HeatmapFormat::geojson;
}

struct DistancesArgs {
    std::string input;
    std::string out = "-";
    std::string heatmap_out;
    std::string heatmap_format = "geojson";
    double pt_dbm = 0.0;
    double fc_ghz = 0.0;
    double tower_lat = 0.0;
    double tower_lon = 0.0;
    bool has_tower = false;
};

int run_distances(const DistancesArgs &args) {
    const auto samples = radioprop::parse_measurement_csv(read_text_file(args.input));
    const radioprop::LinkBudget budget{args.pt_dbm};
    const radioprop::UmiNlosModel model{args.fc_ghz};
    const auto estimates = radioprop::estimate_distances(samples, budget, model);

    std::string table = radioprop::write_distance_csv(estimates);
    if (args.has_tower && !estimates.empty()) {
        const radioprop::GeoPoint tower{args.tower_lat, args.tower_lon};
        std::vector<radioprop::PositionedDistance> rows;
        rows.reserve(estimates.size());
        for (const auto &e : estimates)
            rows.push_back({e.sample.point, e.d_hat_m});
        const auto checks = radioprop::verify_distances(rows, tower);

        std::istringstream lines(table);
        std::string line;
        std::getline(lines, line);
        std::string extended = line + ",d_geo_m,ratio\n";
        std::size_t i = 0;
        while (std::getline(lines, line)) {
            extended += line;
            extended += ',';
            extended += radioprop::to_decimal_string(checks[i].d_geo_m);
            extended += ',';
            extended += checks[i].degenerate ? "inf"
                                             : radioprop::to_decimal_string(checks[i].ratio);
            extended += '\n';
            ++i;
        }
        table = std::move(extended);
    }

    std::string heatmap;
    if (!args.heatmap_out.empty()) {
        if (samples.empty()) {
            std::cerr << "note: no samples, skipping heatmap export\n";
        } else {
            heatmap = radioprop::export_heatmap(radioprop::make_heatmap_layer(samples),
                                                parse_heatmap_format(args.heatmap_format));
        }
    }

    write_output(args.out, table);
    if (!heatmap.empty())
        write_output(args.heatmap_out, heatmap);
    return 0;
}

struct ShadowArgs {
    std::string input;
    std::string report_out = "-";
    std::string series_out;
    double bin_width_db = 1.0;
};

int run_shadow(const ShadowArgs &args) {
    const auto values = load_dbm_samples(read_text_file(args.input));
    const auto report = radioprop::fit_shadowing(values, args.bin_width_db);
    if (report.fit.n < 500)
        std::cerr << "warning: only " << report.fit.n
                  << " samples; a stable fit needs more than 500\n";
    const std::string text = radioprop::write_shadowing_report(report);
    const std::string series =
        args.series_out.empty() ? std::string() : radioprop::write_shadowing_series_csv(report);
    write_output(args.report_out, text);
    if (!args.series_out.empty())
        write_output(args.series_out, series);
    return 0;
}

struct FadingArgs {
    std::string input;
    std::string envelope_out;
    std::string report_out = "-";
    std::string pdf_out;
    bool simulate = false;
    int paths = 64;
    double velocity_mps = 30.0;
    double fc_hz = 2.32e9;
    double omega = 1.0;
    double max_delay_s = 1.0e-6;
    double duration_s = 1.0;
    double sample_rate_hz = 0.0;
    std::uint64_t seed = 0;
    bool has_seed = false;
    bool detect_slots = false;
    double slot_threshold = 0.1;
    double pdf_bin_width = 0.0;
};

int run_fading(const FadingArgs &args) {
    radioprop::IqStream stream;
    if (args.simulate) {
        std::uint64_t seed = args.seed;
        if (!args.has_seed) {
            std::random_device rd;
            seed = (static_cast<std::uint64_t>(rd()) << 32) | rd();
            std::cerr << "seed = " << seed << "\n";
        }
        radioprop::MultipathConfig cfg;
        cfg.n_paths = args.paths;
        cfg.velocity_mps = args.velocity_mps;
        cfg.fc_hz = args.fc_hz;
        cfg.omega = args.omega;
        cfg.max_delay_s = args.max_delay_s;
        cfg.seed = seed;
        stream = radioprop::simulate_envelope(cfg, args.duration_s, args.sample_rate_hz);
    } else {
        stream = radioprop::parse_iq_dat(read_binary_file(args.input), args.sample_rate_hz);
    }

    const auto env = radioprop::envelope(stream);
    const auto fit = radioprop::estimate_rayleigh_scale(env);

    std::string report = radioprop::write_rayleigh_report(fit);
    if (args.detect_slots) {
        const auto slots =
            radioprop::detect_slots(env, stream.sample_rate_hz, args.slot_threshold);
        report += "slot_duration_s = " + radioprop::to_decimal_string(slots.slot_duration_s) + "\n";
        report += "slot_nulls = " + std::to_string(slots.null_positions.size()) + "\n";
    }
    const std::string envelope_csv =
        args.envelope_out.empty() ? std::string() : radioprop::write_envelope_csv(stream);
    const std::string pdf_csv =
        args.pdf_out.empty() ? std::string()
                             : radioprop::write_pdf_comparison_csv(env, fit, args.pdf_bin_width);

    write_output(args.report_out, report);
    if (!args.envelope_out.empty())
        write_output(args.envelope_out, envelope_csv);
    if (!args.pdf_out.empty())
        write_output(args.pdf_out, pdf_csv);
    return 0;
}

struct HeatmapArgs {
    std::string input;
    std::string out = "-";
    std::string format = "geojson";
};

int run_heatmap(const HeatmapArgs &args) {
    const auto samples = radioprop::parse_measurement_csv(read_text_file(args.input));
    const auto layer = radioprop::make_heatmap_layer(samples);
    write_output(args.out, radioprop::export_heatmap(layer, parse_heatmap_format(args.format)));
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"radio propagation measurement analysis"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "radioprop 0.1.0");

    DistancesArgs dist;
    auto *cmd_dist = app.add_subcommand(
        "distances", "Estimate transmitter distance for each RSRP sample in a drive-test CSV");
    cmd_dist->add_option("input", dist.input, "Measurement CSV (lon,lat,val header)")->required();
    cmd_dist->add_option("--pt-dbm", dist.pt_dbm, "Transmit power in dBm")->required();
    cmd_dist->add_option("--fc-ghz", dist.fc_ghz, "Carrier frequency in GHz")->required();
    cmd_dist->add_option("-o,--out", dist.out, "Output CSV path ('-' for stdout)");
    auto *tlat = cmd_dist->add_option("--tower-lat", dist.tower_lat,
                                      "Tower latitude; adds geodesic check columns");
    auto *tlon = cmd_dist->add_option("--tower-lon", dist.tower_lon,
                                      "Tower longitude; adds geodesic check columns");
    tlat->needs(tlon);
    tlon->needs(tlat);
    cmd_dist->add_option("--heatmap-out", dist.heatmap_out, "Also export the samples as a map layer");
    cmd_dist->add_option("--heatmap-format", dist.heatmap_format, "csv or geojson")
        ->check(CLI::IsMember({"csv", "geojson"}))
        ->capture_default_str();

    ShadowArgs shadow;
    auto *cmd_shadow = app.add_subcommand(
        "shadow", "Fit a log-normal shadow fading model to received power samples");
    cmd_shadow
        ->add_option("input", shadow.input,
                     "Sample file: one dBm value per line, or a measurement CSV")
        ->required();
    cmd_shadow->add_option("--bin-width-db", shadow.bin_width_db, "Histogram bin width in dB")
        ->capture_default_str();
    cmd_shadow->add_option("--report-out", shadow.report_out, "Fit report path ('-' for stdout)");
    cmd_shadow->add_option("--series-out", shadow.series_out,
                           "Histogram and model density CSV path");

    FadingArgs fading;
    auto *cmd_fading = app.add_subcommand(
        "fading", "Simulate a multipath channel or analyze an IQ capture for Rayleigh fading");
    auto *fad_input =
        cmd_fading->add_option("input", fading.input, "SDR capture (.dat, float32 I/Q pairs)");
    cmd_fading->add_option("--sample-rate-hz", fading.sample_rate_hz, "Sample rate in Hz")
        ->required();
    auto *fad_sim = cmd_fading->add_flag("--simulate", fading.simulate,
                                         "Generate the envelope instead of reading a capture");
    fad_input->excludes(fad_sim);
    cmd_fading->add_option("--paths", fading.paths, "Number of multipath components")
        ->capture_default_str();
    cmd_fading->add_option("--velocity-mps", fading.velocity_mps, "Receiver speed in m/s")
        ->capture_default_str();
    cmd_fading->add_option("--fc-hz", fading.fc_hz, "Carrier frequency in Hz")
        ->capture_default_str();
    cmd_fading->add_option("--omega", fading.omega, "Total envelope power")
        ->capture_default_str();
    cmd_fading->add_option("--max-delay-s", fading.max_delay_s, "Largest path delay in seconds")
        ->capture_default_str();
    cmd_fading->add_option("--duration-s,--duration", fading.duration_s,
                           "Simulated duration in seconds")
        ->capture_default_str();
    auto *seed_opt = cmd_fading->add_option("--seed", fading.seed, "Simulation seed");
    cmd_fading->add_option("--envelope-out", fading.envelope_out, "Envelope CSV path");
    cmd_fading->add_option("--report-out", fading.report_out, "Fit report path ('-' for stdout)");
    cmd_fading->add_option("--pdf-out", fading.pdf_out, "Density comparison CSV path");
    cmd_fading->add_option("--pdf-bin-width", fading.pdf_bin_width,
                           "Density histogram bin width (0 = automatic)");
    cmd_fading->add_flag("--detect-slots", fading.detect_slots,
                         "Estimate the burst slot duration from envelope nulls");
    cmd_fading->add_option("--slot-threshold", fading.slot_threshold,
                           "Null threshold as a fraction of the median envelope")
        ->capture_default_str();

    HeatmapArgs heat;
    auto *cmd_heat =
        app.add_subcommand("heatmap", "Convert a measurement CSV to a map layer file");
    cmd_heat->add_option("input", heat.input, "Measurement CSV (lon,lat,val header)")->required();
    cmd_heat->add_option("-o,--out", heat.out, "Output path ('-' for stdout)");
    cmd_heat->add_option("--format", heat.format, "csv or geojson")
        ->check(CLI::IsMember({"csv", "geojson"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    fading.has_seed = seed_opt->count() > 0;
    if (cmd_fading->parsed() && !fading.simulate && fading.input.empty()) {
        std::cerr << "error: fading needs either a .dat input or --simulate\n";
        return 2;
    }

    try {
        if (cmd_dist->parsed()) {
            dist.has_tower = tlat->count() > 0;
            return run_distances(dist);
        }
        if (cmd_shadow->parsed())
            return run_shadow(shadow);
        if (cmd_fading->parsed())
            return run_fading(fading);
        if (cmd_heat->parsed())
            return run_heatmap(heat);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
