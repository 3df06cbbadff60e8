// Copyright 2026 The digitbf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "digitbf/emit.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include <json.hpp>

#include "digitbf/version.hpp"

namespace digitbf::emit {

namespace {

using nlohmann::json;
using runner::Trajectory;
using runner::TrajectoryPoint;

// Column layout: the fixed leading set, then one column per additional
// prior label, then the partial-block flag.
struct ColumnMap {
    std::optional<std::size_t> a1;
    std::optional<std::size_t> a50;
    std::optional<std::size_t> mix;
    std::vector<std::size_t> extras;  // prior indices for appended columns
};

ColumnMap map_columns(const std::vector<runner::ConfiguredPrior>& priors) {
    ColumnMap map;
    for (std::size_t i = 0; i < priors.size(); ++i) {
        const std::string& label = priors[i].label;
        if (label == "a1" && !map.a1)
            map.a1 = i;
        else if (label == "a50" && !map.a50)
            map.a50 = i;
        else if (label.rfind("mix", 0) == 0 && !map.mix)
            map.mix = i;
        else
            map.extras.push_back(i);
    }
    return map;
}

std::string csv_cell(double value) {
    return std::isnan(value) ? std::string() : format_double(value);
}

json json_cell(double value) {
    if (std::isnan(value)) return nullptr;
    return value;
}

double point_gap(const TrajectoryPoint& point, const ColumnMap& map) {
    if (map.a1 && map.a50) return point.log_bf[*map.a1] - point.log_bf[*map.a50];
    return std::numeric_limits<double>::quiet_NaN();
}

void write_meta_comments(std::ostream& out, const RunMetadata& meta) {
    out << "# digitbf " << kVersion << "\n";
    if (!meta.command.empty()) out << "# command=" << meta.command << "\n";
    for (const auto& [key, value] : meta.fields) out << "# " << key << "=" << value << "\n";
}

json meta_json(const RunMetadata& meta) {
    json m;
    m["tool"] = "digitbf";
    m["version"] = kVersion;
    m["command"] = meta.command;
    for (const auto& [key, value] : meta.fields) m[key] = value;
    return m;
}

json point_json(const TrajectoryPoint& point, const Trajectory& trajectory,
                const ColumnMap& map) {
    json row;
    row["n"] = point.n;
    row["log_bf_a1"] = map.a1 ? json_cell(point.log_bf[*map.a1]) : json(nullptr);
    row["log_bf_a50"] = map.a50 ? json_cell(point.log_bf[*map.a50]) : json(nullptr);
    row["log_bf_mix"] = map.mix ? json_cell(point.log_bf[*map.mix]) : json(nullptr);
    row["log_bf_max"] = json_cell(point.log_bf_max);
    row["log_bf_threshold"] = json_cell(point.log_bf_threshold);
    row["log_bf_gap"] = json_cell(point_gap(point, map));
    for (std::size_t extra : map.extras)
        row["log_bf_" + trajectory.config.priors[extra].label] = json_cell(point.log_bf[extra]);
    row["partial"] = point.partial_block;
    return row;
}

}  // namespace

std::string format_double(double value) {
    char buffer[40];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    (void)ec;
    return std::string(buffer, end);
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory,
                          const RunMetadata& meta) {
    const ColumnMap map = map_columns(trajectory.config.priors);
    write_meta_comments(out, meta);

    out << "n,log_bf_a1,log_bf_a50,log_bf_mix,log_bf_max,log_bf_threshold,log_bf_gap";
    for (std::size_t extra : map.extras)
        out << ",log_bf_" << trajectory.config.priors[extra].label;
    out << ",partial\n";

    for (const auto& point : trajectory.points) {
        out << point.n;
        out << ',' << (map.a1 ? csv_cell(point.log_bf[*map.a1]) : std::string());
        out << ',' << (map.a50 ? csv_cell(point.log_bf[*map.a50]) : std::string());
        out << ',' << (map.mix ? csv_cell(point.log_bf[*map.mix]) : std::string());
        out << ',' << csv_cell(point.log_bf_max);
        out << ',' << csv_cell(point.log_bf_threshold);
        out << ',' << csv_cell(point_gap(point, map));
        for (std::size_t extra : map.extras) out << ',' << csv_cell(point.log_bf[extra]);
        out << ',' << (point.partial_block ? 1 : 0) << "\n";
    }
}

void write_trajectory_json(std::ostream& out, const Trajectory& trajectory,
                           const RunMetadata& meta) {
    const ColumnMap map = map_columns(trajectory.config.priors);
    json doc;
    doc["meta"] = meta_json(meta);
    json points = json::array();
    for (const auto& point : trajectory.points)
        points.push_back(point_json(point, trajectory, map));
    doc["points"] = std::move(points);
    out << doc.dump(2) << "\n";
}

void write_simulation_csv(std::ostream& out, const runner::SimulationResult& result,
                          const RunMetadata& meta) {
    write_meta_comments(out, meta);
    out << "rep";
    for (const auto& prior : result.config.priors) out << ",log_bf10_" << prior.label;
    out << "\n";
    for (std::size_t rep = 0; rep < result.final_log_bf10.size(); ++rep) {
        out << rep;
        for (double v : result.final_log_bf10[rep]) out << ',' << format_double(v);
        out << "\n";
    }
    for (const auto& s : result.summaries) {
        out << "# summary " << s.prior_label << " mean_log_bf10=" << format_double(s.mean_log_bf10)
            << " log_mean_bf10=" << format_double(s.log_mean_bf10)
            << " min=" << format_double(s.min_log_bf10) << " q05=" << format_double(s.q05_log_bf10)
            << " median=" << format_double(s.median_log_bf10)
            << " q95=" << format_double(s.q95_log_bf10) << " max=" << format_double(s.max_log_bf10)
            << "\n";
    }
}

void write_simulation_json(std::ostream& out, const runner::SimulationResult& result,
                           const RunMetadata& meta) {
    json doc;
    doc["meta"] = meta_json(meta);

    json reps = json::array();
    for (std::size_t rep = 0; rep < result.final_log_bf10.size(); ++rep) {
        json row;
        row["rep"] = rep;
        for (std::size_t p = 0; p < result.config.priors.size(); ++p)
            row["log_bf10_" + result.config.priors[p].label] = result.final_log_bf10[rep][p];
        reps.push_back(std::move(row));
    }
    doc["replications"] = std::move(reps);

    json summaries = json::array();
    for (const auto& s : result.summaries) {
        json row;
        row["prior"] = s.prior_label;
        row["mean_log_bf10"] = s.mean_log_bf10;
        row["log_mean_bf10"] = s.log_mean_bf10;
        row["min_log_bf10"] = s.min_log_bf10;
        row["q05_log_bf10"] = s.q05_log_bf10;
        row["median_log_bf10"] = s.median_log_bf10;
        row["q95_log_bf10"] = s.q95_log_bf10;
        row["max_log_bf10"] = s.max_log_bf10;
        summaries.push_back(std::move(row));
    }
    doc["summaries"] = std::move(summaries);

    if (!result.sampled_trajectories.empty()) {
        json sampled = json::array();
        for (const auto& trajectory : result.sampled_trajectories) {
            const ColumnMap map = map_columns(trajectory.config.priors);
            json points = json::array();
            for (const auto& point : trajectory.points)
                points.push_back(point_json(point, trajectory, map));
            sampled.push_back(std::move(points));
        }
        doc["sampled_trajectories"] = std::move(sampled);
    }

    out << doc.dump(2) << "\n";
}

}  // namespace digitbf::emit
