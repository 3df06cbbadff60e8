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

#pragma once

#include <map>
#include <ostream>
#include <string>

#include "digitbf/runner.hpp"

namespace digitbf::emit {

// Run provenance carried into every emitted record set; enough to re-execute
// the run.  No timestamps: identical runs emit identical bytes.
struct RunMetadata {
    std::map<std::string, std::string> fields;  // e.g. source, priors, block, alpha, seed
    std::string command;                        // the full invoking command line
};

// Shortest decimal form that round-trips to the identical double.
std::string format_double(double value);

// Trajectory records.  CSV starts with "# key=value" provenance comments and
// a header row; the fixed leading columns are
//   n,log_bf_a1,log_bf_a50,log_bf_mix,log_bf_max,log_bf_threshold,log_bf_gap
// (cells empty for unconfigured priors; gap = a1 - a50 when both present).
// Priors with other labels append further log_bf_<label> columns.
void write_trajectory_csv(std::ostream& out, const runner::Trajectory& trajectory,
                          const RunMetadata& meta);
void write_trajectory_json(std::ostream& out, const runner::Trajectory& trajectory,
                           const RunMetadata& meta);

// Simulation records: one row per replication with the final log BF10 under
// each configured prior, plus a summary block (JSON) or summary comments (CSV).
void write_simulation_csv(std::ostream& out, const runner::SimulationResult& result,
                          const RunMetadata& meta);
void write_simulation_json(std::ostream& out, const runner::SimulationResult& result,
                           const RunMetadata& meta);

}  // namespace digitbf::emit
