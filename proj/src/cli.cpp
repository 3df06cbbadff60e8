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

#include "digitbf/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "digitbf/bayes.hpp"
#include "digitbf/constants.hpp"
#include "digitbf/emit.hpp"
#include "digitbf/freq.hpp"
#include "digitbf/version.hpp"

namespace digitbf::cli {

namespace {

std::vector<std::string> split(const std::string& text, char delimiter) {
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, delimiter)) parts.push_back(item);
    return parts;
}

double parse_number(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double value = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(what);
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed " + what + ": '" + text + "'");
    }
}

std::string join_command(int argc, const char* const* argv) {
    std::string command;
    for (int i = 0; i < argc; ++i) {
        if (i > 0) command += ' ';
        command += argv[i];
    }
    return command;
}

}  // namespace

std::vector<runner::ConfiguredPrior> parse_priors(const std::string& spec) {
    std::vector<runner::ConfiguredPrior> priors;
    for (const std::string& token : split(spec, ',')) {
        if (token.empty()) throw std::invalid_argument("empty prior token in '" + spec + "'");
        if (token.rfind("mix:", 0) == 0) {
            const auto parts = split(token, ':');
            if (parts.size() != 4)
                throw std::invalid_argument("mixture prior needs mix:<a1>:<a2>:<w>, got '" +
                                            token + "'");
            const double a1 = parse_number(parts[1], "mixture concentration");
            const double a2 = parse_number(parts[2], "mixture concentration");
            const double w = parse_number(parts[3], "mixture weight");
            if (!(a1 > 0.0 && a2 > 0.0))
                throw std::invalid_argument("mixture concentrations must be > 0");
            if (!(w >= 0.0 && w <= 1.0))
                throw std::invalid_argument("mixture weight must be in [0, 1]");
            priors.push_back({token, MixturePrior::make(DirichletPrior::symmetric(a1),
                                                        DirichletPrior::symmetric(a2), w)});
        } else if (token[0] == 'a') {
            const double value = parse_number(token.substr(1), "prior concentration");
            if (!(value > 0.0)) throw std::invalid_argument("prior concentration must be > 0");
            priors.push_back({token, DirichletPrior::symmetric(value)});
        } else {
            throw std::invalid_argument("unknown prior token '" + token + "'");
        }
    }
    if (priors.empty()) throw std::invalid_argument("no priors configured");
    return priors;
}

std::array<double, 10> parse_bias(const std::string& spec) {
    std::array<double, 10> probabilities{};
    std::array<bool, 10> fixed{};
    double fixed_sum = 0.0;
    int n_fixed = 0;

    if (!spec.empty()) {
        for (const std::string& token : split(spec, ',')) {
            const auto parts = split(token, ':');
            if (parts.size() != 2 || parts[0].size() != 1 || parts[0][0] < '0' ||
                parts[0][0] > '9')
                throw std::invalid_argument("bias entries look like <digit>:<probability>, got '" +
                                            token + "'");
            const int digit = parts[0][0] - '0';
            if (fixed[digit]) throw std::invalid_argument("duplicate bias digit in '" + spec + "'");
            const double p = parse_number(parts[1], "bias probability");
            if (!(p >= 0.0 && p <= 1.0))
                throw std::invalid_argument("bias probability must be in [0, 1]");
            probabilities[digit] = p;
            fixed[digit] = true;
            fixed_sum += p;
            ++n_fixed;
        }
    }
    if (fixed_sum > 1.0 + 1e-12)
        throw std::invalid_argument("bias probabilities exceed 1");
    if (n_fixed == 10 && std::fabs(fixed_sum - 1.0) > 1e-12)
        throw std::invalid_argument("bias probabilities must sum to 1");
    if (n_fixed < 10) {
        const double rest = (1.0 - fixed_sum) / static_cast<double>(10 - n_fixed);
        for (int d = 0; d < 10; ++d)
            if (!fixed[d]) probabilities[d] = rest;
    }
    return probabilities;
}

namespace {

struct AnalyzeOptions {
    std::string constant;
    std::string digits_file;
    std::string counts_csv;
    std::uint64_t max_digits = 0;
    bool max_digits_given = false;
    std::uint32_t block = 1000;
    std::string priors = "a1,a50";
    double alpha = 0.05;
    std::string format = "csv";
    std::string out;
    std::uint64_t ceiling = constants::kDefaultGenerationCeiling;
};

struct SimulateOptions {
    std::uint32_t reps = 1000;
    std::uint64_t digits_per_rep = 1'000'000;
    std::string bias;
    std::uint64_t seed = 0;
    std::string priors = "a1,a50";
    std::uint32_t block = 1000;
    std::uint32_t jobs = 0;
    std::uint32_t trajectories = 0;
    std::string format = "csv";
    std::string out;
};

struct GenerateOptions {
    std::string constant;
    std::uint64_t length = 0;
    std::string out;
    std::uint64_t ceiling = constants::kDefaultGenerationCeiling;
};

struct ThresholdOptions {
    std::uint64_t n = 0;
    double alpha = 0.05;
    unsigned df = 9;
    std::string prior = "a1";
};

void emit_to(const std::string& out_path, const std::function<void(std::ostream&)>& writer) {
    if (out_path.empty() || out_path == "-") {
        writer(std::cout);
        return;
    }
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    writer(file);
}

void print_finals(const runner::Trajectory& trajectory) {
    const auto& point = trajectory.points.back();
    for (std::size_t p = 0; p < trajectory.config.priors.size(); ++p) {
        std::printf("final log BF01 (%s) = %.2f  [N = %llu]\n",
                    trajectory.config.priors[p].label.c_str(), point.log_bf[p],
                    static_cast<unsigned long long>(point.n));
    }
}

int cmd_analyze(const AnalyzeOptions& opt, const std::string& command) {
    const int sources = (opt.constant.empty() ? 0 : 1) + (opt.digits_file.empty() ? 0 : 1) +
                        (opt.counts_csv.empty() ? 0 : 1);
    if (sources != 1)
        throw std::invalid_argument("need exactly one of --constant, --digits, --counts");
    if (opt.max_digits_given && opt.max_digits == 0)
        throw std::invalid_argument("--max-digits 0 asks for an empty analysis");
    if (opt.format != "csv" && opt.format != "json")
        throw std::invalid_argument("--format must be csv or json");

    runner::AnalysisConfig config;
    config.priors = parse_priors(opt.priors);
    config.block_size = opt.block;
    config.alpha = opt.alpha;

    emit::RunMetadata meta;
    meta.command = command;
    meta.fields["priors"] = opt.priors;
    meta.fields["block"] = std::to_string(opt.block);
    meta.fields["alpha"] = emit::format_double(opt.alpha);

    runner::Trajectory trajectory;
    if (!opt.counts_csv.empty()) {
        const auto parts = split(opt.counts_csv, ',');
        if (parts.size() != 10)
            throw std::invalid_argument("--counts needs ten comma-separated tallies");
        DigitCounts counts;
        for (int j = 0; j < 10; ++j) {
            std::uint64_t value = 0;
            const auto& text = parts[j];
            const auto [ptr, ec] =
                std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc() || ptr != text.data() + text.size())
                throw std::invalid_argument("malformed count '" + text + "'");
            counts.counts[j] = value;
            counts.total += value;
        }
        trajectory.config = config;
        trajectory.final_counts = counts;
        trajectory.points.push_back(runner::evaluate_counts(counts, config));
        meta.fields["source"] = "counts:" + opt.counts_csv;
    } else if (!opt.constant.empty()) {
        const auto constant = constants::constant_from_name(opt.constant);
        if (!constant) throw std::invalid_argument("unknown constant '" + opt.constant + "'");
        const std::uint64_t length = opt.max_digits_given ? opt.max_digits : 1'000'000;
        config.max_digits = length;
        auto stream = constants::generate_digits(*constant, length, opt.ceiling);
        trajectory = runner::run_trajectory(*stream, config);
        meta.fields["source"] = "constant:" + opt.constant;
        meta.fields["max_digits"] = std::to_string(length);
    } else {
        config.max_digits = opt.max_digits_given ? opt.max_digits : 0;
        auto stream = constants::ingest_digit_file(opt.digits_file);
        trajectory = runner::run_trajectory(*stream, config);
        meta.fields["source"] = "file:" + opt.digits_file;
        if (opt.max_digits_given) meta.fields["max_digits"] = std::to_string(opt.max_digits);
    }

    emit_to(opt.out, [&](std::ostream& out) {
        if (opt.format == "csv")
            emit::write_trajectory_csv(out, trajectory, meta);
        else
            emit::write_trajectory_json(out, trajectory, meta);
    });
    print_finals(trajectory);
    return kExitOk;
}

int cmd_simulate(const SimulateOptions& opt, const std::string& command) {
    if (opt.format != "csv" && opt.format != "json")
        throw std::invalid_argument("--format must be csv or json");

    runner::SimulationConfig config;
    config.replications = opt.reps;
    config.digits_per_replication = opt.digits_per_rep;
    config.bias = parse_bias(opt.bias);
    config.seed = opt.seed;
    config.priors = parse_priors(opt.priors);
    config.block_size = opt.block;
    config.jobs = opt.jobs;
    config.trajectory_samples = opt.trajectories;

    const runner::SimulationResult result = runner::run_simulation(config);

    emit::RunMetadata meta;
    meta.command = command;
    meta.fields["reps"] = std::to_string(opt.reps);
    meta.fields["digits_per_rep"] = std::to_string(opt.digits_per_rep);
    meta.fields["bias"] = opt.bias.empty() ? "uniform" : opt.bias;
    meta.fields["seed"] = std::to_string(opt.seed);
    meta.fields["priors"] = opt.priors;
    meta.fields["block"] = std::to_string(opt.block);

    emit_to(opt.out, [&](std::ostream& out) {
        if (opt.format == "csv")
            emit::write_simulation_csv(out, result, meta);
        else
            emit::write_simulation_json(out, result, meta);
    });

    for (const auto& s : result.summaries) {
        std::printf(
            "summary (%s): mean log BF10 = %.2f  [min %.2f, q05 %.2f, median %.2f, q95 %.2f, "
            "max %.2f; log mean BF10 = %.2f]\n",
            s.prior_label.c_str(), s.mean_log_bf10, s.min_log_bf10, s.q05_log_bf10,
            s.median_log_bf10, s.q95_log_bf10, s.max_log_bf10, s.log_mean_bf10);
    }
    return kExitOk;
}

int cmd_generate(const GenerateOptions& opt) {
    const auto constant = constants::constant_from_name(opt.constant);
    if (!constant) throw std::invalid_argument("unknown constant '" + opt.constant + "'");
    if (opt.length < 1) throw std::invalid_argument("--length must be >= 1");

    const std::string digits = constants::generate_digit_string(*constant, opt.length, opt.ceiling);
    if (opt.out.empty() || opt.out == "-") {
        for (std::size_t i = 0; i < digits.size(); i += 100) {
            std::fwrite(digits.data() + i, 1, std::min<std::size_t>(100, digits.size() - i),
                        stdout);
            std::fputc('\n', stdout);
        }
    } else {
        constants::write_digit_file(opt.out, digits);
    }
    return kExitOk;
}

int cmd_threshold(const ThresholdOptions& opt) {
    const auto priors = parse_priors(opt.prior);
    if (priors.size() != 1) throw std::invalid_argument("--prior takes a single prior token");

    const freq::ThresholdCounts threshold = freq::threshold_counts(opt.n, opt.alpha, opt.df);

    std::printf("threshold counts (n=%llu, alpha=%s, df=%u):",
                static_cast<unsigned long long>(opt.n), emit::format_double(opt.alpha).c_str(),
                opt.df);
    for (int j = 0; j < kNumDigits; ++j)
        std::printf(" %llu", static_cast<unsigned long long>(threshold.counts.counts[j]));
    std::printf("\n");
    std::printf("chi-squared statistic = %s (target %s)\n",
                emit::format_double(freq::chisq_stat(threshold.counts)).c_str(),
                emit::format_double(threshold.target_stat).c_str());

    double log_bf = 0.0;
    if (const auto* d = std::get_if<DirichletPrior>(&priors[0].prior))
        log_bf = bayes::log_bf01_dirichlet(threshold.counts, *d).log_bf01;
    else
        log_bf =
            bayes::log_bf01_mixture(threshold.counts, std::get<MixturePrior>(priors[0].prior))
                .log_bf01;
    std::printf("log BF01 (%s) = %s\n", priors[0].label.c_str(),
                emit::format_double(log_bf).c_str());
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"digitbf: Bayes-factor tests of equal digit occurrence in fundamental constants"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    AnalyzeOptions analyze_opt;
    auto* analyze = app.add_subcommand(
        "analyze", "Sequential Bayes-factor trajectory over a digit stream");
    analyze->add_option("--constant", analyze_opt.constant,
                        "Self-generated constant: pi, e, sqrt2, or ln2");
    analyze->add_option("--digits", analyze_opt.digits_file, "Digit file to ingest");
    analyze->add_option("--counts", analyze_opt.counts_csv,
                        "Ten comma-separated digit tallies (single evaluation)");
    auto* max_digits_opt =
        analyze->add_option("--max-digits", analyze_opt.max_digits, "Digits to analyze");
    analyze->add_option("--block", analyze_opt.block, "Block size in digits")
        ->default_val(1000u)
        ->check(CLI::PositiveNumber);
    analyze->add_option("--priors", analyze_opt.priors, "Prior spec, e.g. a1,a50,mix:5:0.2:0.5")
        ->default_val("a1,a50");
    analyze->add_option("--alpha", analyze_opt.alpha, "Level of the frequentist band")
        ->default_val(0.05)
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));
    analyze->add_option("--format", analyze_opt.format, "csv or json")->default_val("csv");
    analyze->add_option("--out", analyze_opt.out, "Output file (default: stdout)");
    analyze->add_option("--generation-ceiling", analyze_opt.ceiling,
                        "Self-generation cap in digits");

    SimulateOptions simulate_opt;
    auto* simulate =
        app.add_subcommand("simulate", "Replicated analyses of biased synthetic digit streams");
    simulate->add_option("--reps", simulate_opt.reps, "Number of replications")
        ->default_val(1000u)
        ->check(CLI::PositiveNumber);
    simulate->add_option("--digits-per-rep", simulate_opt.digits_per_rep,
                         "Digits per replication")
        ->default_val(1'000'000ull)
        ->check(CLI::PositiveNumber);
    simulate->add_option("--bias", simulate_opt.bias,
                         "digit:probability pairs, remainder spread evenly (default uniform)");
    simulate->add_option("--seed", simulate_opt.seed, "Master seed")->default_val(0ull);
    simulate->add_option("--priors", simulate_opt.priors, "Prior spec")->default_val("a1,a50");
    simulate->add_option("--block", simulate_opt.block, "Block size in digits")
        ->default_val(1000u)
        ->check(CLI::PositiveNumber);
    simulate->add_option("--jobs", simulate_opt.jobs, "Worker threads (0 = hardware)")
        ->default_val(0u);
    simulate->add_option("--trajectories", simulate_opt.trajectories,
                         "Record full trajectories for the first n replications (json)")
        ->default_val(0u);
    simulate->add_option("--format", simulate_opt.format, "csv or json")->default_val("csv");
    simulate->add_option("--out", simulate_opt.out, "Output file (default: stdout)");

    GenerateOptions generate_opt;
    auto* generate = app.add_subcommand("generate", "Write a digit cache file for a constant");
    generate->add_option("--constant", generate_opt.constant, "pi, e, sqrt2, or ln2")->required();
    generate->add_option("--length", generate_opt.length, "Digits to generate")->required();
    generate->add_option("--out", generate_opt.out, "Output file (default: stdout)");
    generate->add_option("--generation-ceiling", generate_opt.ceiling,
                         "Self-generation cap in digits");

    ThresholdOptions threshold_opt;
    auto* threshold = app.add_subcommand(
        "threshold", "Rejection-boundary count vector, its statistic, and its evidence");
    threshold->add_option("--n", threshold_opt.n, "Total digit count")->required();
    threshold->add_option("--alpha", threshold_opt.alpha, "Test level")->default_val(0.05);
    threshold->add_option("--df", threshold_opt.df, "Degrees of freedom")->default_val(9u);
    threshold->add_option("--prior", threshold_opt.prior, "Prior token")->default_val("a1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    analyze_opt.max_digits_given = max_digits_opt->count() > 0;

    const std::string command = join_command(argc, argv);
    try {
        if (analyze->parsed()) return cmd_analyze(analyze_opt, command);
        if (simulate->parsed()) return cmd_simulate(simulate_opt, command);
        if (generate->parsed()) return cmd_generate(generate_opt);
        if (threshold->parsed()) return cmd_threshold(threshold_opt);
    } catch (const parse_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitParse;
    } catch (const generation_limit_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitGeneration;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace digitbf::cli
