#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "distbench/config.hpp"
#include "distbench/error.hpp"
#include "distbench/experiment.hpp"
#include "distbench/metrics.hpp"
#include "distbench/report.hpp"

namespace fs = std::filesystem;
using namespace distbench;

namespace {

constexpr const char* kCleanRecords = "clean_records.csv";
constexpr const char* kCleanSummary = "clean_summary.md";
constexpr const char* kNoiseRecords = "noise_records.csv";
constexpr const char* kNoiseLevels = "noise_levels.csv";
constexpr const char* kNoiseRanks = "noise_ranks.md";

ExperimentConfig read_config(const fs::path& path) {
    auto cfg = load_config(path);
    apply_environment(cfg);
    return cfg;
}

RunOptions run_options(const ExperimentConfig& cfg) {
    return {cfg.workers, [](std::string_view line) { fmt::print(stderr, "{}\n", line); }};
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(Errc::Io, "cannot write " + path.string());
    }
    return out;
}

// Writes through `body` to `path`, or to stdout when `path` is empty.
template <typename Body>
void emit(const fs::path& path, Body body) {
    if (path.empty()) {
        body(std::cout);
        std::cout.flush();
        return;
    }
    auto out = open_output(path);
    body(out);
    if (!out.flush()) {
        throw Error(Errc::Io, "failed writing " + path.string());
    }
}

std::vector<RunRecord> clean_phase(const ExperimentConfig& cfg, const std::vector<Dataset>& datasets) {
    const auto records = run_clean_phase(datasets, cfg, run_options(cfg));
    fs::create_directories(cfg.output_dir);
    save_records(cfg.output_dir / kCleanRecords, records);
    emit(cfg.output_dir / kCleanSummary,
         [&](std::ostream& out) { write_summary_markdown(out, summarize(records)); });
    return records;
}

int cmd_clean(const fs::path& config_path) {
    const auto cfg = read_config(config_path);
    const auto records = clean_phase(cfg, load_datasets(cfg));
    write_summary_markdown(std::cout, summarize(records));
    fmt::print(stderr, "wrote {}\n", (cfg.output_dir / kCleanRecords).string());
    return 0;
}

int cmd_noise(const fs::path& config_path, std::optional<std::size_t> top, const std::vector<std::string>& metrics) {
    const auto cfg = read_config(config_path);
    const auto datasets = load_datasets(cfg);

    std::vector<std::string> selected = metrics;
    if (selected.empty() && !top && !cfg.top_metrics.empty()) {
        selected = cfg.top_metrics;
    }
    if (selected.empty()) {
        const auto clean_path = cfg.output_dir / kCleanRecords;
        const auto clean = fs::exists(clean_path) ? load_records(clean_path) : clean_phase(cfg, datasets);
        selected = top_metrics(clean, top.value_or(cfg.top_n));
    }
    for (const auto& m : selected) {
        describe(m);
    }
    fmt::print(stderr, "noise phase metrics: {}\n", fmt::join(selected, ","));

    const auto records = run_noise_phase(datasets, cfg, selected, run_options(cfg));
    fs::create_directories(cfg.output_dir);
    save_records(cfg.output_dir / kNoiseRecords, records);
    emit(cfg.output_dir / kNoiseLevels, [&](std::ostream& out) { write_level_stats_csv(out, level_stats(records)); });
    emit(cfg.output_dir / kNoiseRanks, [&](std::ostream& out) {
        for (const auto kind : {ScoreKind::Accuracy, ScoreKind::Recall, ScoreKind::Precision}) {
            fmt::print(out, "## Rank by mean {} (descending)\n\n", to_string(kind));
            write_rank_markdown(out, rank_tables(records, kind));
            out << '\n';
        }
    });
    write_rank_markdown(std::cout, rank_tables(records, ScoreKind::Accuracy));
    fmt::print(stderr, "wrote {}\n", (cfg.output_dir / kNoiseRecords).string());
    return 0;
}

int cmd_compare(const std::string& reference, const fs::path& records_path, std::vector<std::string> others,
                std::size_t top, TestKind test, PValueMethod method, double level, const fs::path& output) {
    const auto records = load_records(records_path);
    describe(reference);
    if (others.empty()) {
        for (const auto& s : summarize(records, level)) {
            if (others.size() == top) {
                break;
            }
            if (s.metric != reference) {
                others.push_back(s.metric);
            }
        }
    }
    const auto rows = compare_to_reference(records, reference, others, test, level, method);
    emit(output, [&](std::ostream& out) { write_comparison_markdown(out, reference, rows); });
    return 0;
}

int cmd_report(const std::string& format, const fs::path& records_path, const fs::path& output) {
    const auto records = load_records(records_path);
    emit(output, [&](std::ostream& out) {
        if (format == "csv") {
            write_records_csv(out, records);
        } else {
            write_markdown_report(out, records);
        }
    });
    return 0;
}

int cmd_metrics() {
    fmt::print("abbrev,name,family,symmetric,zero_self,nonneg_output,full_metric,requires_nonneg_inputs\n");
    for (const auto& m : registry()) {
        fmt::print("{},\"{}\",{},{:d},{:d},{:d},{:d},{:d}\n", m.abbrev, m.name, to_string(m.family), m.flags.symmetric,
                   m.flags.zero_self, m.flags.nonneg_output, m.flags.full_metric, m.flags.requires_nonneg_inputs);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-NN distance benchmark harness"};
    app.require_subcommand(1);

    fs::path config_path;

    auto* clean = app.add_subcommand("clean", "Run every configured metric on the clean datasets");
    clean->add_option("--config", config_path, "Experiment config file")->required()->check(CLI::ExistingFile);

    std::optional<std::size_t> top;
    std::vector<std::string> noise_metrics;
    auto* noise = app.add_subcommand("noise", "Run the noise sweep over the top metrics");
    noise->add_option("--config", config_path, "Experiment config file")->required()->check(CLI::ExistingFile);
    auto* top_opt = noise->add_option("--top", top, "Take the N best metrics of the clean phase")
                        ->check(CLI::PositiveNumber);
    noise->add_option("--metrics", noise_metrics, "Explicit metric list")->delimiter(',')->excludes(top_opt);

    std::string reference;
    fs::path records_path = kCleanRecords;
    std::vector<std::string> others;
    std::size_t compare_top = 10;
    std::string test_name = "rank-sum";
    std::string method_name = "auto";
    double level = 0.0;
    fs::path output;
    auto* compare = app.add_subcommand("compare", "Wilcoxon p-values of a reference metric against others");
    compare->add_option("--reference", reference, "Reference metric abbreviation")->required();
    compare->add_option("--records", records_path, "Records CSV")->capture_default_str();
    compare->add_option("--others", others, "Metrics to compare against (default: the best --top)")->delimiter(',');
    compare->add_option("--top", compare_top, "Number of best metrics compared by default")->capture_default_str();
    compare->add_option("--test", test_name, "Test variant")
        ->check(CLI::IsMember({"rank-sum", "signed-rank"}))
        ->capture_default_str();
    compare->add_option("--method", method_name, "p-value computation")
        ->check(CLI::IsMember({"auto", "exact", "normal"}))
        ->capture_default_str();
    compare->add_option("--level", level, "Noise level of the compared records")->capture_default_str();
    compare->add_option("--output", output, "Write here instead of stdout");

    std::string format;
    auto* report = app.add_subcommand("report", "Render records as CSV or markdown tables");
    report->add_option("--format", format, "Output format")->required()->check(CLI::IsMember({"csv", "markdown"}));
    report->add_option("--records", records_path, "Records CSV")->capture_default_str();
    report->add_option("--output", output, "Write here instead of stdout");

    auto* metrics = app.add_subcommand("metrics", "List the registered distance measures");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*clean) {
            return cmd_clean(config_path);
        }
        if (*noise) {
            return cmd_noise(config_path, top, noise_metrics);
        }
        if (*compare) {
            const auto test = test_name == "signed-rank" ? TestKind::SignedRank : TestKind::RankSum;
            const std::map<std::string, PValueMethod> methods{
                {"auto", PValueMethod::Auto}, {"exact", PValueMethod::Exact}, {"normal", PValueMethod::Normal}};
            return cmd_compare(reference, records_path, others, compare_top, test, methods.at(method_name), level,
                               output);
        }
        if (*report) {
            return cmd_report(format, records_path, output);
        }
        if (*metrics) {
            return cmd_metrics();
        }
    } catch (const std::exception& e) {
        fmt::print(stderr, "bench: {}\n", e.what());
        return 1;
    }
    return 1;
}
