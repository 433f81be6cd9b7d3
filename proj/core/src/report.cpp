#include "distbench/report.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "distbench/error.hpp"

namespace distbench {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

template <typename T>
T parse_field(std::string_view field, std::size_t line_no) {
    T value{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw Error(Errc::InvalidArgument, fmt::format("records line {}: bad number '{}'", line_no, field));
    }
    return value;
}

std::string level_label(double level) { return fmt::format("{:g}", level); }

}  // namespace

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records) {
    out << kRecordsHeader << '\n';
    for (const auto& r : records) {
        if (r.dataset.find_first_of(",\"\r\n") != std::string::npos) {
            throw Error(Errc::InvalidArgument, "dataset name cannot be written as a CSV field: " + r.dataset);
        }
        if (r.scores) {
            fmt::print(out, "{},{},{},{},{},{},{}\n", r.dataset, r.metric, r.noise_level, r.repetition,
                       r.scores->accuracy, r.scores->precision, r.scores->recall);
        } else {
            fmt::print(out, "{},{},{},{},{},{},{}\n", r.dataset, r.metric, r.noise_level, r.repetition, kSkipped,
                       kSkipped, kSkipped);
        }
    }
}

std::vector<RunRecord> read_records_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || std::string_view(line).substr(0, kRecordsHeader.size()) != kRecordsHeader) {
        throw Error(Errc::InvalidArgument, "records file lacks the expected header");
    }
    std::vector<RunRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const auto f = split_fields(line);
        if (f.size() != 7) {
            throw Error(Errc::InvalidArgument, fmt::format("records line {}: {} fields, expected 7", line_no, f.size()));
        }
        RunRecord r{std::string(f[0]), std::string(f[1]), parse_field<double>(f[2], line_no),
                    parse_field<std::size_t>(f[3], line_no), std::nullopt};
        if (f[4] != kSkipped) {
            r.scores = ScoreTriple{parse_field<double>(f[4], line_no), parse_field<double>(f[5], line_no),
                                   parse_field<double>(f[6], line_no)};
        }
        records.push_back(std::move(r));
    }
    return records;
}

void save_records(const std::filesystem::path& path, const std::vector<RunRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(Errc::Io, "cannot write " + path.string());
    }
    write_records_csv(out, records);
    if (!out.flush()) {
        throw Error(Errc::Io, "failed writing " + path.string());
    }
}

std::vector<RunRecord> load_records(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::Io, "cannot open " + path.string());
    }
    return read_records_csv(in);
}

void write_summary_markdown(std::ostream& out, const std::vector<MetricSummary>& summary) {
    out << "| Rank | Metric | Accuracy | Precision | Recall | Datasets |\n";
    out << "|---:|---|---:|---:|---:|---:|\n";
    for (std::size_t i = 0; i < summary.size(); ++i) {
        const auto& s = summary[i];
        fmt::print(out, "| {} | {} | {:.4f} | {:.4f} | {:.4f} | {} |\n", i + 1, s.metric, s.mean.accuracy,
                   s.mean.precision, s.mean.recall, s.datasets);
    }
}

void write_rank_markdown(std::ostream& out, const std::vector<RankTable>& tables) {
    out << "| Position |";
    std::size_t rows = 0;
    for (const auto& t : tables) {
        fmt::print(out, " {} |", level_label(t.level));
        rows = std::max(rows, t.entries.size());
    }
    out << "\n|---:|";
    for (std::size_t i = 0; i < tables.size(); ++i) {
        out << "---|";
    }
    out << '\n';
    for (std::size_t row = 0; row < rows; ++row) {
        fmt::print(out, "| {} |", row + 1);
        for (const auto& t : tables) {
            if (row < t.entries.size()) {
                const auto& e = t.entries[row];
                fmt::print(out, " {} ({}, {:.4f}) |", e.metric, e.rank, e.mean);
            } else {
                out << " |";
            }
        }
        out << '\n';
    }
}

void write_level_stats_csv(std::ostream& out, const std::vector<LevelStat>& stats) {
    out << "metric,noise_level,accuracy_mean,accuracy_std,precision_mean,precision_std,recall_mean,recall_std\n";
    for (const auto& s : stats) {
        fmt::print(out, "{},{},{},{},{},{},{},{}\n", s.metric, s.level, s.mean.accuracy, s.stddev.accuracy,
                   s.mean.precision, s.stddev.precision, s.mean.recall, s.stddev.recall);
    }
}

void write_comparison_markdown(std::ostream& out, std::string_view reference, const std::vector<Comparison>& rows) {
    const auto cell = [](double p) { return fmt::format("{:.4f}{}", p, p < kSignificance ? " *" : ""); };
    fmt::print(out, "| {} vs | Accuracy | Precision | Recall | Datasets |\n", reference);
    out << "|---|---:|---:|---:|---:|\n";
    for (const auto& r : rows) {
        fmt::print(out, "| {} | {} | {} | {} | {} |\n", r.metric, cell(r.p_value.accuracy), cell(r.p_value.precision),
                   cell(r.p_value.recall), r.datasets);
    }
    fmt::print(out, "\n`*` marks p < {}.\n", kSignificance);
}

void write_markdown_report(std::ostream& out, const std::vector<RunRecord>& records) {
    const auto levels = levels_of(records);
    if (levels.empty()) {
        out << "No records.\n";
        return;
    }
    fmt::print(out, "## Mean scores at noise level {}\n\n", level_label(levels.front()));
    write_summary_markdown(out, summarize(records, levels.front()));
    for (const auto kind : {ScoreKind::Accuracy, ScoreKind::Recall, ScoreKind::Precision}) {
        fmt::print(out, "\n## Rank by mean {} (descending)\n\n", to_string(kind));
        write_rank_markdown(out, rank_tables(records, kind));
    }
}

}  // namespace distbench
