#ifndef DISTBENCH_REPORT_HPP
#define DISTBENCH_REPORT_HPP

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "distbench/experiment.hpp"

namespace distbench {

/// Header of the records CSV.
inline constexpr std::string_view kRecordsHeader = "dataset,metric,noise_level,repetition,accuracy,precision,recall";

/// Marker written in the three score columns of a skipped cell.
inline constexpr std::string_view kSkipped = "skipped";

/// One row per record, numbers in shortest round-trip form. Throws
/// Error(InvalidArgument) for a dataset name containing a comma, quote or
/// line break.
void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records);

/// Inverse of write_records_csv. Throws Error(InvalidArgument) for a
/// malformed header or row.
std::vector<RunRecord> read_records_csv(std::istream& in);

/// File wrappers; throw Error(Io) when the file cannot be opened or written.
void save_records(const std::filesystem::path& path, const std::vector<RunRecord>& records);
std::vector<RunRecord> load_records(const std::filesystem::path& path);

/// Mean accuracy, precision and recall per metric, best first.
void write_summary_markdown(std::ostream& out, const std::vector<MetricSummary>& summary);

/// One column per level, one row per rank position.
void write_rank_markdown(std::ostream& out, const std::vector<RankTable>& tables);

/// Mean and standard deviation per metric and level.
void write_level_stats_csv(std::ostream& out, const std::vector<LevelStat>& stats);

/// p-values of a reference metric against others; values below kSignificance
/// are marked with '*'.
void write_comparison_markdown(std::ostream& out, std::string_view reference, const std::vector<Comparison>& rows);

/// Summary of level 0 followed by the rank tables of every score kind.
void write_markdown_report(std::ostream& out, const std::vector<RunRecord>& records);

}  // namespace distbench

#endif
