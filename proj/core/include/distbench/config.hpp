#ifndef DISTBENCH_CONFIG_HPP
#define DISTBENCH_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "distbench/dataset.hpp"

namespace distbench {

struct ExperimentConfig {
    std::vector<std::filesystem::path> datasets;
    /// Metric abbreviations; every registered metric when empty.
    std::vector<std::string> metrics;
    std::size_t k = 1;
    double test_fraction = 0.34;
    std::size_t repetitions = 10;
    /// Levels for the noise phase; 0.1, 0.2, ..., 0.9 when empty.
    std::vector<double> noise_levels;
    std::size_t top_n = 10;
    /// Pinned noise-phase metrics; chosen from clean-phase results when empty.
    std::vector<std::string> top_metrics;
    std::uint64_t master_seed = 0;
    std::size_t workers = 1;
    std::filesystem::path output_dir = ".";
    CsvSchema schema;
};

/// Environment variable that overrides ExperimentConfig::workers.
inline constexpr const char* kWorkersEnv = "DISTBENCH_WORKERS";

/**
 * @brief Parses a flat `key = value` config.
 *
 * Blank lines and lines starting with '#' are ignored. Lists are
 * comma-separated. Relative dataset and output paths are resolved against
 * `base_dir`. Throws Error(InvalidConfig) for unknown keys, malformed values,
 * or a config that fails validate().
 */
ExperimentConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});

/// Reads and parses a config file; paths resolve against its directory.
/// Throws Error(Io) if the file cannot be read.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Throws Error(InvalidConfig) for a bad field and Error(UnknownMetric) for an
/// unregistered abbreviation.
void validate(const ExperimentConfig& cfg);

/// Applies kWorkersEnv when set. Throws Error(InvalidConfig) for a bad value.
void apply_environment(ExperimentConfig& cfg);

/// cfg.metrics, or every registered abbreviation when it is empty.
std::vector<std::string> effective_metrics(const ExperimentConfig& cfg);

/// cfg.noise_levels, or 0.1 .. 0.9 in steps of 0.1 when it is empty.
std::vector<double> effective_noise_levels(const ExperimentConfig& cfg);

}  // namespace distbench

#endif
