#include "distbench/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "distbench/error.hpp"
#include "distbench/metrics.hpp"

namespace distbench {

namespace {

std::string_view trim(std::string_view s) noexcept {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(std::string_view value) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= value.size()) {
        auto comma = value.find(',', start);
        if (comma == std::string_view::npos) {
            comma = value.size();
        }
        const auto item = trim(value.substr(start, comma - start));
        if (!item.empty()) {
            items.emplace_back(item);
        }
        start = comma + 1;
    }
    return items;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
    throw Error(Errc::InvalidConfig, fmt::format("bad value '{}' for key '{}'", value, key));
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
    T out{};
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        bad_value(key, value);
    }
    return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1" || value == "yes") {
        return true;
    }
    if (value == "false" || value == "0" || value == "no") {
        return false;
    }
    bad_value(key, value);
}

std::filesystem::path resolve(const std::filesystem::path& base, std::string_view value) {
    std::filesystem::path p{std::string(value)};
    return p.is_absolute() || base.empty() ? p : base / p;
}

}  // namespace

ExperimentConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
    ExperimentConfig cfg;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const auto line = trim(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw Error(Errc::InvalidConfig, fmt::format("line {}: expected key = value", line_no));
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));

        if (key == "datasets") {
            cfg.datasets.clear();
            for (const auto& item : split_list(value)) {
                cfg.datasets.push_back(resolve(base_dir, item));
            }
        } else if (key == "metrics") {
            cfg.metrics = value == "all" ? std::vector<std::string>{} : split_list(value);
        } else if (key == "k") {
            cfg.k = parse_number<std::size_t>(key, value);
        } else if (key == "test_fraction") {
            cfg.test_fraction = parse_number<double>(key, value);
        } else if (key == "repetitions") {
            cfg.repetitions = parse_number<std::size_t>(key, value);
        } else if (key == "noise_levels") {
            cfg.noise_levels.clear();
            for (const auto& item : split_list(value)) {
                cfg.noise_levels.push_back(parse_number<double>(key, item));
            }
        } else if (key == "top_n") {
            cfg.top_n = parse_number<std::size_t>(key, value);
        } else if (key == "top_metrics") {
            cfg.top_metrics = split_list(value);
        } else if (key == "master_seed") {
            cfg.master_seed = parse_number<std::uint64_t>(key, value);
        } else if (key == "workers") {
            cfg.workers = parse_number<std::size_t>(key, value);
        } else if (key == "output_dir") {
            cfg.output_dir = resolve(base_dir, value);
        } else if (key == "class_column") {
            if (value == "last") {
                cfg.schema.class_column.reset();
            } else {
                cfg.schema.class_column = parse_number<std::size_t>(key, value);
            }
        } else if (key == "header") {
            if (value == "auto") {
                cfg.schema.header = HeaderMode::Auto;
            } else if (value == "present") {
                cfg.schema.header = HeaderMode::Present;
            } else if (value == "absent") {
                cfg.schema.header = HeaderMode::Absent;
            } else {
                bad_value(key, value);
            }
        } else if (key == "normalize") {
            cfg.schema.normalize = parse_bool(key, value);
        } else {
            throw Error(Errc::InvalidConfig, fmt::format("line {}: unknown key '{}'", line_no, key));
        }
    }
    validate(cfg);
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::Io, "cannot open config " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), path.parent_path());
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.datasets.empty()) {
        throw Error(Errc::InvalidConfig, "no datasets listed");
    }
    if (cfg.k == 0) {
        throw Error(Errc::InvalidConfig, "k must be positive");
    }
    if (!(cfg.test_fraction > 0.0 && cfg.test_fraction < 1.0)) {
        throw Error(Errc::InvalidConfig, fmt::format("test_fraction {} not in (0, 1)", cfg.test_fraction));
    }
    if (cfg.repetitions == 0) {
        throw Error(Errc::InvalidConfig, "repetitions must be positive");
    }
    for (const double level : cfg.noise_levels) {
        if (!(level > 0.0 && level < 1.0)) {
            throw Error(Errc::InvalidConfig, fmt::format("noise level {} not in (0, 1)", level));
        }
    }
    if (cfg.top_n == 0) {
        throw Error(Errc::InvalidConfig, "top_n must be positive");
    }
    if (cfg.workers == 0) {
        throw Error(Errc::InvalidConfig, "workers must be positive");
    }
    for (const auto* list : {&cfg.metrics, &cfg.top_metrics}) {
        for (const auto& abbrev : *list) {
            describe(abbrev);
        }
    }
}

void apply_environment(ExperimentConfig& cfg) {
    const char* raw = std::getenv(kWorkersEnv);
    if (raw == nullptr || *raw == '\0') {
        return;
    }
    cfg.workers = parse_number<std::size_t>(kWorkersEnv, trim(raw));
    if (cfg.workers == 0) {
        bad_value(kWorkersEnv, raw);
    }
}

std::vector<std::string> effective_metrics(const ExperimentConfig& cfg) {
    if (!cfg.metrics.empty()) {
        return cfg.metrics;
    }
    std::vector<std::string> all;
    for (const auto& m : registry()) {
        all.emplace_back(m.abbrev);
    }
    return all;
}

std::vector<double> effective_noise_levels(const ExperimentConfig& cfg) {
    if (!cfg.noise_levels.empty()) {
        return cfg.noise_levels;
    }
    std::vector<double> levels;
    for (int i = 1; i <= 9; ++i) {
        levels.push_back(i / 10.0);
    }
    return levels;
}

}  // namespace distbench
