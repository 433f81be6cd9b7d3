#include "distbench/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <fmt/format.h>

#include "distbench/error.hpp"
#include "distbench/rng.hpp"

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

std::vector<std::string_view> split_cells(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.push_back(trim(line.substr(start)));
            break;
        }
        cells.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return cells;
}

std::optional<double> parse_real(std::string_view cell) noexcept {
    if (!cell.empty() && cell.front() == '+') {
        cell.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            nl = text.size();
        }
        const auto line = text.substr(start, nl - start);
        if (!trim(line).empty()) {
            lines.push_back(line);
        }
        start = nl + 1;
    }
    return lines;
}

}  // namespace

Dataset::Dataset(std::string name,
                 std::size_t n_features,
                 std::vector<double> values,
                 std::vector<ClassId> labels,
                 std::vector<std::string> class_names,
                 std::vector<std::string> feature_names)
    : name_(std::move(name)),
      n_features_(n_features),
      values_(std::move(values)),
      labels_(std::move(labels)),
      class_names_(std::move(class_names)),
      feature_names_(std::move(feature_names)) {
    if (labels_.empty()) {
        throw Error(Errc::EmptyDataset, "dataset '" + name_ + "' has no examples");
    }
    if (n_features_ == 0 || values_.size() != labels_.size() * n_features_) {
        throw Error(Errc::InconsistentArity, fmt::format("dataset '{}': {} values for {} rows of {} features", name_,
                                                         values_.size(), labels_.size(), n_features_));
    }
    for (const ClassId c : labels_) {
        if (c < 0 || static_cast<std::size_t>(c) >= class_names_.size()) {
            throw Error(Errc::InconsistentArity, fmt::format("dataset '{}': class id {} out of range", name_, c));
        }
    }
    if (feature_names_.empty()) {
        for (std::size_t j = 0; j < n_features_; ++j) {
            feature_names_.push_back(fmt::format("x{}", j + 1));
        }
    }
    attr_min_.assign(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(n_features_));
    attr_max_ = attr_min_;
    for (std::size_t i = 1; i < labels_.size(); ++i) {
        const auto r = row(i);
        for (std::size_t j = 0; j < n_features_; ++j) {
            attr_min_[j] = std::min(attr_min_[j], r[j]);
            attr_max_[j] = std::max(attr_max_[j], r[j]);
        }
    }
}

bool Dataset::nonnegative() const noexcept {
    return std::all_of(attr_min_.begin(), attr_min_.end(), [](double v) { return v >= 0.0; });
}

Dataset Dataset::with_values(std::vector<double> values) const {
    return Dataset(name_, n_features_, std::move(values), labels_, class_names_, feature_names_);
}

Dataset parse_csv(std::string_view text, std::string name, const CsvSchema& schema) {
    const auto lines = split_lines(text);
    if (lines.empty()) {
        throw Error(Errc::EmptyDataset, "'" + name + "' contains no rows");
    }
    const std::size_t n_columns = split_cells(lines.front()).size();
    if (n_columns < 2) {
        throw Error(Errc::InconsistentArity, "'" + name + "' needs at least one feature and a class column");
    }
    const std::size_t class_col = schema.class_column.value_or(n_columns - 1);
    if (class_col >= n_columns) {
        throw Error(Errc::InvalidArgument, fmt::format("class column {} out of range for {} columns", class_col, n_columns));
    }

    bool has_header = schema.header == HeaderMode::Present;
    if (schema.header == HeaderMode::Auto) {
        const auto first = split_cells(lines.front());
        for (std::size_t j = 0; j < first.size(); ++j) {
            if (j != class_col && !first[j].empty() && !parse_real(first[j])) {
                has_header = true;
                break;
            }
        }
    }

    std::vector<std::string> feature_names;
    if (has_header) {
        const auto header = split_cells(lines.front());
        for (std::size_t j = 0; j < header.size(); ++j) {
            if (j != class_col) {
                feature_names.emplace_back(header[j]);
            }
        }
    }

    std::vector<double> values;
    std::vector<ClassId> labels;
    std::vector<std::string> class_names;
    std::unordered_map<std::string, ClassId> class_ids;
    for (std::size_t li = has_header ? 1 : 0; li < lines.size(); ++li) {
        const auto cells = split_cells(lines[li]);
        const std::size_t line_no = li + 1;
        if (cells.size() != n_columns) {
            throw Error(Errc::InconsistentArity,
                        fmt::format("{}:{}: expected {} cells, found {}", name, line_no, n_columns, cells.size()));
        }
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (cells[j].empty()) {
                throw Error(Errc::MissingValue, fmt::format("{}:{}: empty cell in column {}", name, line_no, j + 1));
            }
            if (j == class_col) {
                continue;
            }
            const auto v = parse_real(cells[j]);
            if (!v) {
                throw Error(Errc::NonNumeric,
                            fmt::format("{}:{}: '{}' in column {} is not a finite number", name, line_no, cells[j], j + 1));
            }
            values.push_back(*v);
        }
        std::string label(cells[class_col]);
        auto [it, inserted] = class_ids.try_emplace(label, static_cast<ClassId>(class_names.size()));
        if (inserted) {
            class_names.push_back(std::move(label));
        }
        labels.push_back(it->second);
    }
    if (labels.empty()) {
        throw Error(Errc::EmptyDataset, "'" + name + "' has a header but no examples");
    }

    Dataset ds(std::move(name), n_columns - 1, std::move(values), std::move(labels), std::move(class_names),
               std::move(feature_names));
    return schema.normalize ? normalize_min_max(ds) : ds;
}

Dataset load_csv(const std::filesystem::path& path, const CsvSchema& schema) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::Io, "cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str(), path.stem().string(), schema);
}

void write_csv(std::ostream& out, const Dataset& ds) {
    for (const auto& f : ds.feature_names()) {
        out << f << ',';
    }
    out << "class\n";
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (const double v : ds.row(i)) {
            out << fmt::format("{}", v) << ',';
        }
        out << ds.class_names()[static_cast<std::size_t>(ds.label(i))] << '\n';
    }
}

Dataset normalize_min_max(const Dataset& ds) {
    std::vector<double> values(ds.values().begin(), ds.values().end());
    const std::size_t n = ds.n_features();
    for (std::size_t i = 0; i < values.size(); ++i) {
        const std::size_t j = i % n;
        const double range = ds.attr_max()[j] - ds.attr_min()[j];
        values[i] = range > 0.0 ? (values[i] - ds.attr_min()[j]) / range : 0.0;
    }
    return ds.with_values(std::move(values));
}

DatasetView::DatasetView(const Dataset& ds, std::vector<std::size_t> indices) : ds_(&ds), indices_(std::move(indices)) {
    for (const std::size_t i : indices_) {
        if (i >= ds.size()) {
            throw Error(Errc::InvalidArgument, fmt::format("row {} out of range for '{}'", i, ds.name()));
        }
    }
}

std::size_t test_count(std::size_t n, double test_fraction) {
    return static_cast<std::size_t>(std::floor(test_fraction * static_cast<double>(n) + 0.5));
}

SplitIndices split_indices(const Dataset& ds, const SplitPlan& plan, std::size_t repetition) {
    if (!(plan.test_fraction > 0.0 && plan.test_fraction < 1.0)) {
        throw Error(Errc::InvalidArgument, fmt::format("test fraction {} not in (0, 1)", plan.test_fraction));
    }
    if (repetition >= plan.repetitions) {
        throw Error(Errc::InvalidArgument,
                    fmt::format("repetition {} out of range for {} repetitions", repetition, plan.repetitions));
    }
    const std::size_t n = ds.size();
    const std::size_t n_test = test_count(n, plan.test_fraction);
    if (n < 2 || n_test == 0 || n_test >= n) {
        throw Error(Errc::TooSmall, fmt::format("'{}' with {} examples cannot be split at fraction {}", ds.name(), n,
                                                plan.test_fraction));
    }

    // Partial Fisher-Yates: the first n_test slots become the test set.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(mix_seed(plan.seed, repetition));
    for (std::size_t i = 0; i < n_test; ++i) {
        std::swap(order[i], order[i + rng.below(n - i)]);
    }
    SplitIndices out;
    out.test.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_test));
    out.train.assign(order.begin() + static_cast<std::ptrdiff_t>(n_test), order.end());
    std::sort(out.test.begin(), out.test.end());
    std::sort(out.train.begin(), out.train.end());
    return out;
}

std::pair<DatasetView, DatasetView> split(const Dataset& ds, const SplitPlan& plan, std::size_t repetition) {
    auto idx = split_indices(ds, plan, repetition);
    return {DatasetView(ds, std::move(idx.train)), DatasetView(ds, std::move(idx.test))};
}

}  // namespace distbench
