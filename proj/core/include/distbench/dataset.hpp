#ifndef DISTBENCH_DATASET_HPP
#define DISTBENCH_DATASET_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace distbench {

using ClassId = std::int32_t;

/**
 * @brief A numeric classification dataset stored row-major.
 *
 * Class labels are dense ids in order of first appearance; the original label
 * strings are kept in class_names(). attr_min/attr_max are computed over every
 * row at construction. Instances are immutable.
 */
class Dataset {
public:
    Dataset() = default;

    /// Throws Error(EmptyDataset) for zero rows and Error(InconsistentArity)
    /// when the value count is not rows * n_features or a label is out of range.
    Dataset(std::string name,
            std::size_t n_features,
            std::vector<double> values,
            std::vector<ClassId> labels,
            std::vector<std::string> class_names,
            std::vector<std::string> feature_names = {});

    const std::string& name() const noexcept { return name_; }
    std::size_t size() const noexcept { return labels_.size(); }
    std::size_t n_features() const noexcept { return n_features_; }
    std::size_t n_classes() const noexcept { return class_names_.size(); }

    std::span<const double> row(std::size_t i) const noexcept {
        return {values_.data() + i * n_features_, n_features_};
    }
    ClassId label(std::size_t i) const noexcept { return labels_[i]; }

    std::span<const double> values() const noexcept { return values_; }
    std::span<const ClassId> labels() const noexcept { return labels_; }
    const std::vector<std::string>& class_names() const noexcept { return class_names_; }
    const std::vector<std::string>& feature_names() const noexcept { return feature_names_; }

    std::span<const double> attr_min() const noexcept { return attr_min_; }
    std::span<const double> attr_max() const noexcept { return attr_max_; }

    /// True when every attribute value is >= 0.
    bool nonnegative() const noexcept;

    /// Same labels and metadata, new attribute values (stats recomputed).
    Dataset with_values(std::vector<double> values) const;

private:
    std::string name_;
    std::size_t n_features_ = 0;
    std::vector<double> values_;
    std::vector<ClassId> labels_;
    std::vector<std::string> class_names_;
    std::vector<std::string> feature_names_;
    std::vector<double> attr_min_;
    std::vector<double> attr_max_;
};

enum class HeaderMode { Auto, Present, Absent };

struct CsvSchema {
    /// Zero-based class column; the last column when unset.
    std::optional<std::size_t> class_column;
    HeaderMode header = HeaderMode::Auto;
    /// Rescale every attribute to [0, 1] after loading.
    bool normalize = false;
};

/// Parses comma-separated text. A header row is detected when any feature
/// cell of the first row is non-numeric (HeaderMode::Auto).
Dataset parse_csv(std::string_view text, std::string name, const CsvSchema& schema = {});

/// Reads a file and names the dataset after its stem.
Dataset load_csv(const std::filesystem::path& path, const CsvSchema& schema = {});

/// Writes a header row and one row per example, class label last. The output
/// loads back to the same examples and class order.
void write_csv(std::ostream& out, const Dataset& ds);

/// Min-max rescaling of every attribute to [0, 1]; constant columns map to 0.
Dataset normalize_min_max(const Dataset& ds);

/// Row subset of a dataset. Holds a pointer, so the dataset must outlive it.
class DatasetView {
public:
    DatasetView(const Dataset& ds, std::vector<std::size_t> indices);

    std::size_t size() const noexcept { return indices_.size(); }
    std::size_t n_features() const noexcept { return ds_->n_features(); }
    std::span<const double> row(std::size_t i) const noexcept { return ds_->row(indices_[i]); }
    ClassId label(std::size_t i) const noexcept { return ds_->label(indices_[i]); }
    const Dataset& dataset() const noexcept { return *ds_; }
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }

private:
    const Dataset* ds_;
    std::vector<std::size_t> indices_;
};

struct SplitPlan {
    double test_fraction = 0.34;
    std::size_t repetitions = 10;
    std::uint64_t seed = 0;
};

/// Index partition for one repetition; both lists ascending.
struct SplitIndices {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};

/// round-half-up(test_fraction * n)
std::size_t test_count(std::size_t n, double test_fraction);

/// Uniformly random, unstratified partition seeded by (plan.seed, repetition).
/// Throws Error(InvalidArgument) for a bad plan or repetition and
/// Error(TooSmall) when either side would be empty.
SplitIndices split_indices(const Dataset& ds, const SplitPlan& plan, std::size_t repetition);

std::pair<DatasetView, DatasetView> split(const Dataset& ds, const SplitPlan& plan, std::size_t repetition);

}  // namespace distbench

#endif
