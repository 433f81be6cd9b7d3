#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "distbench/config.hpp"
#include "distbench/dataset.hpp"
#include "distbench/eval.hpp"
#include "distbench/experiment.hpp"
#include "distbench/knn.hpp"
#include "distbench/metrics.hpp"
#include "distbench/noise.hpp"
#include "distbench/stats.hpp"
#include "golden.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace distbench;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fixed(double v, int digits = 4) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << v;
    return os.str();
}

const fs::path kDataDir{DISTBENCH_DATA_DIR};

Outcome golden_values() {
    double worst_published = 0.0;
    std::string worst_published_metric;
    for (const auto& [metric, expected] : golden::kPublished) {
        const double err = std::abs(evaluate(metric, golden::kV1, golden::kV2) - expected);
        if (err > worst_published) {
            worst_published = err;
            worst_published_metric = metric;
        }
    }
    double worst_recomputed = 0.0;
    std::string worst_recomputed_metric;
    for (const auto& [metric, expected] : golden::kRecomputed) {
        const double err = std::abs(evaluate(metric, golden::kV1, golden::kV2) - expected);
        if (err > worst_recomputed) {
            worst_recomputed = err;
            worst_recomputed_metric = metric;
        }
    }
    const bool pass = worst_published <= 1e-3 && worst_recomputed <= 1e-6;
    std::ostringstream os;
    os << golden::kPublished.size() << " published values, max error " << worst_published << " ("
       << worst_published_metric << "); " << golden::kRecomputed.size() << " recomputed values, max error "
       << worst_recomputed << " (" << worst_recomputed_metric << ")";
    return {pass, os.str()};
}

Outcome toy_knn() {
    const auto ds = parse_csv("5,4,3,1\n1,2,2,2\n1,2,3,2\n", "toy");
    const DatasetView view(ds, {0, 1, 2});
    const std::vector<double> query{4, 4, 2};
    const KnnModel k3(view, describe(MetricId::ED), 3);
    const auto nn = k3.neighbors(query);
    const std::array<double, 3> expected{1.4, 3.6, 3.7};
    bool pass = nn.size() == 3;
    std::ostringstream os;
    os << "distances";
    for (std::size_t i = 0; i < nn.size() && i < 3; ++i) {
        pass = pass && nn[i].index == i && std::abs(nn[i].distance - expected[i]) <= 0.05;
        os << " " << fixed(nn[i].distance, 3);
    }
    const KnnModel k1(view, describe(MetricId::ED), 1);
    const auto& c1 = ds.class_names()[k1.classify(query)];
    const auto& c3 = ds.class_names()[k3.classify(query)];
    pass = pass && c1 == "1" && c3 == "2";
    os << "; k=1 -> class " << c1 << ", k=3 -> class " << c3;
    return {pass, os.str()};
}

bool constant(const std::vector<double>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

// Measures whose d(x, x) = 0 needs a nonzero or non-constant vector.
bool degenerate_for_zero_self(MetricId id, const std::vector<double>& x) {
    switch (id) {
        case MetricId::CosD:
        case MetricId::DicD:
        case MetricId::ChoD:
        case MetricId::PeaD:
        case MetricId::CorD:
        case MetricId::SPeaD:
            return constant(x);
        default:
            return false;
    }
}

std::vector<double> draw_vector(std::mt19937_64& gen, std::size_t n, bool signed_values) {
    auto v = support::random_vector(gen, n, signed_values ? -10.0 : 0.0, 10.0);
    std::bernoulli_distribution sparse(0.15);
    for (auto& x : v) {
        if (sparse(gen)) {
            x = 0.0;
        }
    }
    return v;
}

Outcome metric_axioms() {
    constexpr std::size_t kPairs = 1000;
    constexpr std::size_t kTriples = 10000;
    std::mt19937_64 gen(31);
    std::uniform_int_distribution<std::size_t> dim(1, 16);
    std::vector<std::string> failures;
    std::size_t min_pairs = kPairs * 10;

    for (const auto& m : registry()) {
        std::size_t tested = 0;
        std::size_t zero_self_tested = 0;
        bool ok = true;
        const int domains = m.flags.requires_nonneg_inputs ? 1 : 2;
        for (int domain = 0; domain < domains; ++domain) {
            for (std::size_t i = 0; i < kPairs; ++i) {
                const std::size_t n = dim(gen);
                const auto x = draw_vector(gen, n, domain == 1);
                const auto y = draw_vector(gen, n, domain == 1);
                const double dxy = evaluate(m, x, y);
                const double dyx = evaluate(m, y, x);
                const double dxx = evaluate(m, x, x);
                ok = ok && std::isfinite(dxy) && std::isfinite(dyx) && std::isfinite(dxx);
                if (m.flags.symmetric) {
                    ok = ok && std::abs(dxy - dyx) <= 1e-12 * std::max(1.0, std::abs(dxy));
                }
                if (m.flags.nonneg_output) {
                    ok = ok && dxy >= 0.0 && dyx >= 0.0;
                }
                if (m.flags.zero_self && !degenerate_for_zero_self(m.id, x)) {
                    ok = ok && std::abs(dxx) <= 1e-12;
                    ++zero_self_tested;
                }
                ++tested;
            }
        }
        if (m.flags.zero_self) {
            min_pairs = std::min(min_pairs, zero_self_tested);
        }
        min_pairs = std::min(min_pairs, tested);
        if (!ok) {
            failures.emplace_back(m.abbrev);
        }
    }

    std::size_t triangle_violations = 0;
    for (const auto id : {MetricId::MD, MetricId::ED, MetricId::CD, MetricId::HasD, MetricId::MatD}) {
        const auto& m = describe(id);
        for (std::size_t i = 0; i < kTriples; ++i) {
            const std::size_t n = dim(gen);
            const auto x = draw_vector(gen, n, false);
            const auto y = draw_vector(gen, n, false);
            const auto z = draw_vector(gen, n, false);
            if (evaluate(m, x, z) > evaluate(m, x, y) + evaluate(m, y, z) + 1e-9) {
                ++triangle_violations;
                failures.emplace_back(std::string(m.abbrev) + "(triangle)");
                break;
            }
        }
    }

    std::ostringstream os;
    os << registry().size() << " measures, >= " << min_pairs << " pairs each; triangle over " << kTriples
       << " triples for MD, ED, CD, HasD, MatD";
    if (!failures.empty()) {
        os << "; failing:";
        for (const auto& f : failures) {
            os << " " << f;
        }
    }
    return {failures.empty() && min_pairs >= kPairs && triangle_violations == 0, os.str()};
}

Outcome argmin_equivalence() {
    const std::vector<std::vector<MetricId>> groups{
        {MetricId::MD, MetricId::MCD, MetricId::NID},  {MetricId::ED, MetricId::SED, MetricId::AD},
        {MetricId::TopD, MetricId::JSD},               {MetricId::SquD, MetricId::PSCSD},
        {MetricId::SCD, MetricId::MatD, MetricId::HeD},
    };
    std::size_t compared = 0;
    std::size_t disagreements = 0;
    for (std::uint64_t d = 0; d < 20; ++d) {
        const auto ds = support::random_dataset("synthetic" + std::to_string(d), 100, 8, 3, 500 + d);
        const auto s = split_indices(ds, {0.34, 1, 900 + d}, 0);
        const DatasetView train(ds, s.train);
        const DatasetView test(ds, s.test);
        for (const auto& group : groups) {
            const auto reference = KnnModel(train, describe(group.front()), 1).classify(test);
            for (std::size_t g = 1; g < group.size(); ++g) {
                const auto other = KnnModel(train, describe(group[g]), 1).classify(test);
                for (std::size_t i = 0; i < reference.size(); ++i) {
                    ++compared;
                    disagreements += reference[i] != other[i] ? 1 : 0;
                }
            }
        }
    }
    return {disagreements == 0,
            std::to_string(compared) + " paired predictions over 20 datasets, " + std::to_string(disagreements) +
                " disagreements"};
}

Outcome noise_contract() {
    const auto ds = support::random_dataset("noise", 1000, 6, 3, 7, -5.0, 5.0);
    bool pass = true;
    std::ostringstream os;
    os << "changed rows:";
    for (int step = 1; step <= 9; ++step) {
        const double level = step / 10.0;
        const auto out = inject(ds, {level, 4000u + static_cast<std::uint64_t>(step)});
        std::size_t changed = 0;
        for (std::size_t i = 0; i < ds.size(); ++i) {
            const auto a = ds.row(i);
            const auto b = out.row(i);
            if (!std::equal(a.begin(), a.end(), b.begin())) {
                ++changed;
            }
            for (std::size_t j = 0; j < ds.n_features(); ++j) {
                pass = pass && b[j] >= ds.attr_min()[j] && b[j] <= ds.attr_max()[j];
            }
            pass = pass && out.label(i) == ds.label(i);
        }
        pass = pass && changed == static_cast<std::size_t>(std::llround(level * 1000.0));
        os << " " << changed;
    }
    return {pass, os.str()};
}

std::size_t worker_count() {
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<fs::path> real_datasets() {
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(kDataDir)) {
        if (entry.path().extension() == ".csv") {
            paths.push_back(entry.path());
        }
    }
    std::sort(paths.begin(), paths.end());
    return paths;
}

// Shared with the final soft check.
std::vector<RunRecord> g_noise_records;

Outcome noise_degradation() {
    ExperimentConfig cfg;
    cfg.datasets = real_datasets();
    cfg.noise_levels = {0.9};
    cfg.master_seed = 2024;
    const auto datasets = load_datasets(cfg);
    g_noise_records = run_noise_phase(datasets, cfg, {"HasD", "ED", "MD"}, {worker_count(), {}});

    bool pass = datasets.size() >= 5;
    std::ostringstream os;
    os << datasets.size() << " datasets;";
    const auto clean = summarize(g_noise_records, 0.0);
    const auto noisy = summarize(g_noise_records, 0.9);
    for (const auto& c : clean) {
        const auto n = std::find_if(noisy.begin(), noisy.end(), [&](const auto& s) { return s.metric == c.metric; });
        const double drop = c.mean.accuracy - n->mean.accuracy;
        pass = pass && drop <= 0.35;
        os << " " << c.metric << " " << fixed(c.mean.accuracy) << " -> " << fixed(n->mean.accuracy) << " (drop "
           << fixed(drop) << ")";
    }
    return {pass, os.str()};
}

Outcome wilcoxon_oracle() {
    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> cont(0.0, 1.0);
    std::uniform_int_distribution<int> coarse(0, 3);
    double worst = 0.0;
    std::size_t cases = 0;
    bool self_one = true;
    for (std::size_t n1 = 1; n1 < 12; ++n1) {
        for (std::size_t n2 = 1; n1 + n2 <= 12; ++n2) {
            for (int trial = 0; trial < 10; ++trial) {
                std::vector<double> a(n1);
                std::vector<double> b(n2);
                for (auto* v : {&a, &b}) {
                    for (auto& x : *v) {
                        x = trial % 2 == 0 ? cont(gen) : coarse(gen);
                    }
                }
                worst = std::max(worst, std::abs(wilcoxon_rank_sum(a, b) - oracle::brute_rank_sum(a, b)));
                self_one = self_one && wilcoxon_rank_sum(a, a) == 1.0;
                ++cases;
            }
        }
    }
    return {worst <= 0.03 && self_one,
            std::to_string(cases) + " sample pairs, max |p - exact| = " + fixed(worst, 12) +
                ", p(a,a) == 1: " + (self_one ? "yes" : "no")};
}

Outcome separable_dataset() {
    const auto ds = support::separable_surrogate(1372);
    const SplitPlan plan{0.34, 10, 8};
    double total = 0.0;
    double worst = 1.0;
    for (std::size_t rep = 0; rep < plan.repetitions; ++rep) {
        const auto s = split_indices(ds, plan, rep);
        const DatasetView train(ds, s.train);
        const DatasetView test(ds, s.test);
        const auto predicted = KnnModel(train, describe(MetricId::ED), 1).classify(test);
        std::vector<ClassId> actual(test.size());
        for (std::size_t i = 0; i < test.size(); ++i) {
            actual[i] = test.label(i);
        }
        const double acc = accuracy(confusion(actual, predicted, ds.n_classes()));
        total += acc;
        worst = std::min(worst, acc);
    }
    const double mean = total / static_cast<double>(plan.repetitions);
    return {mean >= 0.98, "ED 1-NN on " + std::to_string(ds.size()) + "x" + std::to_string(ds.n_features()) +
                              " separable data, mean accuracy " + fixed(mean) + " (worst split " + fixed(worst) +
                              ")"};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (const char c : s) {
        out += c == '\'' ? std::string("'\\''") : std::string(1, c);
    }
    return out + "'";
}

Outcome determinism() {
    const fs::path root = fs::current_path() / "acceptance_determinism";
    fs::remove_all(root);
    std::string datasets;
    for (const auto* name : {"iris.csv", "wine.csv", "breast_cancer.csv"}) {
        datasets += (datasets.empty() ? "" : ", ") + (kDataDir / name).string();
    }
    const std::string config = "datasets = " + datasets +
                               "\nmetrics = all\nrepetitions = 10\nmaster_seed = 99\nworkers = " +
                               std::to_string(worker_count()) + "\noutput_dir = out\n";
    std::vector<std::string> csvs;
    for (const auto* run : {"a", "b"}) {
        const fs::path dir = root / run;
        fs::create_directories(dir);
        std::ofstream(dir / "run.conf") << config;
        const std::string cmd = shell_quote(DISTBENCH_BENCH_EXE) + " clean --config " +
                                shell_quote((dir / "run.conf").string()) + " > " +
                                shell_quote((dir / "log.txt").string()) + " 2>&1";
        if (std::system(cmd.c_str()) != 0) {
            return {false, std::string("bench clean failed in run ") + run + ": " + slurp(dir / "log.txt")};
        }
        csvs.push_back(slurp(dir / "out" / "clean_records.csv"));
    }
    const auto rows = static_cast<std::size_t>(std::count(csvs[0].begin(), csvs[0].end(), '\n'));
    const bool pass = rows > 1 && csvs[0] == csvs[1];
    return {pass, "two `bench clean` runs, " + std::to_string(rows - 1) + " records, " +
                      std::to_string(csvs[0].size()) + " bytes each, " + (csvs[0] == csvs[1] ? "identical" : "DIFFER")};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"golden-metric-values", golden_values},     {"toy-knn", toy_knn},
        {"metric-axioms", metric_axioms},            {"argmin-equivalence", argmin_equivalence},
        {"noise-injection-contract", noise_contract}, {"noise-degradation", noise_degradation},
        {"wilcoxon-oracle", wilcoxon_oracle},        {"separable-dataset", separable_dataset},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& [name, check] = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += outcome.pass ? 0 : 1;
        std::cout << (outcome.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << name << ": " << outcome.detail << " ["
                  << fixed(seconds, 2) << " s]" << std::endl;
    }

    if (!g_noise_records.empty()) {
        const auto clean = summarize(g_noise_records, 0.0);
        const auto mean_of = [&](std::string_view m) {
            return std::find_if(clean.begin(), clean.end(), [&](const auto& s) { return s.metric == m; })->mean.accuracy;
        };
        const double hasd = mean_of("HasD");
        const double ed = mean_of("ED");
        std::cout << "INFO soft check (not gated) HasD >= ED clean mean accuracy: " << fixed(hasd) << " vs "
                  << fixed(ed) << " -> " << (hasd >= ed ? "holds" : "does not hold") << std::endl;
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
