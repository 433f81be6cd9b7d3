#ifndef DISTBENCH_RNG_HPP
#define DISTBENCH_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace distbench {

// Seeds are derived by hashing, so a run is a pure function of its master seed.

/// Folds `value` into `seed` with the splitmix64 finalizer.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t value) noexcept;

/// FNV-1a, used to turn dataset names into seed material.
std::uint64_t hash_name(std::string_view name) noexcept;

/// Thin wrapper over mt19937_64 whose derived draws do not depend on the
/// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer on [0, bound) by rejection; bound must be positive.
    std::size_t below(std::size_t bound);

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace distbench

#endif
