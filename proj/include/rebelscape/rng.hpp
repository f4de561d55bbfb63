#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rebelscape {

// Single deterministic random stream. A run owns exactly one Rng and every
// stochastic decision draws from it in a fixed, documented order, so a seed
// fully determines a run. Bounded draws are implemented here by rejection
// sampling rather than std::uniform_int_distribution / std::shuffle, whose
// outputs are implementation-defined and would break cross-toolchain
// reproducibility.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, n). n must be >= 1.
    std::size_t uniform_index(std::size_t n) {
        if (n == 0) throw std::invalid_argument("uniform_index: empty range");
        std::uint64_t range = n;
        std::uint64_t reject_below = (0 - range) % range; // 2^64 mod n
        std::uint64_t x = next_u64();
        while (x < reject_below) x = next_u64();
        return static_cast<std::size_t>(x % range);
    }

    // Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        if (lo > hi) throw std::invalid_argument("uniform_int: lo > hi");
        return lo + static_cast<int>(uniform_index(static_cast<std::size_t>(hi) - lo + 1));
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Fisher-Yates shuffle; n-1 bounded draws for a vector of size n.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = uniform_index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

} // namespace rebelscape
