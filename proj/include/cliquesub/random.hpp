#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace cliquesub {

/// mt19937_64 with hand-written distributions. The standard fixes the engine's output
/// sequence but not the distributions', so these keep results identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound)
    {
        std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            std::uint64_t r = engine_();
            if (r >= threshold)
                return r % bound;
        }
    }

    bool bernoulli(double p) { return uniform01() < p; }

    template <typename T>
    void shuffle(std::vector<T> & v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace cliquesub
