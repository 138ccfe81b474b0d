#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace bribery {

// Seeded generator with rejection-sampled bounded draws, so streams are
// reproducible across platforms (mt19937_64's raw output is standardized;
// std::uniform_int_distribution's mapping is not).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(double p) { return static_cast<double>(engine_()) < p * static_cast<double>(UINT64_MAX); }

    template <typename T>
    void shuffle(std::vector<T>& xs) {
        for (size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(i)]);
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace bribery
