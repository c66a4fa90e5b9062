#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hfpim {

// splitmix64: used to decorrelate seeds when deriving sub-streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic RNG. Sub-streams derived via derive() depend only on the
// original seed and the stream id, never on the parent's consumption
// state, so parallel and serial execution over (seed, stream index)
// produce identical draws.
class Rng {
  public:
    explicit Rng(std::uint64_t seed)
        : mixed_(splitmix64(seed)), engine_(mixed_) {}

    Rng derive(std::uint64_t stream) const {
        return Rng(mixed_ ^ splitmix64(stream ^ 0xa0761d6478bd642fULL));
    }

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // uniform integer in [0, n)
    std::uint64_t uniform_below(std::uint64_t n) { return engine_() % n; }

    // standard normal via Box-Muller (pairs cached)
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 == 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

  private:
    std::uint64_t mixed_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace hfpim
