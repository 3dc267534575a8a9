#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace lpp {

// Counter-based splittable stream: output n is a pure function of
// (seed, stream_id, counter), so replicate k is reproducible without
// generating replicates 0..k-1 and results do not depend on which thread
// owns the stream. The core is the SplitMix64 finalizer applied to a
// per-stream key plus a Weyl-sequence counter.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : key_(derive_key(seed, stream_id)), counter_(0) {}

    std::uint64_t next_u64() {
        std::uint64_t z = key_ + (++counter_) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform on the open interval (0,1); never returns 0 or 1 exactly.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    std::uint64_t counter() const { return counter_; }

  private:
    static std::uint64_t mix(std::uint64_t x) {
        x ^= x >> 33;
        x *= 0xFF51AFD7ED558CCDull;
        x ^= x >> 33;
        x *= 0xC4CEB9FE1A85EC53ull;
        x ^= x >> 33;
        return x;
    }
    static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream_id) {
        return mix(mix(seed ^ 0x2545F4914F6CDD1Dull) + stream_id * 0xD1B54A32D192ED03ull);
    }

    std::uint64_t key_;
    std::uint64_t counter_;
};

// Geom(rho): P(X = n) = rho^n (1 - rho) on {0, 1, 2, ...}. Sampled by
// inversion, floor(log U / log rho), which is O(1) for any rho.
inline std::uint32_t sample_geometric(RngStream& stream, double rho) {
    if (!(rho >= 0.0) || rho >= 1.0)
        throw std::invalid_argument("sample_geometric: rho must be in [0,1)");
    if (rho == 0.0) return 0;
    const double u = stream.next_unit();
    const double v = std::floor(std::log(u) / std::log(rho));
    // A draw anywhere near 2^31 has probability < 1e-100000000 for rho <= 0.999.
    constexpr double kCap = 2147483647.0;
    return static_cast<std::uint32_t>(v < kCap ? v : kCap);
}

}  // namespace lpp
