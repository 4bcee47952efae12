#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace schedlab {

/// Error type for all domain failures (bad config, infeasible instances,
/// oversize oracle instances, malformed files).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Deterministic randomness.
//
// Every stochastic component draws from an mt19937_64 whose raw output is
// fixed by the C++ standard, through the helpers below. Portable standard
// distributions are avoided on purpose: uniform_real_distribution and
// friends are implementation-defined and would break byte-identical output
// across standard libraries.
// ---------------------------------------------------------------------------

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [lo, hi). Uses the top 53 bits of the engine output.
    double uniform_real(double lo, double hi) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    /// Uniform integer in [lo, hi], inclusive. Modulo bias is below 2^-59
    /// for the small ranges used here.
    int uniform_int(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }

    /// Bernoulli draw with probability p.
    bool chance(double p) { return uniform_real(0.0, 1.0) < p; }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer; the documented mixing function behind all derived
/// seeds (experiment cells, per-scheduler streams).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// FNV-1a, used to derive per-scheduler seed streams from their names.
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Cell seed = chained splitmix64 over (master, n_jobs, replication).
inline std::uint64_t derive_seed(std::uint64_t master, int n_jobs, int replication) {
    std::uint64_t s = splitmix64(master);
    s = splitmix64(s ^ static_cast<std::uint64_t>(n_jobs));
    s = splitmix64(s ^ (static_cast<std::uint64_t>(replication) << 32));
    return s;
}

}  // namespace schedlab
