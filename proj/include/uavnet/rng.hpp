#pragma once

// Deterministic RNG substream derivation. A single root seed fans out into
// independent streams keyed by (realization index, purpose, attempt) so that
// adding consumers or changing the worker count never shifts existing
// streams.

#include <cstdint>
#include <random>

namespace uavnet::rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

enum class Stream : std::uint64_t {
    tsbs_deploy = 1,
    fading = 2,
    uav_init = 3,
    ga = 4,
    kmeans = 5,
};

inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t realization,
                                 Stream stream, std::uint64_t attempt = 0) {
    std::uint64_t h = splitmix64(root);
    h = splitmix64(h ^ (realization * 0xA24BAED4963EE407ULL));
    h = splitmix64(h ^ (static_cast<std::uint64_t>(stream) * 0x9FB21C651E98DF25ULL));
    h = splitmix64(h ^ (attempt * 0xD6E8FEB86659FD93ULL));
    return h;
}

inline std::mt19937_64 substream(std::uint64_t root, std::uint64_t realization,
                                 Stream stream, std::uint64_t attempt = 0) {
    return std::mt19937_64(derive_seed(root, realization, stream, attempt));
}

} // namespace uavnet::rng
