#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace influ {

// All randomness in the toolkit flows from one master seed. Stage- and
// column-level seeds are derived as splitmix64(master ^ fnv1a(tag)), so adding
// a stage never perturbs the streams of the others.

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag) {
    return splitmix64(master ^ fnv1a64(tag));
}

inline std::mt19937_64 make_rng(std::uint64_t master, std::string_view tag) {
    return std::mt19937_64(derive_seed(master, tag));
}

}  // namespace influ
