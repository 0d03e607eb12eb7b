#pragma once

#include <cstdint>
#include <random>

namespace pppcov {

// splitmix64 step; used to derive per-trial seeds so that trial i's stream is
// independent of how trials are chunked across threads.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stream for (seed, index). Reordering or re-chunking parallel work must not
// change any drawn value, so every trial/point derives its own engine.
inline std::mt19937_64 derive_stream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = splitmix64(seed ^ splitmix64(index + 0x51ed2701u));
    return std::mt19937_64(s);
}

} // namespace pppcov
