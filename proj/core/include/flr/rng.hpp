#pragma once

#include <cstdint>
#include <string_view>

namespace flr {

/// splitmix64 step. Used as a counter-based generator: hashing `key + i`
/// yields the i-th draw of the stream without sequential state, so streams
/// are reproducible across platforms and independent of call order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Uniform double in [0, 1) from 53 random bits.
inline double unit_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// FNV-1a, used to derive per-instance stream keys from file names.
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Counter-based uniform stream; draw(i) is independent of previous draws.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    double draw(std::uint64_t i) const { return unit_double(splitmix64(key_ ^ (i * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL))); }

    /// Sequential convenience; advances an internal counter.
    double next() { return draw(counter_++); }

    std::uint64_t next_bits() { return splitmix64(key_ ^ (counter_++ * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL)); }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace flr
