#ifndef DISCOURSE_RNG_HPP
#define DISCOURSE_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace discourse {

// splitmix64 finalizer; used to derive child seeds so that independent
// jobs (grid cells, folds, per-document fold-in) get decorrelated streams
// regardless of execution order.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return mix64(a ^ mix64(b));
}

// FNV-1a, 64-bit
inline std::uint64_t hash_bytes(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Seed for folding a single held-out document into a fitted model.
// Derived from the run seed and the document id, so scoring order and
// parallel schedules cannot change results.
inline std::uint64_t fold_in_seed(std::uint64_t seed, std::string_view doc_id) {
    return mix_seed(seed, hash_bytes(doc_id));
}

// Deterministic generator. std::mt19937_64's output sequence is pinned by
// the standard; the double/bounded-int conversions below are written out
// explicitly because std::uniform_*_distribution is not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0,1), 53-bit mantissa
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // uniform integer in [0, n), n >= 1
    std::uint64_t next_below(std::uint64_t n) {
        // multiply-shift; bias is negligible for the small n used here and
        // the mapping is fully deterministic
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(engine_()) * n) >> 64);
    }

    // Fisher-Yates
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace discourse

#endif
