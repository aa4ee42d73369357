#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace leecodes {

using Coord = std::int64_t;
using CoordVec = std::vector<Coord>;
using CoordSpan = std::span<const Coord>;

// Modulus marker for words over Z (unbounded alphabet).
inline constexpr Coord kUnbounded = 0;

enum class Metric { Lee, Manhattan, Hamming };

// Resource guard for every enumerator in the library.
struct Limits {
    std::size_t max_points = 10'000'000;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Coord mod_reduce(Coord x, Coord m) {
    Coord r = x % m;
    return r < 0 ? r + m : r;
}

// A length-n vector over Z_m (modulus >= 1) or over Z (modulus == kUnbounded).
struct Word {
    CoordVec coords;
    Coord modulus = kUnbounded;

    static Word modular(CoordVec c, Coord m) {
        if (m < 1) throw std::invalid_argument("Word: modulus must be >= 1");
        if (c.empty()) throw std::invalid_argument("Word: dimension must be >= 1");
        for (auto& x : c) x = mod_reduce(x, m);
        return Word{std::move(c), m};
    }

    static Word integer(CoordVec c) {
        if (c.empty()) throw std::invalid_argument("Word: dimension must be >= 1");
        return Word{std::move(c), kUnbounded};
    }

    int n() const { return static_cast<int>(coords.size()); }
    bool is_modular() const { return modulus != kUnbounded; }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;
};

inline void require_same_shape(const Word& x, const Word& y) {
    if (x.coords.size() != y.coords.size() || x.modulus != y.modulus)
        throw std::invalid_argument("words have mismatched dimension or alphabet");
}

// Radix-m packing of a word into a 64-bit key. Big-endian digit order, so the
// numeric order of keys is the lexicographic order of coordinate vectors.
inline bool encoding_fits(int n, Coord m) {
    if (m < 1 || n < 1) return false;
    if (m == 1) return true;
    unsigned __int128 v = 1;
    for (int i = 0; i < n; ++i) {
        v *= static_cast<unsigned __int128>(m);
        if (v > (static_cast<unsigned __int128>(1) << 62)) return false;
    }
    return true;
}

inline std::uint64_t encode_word(CoordSpan w, Coord m) {
    std::uint64_t key = 0;
    for (Coord x : w) key = key * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(x);
    return key;
}

inline void decode_word(std::uint64_t key, int n, Coord m, std::span<Coord> out) {
    for (int i = n - 1; i >= 0; --i) {
        out[i] = static_cast<Coord>(key % static_cast<std::uint64_t>(m));
        key /= static_cast<std::uint64_t>(m);
    }
}

inline CoordVec decode_word(std::uint64_t key, int n, Coord m) {
    CoordVec out(static_cast<std::size_t>(n));
    decode_word(key, n, m, out);
    return out;
}

}  // namespace leecodes
