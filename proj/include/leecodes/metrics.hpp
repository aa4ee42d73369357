#pragma once

#include <optional>
#include <vector>

#include "leecodes/bigint.hpp"
#include "leecodes/word.hpp"

namespace leecodes {

// ---------------------------------------------------------------------------
// Distances and weights
// ---------------------------------------------------------------------------

// Circular distance summed over coordinates; both words must be modular and
// share (n, m).
std::int64_t lee_distance(const Word& x, const Word& y);
std::int64_t lee_distance(CoordSpan x, CoordSpan y, Coord m);

// L1 distance over Z^n; both words must be unbounded.
std::int64_t manhattan_distance(const Word& x, const Word& y);
std::int64_t manhattan_distance(CoordSpan x, CoordSpan y);

// Number of differing coordinates; any shared alphabet.
std::int64_t hamming_distance(const Word& x, const Word& y);
std::int64_t hamming_distance(CoordSpan x, CoordSpan y);

// Distance to the all-zero word in the appropriate metric.
std::int64_t lee_weight(const Word& x);
std::int64_t lee_weight(CoordSpan x, Coord m);
std::int64_t manhattan_weight(const Word& x);
std::int64_t manhattan_weight(CoordSpan x);

std::int64_t distance(const Word& x, const Word& y, Metric metric);

// ---------------------------------------------------------------------------
// Sphere and anticode sizes (exact integers)
// ---------------------------------------------------------------------------

// sum_{i=0..R} C(n,i) (m-1)^i. R > n saturates at R = n; R < 0 rejected.
BigInt hamming_sphere_size(int n, int R, Coord m);

// |S_{n,R}| = sum_{i=0..min(n,R)} 2^i C(n,i) C(R,i).
BigInt lee_sphere_size(int n, int R);

// |S'_{n,R}| = sum_{i=0..min(n-1,R)} 2^(i+1) C(n-1,i) C(R+1,i+1).
BigInt anticode_size(int n, int R);

// ---------------------------------------------------------------------------
// Anticode specification and enumerators
// ---------------------------------------------------------------------------

enum class DiameterParity { Even, Odd };

// Even parity: the anticode is the Lee sphere S_{n,R} (diameter 2R).
// Odd parity: S'_{n,R} (diameter 2R+1), grown from the adjacent seed pair
// {anchor, anchor + e_axis}; axis is 1-based and only meaningful when Odd.
struct AnticodeSpec {
    int n = 1;
    int R = 0;
    DiameterParity diameter_parity = DiameterParity::Even;
    int axis = 1;
};

// Exact set of words within distance R of the center. For modular words with
// m < 2R+1 this is the true modular ball (smaller than S_{n,R}).
std::vector<Word> enumerate_sphere(const Word& center, int R, Metric metric,
                                   const Limits& limits = {});

// Even parity: Lee/Manhattan sphere of radius R around anchor. Odd parity:
// iterated neighbor growth from the seed pair.
std::vector<Word> enumerate_anticode(const AnticodeSpec& spec, const Word& anchor,
                                     const Limits& limits = {});

// ---------------------------------------------------------------------------
// Offset sets around the origin, shared by verifiers and constructions
// ---------------------------------------------------------------------------

// All v in Z^n with |v|_1 <= R, sorted by (weight, lex).
std::vector<CoordVec> manhattan_ball_offsets(int n, int R, const Limits& limits = {});

// The true ball of radius R around 0 in Z_m^n under the given metric
// (Lee or Hamming), sorted by encoded key. Handles wrap for small m.
std::vector<CoordVec> modular_ball_offsets(int n, Coord m, int R, Metric metric,
                                           const Limits& limits = {});

// S'_{n,R} anchored at 0 with the given seed axis, as integer offsets,
// sorted by (weight, lex).
std::vector<CoordVec> anticode_offsets(int n, int R, int axis, const Limits& limits = {});

}  // namespace leecodes
