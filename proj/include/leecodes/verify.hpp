#pragma once

#include <functional>
#include <optional>
#include <string>

#include "leecodes/codes.hpp"
#include "leecodes/lattice.hpp"

namespace leecodes {

enum class VerifyMode { Auto, Exhaustive, Formula };

// Outcome of a verification run, with enough context to reproduce it.
struct Certificate {
    std::string check;   // perfect | diameter_perfect | partition | local_cover
    std::string mode;    // exhaustive | formula | lattice | sampled
    bool pass = false;
    std::string detail;  // first violation or summary

    BigInt space_size = 0;
    BigInt code_size = 0;
    BigInt ball_size = 0;  // sphere or anticode size used by the bound
    std::optional<std::int64_t> min_distance;
    std::optional<CoordVec> violation;
    bool all_even_weight = false;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    double elapsed_seconds = 0.0;
};

// Perfect R-error-correcting check. Exhaustive mode verifies that every point
// of Z_m^n lies within distance R of exactly one codeword; formula mode checks
// minimum distance >= 2R+1 together with |C| * |ball| = m^n.
Certificate is_perfect(const ModularCode& code, int R, VerifyMode mode = VerifyMode::Auto,
                       const Limits& limits = {});
Certificate is_perfect(const LatticeCode& code, int R, VerifyMode mode = VerifyMode::Auto,
                       const Limits& limits = {});

// Diameter perfect check for even minimum distance d: minimum Lee distance
// >= d and |C| * |S'_{n,(d-2)/2}| = m^n. Also records the even-weight census.
Certificate is_diameter_perfect(const ModularCode& code, int d, const Limits& limits = {});
Certificate is_diameter_perfect(const LatticeCode& code, int d, const Limits& limits = {});

// Seeded sampling surrogate for codes too large to enumerate: each sampled
// point must see exactly one oracle member in its radius-R Lee ball. Failure
// is definitive; success is evidence only.
Certificate local_cover_check(const std::function<bool(CoordSpan)>& oracle, int n, Coord m,
                              int R, std::size_t samples, std::uint64_t seed,
                              const Limits& limits = {});

// Disjointness and full cover of Z_m^n by the family's translates.
Certificate partition_check(const TranslateFamily& family, const Limits& limits = {});

}  // namespace leecodes
