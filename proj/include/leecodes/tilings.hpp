#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "leecodes/center_set.hpp"

namespace leecodes {

// Half-open axis-aligned window [x0, x1) x [y0, y1).
struct WindowRect {
    std::int64_t x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    std::int64_t width() const { return x1 - x0; }
    std::int64_t height() const { return y1 - y0; }
};

// Multiplicity census of anticode copies over a window. Centers are collected
// from the window expanded by `margin` on every side, so interior counts are
// exact for the whole window.
struct WindowReport {
    WindowRect window;
    int margin = 0;
    int axis = 1;  // seed-pair orientation that produced this report
    std::map<std::uint64_t, std::uint64_t> histogram;
    bool exact_cover = false;
    std::size_t centers_used = 0;
    std::vector<std::uint8_t> multiplicity;  // row-major, height rows of width
};

// The diagonal-strip center set of a sequence: points
// (2(R+1)i + (R+1)j + s_i, (R+1)j + s_i).
CenterSet build_center_set(Sequence s, int R);

// Places S'_{2,R} at every center meeting the window and checks that every
// window point is covered exactly once. Tries seed axis 1 first, then axis 2,
// and records the orientation that satisfies the exact cover (axis 1 when
// neither does).
WindowReport verify_window_tiling(const CenterSet& centers, WindowRect window,
                                  std::optional<int> axis = std::nullopt,
                                  const Limits& limits = {});

// Both readings of sequence periodicity over the index window [i0, i1):
// a shift relation s_i = s_{i+tau} + rho with tau != 0 (any rho), and one
// with rho != 0 (any tau). Shifts are scanned up to half the window length,
// so every reported relation is witnessed by at least len/2 positions;
// unrestricted shifts would make the certificate vacuous near tau = len.
struct SequencePeriodicity {
    bool shift_relation = false;            // exists tau != 0, any rho
    bool nonzero_rho_relation = false;      // exists relation with rho != 0
    std::optional<std::pair<std::int64_t, int>> shift_witness;
    std::optional<std::pair<std::int64_t, int>> nonzero_rho_witness;
};

SequencePeriodicity analyze_sequence_periodicity(const Sequence& s, int R, std::int64_t i0,
                                                 std::int64_t i1);

// Window-bounded non-periodicity certificate: true iff no tau != 0 admits a
// constant rho with s_i = s_{i+tau} + rho (mod R+1) across the window.
bool sequence_nonperiodic(const Sequence& s, int R, std::int64_t i0, std::int64_t i1);

// All nonzero v with |v|_inf <= max_period whose translation maps the center
// set onto itself across the window overlap. Empty result: no small period.
std::vector<std::array<std::int64_t, 2>> tiling_periodicity_probe(const CenterSet& centers,
                                                                  WindowRect window,
                                                                  int max_period);

// n-dimensional helper behind the probe: survivors among explicit candidate
// vectors, tested against the centers found in the box [lo, hi).
std::vector<CoordVec> probe_box(const CenterSet& centers, const CoordVec& lo, const CoordVec& hi,
                                const std::vector<CoordVec>& candidates);

// Plain PGM (P2) rendering of the multiplicity grid.
void write_multiplicity_pgm(const WindowReport& report, const std::string& path);

}  // namespace leecodes
