#include "leecodes/tilings.hpp"

#include <algorithm>
#include <fstream>

namespace leecodes {

CenterSet build_center_set(Sequence s, int R) { return CenterSet::from_sequence(std::move(s), R); }

namespace {

WindowReport window_census(const CenterSet& centers, WindowRect w, int axis,
                           const Limits& limits) {
    const int R = centers.anticode().R;
    const int margin = 2 * (R + 1);
    WindowReport report;
    report.window = w;
    report.margin = margin;
    report.axis = axis;
    const std::int64_t width = w.width(), height = w.height();
    if (width <= 0 || height <= 0) throw std::invalid_argument("window is empty");
    if (static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(height) >
        limits.max_points)
        throw CapExceeded("verify_window_tiling: window exceeds cap");
    if (std::min(width, height) < 4 * (R + 1))
        throw std::invalid_argument("verify_window_tiling: window side below 4(R+1)");

    report.multiplicity.assign(static_cast<std::size_t>(width * height), 0);
    AnticodeSpec spec = centers.anticode();
    spec.axis = axis;
    const auto offsets = anticode_offsets(spec.n, spec.R, spec.axis, limits);

    CoordVec p(2);
    for (std::int64_t x = w.x0 - margin; x < w.x1 + margin; ++x) {
        for (std::int64_t y = w.y0 - margin; y < w.y1 + margin; ++y) {
            p[0] = x;
            p[1] = y;
            if (!centers.contains(p)) continue;
            ++report.centers_used;
            for (const auto& off : offsets) {
                std::int64_t cx = x + off[0], cy = y + off[1];
                if (cx < w.x0 || cx >= w.x1 || cy < w.y0 || cy >= w.y1) continue;
                auto& cell = report.multiplicity[static_cast<std::size_t>((cy - w.y0) * width +
                                                                          (cx - w.x0))];
                if (cell < 255) ++cell;
            }
        }
    }
    report.exact_cover = true;
    for (auto cell : report.multiplicity) {
        ++report.histogram[cell];
        if (cell != 1) report.exact_cover = false;
    }
    return report;
}

}  // namespace

WindowReport verify_window_tiling(const CenterSet& centers, WindowRect window,
                                  std::optional<int> axis, const Limits& limits) {
    if (centers.dim() != 2)
        throw std::invalid_argument("verify_window_tiling: 2-D center sets only");
    if (axis.has_value()) return window_census(centers, window, *axis, limits);
    WindowReport first = window_census(centers, window, 1, limits);
    if (first.exact_cover) return first;
    WindowReport second = window_census(centers, window, 2, limits);
    return second.exact_cover ? second : first;
}

SequencePeriodicity analyze_sequence_periodicity(const Sequence& s, int R, std::int64_t i0,
                                                 std::int64_t i1) {
    if (i1 <= i0) throw std::invalid_argument("analyze_sequence_periodicity: empty window");
    const int q = R + 1;
    SequencePeriodicity result;
    const std::int64_t len = i1 - i0;
    // A relation found with tau close to the window length is supported by
    // almost no positions (tau = len-1 holds vacuously for every sequence),
    // so candidate shifts are capped at half the window: every reported
    // relation is witnessed by at least len/2 index pairs.
    for (std::int64_t tau = 1; tau <= len / 2; ++tau) {
        int rho = ((s.at(i0) - s.at(i0 + tau)) % q + q) % q;
        bool holds = true;
        for (std::int64_t i = i0; i + tau < i1; ++i) {
            if (((s.at(i) - s.at(i + tau)) % q + q) % q != rho) {
                holds = false;
                break;
            }
        }
        if (!holds) continue;
        if (!result.shift_relation) {
            result.shift_relation = true;
            result.shift_witness = {tau, rho};
        }
        if (rho != 0 && !result.nonzero_rho_relation) {
            result.nonzero_rho_relation = true;
            result.nonzero_rho_witness = {tau, rho};
        }
        if (result.shift_relation && result.nonzero_rho_relation) break;
    }
    return result;
}

bool sequence_nonperiodic(const Sequence& s, int R, std::int64_t i0, std::int64_t i1) {
    return !analyze_sequence_periodicity(s, R, i0, i1).shift_relation;
}

std::vector<CoordVec> probe_box(const CenterSet& centers, const CoordVec& lo, const CoordVec& hi,
                                const std::vector<CoordVec>& candidates) {
    const int n = centers.dim();
    if (static_cast<int>(lo.size()) != n || static_cast<int>(hi.size()) != n)
        throw std::invalid_argument("probe_box: box dimension mismatch");

    // Collect the centers inside the box once.
    std::vector<CoordVec> found;
    CoordVec p(lo);
    auto advance = [&]() {
        int i = n - 1;
        while (i >= 0) {
            if (++p[static_cast<std::size_t>(i)] < hi[static_cast<std::size_t>(i)]) return true;
            p[static_cast<std::size_t>(i)] = lo[static_cast<std::size_t>(i)];
            --i;
        }
        return false;
    };
    while (true) {
        if (centers.contains(p)) found.push_back(p);
        if (!advance()) break;
    }

    std::vector<CoordVec> survivors;
    CoordVec shifted(static_cast<std::size_t>(n));
    for (const auto& v : candidates) {
        bool zero = std::all_of(v.begin(), v.end(), [](Coord c) { return c == 0; });
        if (zero) continue;
        bool ok = true;
        // A period maps overlap centers onto centers in both directions; a
        // single counterexample refutes the candidate.
        for (const auto& c : found) {
            bool in_overlap = true;
            for (int i = 0; i < n && in_overlap; ++i) {
                std::int64_t t = c[static_cast<std::size_t>(i)] + v[static_cast<std::size_t>(i)];
                if (t < lo[static_cast<std::size_t>(i)] || t >= hi[static_cast<std::size_t>(i)])
                    in_overlap = false;
            }
            if (!in_overlap) continue;
            for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] = c[i] + v[i];
            if (!centers.contains(shifted)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (const auto& c : found) {
            bool in_overlap = true;
            for (int i = 0; i < n && in_overlap; ++i) {
                std::int64_t t = c[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i)];
                if (t < lo[static_cast<std::size_t>(i)] || t >= hi[static_cast<std::size_t>(i)])
                    in_overlap = false;
            }
            if (!in_overlap) continue;
            for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] = c[i] - v[i];
            if (!centers.contains(shifted)) {
                ok = false;
                break;
            }
        }
        if (ok) survivors.push_back(v);
    }
    return survivors;
}

std::vector<std::array<std::int64_t, 2>> tiling_periodicity_probe(const CenterSet& centers,
                                                                  WindowRect window,
                                                                  int max_period) {
    if (centers.dim() != 2)
        throw std::invalid_argument("tiling_periodicity_probe: 2-D center sets only");
    if (max_period < 1) throw std::invalid_argument("tiling_periodicity_probe: max_period < 1");
    if (window.width() < 4 * max_period || window.height() < 4 * max_period)
        throw std::invalid_argument(
            "tiling_periodicity_probe: window too small for the candidate norm");
    std::vector<CoordVec> candidates;
    for (std::int64_t vx = -max_period; vx <= max_period; ++vx)
        for (std::int64_t vy = -max_period; vy <= max_period; ++vy)
            if (vx != 0 || vy != 0) candidates.push_back({vx, vy});
    auto survivors = probe_box(centers, {window.x0, window.y0}, {window.x1, window.y1}, candidates);
    std::vector<std::array<std::int64_t, 2>> out;
    out.reserve(survivors.size());
    for (const auto& v : survivors) out.push_back({v[0], v[1]});
    return out;
}

void write_multiplicity_pgm(const WindowReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_multiplicity_pgm: cannot open " + path);
    const std::int64_t width = report.window.width(), height = report.window.height();
    std::uint8_t maxv = 1;
    for (auto c : report.multiplicity) maxv = std::max(maxv, c);
    out << "P2\n" << width << " " << height << "\n" << static_cast<int>(maxv) << "\n";
    for (std::int64_t row = height - 1; row >= 0; --row) {
        for (std::int64_t col = 0; col < width; ++col) {
            out << static_cast<int>(report.multiplicity[static_cast<std::size_t>(row * width + col)]);
            out << (col + 1 == width ? '\n' : ' ');
        }
    }
}

}  // namespace leecodes
