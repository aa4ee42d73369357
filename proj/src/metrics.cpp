#include "leecodes/metrics.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>

namespace leecodes {

std::int64_t lee_distance(CoordSpan x, CoordSpan y, Coord m) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        Coord a = mod_reduce(x[i] - y[i], m);
        d += std::min(a, m - a);
    }
    return d;
}

std::int64_t lee_distance(const Word& x, const Word& y) {
    require_same_shape(x, y);
    if (!x.is_modular()) throw std::invalid_argument("lee_distance needs modular words");
    return lee_distance(x.coords, y.coords, x.modulus);
}

std::int64_t manhattan_distance(CoordSpan x, CoordSpan y) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += std::abs(x[i] - y[i]);
    return d;
}

std::int64_t manhattan_distance(const Word& x, const Word& y) {
    require_same_shape(x, y);
    if (x.is_modular()) throw std::invalid_argument("manhattan_distance needs words over Z");
    return manhattan_distance(x.coords, y.coords);
}

std::int64_t hamming_distance(CoordSpan x, CoordSpan y) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += (x[i] != y[i]) ? 1 : 0;
    return d;
}

std::int64_t hamming_distance(const Word& x, const Word& y) {
    require_same_shape(x, y);
    return hamming_distance(x.coords, y.coords);
}

std::int64_t lee_weight(CoordSpan x, Coord m) {
    std::int64_t w = 0;
    for (Coord a : x) {
        Coord r = mod_reduce(a, m);
        w += std::min(r, m - r);
    }
    return w;
}

std::int64_t lee_weight(const Word& x) {
    if (!x.is_modular()) return manhattan_weight(x.coords);
    return lee_weight(x.coords, x.modulus);
}

std::int64_t manhattan_weight(CoordSpan x) {
    std::int64_t w = 0;
    for (Coord a : x) w += std::abs(a);
    return w;
}

std::int64_t manhattan_weight(const Word& x) { return manhattan_weight(x.coords); }

std::int64_t distance(const Word& x, const Word& y, Metric metric) {
    switch (metric) {
        case Metric::Lee: return lee_distance(x, y);
        case Metric::Manhattan: return manhattan_distance(x, y);
        case Metric::Hamming: return hamming_distance(x, y);
    }
    throw std::logic_error("unreachable");
}

BigInt hamming_sphere_size(int n, int R, Coord m) {
    if (R < 0) throw std::invalid_argument("hamming_sphere_size: R < 0");
    if (n < 1 || m < 2) throw std::invalid_argument("hamming_sphere_size: need n >= 1, m >= 2");
    R = std::min(R, n);
    BigInt total = 0;
    for (int i = 0; i <= R; ++i) total += binomial(n, i) * big_pow(m - 1, static_cast<unsigned long>(i));
    return total;
}

BigInt lee_sphere_size(int n, int R) {
    if (n < 1 || R < 0) throw std::invalid_argument("lee_sphere_size: need n >= 1, R >= 0");
    BigInt total = 0;
    for (int i = 0; i <= std::min(n, R); ++i)
        total += big_pow(BigInt(2), static_cast<unsigned long>(i)) * binomial(n, i) * binomial(R, i);
    return total;
}

BigInt anticode_size(int n, int R) {
    if (n < 1 || R < 0) throw std::invalid_argument("anticode_size: need n >= 1, R >= 0");
    BigInt total = 0;
    for (int i = 0; i <= std::min(n - 1, R); ++i)
        total += big_pow(BigInt(2), static_cast<unsigned long>(i + 1)) * binomial(n - 1, i) *
                 binomial(R + 1, i + 1);
    return total;
}

namespace {

void check_cap(const BigInt& predicted, const Limits& limits, const char* what) {
    if (predicted > BigInt(static_cast<unsigned long>(limits.max_points)))
        throw CapExceeded(std::string(what) + ": predicted size exceeds configured cap");
}

// Recursive generation of all offsets with L1 weight <= R, coordinates free in sign.
void gen_manhattan(int pos, int n, int budget, CoordVec& cur, std::vector<CoordVec>& out) {
    if (pos == n) {
        out.push_back(cur);
        return;
    }
    for (int v = -budget; v <= budget; ++v) {
        cur[static_cast<std::size_t>(pos)] = v;
        gen_manhattan(pos + 1, n, budget - std::abs(v), cur, out);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
}

struct WeightLexLess {
    bool operator()(const CoordVec& a, const CoordVec& b) const {
        auto wa = manhattan_weight(a), wb = manhattan_weight(b);
        if (wa != wb) return wa < wb;
        return a < b;
    }
};

}  // namespace

std::vector<CoordVec> manhattan_ball_offsets(int n, int R, const Limits& limits) {
    check_cap(lee_sphere_size(n, R), limits, "manhattan_ball_offsets");
    std::vector<CoordVec> out;
    CoordVec cur(static_cast<std::size_t>(n), 0);
    gen_manhattan(0, n, R, cur, out);
    std::sort(out.begin(), out.end(), WeightLexLess{});
    return out;
}

std::vector<CoordVec> modular_ball_offsets(int n, Coord m, int R, Metric metric,
                                           const Limits& limits) {
    if (m < 1) throw std::invalid_argument("modular_ball_offsets: need m >= 1");
    if (metric == Metric::Manhattan)
        throw std::invalid_argument("modular_ball_offsets: Manhattan metric is for Z^n");
    if (metric == Metric::Lee)
        check_cap(lee_sphere_size(n, R), limits, "modular_ball_offsets");
    else
        check_cap(hamming_sphere_size(n, R, std::max<Coord>(m, 2)), limits, "modular_ball_offsets");

    // Per-coordinate admissible values, combined with a weight budget. For the
    // Lee metric the per-value cost is min(v, m-v); for Hamming it is 1.
    std::vector<CoordVec> out;
    CoordVec cur(static_cast<std::size_t>(n), 0);
    auto cost = [&](Coord v) -> std::int64_t {
        if (metric == Metric::Lee) return std::min(v, m - v);
        return v == 0 ? 0 : 1;
    };
    auto rec = [&](auto&& self, int pos, std::int64_t budget) -> void {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (Coord v = 0; v < m; ++v) {
            std::int64_t c = cost(v);
            if (c > budget) continue;
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, budget - c);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, R);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CoordVec> anticode_offsets(int n, int R, int axis, const Limits& limits) {
    if (axis < 1 || axis > n) throw std::invalid_argument("anticode_offsets: axis out of range");
    check_cap(anticode_size(n, R), limits, "anticode_offsets");

    std::set<CoordVec> grown;
    CoordVec zero(static_cast<std::size_t>(n), 0);
    CoordVec seed = zero;
    seed[static_cast<std::size_t>(axis - 1)] = 1;
    grown.insert(zero);
    grown.insert(seed);
    for (int step = 0; step < R; ++step) {
        std::set<CoordVec> next = grown;
        for (const auto& p : grown) {
            for (int i = 0; i < n; ++i) {
                for (Coord d : {Coord{-1}, Coord{1}}) {
                    CoordVec q = p;
                    q[static_cast<std::size_t>(i)] += d;
                    next.insert(std::move(q));
                }
            }
        }
        grown = std::move(next);
    }
    std::vector<CoordVec> out(grown.begin(), grown.end());
    std::sort(out.begin(), out.end(), WeightLexLess{});
    return out;
}

std::vector<Word> enumerate_sphere(const Word& center, int R, Metric metric,
                                   const Limits& limits) {
    if (R < 0) throw std::invalid_argument("enumerate_sphere: R < 0");
    std::vector<Word> out;
    if (center.is_modular()) {
        if (metric == Metric::Manhattan)
            throw std::invalid_argument("enumerate_sphere: Manhattan metric needs words over Z");
        const Coord m = center.modulus;
        for (const auto& off : modular_ball_offsets(center.n(), m, R, metric, limits)) {
            CoordVec w(center.coords);
            for (std::size_t i = 0; i < w.size(); ++i) w[i] = mod_reduce(w[i] + off[i], m);
            out.push_back(Word::modular(std::move(w), m));
        }
    } else {
        if (metric == Metric::Lee)
            throw std::invalid_argument("enumerate_sphere: Lee metric needs modular words");
        if (metric == Metric::Hamming)
            throw std::invalid_argument("enumerate_sphere: Hamming sphere over Z is infinite");
        for (const auto& off : manhattan_ball_offsets(center.n(), R, limits)) {
            CoordVec w(center.coords);
            for (std::size_t i = 0; i < w.size(); ++i) w[i] += off[i];
            out.push_back(Word::integer(std::move(w)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> enumerate_anticode(const AnticodeSpec& spec, const Word& anchor,
                                     const Limits& limits) {
    if (spec.n != anchor.n()) throw std::invalid_argument("enumerate_anticode: dimension mismatch");
    if (spec.R < 0) throw std::invalid_argument("enumerate_anticode: R < 0");
    std::vector<Word> out;
    if (spec.diameter_parity == DiameterParity::Even) {
        Metric metric = anchor.is_modular() ? Metric::Lee : Metric::Manhattan;
        return enumerate_sphere(anchor, spec.R, metric, limits);
    }
    const auto offsets = anticode_offsets(spec.n, spec.R, spec.axis, limits);
    for (const auto& off : offsets) {
        CoordVec w(anchor.coords);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] += off[i];
        if (anchor.is_modular()) {
            out.push_back(Word::modular(std::move(w), anchor.modulus));
        } else {
            out.push_back(Word::integer(std::move(w)));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace leecodes
