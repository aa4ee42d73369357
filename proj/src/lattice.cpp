#include "leecodes/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace leecodes {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

Lattice::Lattice(std::vector<CoordVec> rows) {
    n_ = static_cast<int>(rows.size());
    if (n_ < 1) throw std::invalid_argument("Lattice: need n >= 1");
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != n_)
            throw std::invalid_argument("Lattice: generator matrix must be square");
    rows_ = std::move(rows);

    // Row-style Hermite normal form: upper triangular, positive diagonal,
    // entries above each pivot reduced into [0, pivot).
    hnf_.assign(static_cast<std::size_t>(n_), std::vector<BigInt>(static_cast<std::size_t>(n_)));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            hnf_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                BigInt(static_cast<long>(rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));

    auto& H = hnf_;
    const std::size_t n = static_cast<std::size_t>(n_);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && H[pivot][col] == 0) ++pivot;
        if (pivot == n) throw StructuralError("Lattice: degenerate generator matrix (det = 0)");
        std::swap(H[col], H[pivot]);
        for (std::size_t i = col + 1; i < n; ++i) {
            while (H[i][col] != 0) {
                BigInt q = floor_div(H[col][col], H[i][col]);
                if (q != 0)
                    for (std::size_t j = col; j < n; ++j) H[col][j] -= q * H[i][j];
                std::swap(H[col], H[i]);
            }
        }
        if (H[col][col] < 0)
            for (std::size_t j = col; j < n; ++j) H[col][j] = -H[col][j];
        for (std::size_t i = 0; i < col; ++i) {
            BigInt q = floor_div(H[i][col], H[col][col]);
            if (q != 0)
                for (std::size_t j = col; j < n; ++j) H[i][j] -= q * H[col][j];
        }
    }
    volume_ = 1;
    for (std::size_t i = 0; i < n; ++i) volume_ *= H[i][i];
    if (volume_ == 0) throw StructuralError("Lattice: degenerate generator matrix (det = 0)");
}

bool Lattice::contains(CoordSpan x) const {
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("Lattice: dimension mismatch");
    const std::size_t n = static_cast<std::size_t>(n_);
    std::vector<BigInt> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = BigInt(static_cast<long>(x[i]));
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] % hnf_[i][i] != 0) return false;
        BigInt q = v[i] / hnf_[i][i];
        if (q != 0)
            for (std::size_t j = i; j < n; ++j) v[j] -= q * hnf_[i][j];
    }
    return true;
}

std::uint64_t Lattice::coset_id(CoordSpan x) const {
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("Lattice: dimension mismatch");
    if (volume_ > BigInt(static_cast<unsigned long>(1) << 62))
        throw CapExceeded("Lattice: volume too large for coset ids");
    const std::size_t n = static_cast<std::size_t>(n_);
    std::vector<BigInt> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = BigInt(static_cast<long>(x[i]));
    std::uint64_t id = 0;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt r = v[i] % hnf_[i][i];
        if (r < 0) r += hnf_[i][i];
        BigInt q = (v[i] - r) / hnf_[i][i];
        if (q != 0)
            for (std::size_t j = i; j < n; ++j) v[j] -= q * hnf_[i][j];
        id = id * hnf_[i][i].get_ui() + r.get_ui();
    }
    return id;
}

Coord Lattice::period() const {
    if (!fits_u64(volume_) || to_u64(volume_) > (1ull << 40))
        throw CapExceeded("Lattice: volume too large for period search");
    const std::int64_t vol = static_cast<std::int64_t>(to_u64(volume_));
    std::vector<std::int64_t> divisors;
    for (std::int64_t d = 1; d * d <= vol; ++d)
        if (vol % d == 0) {
            divisors.push_back(d);
            if (d != vol / d) divisors.push_back(vol / d);
        }
    std::sort(divisors.begin(), divisors.end());

    Coord period = 1;
    CoordVec e(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
        e.assign(static_cast<std::size_t>(n_), 0);
        Coord axis_min = 0;
        for (std::int64_t d : divisors) {
            e[static_cast<std::size_t>(i)] = d;
            if (contains(e)) {
                axis_min = d;
                break;
            }
        }
        if (axis_min == 0) throw StructuralError("Lattice: no axis period found");
        period = std::lcm(period, axis_min);
    }
    return period;
}

std::int64_t Lattice::min_manhattan_weight(const Limits& limits) const {
    std::int64_t upper = period();
    for (const auto& r : rows_) upper = std::min(upper, manhattan_weight(r));
    if (upper <= 1) return upper;
    for (const auto& off : manhattan_ball_offsets(n_, static_cast<int>(upper - 1), limits)) {
        if (manhattan_weight(off) == 0) continue;
        if (contains(off)) return manhattan_weight(off);  // offsets are weight-sorted
    }
    return upper;
}

std::optional<std::int64_t> Lattice::min_lee_weight_mod(Coord m, const Limits& limits) const {
    auto in_mZ = [&](CoordSpan v) {
        for (Coord x : v)
            if (mod_reduce(x, m) != 0) return false;
        return true;
    };
    std::int64_t upper = -1;
    for (const auto& r : rows_)
        if (!in_mZ(r)) upper = upper < 0 ? manhattan_weight(r) : std::min(upper, manhattan_weight(r));
    if (upper < 0) return std::nullopt;  // lattice inside m*Z^n: trivial quotient
    for (const auto& off : manhattan_ball_offsets(n_, static_cast<int>(upper - 1), limits)) {
        if (manhattan_weight(off) == 0 || in_mZ(off)) continue;
        if (contains(off)) return manhattan_weight(off);
    }
    return upper;
}

bool Lattice::all_rows_even_weight() const {
    for (const auto& r : rows_)
        if (manhattan_weight(r) % 2 != 0) return false;
    return true;
}

LatticeCode reduce_to_modular(const Lattice& lattice, const Limits& limits, bool materialize) {
    LatticeCode lc{lattice, lattice.period(), 0, std::nullopt};
    const int n = lattice.dim();
    BigInt space = big_pow(lc.m, static_cast<unsigned long>(n));
    lc.quotient_size = exact_div(space, lattice.volume());

    if (!materialize) return lc;
    if (lc.quotient_size > BigInt(static_cast<unsigned long>(limits.max_points)))
        throw CapExceeded("reduce_to_modular: quotient size exceeds cap");
    if (!encoding_fits(n, lc.m) || space > BigInt(1'000'000'000ul)) {
        // Too large to walk; leave the quotient unmaterialized.
        return lc;
    }

    // Closure of the generator rows (mod m) under addition, walked as a
    // worklist with a bitmap over Z_m^n.
    const std::uint64_t total = to_u64(space);
    std::vector<bool> seen(total, false);
    std::vector<std::uint64_t> found;
    found.reserve(static_cast<std::size_t>(to_u64(lc.quotient_size)));
    std::vector<CoordVec> gens;
    for (const auto& r : lattice.rows()) {
        CoordVec g(r);
        for (auto& x : g) x = mod_reduce(x, lc.m);
        gens.push_back(std::move(g));
    }
    seen[0] = true;
    found.push_back(0);
    CoordVec buf(static_cast<std::size_t>(n)), sum(static_cast<std::size_t>(n));
    for (std::size_t head = 0; head < found.size(); ++head) {
        decode_word(found[head], n, lc.m, buf);
        for (const auto& g : gens) {
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = mod_reduce(buf[i] + g[i], lc.m);
            std::uint64_t key = encode_word(sum, lc.m);
            if (!seen[key]) {
                seen[key] = true;
                found.push_back(key);
            }
        }
    }
    if (BigInt(static_cast<unsigned long>(found.size())) != lc.quotient_size)
        throw StructuralError("reduce_to_modular: quotient size mismatch");
    auto code = ModularCode::from_encoded(n, lc.m, Metric::Lee, std::move(found));
    code.set_linear_hint(true);
    lc.quotient = std::move(code);
    return lc;
}

std::int64_t min_distance(const LatticeCode& code, Metric metric, const Limits& limits) {
    if (metric == Metric::Manhattan) return code.lattice.min_manhattan_weight(limits);
    if (metric != Metric::Lee) throw std::invalid_argument("min_distance: Lee or Manhattan only");
    auto w = code.lattice.min_lee_weight_mod(code.m, limits);
    if (!w.has_value())
        throw StructuralError("min_distance: quotient code has a single codeword");
    return *w;
}

TranslateFamily cosets(const LatticeCode& code, const Limits& limits) {
    const int n = code.lattice.dim();
    const Coord m = code.m;
    if (!fits_u64(code.lattice.volume()))
        throw CapExceeded("cosets: lattice volume exceeds cap");
    const std::uint64_t ncosets = to_u64(code.lattice.volume());
    if (ncosets > limits.max_points) throw CapExceeded("cosets: coset count exceeds cap");

    const bool even_alphabet = m % 2 == 0;
    const bool all_even = code.lattice.all_rows_even_weight();

    TranslateFamily fam;
    fam.n = n;
    fam.m = m;
    fam.base_size = code.quotient_size;
    if (code.quotient.has_value()) fam.base = std::make_shared<ModularCode>(*code.quotient);

    std::vector<char> found(ncosets, 0);
    std::size_t remaining = ncosets;
    for (int r = 0; remaining > 0; ++r) {
        auto shell = modular_ball_offsets(n, m, r, Metric::Lee, limits);
        for (const auto& w : shell) {
            if (lee_weight(w, m) != r) continue;
            std::uint64_t id = code.lattice.coset_id(w);
            if (found[id]) continue;
            found[id] = 1;
            fam.vectors.push_back(w);
            --remaining;
            if (remaining == 0) break;
        }
    }
    for (const auto& v : fam.vectors) {
        if (fam.base) {
            fam.labels.push_back(parity_of_translate(translate_words(*fam.base, v), m));
        } else if (even_alphabet && all_even) {
            // Weight parity is additive for even m, and every codeword is even.
            fam.labels.push_back(lee_weight(v, m) % 2 == 0 ? Parity::Even : Parity::Odd);
        } else {
            throw CapExceeded("cosets: parity labels need a materialized quotient");
        }
    }
    fam.partition = true;
    return fam;
}

TranslateFamily even_translates(const LatticeCode& code, const Limits& limits) {
    const int n = code.lattice.dim();
    const Coord m = code.m;
    if (m % 2 != 0) throw StructuralError("even_translates: alphabet must be even");
    if (exact_div(big_pow(m, static_cast<unsigned long>(n)), BigInt(4 * n)) != code.quotient_size)
        throw StructuralError("even_translates: |C| != m^n/(4n)");
    if (min_distance(code, Metric::Lee, limits) < 4)
        throw StructuralError("even_translates: minimum Lee distance below 4");
    if (!code.lattice.all_rows_even_weight())
        throw StructuralError("even_translates: lattice has an odd-weight generator");

    TranslateFamily fam;
    fam.n = n;
    fam.m = m;
    fam.base_size = code.quotient_size;
    if (code.quotient.has_value()) fam.base = std::make_shared<ModularCode>(*code.quotient);
    auto offsets = even_translate_offsets_d4(n);
    CoordVec diff(static_cast<std::size_t>(n));
    for (std::size_t a = 0; a < offsets.size(); ++a)
        for (std::size_t b = a + 1; b < offsets.size(); ++b) {
            for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = offsets[a][i] - offsets[b][i];
            if (code.lattice.contains(diff))
                throw StructuralError("even_translates: translates collide; not diameter perfect");
        }
    for (auto& v : offsets) {
        for (auto& x : v) x = mod_reduce(x, m);
        fam.labels.push_back(Parity::Even);
        fam.vectors.push_back(std::move(v));
    }
    fam.partition = false;
    return fam;
}

}  // namespace leecodes
