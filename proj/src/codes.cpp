#include "leecodes/codes.hpp"

#include <algorithm>
#include <stdexcept>

namespace leecodes {

ModularCode::ModularCode(int n, Coord m, Metric metric, const std::vector<CoordVec>& words) {
    if (n < 1 || m < 1) throw std::invalid_argument("ModularCode: need n >= 1, m >= 1");
    if (!encoding_fits(n, m))
        throw CapExceeded("ModularCode: m^n does not fit the packed representation");
    n_ = n;
    m_ = m;
    metric_ = metric;
    keys_.reserve(words.size());
    for (const auto& w : words) {
        if (static_cast<int>(w.size()) != n)
            throw std::invalid_argument("ModularCode: codeword of wrong length");
        CoordVec r(w);
        for (auto& x : r) x = mod_reduce(x, m);
        keys_.push_back(encode_word(r, m));
    }
    std::sort(keys_.begin(), keys_.end());
    if (std::adjacent_find(keys_.begin(), keys_.end()) != keys_.end())
        throw std::invalid_argument("ModularCode: duplicate codeword");
}

ModularCode ModularCode::from_encoded(int n, Coord m, Metric metric,
                                      std::vector<std::uint64_t> keys) {
    if (n < 1 || m < 1) throw std::invalid_argument("ModularCode: need n >= 1, m >= 1");
    if (!encoding_fits(n, m))
        throw CapExceeded("ModularCode: m^n does not fit the packed representation");
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
        throw std::invalid_argument("ModularCode: duplicate codeword");
    ModularCode c;
    c.n_ = n;
    c.m_ = m;
    c.metric_ = metric;
    c.keys_ = std::move(keys);
    return c;
}

bool ModularCode::contains_encoded(std::uint64_t key) const {
    return std::binary_search(keys_.begin(), keys_.end(), key);
}

bool ModularCode::contains(CoordSpan w) const {
    CoordVec r(w.begin(), w.end());
    for (auto& x : r) x = mod_reduce(x, m_);
    return contains_encoded(encode_word(r, m_));
}

std::vector<CoordVec> ModularCode::words() const {
    std::vector<CoordVec> out;
    out.reserve(keys_.size());
    for (auto k : keys_) out.push_back(decode_word(k, n_, m_));
    return out;
}

bool ModularCode::is_linear() const {
    if (linear_.has_value()) return *linear_;
    // Full closure check, quadratic in |C|.
    if (size() > 5000) {
        linear_ = false;
        return false;
    }
    if (!contains_zero()) {
        linear_ = false;
        return false;
    }
    const auto ws = words();
    CoordVec sum(static_cast<std::size_t>(n_));
    for (const auto& a : ws) {
        for (const auto& b : ws) {
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = mod_reduce(a[i] + b[i], m_);
            if (!contains_encoded(encode_word(sum, m_))) {
                linear_ = false;
                return false;
            }
        }
    }
    linear_ = true;
    return true;
}

std::optional<std::int64_t> ModularCode::min_distance(const Limits& limits) const {
    if (size() < 2) return std::nullopt;
    auto dist = [&](CoordSpan a, CoordSpan b) {
        return metric_ == Metric::Hamming ? hamming_distance(a, b) : lee_distance(a, b, m_);
    };
    auto weight = [&](CoordSpan a) {
        if (metric_ == Metric::Hamming) {
            std::int64_t w = 0;
            for (Coord x : a) w += (x != 0) ? 1 : 0;
            return w;
        }
        return lee_weight(a, m_);
    };
    if (is_linear()) {
        std::int64_t best = -1;
        CoordVec buf(static_cast<std::size_t>(n_));
        for (auto k : keys_) {
            if (k == 0) continue;
            decode_word(k, n_, m_, buf);
            std::int64_t w = weight(buf);
            if (best < 0 || w < best) best = w;
        }
        return best;
    }
    // Pairwise scan for small codes.
    if (size() * size() <= 4'000'000) {
        const auto ws = words();
        std::int64_t best = -1;
        for (std::size_t i = 0; i < ws.size(); ++i)
            for (std::size_t j = i + 1; j < ws.size(); ++j) {
                std::int64_t d = dist(ws[i], ws[j]);
                if (best < 0 || d < best) best = d;
            }
        return best;
    }
    // Weight-shell search around each codeword; the first shell with a hit is
    // the minimum, since a hit at shell r realizes distance exactly r. A
    // presence bitmap makes the probes O(1) when the space is small enough.
    std::vector<bool> presence;
    BigInt space = big_pow(m_, static_cast<unsigned long>(n_));
    const bool use_bitmap = space <= BigInt(268'435'456ul);
    if (use_bitmap) {
        presence.assign(static_cast<std::size_t>(to_u64(space)), false);
        for (auto k : keys_) presence[k] = true;
    }
    auto probe_hit = [&](std::uint64_t pk) {
        return use_bitmap ? static_cast<bool>(presence[pk]) : contains_encoded(pk);
    };
    auto offset_weight = [&](CoordSpan off) {
        if (metric_ == Metric::Hamming) {
            std::int64_t w = 0;
            for (Coord x : off) w += (x != 0) ? 1 : 0;
            return w;
        }
        return lee_weight(off, m_);
    };
    const std::int64_t max_dist =
        metric_ == Metric::Hamming ? n_ : static_cast<std::int64_t>(n_) * (m_ / 2);
    CoordVec buf(static_cast<std::size_t>(n_)), probe(static_cast<std::size_t>(n_));
    for (std::int64_t r = 1; r <= max_dist; ++r) {
        auto shell = modular_ball_offsets(n_, m_, static_cast<int>(r), metric_, limits);
        std::erase_if(shell, [&](const CoordVec& off) { return offset_weight(off) != r; });
        for (auto k : keys_) {
            decode_word(k, n_, m_, buf);
            for (const auto& off : shell) {
                for (std::size_t i = 0; i < probe.size(); ++i)
                    probe[i] = mod_reduce(buf[i] + off[i], m_);
                std::uint64_t pk = encode_word(probe, m_);
                if (pk != k && probe_hit(pk)) return r;
            }
        }
    }
    throw std::logic_error("min_distance: no pair found below the metric diameter");
}

ModularCode translate(const ModularCode& code, const Word& v) {
    if (v.n() != code.n() || (v.is_modular() && v.modulus != code.m()))
        throw std::invalid_argument("translate: shape mismatch");
    std::vector<std::uint64_t> keys;
    keys.reserve(code.size());
    CoordVec buf(static_cast<std::size_t>(code.n()));
    for (auto k : code.encoded()) {
        decode_word(k, code.n(), code.m(), buf);
        for (std::size_t i = 0; i < buf.size(); ++i)
            buf[i] = mod_reduce(buf[i] + v.coords[i], code.m());
        keys.push_back(encode_word(buf, code.m()));
    }
    return ModularCode::from_encoded(code.n(), code.m(), code.metric(), std::move(keys));
}

std::vector<CoordVec> translate_words(const ModularCode& code, CoordSpan v) {
    std::vector<CoordVec> out;
    out.reserve(code.size());
    CoordVec buf(static_cast<std::size_t>(code.n()));
    for (auto k : code.encoded()) {
        decode_word(k, code.n(), code.m(), buf);
        CoordVec w(buf);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = mod_reduce(w[i] + v[i], code.m());
        out.push_back(std::move(w));
    }
    return out;
}

namespace {

BigInt space_size(int n, Coord m) { return big_pow(m, static_cast<unsigned long>(n)); }

Parity offset_parity(CoordSpan v, Coord m) {
    std::int64_t w = m == kUnbounded ? manhattan_weight(v) : lee_weight(v, m);
    return (w % 2 == 0) ? Parity::Even : Parity::Odd;
}

}  // namespace

TranslateFamily cosets(const ModularCode& code, const Limits& limits) {
    if (!code.is_linear()) throw std::invalid_argument("cosets: code is not linear");
    const int n = code.n();
    const Coord m = code.m();
    BigInt space = space_size(n, m);
    if (space > BigInt(static_cast<unsigned long>(limits.max_points)))
        throw CapExceeded("cosets: space size exceeds cap");
    const std::uint64_t total = to_u64(space);
    const std::uint64_t ncosets = total / code.size();

    // Enumerate the space in (Lee weight, lex) order; the first unassigned
    // word of a coset is its canonical leader.
    std::vector<std::uint64_t> order(total);
    for (std::uint64_t k = 0; k < total; ++k) order[k] = k;
    std::vector<std::int64_t> wt(total);
    CoordVec buf(static_cast<std::size_t>(n));
    for (std::uint64_t k = 0; k < total; ++k) {
        decode_word(k, n, m, buf);
        wt[k] = lee_weight(buf, m);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint64_t a, std::uint64_t b) { return wt[a] < wt[b]; });

    TranslateFamily fam;
    fam.n = n;
    fam.m = m;
    fam.base = std::make_shared<ModularCode>(code);
    fam.base_size = BigInt(static_cast<unsigned long>(code.size()));
    std::vector<char> assigned(total, 0);
    CoordVec cbuf(static_cast<std::size_t>(n)), sum(static_cast<std::size_t>(n));
    for (std::uint64_t k : order) {
        if (assigned[k]) continue;
        decode_word(k, n, m, buf);
        bool even = true, odd = true;
        for (auto ck : code.encoded()) {
            decode_word(ck, n, m, cbuf);
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = mod_reduce(buf[i] + cbuf[i], m);
            assigned[encode_word(sum, m)] = 1;
            if (lee_weight(sum, m) % 2 == 0) odd = false; else even = false;
        }
        fam.vectors.push_back(buf);
        fam.labels.push_back(even ? Parity::Even : (odd ? Parity::Odd : Parity::Mixed));
        if (fam.vectors.size() == ncosets) break;
    }
    if (fam.vectors.size() != ncosets)
        throw StructuralError("cosets: coset count mismatch; code is not linear over Z_m");
    fam.partition = true;
    return fam;
}

TranslateFamily unit_translate_family(const ModularCode& code, Metric metric,
                                      const Limits& limits) {
    const int n = code.n();
    const Coord m = code.m();
    auto md = code.min_distance(limits);
    if (md.has_value() && *md < 3)
        throw std::invalid_argument("unit_translate_family: minimum distance below 3");

    TranslateFamily fam;
    fam.n = n;
    fam.m = m;
    fam.base = std::make_shared<ModularCode>(code);
    fam.base_size = BigInt(static_cast<unsigned long>(code.size()));
    fam.vectors.push_back(CoordVec(static_cast<std::size_t>(n), 0));
    if (metric == Metric::Lee) {
        if (m < 3) throw std::invalid_argument("unit_translate_family: Lee metric needs m >= 3");
        for (int i = 0; i < n; ++i) {
            CoordVec plus(static_cast<std::size_t>(n), 0), minus(static_cast<std::size_t>(n), 0);
            plus[static_cast<std::size_t>(i)] = 1;
            minus[static_cast<std::size_t>(i)] = m - 1;
            fam.vectors.push_back(std::move(plus));
            fam.vectors.push_back(std::move(minus));
        }
    } else {
        for (int i = 0; i < n; ++i)
            for (Coord a = 1; a < m; ++a) {
                CoordVec v(static_cast<std::size_t>(n), 0);
                v[static_cast<std::size_t>(i)] = a;
                fam.vectors.push_back(std::move(v));
            }
    }
    for (const auto& v : fam.vectors) fam.labels.push_back(offset_parity(v, m));

    // Perfect iff |C| * |ball(1)| = m^n and the minimum distance supports it;
    // the family partitions the space exactly in that case.
    BigInt ball = metric == Metric::Lee ? lee_sphere_size(n, 1) : hamming_sphere_size(n, 1, m);
    bool sizes_match = BigInt(static_cast<unsigned long>(code.size())) * ball == space_size(n, m);
    fam.partition = sizes_match && md.value_or(3) >= 3 &&
                    fam.vectors.size() == static_cast<std::size_t>(to_u64(ball));
    return fam;
}

Parity parity_of_translate(const std::vector<CoordVec>& words, Coord m) {
    bool even = true, odd = true;
    for (const auto& w : words) {
        std::int64_t wt = m == kUnbounded ? manhattan_weight(w) : lee_weight(w, m);
        if (wt % 2 == 0) odd = false; else even = false;
        if (!even && !odd) return Parity::Mixed;
    }
    return even ? Parity::Even : Parity::Odd;
}

Parity parity_of_translate(const ModularCode& code) {
    bool even = true, odd = true;
    CoordVec buf(static_cast<std::size_t>(code.n()));
    for (auto k : code.encoded()) {
        decode_word(k, code.n(), code.m(), buf);
        if (lee_weight(buf, code.m()) % 2 == 0) odd = false; else even = false;
        if (!even && !odd) return Parity::Mixed;
    }
    return even ? Parity::Even : Parity::Odd;
}

std::vector<CoordVec> even_translate_offsets_d4(int n) {
    if (n < 1) throw std::invalid_argument("even_translate_offsets_d4: n < 1");
    std::vector<CoordVec> out;
    CoordVec zero(static_cast<std::size_t>(n), 0);
    out.push_back(zero);
    CoordVec two = zero;
    two[0] = 2;
    out.push_back(two);
    for (int j = 1; j < n; ++j)
        for (Coord sgn : {Coord{1}, Coord{-1}}) {
            CoordVec v = zero;
            v[0] = 1;
            v[static_cast<std::size_t>(j)] = sgn;
            out.push_back(std::move(v));
        }
    return out;
}

std::vector<CoordVec> odd_translate_offsets_d4(int n) {
    std::vector<CoordVec> out;
    for (int i = 0; i < n; ++i)
        for (Coord sgn : {Coord{1}, Coord{-1}}) {
            CoordVec v(static_cast<std::size_t>(n), 0);
            v[static_cast<std::size_t>(i)] = sgn;
            out.push_back(std::move(v));
        }
    return out;
}

TranslateFamily even_translates(const ModularCode& code, const Limits& limits) {
    const int n = code.n();
    const Coord m = code.m();
    if (m % 2 != 0)
        throw StructuralError("even_translates: alphabet must be even for even distance");
    if (m < 4) throw StructuralError("even_translates: need m >= 4 to separate translates");
    BigInt expected = exact_div(space_size(n, m), BigInt(4 * n));
    if (BigInt(static_cast<unsigned long>(code.size())) != expected)
        throw StructuralError("even_translates: |C| != m^n/(4n)");
    if (code.size() < 2)
        throw StructuralError("even_translates: degenerate code cannot witness distance 4");
    auto md = code.min_distance(limits);
    if (md.has_value() && *md < 4)
        throw StructuralError("even_translates: minimum Lee distance below 4");
    if (parity_of_translate(code) != Parity::Even)
        throw StructuralError("even_translates: code has a codeword of odd Lee weight");

    TranslateFamily fam;
    fam.n = n;
    fam.m = m;
    fam.base = std::make_shared<ModularCode>(code);
    fam.base_size = BigInt(static_cast<unsigned long>(code.size()));
    CoordVec diff(static_cast<std::size_t>(n));
    auto offsets = even_translate_offsets_d4(n);
    // Distinct translates: offsets must land in pairwise different cosets.
    for (std::size_t a = 0; a < offsets.size(); ++a)
        for (std::size_t b = a + 1; b < offsets.size(); ++b) {
            for (std::size_t i = 0; i < diff.size(); ++i)
                diff[i] = mod_reduce(offsets[a][i] - offsets[b][i], m);
            if (code.contains(diff))
                throw StructuralError("even_translates: translates collide; not diameter perfect");
        }
    for (auto& v : offsets) {
        for (auto& x : v) x = mod_reduce(x, m);
        fam.labels.push_back(Parity::Even);
        fam.vectors.push_back(std::move(v));
    }
    fam.partition = false;  // the even translates alone cover only half the space
    return fam;
}

ModularCode extend_binary(const ModularCode& code) {
    if (code.m() != 2) throw std::invalid_argument("extend_binary: code must be binary");
    std::vector<std::uint64_t> keys;
    keys.reserve(code.size());
    for (auto k : code.encoded()) {
        std::uint64_t parity = static_cast<std::uint64_t>(__builtin_popcountll(k) & 1);
        keys.push_back((k << 1) | parity);
    }
    return ModularCode::from_encoded(code.n() + 1, 2, code.metric(), std::move(keys));
}

ModularCode puncture_binary(const ModularCode& code) {
    if (code.m() != 2) throw std::invalid_argument("puncture_binary: code must be binary");
    if (code.n() < 2) throw std::invalid_argument("puncture_binary: length must exceed 1");
    std::vector<std::uint64_t> keys;
    keys.reserve(code.size());
    for (auto k : code.encoded()) {
        if (__builtin_popcountll(k) & 1)
            throw std::invalid_argument("puncture_binary: codeword of odd weight present");
        keys.push_back(k >> 1);
    }
    return ModularCode::from_encoded(code.n() - 1, 2, code.metric(), std::move(keys));
}

}  // namespace leecodes
