#include "leecodes/constructions.hpp"

#include <stdexcept>

#include "leecodes/verify.hpp"

namespace leecodes {

ModularCode lee_single_error_code(int n, Coord tau, const Limits& limits) {
    if (n < 1 || tau < 1) throw std::invalid_argument("lee_single_error_code: need n >= 1, tau >= 1");
    const Coord p = 2 * static_cast<Coord>(n) + 1;
    const Coord m = tau * p;
    BigInt count = big_pow(m, static_cast<unsigned long>(n - 1)) * tau;
    if (count > BigInt(static_cast<unsigned long>(limits.max_points)))
        throw CapExceeded("lee_single_error_code: code size exceeds cap");
    if (!encoding_fits(n, m))
        throw CapExceeded("lee_single_error_code: m^n too large to materialize");

    // n is invertible mod 2n+1; solve the last coordinate from the prefix.
    Coord n_inv = 0;
    for (Coord c = 1; c < p; ++c)
        if (mod_reduce(static_cast<Coord>(n) * c, p) == 1) {
            n_inv = c;
            break;
        }

    std::vector<std::uint64_t> keys;
    keys.reserve(static_cast<std::size_t>(to_u64(count)));
    CoordVec w(static_cast<std::size_t>(n), 0);
    const std::uint64_t prefixes =
        n == 1 ? 1 : to_u64(big_pow(m, static_cast<unsigned long>(n - 1)));
    for (std::uint64_t pk = 0; pk < prefixes; ++pk) {
        if (n > 1) decode_word(pk, n - 1, m, std::span<Coord>(w.data(), static_cast<std::size_t>(n - 1)));
        Coord syndrome = 0;
        for (int i = 0; i + 1 < n; ++i)
            syndrome = mod_reduce(syndrome + (i + 1) * w[static_cast<std::size_t>(i)], p);
        Coord base = mod_reduce(-syndrome * n_inv, p);
        for (Coord k = 0; k < tau; ++k) {
            w[static_cast<std::size_t>(n - 1)] = base + k * p;
            keys.push_back(encode_word(w, m));
        }
    }
    auto code = ModularCode::from_encoded(n, m, Metric::Lee, std::move(keys));
    code.set_linear_hint(true);
    auto md = code.min_distance(limits);
    if (md.has_value() && *md < 3)
        throw std::logic_error("lee_single_error_code: minimum distance self-check failed");
    if (BigInt(static_cast<unsigned long>(code.size())) * p !=
        big_pow(m, static_cast<unsigned long>(n)))
        throw std::logic_error("lee_single_error_code: sphere-packing identity failed");
    return code;
}

Coord smallest_perfect_alphabet(int n) {
    if (n < 1) throw std::invalid_argument("smallest_perfect_alphabet: n < 1");
    Coord v = 2 * static_cast<Coord>(n) + 1;
    Coord radical = 1;
    for (Coord f = 2; f * f <= v; ++f) {
        if (v % f == 0) {
            radical *= f;
            while (v % f == 0) v /= f;
        }
    }
    if (v > 1) radical *= v;
    return radical;
}

LatticeCode golomb_welch_2d(int R, const Limits& limits) {
    if (R < 1) throw std::invalid_argument("golomb_welch_2d: R < 1");
    const Coord m = 2 * static_cast<Coord>(R) * R + 2 * R + 1;
    Lattice lattice({{R + 1, R}, {-R, R + 1}});
    if (lattice.volume() != BigInt(static_cast<long>(m)))
        throw std::logic_error("golomb_welch_2d: volume mismatch");
    LatticeCode code = reduce_to_modular(lattice, limits);
    if (code.m != m) throw std::logic_error("golomb_welch_2d: unexpected period");
    auto cert = is_perfect(*code.quotient, R, VerifyMode::Exhaustive, limits);
    if (!cert.pass)
        throw std::logic_error("golomb_welch_2d: cover self-check failed: " + cert.detail);
    return code;
}

Lattice diameter4_lattice(int n) {
    if (n < 2) throw std::invalid_argument("diameter4_lattice: n < 2");
    std::vector<CoordVec> rows(static_cast<std::size_t>(n),
                               CoordVec(static_cast<std::size_t>(n), 0));
    for (int i = 0; i + 1 < n; ++i) {
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n - 1)] = 2 * i + 3;
    }
    rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)] = 4 * static_cast<Coord>(n);
    Lattice lattice(std::move(rows));
    if (lattice.volume() != 4 * n || lattice.min_manhattan_weight() != 4)
        throw std::logic_error("diameter4_lattice: self-check failed");
    return lattice;
}

Lattice diameter_2d_family(int R, int i) {
    if (R < 0 || i < 0 || i > R) throw std::invalid_argument("diameter_2d_family: need 0 <= i <= R");
    const Coord Rp = R + 1;
    Lattice lattice({{Rp + i, Rp - i}, {i, 2 * Rp - i}});
    if (lattice.volume() != 2 * Rp * Rp || lattice.min_manhattan_weight() != 2 * Rp)
        throw std::logic_error("diameter_2d_family: self-check failed");
    return lattice;
}

Lattice minkowski_code() {
    Lattice lattice({{1, -2, 3}, {-2, 3, 1}, {3, 1, -2}});
    if (lattice.volume() != 38 || lattice.min_manhattan_weight() != 6)
        throw std::logic_error("minkowski_code: self-check failed");
    return lattice;
}

ModularCode hamming_code(const FieldTable& field, int r, const Limits& limits) {
    if (r < 2) throw std::invalid_argument("hamming_code: r < 2");
    const int q = field.q();
    BigInt qr = big_pow(q, static_cast<unsigned long>(r));
    BigInt n_big = exact_div(qr - 1, BigInt(q - 1));
    if (n_big > 64) throw CapExceeded("hamming_code: length too large");
    const int n = static_cast<int>(n_big.get_si());
    BigInt space = big_pow(q, static_cast<unsigned long>(n));
    if (space > BigInt(static_cast<unsigned long>(limits.max_points)))
        throw CapExceeded("hamming_code: space size exceeds cap");
    if (!encoding_fits(n, q)) throw CapExceeded("hamming_code: q^n too large to materialize");

    // Parity-check columns: one representative per projective point, first
    // nonzero coordinate equal to 1, in lexicographic order.
    std::vector<std::vector<int>> columns;
    std::vector<int> col(static_cast<std::size_t>(r), 0);
    const std::uint64_t total_cols = to_u64(qr);
    for (std::uint64_t k = 1; k < total_cols; ++k) {
        std::uint64_t v = k;
        for (int i = r - 1; i >= 0; --i) {
            col[static_cast<std::size_t>(i)] = static_cast<int>(v % static_cast<std::uint64_t>(q));
            v /= static_cast<std::uint64_t>(q);
        }
        int first = 0;
        while (col[static_cast<std::size_t>(first)] == 0) ++first;
        if (col[static_cast<std::size_t>(first)] == 1) columns.push_back(col);
    }
    if (static_cast<int>(columns.size()) != n)
        throw std::logic_error("hamming_code: projective column count mismatch");

    std::vector<std::uint64_t> keys;
    CoordVec w(static_cast<std::size_t>(n));
    std::vector<int> syndrome(static_cast<std::size_t>(r));
    const std::uint64_t total = to_u64(space);
    for (std::uint64_t k = 0; k < total; ++k) {
        decode_word(k, n, q, w);
        std::fill(syndrome.begin(), syndrome.end(), 0);
        for (int j = 0; j < n; ++j) {
            int x = static_cast<int>(w[static_cast<std::size_t>(j)]);
            if (x == 0) continue;
            for (int i = 0; i < r; ++i)
                syndrome[static_cast<std::size_t>(i)] = field.add(
                    syndrome[static_cast<std::size_t>(i)],
                    field.mul(columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], x));
        }
        bool zero = true;
        for (int s : syndrome)
            if (s != 0) {
                zero = false;
                break;
            }
        if (zero) keys.push_back(k);
    }
    auto code = ModularCode::from_encoded(n, q, Metric::Hamming, std::move(keys));
    // Sphere-packing identity: |C| * (1 + (q-1)n) = q^n.
    if (BigInt(static_cast<unsigned long>(code.size())) * hamming_sphere_size(n, 1, q) != space)
        throw std::logic_error("hamming_code: sphere-packing identity failed");
    // Closure under mod-q addition of symbol indices only holds for prime q;
    // prime-power fields add digit-wise.
    if (field.degree() == 1) code.set_linear_hint(true);
    return code;
}

}  // namespace leecodes
