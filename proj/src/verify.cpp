#include "leecodes/verify.hpp"

#include <chrono>
#include <limits>
#include <random>

namespace leecodes {

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

BigInt space_size(int n, Coord m) { return big_pow(m, static_cast<unsigned long>(n)); }

bool exhaustive_feasible(int n, Coord m, const Limits& limits) {
    return encoding_fits(n, m) &&
           space_size(n, m) <= BigInt(static_cast<unsigned long>(limits.max_points));
}

// Exact cover multiplicities of radius-R balls around the codewords.
bool cover_exactly_once(const ModularCode& code, int R, Metric metric, const Limits& limits,
                        std::string& detail, std::optional<CoordVec>& violation) {
    const int n = code.n();
    const Coord m = code.m();
    const std::uint64_t total = to_u64(space_size(n, m));
    std::vector<std::uint8_t> mult(total, 0);
    const auto offsets = modular_ball_offsets(n, m, R, metric, limits);
    CoordVec buf(static_cast<std::size_t>(n)), sum(static_cast<std::size_t>(n));
    for (auto k : code.encoded()) {
        decode_word(k, n, m, buf);
        for (const auto& off : offsets) {
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = mod_reduce(buf[i] + off[i], m);
            std::uint64_t key = encode_word(sum, m);
            if (mult[key] < 255) ++mult[key];
        }
    }
    for (std::uint64_t key = 0; key < total; ++key) {
        if (mult[key] != 1) {
            violation = decode_word(key, n, m);
            detail = mult[key] == 0 ? "uncovered point" : "multiply covered point";
            return false;
        }
    }
    return true;
}

}  // namespace

Certificate is_perfect(const ModularCode& code, int R, VerifyMode mode, const Limits& limits) {
    if (R < 0) throw std::invalid_argument("is_perfect: R < 0");
    Stopwatch watch;
    Certificate cert;
    cert.check = "perfect";
    const int n = code.n();
    const Coord m = code.m();
    const Metric metric = code.metric();
    cert.space_size = space_size(n, m);
    cert.code_size = BigInt(static_cast<unsigned long>(code.size()));
    cert.ball_size =
        BigInt(static_cast<unsigned long>(modular_ball_offsets(n, m, R, metric, limits).size()));

    if (mode == VerifyMode::Auto)
        mode = exhaustive_feasible(n, m, limits) ? VerifyMode::Exhaustive : VerifyMode::Formula;

    if (mode == VerifyMode::Exhaustive) {
        cert.mode = "exhaustive";
        if (!exhaustive_feasible(n, m, limits))
            throw CapExceeded("is_perfect: space exceeds cap; use formula mode or an oracle");
        cert.pass = cover_exactly_once(code, R, metric, limits, cert.detail, cert.violation);
        if (cert.pass) cert.detail = "every point covered exactly once";
    } else {
        cert.mode = "formula";
        auto md = code.min_distance(limits);
        cert.min_distance = md;
        bool dist_ok = !md.has_value() || *md >= 2 * R + 1;
        bool size_ok = cert.code_size * cert.ball_size == cert.space_size;
        cert.pass = dist_ok && size_ok;
        cert.detail = !dist_ok  ? "minimum distance below 2R+1"
                      : !size_ok ? "sphere-packing equality fails"
                                 : "distance and size identity hold";
    }
    cert.elapsed_seconds = watch.seconds();
    return cert;
}

Certificate is_perfect(const LatticeCode& code, int R, VerifyMode mode, const Limits& limits) {
    if (code.quotient.has_value()) return is_perfect(*code.quotient, R, mode, limits);
    Stopwatch watch;
    Certificate cert;
    cert.check = "perfect";
    cert.mode = "lattice";
    const int n = code.lattice.dim();
    cert.space_size = space_size(n, code.m);
    cert.code_size = code.quotient_size;
    cert.ball_size = lee_sphere_size(n, R);
    std::int64_t md = min_distance(code, Metric::Lee, limits);
    cert.min_distance = md;
    bool dist_ok = md >= 2 * R + 1;
    bool size_ok = cert.code_size * cert.ball_size == cert.space_size;
    cert.pass = dist_ok && size_ok && code.m >= 2 * R + 1;
    cert.detail = cert.pass ? "distance and size identity hold" : "sphere-packing bound fails";
    cert.elapsed_seconds = watch.seconds();
    return cert;
}

namespace {

Certificate diameter_perfect_common(int n, Coord m, const BigInt& code_size, int d,
                                    std::int64_t min_dist, bool all_even) {
    Certificate cert;
    cert.check = "diameter_perfect";
    cert.space_size = space_size(n, m);
    cert.code_size = code_size;
    cert.ball_size = anticode_size(n, (d - 2) / 2);
    cert.min_distance = min_dist;
    cert.all_even_weight = all_even;
    if (m % 2 != 0) {
        cert.pass = false;
        cert.detail = "odd alphabet cannot carry an even-distance diameter perfect code";
        return cert;
    }
    bool dist_ok = min_dist >= d;
    bool size_ok = cert.code_size * cert.ball_size == cert.space_size;
    cert.pass = dist_ok && size_ok && all_even;
    cert.detail = !dist_ok  ? "minimum Lee distance below d"
                  : !size_ok ? "code-anticode equality fails"
                  : !all_even ? "odd-weight codeword present"
                              : "distance, size identity and even-weight census hold";
    return cert;
}

}  // namespace

Certificate is_diameter_perfect(const ModularCode& code, int d, const Limits& limits) {
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("is_diameter_perfect: d must be a positive even integer");
    Stopwatch watch;
    auto md = code.min_distance(limits);
    bool all_even = parity_of_translate(code) == Parity::Even;
    Certificate cert =
        diameter_perfect_common(code.n(), code.m(),
                                BigInt(static_cast<unsigned long>(code.size())), d,
                                md.value_or(std::numeric_limits<std::int64_t>::max()), all_even);
    cert.min_distance = md;  // unset again for single-codeword inputs
    cert.mode = "exhaustive";
    cert.elapsed_seconds = watch.seconds();
    return cert;
}

Certificate is_diameter_perfect(const LatticeCode& code, int d, const Limits& limits) {
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("is_diameter_perfect: d must be a positive even integer");
    if (code.quotient.has_value()) {
        auto cert = is_diameter_perfect(*code.quotient, d, limits);
        return cert;
    }
    Stopwatch watch;
    std::int64_t md = min_distance(code, Metric::Lee, limits);
    bool all_even = code.lattice.all_rows_even_weight();
    Certificate cert =
        diameter_perfect_common(code.lattice.dim(), code.m, code.quotient_size, d, md, all_even);
    cert.mode = "lattice";
    cert.elapsed_seconds = watch.seconds();
    return cert;
}

Certificate local_cover_check(const std::function<bool(CoordSpan)>& oracle, int n, Coord m,
                              int R, std::size_t samples, std::uint64_t seed,
                              const Limits& limits) {
    Stopwatch watch;
    Certificate cert;
    cert.check = "local_cover";
    cert.mode = "sampled";
    cert.seed = seed;
    cert.samples = samples;
    cert.space_size = space_size(n, m);
    cert.ball_size = lee_sphere_size(n, R);
    const auto offsets = modular_ball_offsets(n, m, R, Metric::Lee, limits);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Coord> pick(0, m - 1);
    CoordVec x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    cert.pass = true;
    for (std::size_t s = 0; s < samples; ++s) {
        for (auto& c : x) c = pick(rng);
        int hits = 0;
        for (const auto& off : offsets) {
            for (std::size_t i = 0; i < y.size(); ++i) y[i] = mod_reduce(x[i] + off[i], m);
            if (oracle(y)) ++hits;
            if (hits > 1) break;
        }
        if (hits != 1) {
            cert.pass = false;
            cert.violation = x;
            cert.detail = hits == 0 ? "sampled point sees no codeword in its ball"
                                    : "sampled point sees multiple codewords in its ball";
            break;
        }
    }
    if (cert.pass) cert.detail = "all sampled balls contain exactly one codeword";
    cert.elapsed_seconds = watch.seconds();
    return cert;
}

Certificate partition_check(const TranslateFamily& family, const Limits& limits) {
    Stopwatch watch;
    Certificate cert;
    cert.check = "partition";
    cert.mode = "exhaustive";
    cert.space_size = space_size(family.n, family.m);
    if (!family.base)
        throw CapExceeded("partition_check: family has no materialized base code");
    const ModularCode& base = *family.base;
    cert.code_size = BigInt(static_cast<unsigned long>(base.size()) *
                            static_cast<unsigned long>(family.vectors.size()));
    if (!exhaustive_feasible(family.n, family.m, limits))
        throw CapExceeded("partition_check: space exceeds cap");
    const std::uint64_t total = to_u64(cert.space_size);
    std::vector<std::uint8_t> mult(total, 0);
    CoordVec buf(static_cast<std::size_t>(family.n)), sum(static_cast<std::size_t>(family.n));
    for (const auto& v : family.vectors) {
        for (auto k : base.encoded()) {
            decode_word(k, family.n, family.m, buf);
            for (std::size_t i = 0; i < sum.size(); ++i)
                sum[i] = mod_reduce(buf[i] + v[i], family.m);
            std::uint64_t key = encode_word(sum, family.m);
            if (mult[key] == 1) {
                cert.pass = false;
                cert.violation = decode_word(key, family.n, family.m);
                cert.detail = "two translates collide";
                cert.elapsed_seconds = watch.seconds();
                return cert;
            }
            mult[key] = 1;
        }
    }
    for (std::uint64_t key = 0; key < total; ++key)
        if (!mult[key]) {
            cert.pass = false;
            cert.violation = decode_word(key, family.n, family.m);
            cert.detail = "point not covered by any translate";
            cert.elapsed_seconds = watch.seconds();
            return cert;
        }
    cert.pass = true;
    cert.detail = "translates are disjoint and cover the space";
    cert.elapsed_seconds = watch.seconds();
    return cert;
}

}  // namespace leecodes
