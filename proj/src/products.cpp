#include "leecodes/products.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "leecodes/verify.hpp"

namespace leecodes {

PermutationPlan::PermutationPlan(std::vector<int> one_based_map) : map_(std::move(one_based_map)) {
    const int eta = static_cast<int>(map_.size());
    if (eta < 1) throw std::invalid_argument("PermutationPlan: empty mapping");
    if (map_[0] != 1) throw std::invalid_argument("PermutationPlan: pi(1) must be 1");
    inv_.assign(map_.size(), 0);
    std::vector<char> seen(map_.size(), 0);
    for (int i = 1; i <= eta; ++i) {
        int v = map_[static_cast<std::size_t>(i - 1)];
        if (v < 1 || v > eta || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("PermutationPlan: mapping is not a bijection");
        seen[static_cast<std::size_t>(v - 1)] = 1;
        inv_[static_cast<std::size_t>(v - 1)] = i;
    }
}

PermutationPlan PermutationPlan::identity(int size) {
    std::vector<int> m(static_cast<std::size_t>(size));
    std::iota(m.begin(), m.end(), 1);
    return PermutationPlan(std::move(m));
}

bool PermutationPlan::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if (apply(i) != i) return false;
    return true;
}

namespace {

bool is_power_of_two_plus_one(int n, int& r_out) {
    // n = 2^r - 1?
    int r = 0;
    std::int64_t v = 1;
    while (v - 1 < n) {
        v *= 2;
        ++r;
        if (v - 1 == n) {
            r_out = r;
            return true;
        }
    }
    return false;
}

void check_capacity(const BigInt& count, const Limits& limits, const char* what) {
    if (count > BigInt(static_cast<unsigned long>(limits.max_points)))
        throw CapExceeded(std::string(what) + ": result size exceeds cap");
}

// Cartesian concatenation of per-slot word lists into packed keys.
void emit_blocks(const std::vector<const std::vector<CoordVec>*>& slots, Coord m,
                 std::vector<std::uint64_t>& out) {
    CoordVec word;
    std::size_t total_len = 0;
    for (const auto* s : slots) total_len += (*s)[0].size();
    word.resize(total_len);
    std::vector<std::size_t> pick(slots.size(), 0);
    while (true) {
        std::size_t pos = 0;
        for (std::size_t t = 0; t < slots.size(); ++t) {
            const auto& w = (*slots[t])[pick[t]];
            std::copy(w.begin(), w.end(), word.begin() + static_cast<std::ptrdiff_t>(pos));
            pos += w.size();
        }
        out.push_back(encode_word(word, m));
        std::size_t t = slots.size();
        while (t > 0) {
            --t;
            if (++pick[t] < slots[t]->size()) break;
            pick[t] = 0;
            if (t == 0) return;
        }
    }
}

}  // namespace

ModularCode phelps_double(const ModularCode& code, const Limits& limits) {
    if (code.m() != 2) throw std::invalid_argument("phelps_double: code must be binary");
    int r = 0;
    if (!is_power_of_two_plus_one(code.n(), r))
        throw std::invalid_argument("phelps_double: length must be 2^r - 1");
    auto cert = is_perfect(code, 1, VerifyMode::Auto, limits);
    if (!cert.pass) throw std::invalid_argument("phelps_double: input code is not perfect");

    const int n = code.n();
    const ModularCode extended = extend_binary(code);
    check_capacity(BigInt(static_cast<unsigned long>(code.size())) *
                       BigInt(static_cast<unsigned long>(code.size())) * BigInt(n + 1),
                   limits, "phelps_double");

    std::vector<std::uint64_t> keys;
    for (int i = 0; i <= n; ++i) {
        // Translate i+1: the code itself for i = 0, else by e_i (and by
        // e_i + e_{n+1} on the extended side, keeping translates even).
        CoordVec u(static_cast<std::size_t>(n), 0);
        CoordVec ue(static_cast<std::size_t>(n + 1), 0);
        if (i > 0) {
            u[static_cast<std::size_t>(i - 1)] = 1;
            ue[static_cast<std::size_t>(i - 1)] = 1;
            ue[static_cast<std::size_t>(n)] = 1;
        }
        auto left = translate_words(extended, ue);
        auto right = translate_words(code, u);
        emit_blocks({&left, &right}, 2, keys);
    }
    auto result = ModularCode::from_encoded(2 * n + 1, 2, Metric::Hamming, std::move(keys));
    return result;
}

ModularCode phelps_double_permuted(const ModularCode& b, const ModularCode& c,
                                   const PermutationPlan& pi, const Limits& limits) {
    if (b.m() != 2 || c.m() != 2)
        throw std::invalid_argument("phelps_double_permuted: codes must be binary");
    if (b.n() != c.n()) throw std::invalid_argument("phelps_double_permuted: length mismatch");
    int r = 0;
    if (!is_power_of_two_plus_one(b.n(), r))
        throw std::invalid_argument("phelps_double_permuted: length must be 2^r - 1");
    if (pi.size() != b.n() + 1)
        throw std::invalid_argument("phelps_double_permuted: permutation size must be 2^r");
    for (const auto* code : {&b, &c}) {
        auto cert = is_perfect(*code, 1, VerifyMode::Auto, limits);
        if (!cert.pass)
            throw std::invalid_argument("phelps_double_permuted: input code is not perfect");
    }

    const int n = b.n();
    const ModularCode be = extend_binary(b);
    const ModularCode ce = extend_binary(c);
    check_capacity(BigInt(static_cast<unsigned long>(b.size())) *
                       BigInt(static_cast<unsigned long>(c.size())) * BigInt(n + 1),
                   limits, "phelps_double_permuted");

    auto even_vector = [n](int index) {
        CoordVec v(static_cast<std::size_t>(n + 1), 0);
        if (index > 1) {
            v[static_cast<std::size_t>(index - 2)] = 1;
            v[static_cast<std::size_t>(n)] = 1;
        }
        return v;
    };
    std::vector<std::uint64_t> keys;
    for (int i = 1; i <= n + 1; ++i) {
        auto left = translate_words(be, even_vector(i));
        auto right = translate_words(ce, even_vector(pi.apply(i)));
        emit_blocks({&left, &right}, 2, keys);
    }
    return ModularCode::from_encoded(2 * n + 2, 2, Metric::Hamming, std::move(keys));
}

ModularCode qary_product(const ModularCode& inner, const ModularCode& outer,
                         const Limits& limits) {
    if (inner.metric() != Metric::Hamming || outer.metric() != Metric::Hamming)
        throw std::invalid_argument("qary_product: both codes must carry the Hamming metric");
    const Coord q = inner.m();
    const int n1 = inner.n();
    const std::int64_t translates = 1 + (q - 1) * n1;
    if (outer.m() != translates)
        throw std::invalid_argument(
            "qary_product: outer alphabet must equal the inner translate count");
    auto fam = unit_translate_family(inner, Metric::Hamming, limits);
    if (!fam.partition)
        throw std::invalid_argument("qary_product: inner code is not perfect");
    auto outer_cert = is_perfect(outer, 1, VerifyMode::Auto, limits);
    if (!outer_cert.pass) throw std::invalid_argument("qary_product: outer code is not perfect");

    const int ell = outer.n();
    BigInt result_size = BigInt(static_cast<unsigned long>(outer.size())) *
                         big_pow(BigInt(static_cast<unsigned long>(inner.size())),
                                 static_cast<unsigned long>(ell));
    check_capacity(result_size, limits, "qary_product");
    if (!encoding_fits(n1 * ell, q)) throw CapExceeded("qary_product: result space too large");

    std::vector<std::vector<CoordVec>> translate_lists;
    translate_lists.reserve(fam.vectors.size());
    for (const auto& v : fam.vectors) translate_lists.push_back(translate_words(inner, v));

    std::vector<std::uint64_t> keys;
    keys.reserve(static_cast<std::size_t>(to_u64(result_size)));
    CoordVec symbols(static_cast<std::size_t>(ell));
    for (auto ok : outer.encoded()) {
        decode_word(ok, ell, outer.m(), symbols);
        std::vector<const std::vector<CoordVec>*> slots;
        slots.reserve(static_cast<std::size_t>(ell));
        for (Coord s : symbols)
            slots.push_back(&translate_lists[static_cast<std::size_t>(s)]);  // symbol s -> index s+1
        emit_blocks(slots, q, keys);
    }
    return ModularCode::from_encoded(n1 * ell, q, Metric::Hamming, std::move(keys));
}

ModularCode lee_double(const ModularCode& c1, const ModularCode& c2, const PermutationPlan& pi,
                       const Limits& limits) {
    if (c1.n() != c2.n() || c1.m() != c2.m())
        throw std::invalid_argument("lee_double: codes must share (n, m)");
    const int n = c1.n();
    if (pi.size() != 2 * n) throw std::invalid_argument("lee_double: permutation size must be 2n");
    for (const auto* code : {&c1, &c2}) {
        auto cert = is_diameter_perfect(*code, 4, limits);
        if (!cert.pass)
            throw std::invalid_argument("lee_double: input is not a distance-4 diameter perfect code");
    }
    auto fam1 = even_translates(c1, limits);
    auto fam2 = even_translates(c2, limits);
    BigInt result_size = BigInt(2 * n) * BigInt(static_cast<unsigned long>(c1.size())) *
                         BigInt(static_cast<unsigned long>(c2.size()));
    check_capacity(result_size, limits, "lee_double");
    if (!encoding_fits(2 * n, c1.m())) throw CapExceeded("lee_double: result space too large");

    std::vector<std::uint64_t> keys;
    keys.reserve(static_cast<std::size_t>(to_u64(result_size)));
    for (int i = 1; i <= 2 * n; ++i) {
        auto left = translate_words(c1, fam1.vectors[static_cast<std::size_t>(i - 1)]);
        auto right = translate_words(c2, fam2.vectors[static_cast<std::size_t>(pi.apply(i) - 1)]);
        emit_blocks({&left, &right}, c1.m(), keys);
    }
    auto result = ModularCode::from_encoded(2 * n, c1.m(), Metric::Lee, std::move(keys));
    if (pi.is_identity() && c1 == c2 && c1.is_linear()) result.set_linear_hint(true);
    return result;
}

ModularCode iterate_lee_double(const ModularCode& base, int r,
                               const std::vector<std::vector<PermutationPlan>>& schedule,
                               const Limits& limits) {
    if (r < 0) throw std::invalid_argument("iterate_lee_double: r < 0");
    if (!schedule.empty() && static_cast<int>(schedule.size()) != r)
        throw std::invalid_argument("iterate_lee_double: schedule must have one entry per level");
    if (r == 0) return base;

    std::vector<ModularCode> level(static_cast<std::size_t>(1) << r, base);
    for (int lvl = 1; lvl <= r; ++lvl) {
        const std::size_t instances = static_cast<std::size_t>(1) << (r - lvl);
        const int width = 2 * level[0].n();
        if (!schedule.empty() && schedule[static_cast<std::size_t>(lvl - 1)].size() != instances)
            throw std::invalid_argument("iterate_lee_double: wrong instance count in schedule");
        std::vector<ModularCode> next;
        next.reserve(instances);
        for (std::size_t k = 0; k < instances; ++k) {
            PermutationPlan plan = schedule.empty()
                                       ? PermutationPlan::identity(width)
                                       : schedule[static_cast<std::size_t>(lvl - 1)][k];
            if (plan.size() != width)
                throw std::invalid_argument("iterate_lee_double: plan size mismatch at level");
            next.push_back(lee_double(level[2 * k], level[2 * k + 1], plan, limits));
        }
        level = std::move(next);
    }
    return level[0];
}

LeeProductCode::LeeProductCode(ModularCode inner, ModularCode outer,
                               std::vector<PermutationPlan> plans)
    : inner_(std::move(inner)), outer_(std::move(outer)), plans_(std::move(plans)) {
    const int n = inner_.n();
    const Coord p = 2 * static_cast<Coord>(n) + 1;
    if (inner_.m() % p != 0)
        throw std::invalid_argument("lee_product: inner alphabet must be a multiple of 2n+1");
    if (outer_.m() != p)
        throw std::invalid_argument("lee_product: outer alphabet must equal 2n+1");
    if (static_cast<int>(plans_.size()) != outer_.n())
        throw std::invalid_argument("lee_product: need one permutation per block");
    if (!plans_[0].is_identity())
        throw std::invalid_argument("lee_product: first permutation must be the identity");
    for (const auto& plan : plans_)
        if (plan.size() != static_cast<int>(p))
            throw std::invalid_argument("lee_product: permutation size must be 2n+1");

    // Unit-translate leaders in the order 0, +e_1, -e_1, ..., +e_n, -e_n;
    // their parity-check syndromes are distinct mod 2n+1.
    leaders_.push_back(CoordVec(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        CoordVec plus(static_cast<std::size_t>(n), 0), minus(static_cast<std::size_t>(n), 0);
        plus[static_cast<std::size_t>(i)] = 1;
        minus[static_cast<std::size_t>(i)] = inner_.m() - 1;
        leaders_.push_back(std::move(plus));
        leaders_.push_back(std::move(minus));
    }
    syndrome_to_index_.assign(static_cast<std::size_t>(p), 0);
    for (std::size_t idx = 0; idx < leaders_.size(); ++idx) {
        Coord s = 0;
        for (int j = 0; j < n; ++j)
            s = mod_reduce(s + (j + 1) * leaders_[idx][static_cast<std::size_t>(j)], p);
        if (syndrome_to_index_[static_cast<std::size_t>(s)] != 0)
            throw std::logic_error("lee_product: leader syndromes collide");
        syndrome_to_index_[static_cast<std::size_t>(s)] = static_cast<int>(idx) + 1;
    }
    // The leaders index the cosets of the parity-check kernel, so the inner
    // code must be exactly that kernel for the translates to partition.
    for (auto k : inner_.encoded()) {
        CoordVec w = decode_word(k, n, inner_.m());
        Coord s = 0;
        for (int j = 0; j < n; ++j) s = mod_reduce(s + (j + 1) * w[static_cast<std::size_t>(j)], p);
        if (s != 0)
            throw std::invalid_argument("lee_product: inner code is not the parity-check kernel");
    }
    if (BigInt(static_cast<unsigned long>(inner_.size())) * p !=
        big_pow(inner_.m(), static_cast<unsigned long>(n)))
        throw std::invalid_argument("lee_product: inner code does not fill the kernel");
}

BigInt LeeProductCode::size() const {
    return BigInt(static_cast<unsigned long>(outer_.size())) *
           big_pow(BigInt(static_cast<unsigned long>(inner_.size())),
                   static_cast<unsigned long>(outer_.n()));
}

bool LeeProductCode::contains(CoordSpan word) const {
    const int n = inner_.n();
    const int ell = outer_.n();
    if (static_cast<int>(word.size()) != n * ell)
        throw std::invalid_argument("LeeProductCode: word length mismatch");
    const Coord p = 2 * static_cast<Coord>(n) + 1;
    CoordVec symbols(static_cast<std::size_t>(ell));
    CoordVec block(static_cast<std::size_t>(n));
    for (int t = 0; t < ell; ++t) {
        Coord s = 0;
        for (int j = 0; j < n; ++j) {
            Coord x = mod_reduce(word[static_cast<std::size_t>(t * n + j)], inner_.m());
            block[static_cast<std::size_t>(j)] = x;
            s = mod_reduce(s + (j + 1) * x, p);
        }
        int translate_index = syndrome_to_index_[static_cast<std::size_t>(s)];
        // The block must genuinely lie in that translate of the inner code.
        const CoordVec& leader = leaders_[static_cast<std::size_t>(translate_index - 1)];
        CoordVec shifted(block);
        for (int j = 0; j < n; ++j)
            shifted[static_cast<std::size_t>(j)] =
                mod_reduce(shifted[static_cast<std::size_t>(j)] - leader[static_cast<std::size_t>(j)],
                           inner_.m());
        if (!inner_.contains(shifted)) return false;
        int i_t = plans_[static_cast<std::size_t>(t)].inverse(translate_index);
        symbols[static_cast<std::size_t>(t)] = i_t - 1;
    }
    return outer_.contains(symbols);
}

ModularCode LeeProductCode::materialize(const Limits& limits) const {
    check_capacity(size(), limits, "LeeProductCode::materialize");
    const int n = inner_.n();
    const int ell = outer_.n();
    if (!encoding_fits(n * ell, inner_.m()))
        throw CapExceeded("LeeProductCode::materialize: result space too large");
    std::vector<std::vector<CoordVec>> translate_lists;
    translate_lists.reserve(leaders_.size());
    for (const auto& leader : leaders_) translate_lists.push_back(translate_words(inner_, leader));

    std::vector<std::uint64_t> keys;
    keys.reserve(static_cast<std::size_t>(to_u64(size())));
    CoordVec symbols(static_cast<std::size_t>(ell));
    for (auto ok : outer_.encoded()) {
        decode_word(ok, ell, outer_.m(), symbols);
        std::vector<const std::vector<CoordVec>*> slots;
        slots.reserve(static_cast<std::size_t>(ell));
        for (int t = 0; t < ell; ++t) {
            int i_t = static_cast<int>(symbols[static_cast<std::size_t>(t)]) + 1;
            int translate_index = plans_[static_cast<std::size_t>(t)].apply(i_t);
            slots.push_back(&translate_lists[static_cast<std::size_t>(translate_index - 1)]);
        }
        emit_blocks(slots, inner_.m(), keys);
    }
    return ModularCode::from_encoded(n * ell, inner_.m(), Metric::Lee, std::move(keys));
}

LeeProductCode lee_product(const ModularCode& inner, const ModularCode& outer,
                           const std::vector<PermutationPlan>& plans, const Limits& limits) {
    auto outer_cert = is_perfect(outer, 1, VerifyMode::Auto, limits);
    if (!outer_cert.pass) throw std::invalid_argument("lee_product: outer code is not perfect");
    return LeeProductCode(inner, outer, plans);
}

}  // namespace leecodes
