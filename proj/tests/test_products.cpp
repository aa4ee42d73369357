#include <doctest.h>

#include <random>

#include "leecodes/constructions.hpp"
#include "leecodes/products.hpp"
#include "leecodes/verify.hpp"

using namespace leecodes;

namespace {

ModularCode seed_code() {
    return ModularCode(2, 4, Metric::Lee, {{0, 0}, {2, 2}});
}

ModularCode repetition3() {
    return ModularCode(3, 2, Metric::Hamming, {{0, 0, 0}, {1, 1, 1}});
}

}  // namespace

TEST_CASE("permutation plans") {
    auto id = PermutationPlan::identity(4);
    CHECK(id.is_identity());
    CHECK(id.apply(3) == 3);
    auto pi = PermutationPlan({1, 3, 2, 4});
    CHECK(pi.apply(2) == 3);
    CHECK(pi.inverse(3) == 2);
    CHECK_FALSE(pi.is_identity());
    CHECK_THROWS_AS(PermutationPlan({2, 1}), std::invalid_argument);     // pi(1) != 1
    CHECK_THROWS_AS(PermutationPlan({1, 2, 2}), std::invalid_argument);  // not a bijection
    CHECK_THROWS_AS(PermutationPlan({1, 5, 2}), std::invalid_argument);  // out of range
}

TEST_CASE("phelps_double on the length-1 code") {
    auto base = ModularCode(1, 2, Metric::Hamming, {{0}});
    auto doubled = phelps_double(base);
    CHECK(doubled.n() == 3);
    CHECK(doubled.size() == 2);
    CHECK(doubled == repetition3());
    CHECK(is_perfect(doubled, 1, VerifyMode::Exhaustive).pass);
}

TEST_CASE("phelps_double on Hamming(7,4)") {
    auto h7 = hamming_code(FieldTable::make(2), 3);
    auto doubled = phelps_double(h7);
    CHECK(doubled.n() == 15);
    CHECK(doubled.size() == 2048);  // 2^11
    auto cert = is_perfect(doubled, 1, VerifyMode::Exhaustive);
    CHECK(cert.pass);

    // The extension of the doubled code is {(x, y) : x in C_e^i, y in C_e^i}.
    auto extended = extend_binary(doubled);
    const int n = h7.n();
    auto he = extend_binary(h7);
    std::vector<std::uint64_t> keys;
    for (int i = 0; i <= n; ++i) {
        CoordVec v(static_cast<std::size_t>(n + 1), 0);
        if (i > 0) {
            v[static_cast<std::size_t>(i - 1)] = 1;
            v[static_cast<std::size_t>(n)] = 1;
        }
        auto left = translate_words(he, v);
        for (const auto& x : left)
            for (const auto& y : left) {
                CoordVec cat(x);
                cat.insert(cat.end(), y.begin(), y.end());
                keys.push_back(encode_word(cat, 2));
            }
    }
    auto expected = ModularCode::from_encoded(2 * n + 2, 2, Metric::Hamming, std::move(keys));
    CHECK(extended == expected);
}

TEST_CASE("phelps_double rejects non-perfect input") {
    auto not_perfect = ModularCode(3, 2, Metric::Hamming, {{0, 0, 0}});
    CHECK_THROWS_AS(phelps_double(not_perfect), std::invalid_argument);
}

TEST_CASE("phelps_double_permuted") {
    auto base = repetition3();
    auto id = PermutationPlan::identity(4);
    auto doubled = phelps_double_permuted(base, base, id);
    CHECK(doubled.n() == 8);
    CHECK(doubled.size() == 16);
    CHECK(doubled.min_distance().value() == 4);
    CHECK(parity_of_translate(doubled) == Parity::Even);
    CHECK(doubled.contains_zero());

    // Identity permutation reproduces the extension of phelps_double.
    auto plain = extend_binary(phelps_double(base));
    CHECK(doubled == plain);

    // A transposition produces a different code with the same properties.
    auto swapped = phelps_double_permuted(base, base, PermutationPlan({1, 3, 2, 4}));
    CHECK(swapped.size() == 16);
    CHECK(swapped.min_distance().value() == 4);
    CHECK_FALSE(swapped == doubled);

    CHECK_THROWS_AS(phelps_double_permuted(base, base, PermutationPlan::identity(3)),
                    std::invalid_argument);
}

TEST_CASE("qary_product desk case q=2, r=2, s=2") {
    auto inner = hamming_code(FieldTable::make(2), 2);  // length 3, binary
    CHECK(inner.n() == 3);
    CHECK(inner.size() == 2);
    auto outer = hamming_code(FieldTable::make(4), 2);  // length 5 over GF(4)
    auto product = qary_product(inner, outer);
    CHECK(product.n() == 15);
    CHECK(product.m() == 2);
    CHECK(product.size() == 2048);  // = |C2| * |C1|^5 = 64 * 32
    CHECK(BigInt(static_cast<unsigned long>(product.size())) ==
          BigInt(static_cast<unsigned long>(outer.size())) *
              big_pow(BigInt(static_cast<unsigned long>(inner.size())), 5));
    auto cert = is_perfect(product, 1, VerifyMode::Exhaustive);
    CHECK(cert.pass);
}

TEST_CASE("qary_product trivial outer code") {
    auto inner = hamming_code(FieldTable::make(2), 2);
    // A perfect single-error code of length 1 over 4 letters: one word covers
    // the whole space with radius 1.
    auto outer = ModularCode(1, 4, Metric::Hamming, {{0}});
    auto product = qary_product(inner, outer);
    CHECK(product == inner);
    // Alphabet mismatch is rejected.
    auto wrong = ModularCode(1, 5, Metric::Hamming, {{0}});
    CHECK_THROWS_AS(qary_product(inner, wrong), std::invalid_argument);
}

TEST_CASE("qary_product distance case analysis") {
    auto inner = hamming_code(FieldTable::make(2), 2);
    auto outer = hamming_code(FieldTable::make(4), 2);
    auto fam = unit_translate_family(inner, Metric::Hamming);
    std::mt19937_64 rng(5);
    auto outer_words = outer.words();
    // Equal index vectors: the difference sits inside one translate, distance >= 3.
    for (int trial = 0; trial < 50; ++trial) {
        const auto& iv = outer_words[rng() % outer_words.size()];
        int t = static_cast<int>(rng() % 5);
        auto tw = translate_words(inner, fam.vectors[static_cast<std::size_t>(iv[static_cast<std::size_t>(t)])]);
        const auto& x = tw[rng() % tw.size()];
        const auto& y = tw[rng() % tw.size()];
        if (x != y) CHECK(hamming_distance(x, y) >= 3);
    }
    // Unequal index vectors differ in >= 3 blocks.
    for (int trial = 0; trial < 50; ++trial) {
        const auto& a = outer_words[rng() % outer_words.size()];
        const auto& b = outer_words[rng() % outer_words.size()];
        if (a != b) CHECK(hamming_distance(a, b) >= 3);
    }
}

TEST_CASE("lee_double of two seeds") {
    auto seed = seed_code();
    auto id = PermutationPlan::identity(4);
    auto doubled = lee_double(seed, seed, id);
    CHECK(doubled.n() == 4);
    CHECK(doubled.m() == 4);
    CHECK(doubled.size() == 16);  // 4^4 / 16
    CHECK(doubled.contains_zero());
    CHECK(doubled.is_linear());
    auto cert = is_diameter_perfect(doubled, 4);
    CHECK(cert.pass);

    // All six permutations fixing 1 give diameter perfect codes.
    std::vector<std::vector<int>> maps = {{1, 2, 3, 4}, {1, 2, 4, 3}, {1, 3, 2, 4},
                                          {1, 3, 4, 2}, {1, 4, 2, 3}, {1, 4, 3, 2}};
    for (const auto& map : maps) {
        auto code = lee_double(seed, seed, PermutationPlan(map));
        CHECK(code.size() == 16);
        CHECK(is_diameter_perfect(code, 4).pass);
        CHECK(code.contains_zero());
    }

    CHECK_THROWS_AS(lee_double(seed, seed, PermutationPlan::identity(6)), std::invalid_argument);
    auto not_dp = ModularCode(2, 4, Metric::Lee, {{0, 0}, {1, 1}});
    CHECK_THROWS_AS(lee_double(not_dp, not_dp, id), std::invalid_argument);
}

TEST_CASE("lee_double distance case analysis") {
    auto seed = seed_code();
    auto fam = even_translates(seed);
    // Same translate index: distance >= 4 inside each even translate.
    for (const auto& v : fam.vectors) {
        auto tw = translate_words(seed, v);
        for (const auto& x : tw)
            for (const auto& y : tw)
                if (x != y) CHECK(lee_distance(x, y, 4) >= 4);
    }
    // Different even translates: distance >= 2 per half.
    for (std::size_t a = 0; a < fam.vectors.size(); ++a)
        for (std::size_t b = a + 1; b < fam.vectors.size(); ++b) {
            auto ta = translate_words(seed, fam.vectors[a]);
            auto tb = translate_words(seed, fam.vectors[b]);
            for (const auto& x : ta)
                for (const auto& y : tb) CHECK(lee_distance(x, y, 4) >= 2);
        }
}

TEST_CASE("iterate_lee_double") {
    auto seed = seed_code();
    auto same = iterate_lee_double(seed, 0);
    CHECK(same == seed);

    auto eight = iterate_lee_double(seed, 2);
    CHECK(eight.n() == 8);
    CHECK(eight.m() == 4);
    CHECK(eight.size() == 2048);  // 4^8 / 32
    CHECK(eight.contains_zero());

    // Doubling the 3-D distance-4 lattice quotient once gives (6,4,24,12).
    auto lat3 = *reduce_to_modular(diameter4_lattice(3)).quotient;
    auto cor7 = iterate_lee_double(lat3, 1);
    CHECK(cor7.n() == 6);
    CHECK(cor7.m() == 12);
    CHECK(cor7.size() == 124416);  // 12^6 / 24

    // Schedule shape validation.
    CHECK_THROWS_AS(iterate_lee_double(seed, 2, {{PermutationPlan::identity(4)}}),
                    std::invalid_argument);
}

TEST_CASE("lee_product desk case q=3") {
    auto inner = lee_single_error_code(1);              // {0} over Z_3
    auto outer = hamming_code(FieldTable::make(3), 2);  // length 4 over GF(3)
    std::vector<PermutationPlan> plans(4, PermutationPlan::identity(3));
    auto product = lee_product(inner, outer, plans);
    CHECK(product.n() == 4);
    CHECK(product.m() == 3);
    CHECK(product.size() == 9);

    auto materialized = product.materialize();
    CHECK(materialized.size() == 9);
    CHECK(materialized.contains_zero());
    auto cert = is_perfect(materialized, 1, VerifyMode::Exhaustive);
    CHECK(cert.pass);

    // The oracle agrees with the materialized set on every point of Z_3^4.
    CoordVec w(4);
    for (std::uint64_t key = 0; key < 81; ++key) {
        decode_word(key, 4, 3, w);
        CHECK(product.contains(w) == materialized.contains(w));
    }

    // A transposition in one block changes the codeword set.
    std::vector<PermutationPlan> twisted = plans;
    twisted[1] = PermutationPlan({1, 3, 2});
    auto other = lee_product(inner, outer, twisted);
    CHECK_FALSE(other.materialize() == materialized);
    CHECK(is_perfect(other.materialize(), 1, VerifyMode::Exhaustive).pass);

    // The first permutation must be the identity.
    std::vector<PermutationPlan> bad = plans;
    bad[0] = PermutationPlan({1, 3, 2});
    CHECK_THROWS_AS(lee_product(inner, outer, bad), std::invalid_argument);
}

TEST_CASE("lee_product desk case q=5 oracle") {
    auto inner = lee_single_error_code(2);              // 5 words over Z_5
    auto outer = hamming_code(FieldTable::make(5), 2);  // length 6 over GF(5)
    std::vector<PermutationPlan> plans(6, PermutationPlan::identity(5));
    auto product = lee_product(inner, outer, plans);
    CHECK(product.n() == 12);
    CHECK(product.m() == 5);
    CHECK(product.size() == big_pow(5, 12) / 25);

    auto cert = local_cover_check([&](CoordSpan w) { return product.contains(w); }, 12, 5, 1,
                                  2000, 20260810);
    CHECK(cert.pass);

    // Codewords decode to themselves; unit perturbations leave the code.
    CoordVec zero(12, 0);
    CHECK(product.contains(zero));
    CoordVec bumped(zero);
    bumped[3] = 1;
    CHECK_FALSE(product.contains(bumped));
}
