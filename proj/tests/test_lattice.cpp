#include <doctest.h>

#include <random>
#include <set>

#include "leecodes/constructions.hpp"
#include "leecodes/lattice.hpp"

using namespace leecodes;

namespace {

Lattice identity_lattice(int n) {
    std::vector<CoordVec> rows(static_cast<std::size_t>(n), CoordVec(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return Lattice(std::move(rows));
}

}  // namespace

TEST_CASE("volume") {
    for (int n : {1, 2, 5}) CHECK(identity_lattice(n).volume() == 1);
    CHECK(diameter4_lattice(6).volume() == 24);
    CHECK(minkowski_code().volume() == 38);  // hand-expanded determinant is -38
    CHECK_THROWS_AS(Lattice({{1, 2}, {2, 4}}), StructuralError);
}

TEST_CASE("membership") {
    auto lat6 = diameter4_lattice(6);
    CHECK(lat6.contains(CoordVec(6, 0)));
    for (const auto& row : lat6.rows()) CHECK(lat6.contains(row));
    CHECK_FALSE(lat6.contains(CoordVec{1, 0, 0, 0, 0, 0}));

    // Closure under sums and differences on random lattice points.
    std::mt19937_64 rng(7);
    const auto& rows = lat6.rows();
    for (int trial = 0; trial < 50; ++trial) {
        CoordVec a(6, 0), b(6, 0);
        for (const auto& row : rows) {
            Coord ca = static_cast<Coord>(rng() % 7) - 3, cb = static_cast<Coord>(rng() % 7) - 3;
            for (std::size_t j = 0; j < 6; ++j) {
                a[j] += ca * row[j];
                b[j] += cb * row[j];
            }
        }
        CHECK(lat6.contains(a));
        CHECK(lat6.contains(b));
        CoordVec sum(6), diff(6);
        for (std::size_t j = 0; j < 6; ++j) {
            sum[j] = a[j] + b[j];
            diff[j] = a[j] - b[j];
        }
        CHECK(lat6.contains(sum));
        CHECK(lat6.contains(diff));
    }
}

TEST_CASE("period") {
    CHECK(identity_lattice(3).period() == 1);
    for (int n = 2; n <= 8; ++n) CHECK(diameter4_lattice(n).period() == 4 * n);
    CHECK(Lattice({{2, 2}, {0, 4}}).period() == 4);
    CHECK(minkowski_code().period() == 38);

    // Minimality: every proper divisor fails on some axis.
    auto lat4 = diameter4_lattice(4);
    const Coord period = lat4.period();
    for (Coord d = 1; d < period; ++d) {
        if (period % d != 0) continue;
        bool all_axes = true;
        for (int i = 0; i < 4 && all_axes; ++i) {
            CoordVec e(4, 0);
            e[static_cast<std::size_t>(i)] = d;
            all_axes = lat4.contains(e);
        }
        CHECK_FALSE(all_axes);
    }
}

TEST_CASE("reduce_to_modular") {
    auto id = reduce_to_modular(identity_lattice(2));
    CHECK(id.m == 1);
    CHECK(id.quotient_size == 1);
    REQUIRE(id.quotient.has_value());
    CHECK(id.quotient->size() == 1);
    CHECK(id.quotient->contains_zero());

    auto seed = reduce_to_modular(Lattice({{2, 2}, {0, 4}}));
    CHECK(seed.m == 4);
    CHECK(seed.quotient_size == 2);
    REQUIRE(seed.quotient.has_value());
    CHECK(seed.quotient->contains(CoordVec{0, 0}));
    CHECK(seed.quotient->contains(CoordVec{2, 2}));
    CHECK(seed.quotient->size() == 2);

    auto lat6 = reduce_to_modular(diameter4_lattice(6), Limits{}, false);
    CHECK(lat6.quotient_size == big_pow(24, 6) / 24);

    auto lat3 = reduce_to_modular(diameter4_lattice(3));
    CHECK(lat3.m == 12);
    REQUIRE(lat3.quotient.has_value());
    CHECK(lat3.quotient->size() == 144);  // 12^3 / 12
    CHECK(lat3.quotient->is_linear());
}

TEST_CASE("minimum distances") {
    CHECK(identity_lattice(3).min_manhattan_weight() == 1);
    for (int n = 2; n <= 6; ++n) {
        auto lc = reduce_to_modular(diameter4_lattice(n), Limits{}, false);
        CHECK(min_distance(lc, Metric::Manhattan) == 4);
        CHECK(min_distance(lc, Metric::Lee) == 4);
    }
    auto mink = reduce_to_modular(minkowski_code(), Limits{}, false);
    CHECK(min_distance(mink, Metric::Manhattan) == 6);
    CHECK(min_distance(mink, Metric::Lee) == 6);
}

TEST_CASE("reduction preserves the minimum distance") {
    // Brute-force minimum Lee distance of the materialized quotient equals the
    // lattice minimum Manhattan weight for the shipped example lattices.
    std::vector<Lattice> lattices;
    lattices.push_back(diameter4_lattice(2));
    lattices.push_back(diameter4_lattice(3));
    lattices.push_back(Lattice({{2, 2}, {0, 4}}));
    lattices.push_back(diameter_2d_family(2, 1));
    for (const auto& lattice : lattices) {
        auto lc = reduce_to_modular(lattice);
        REQUIRE(lc.quotient.has_value());
        auto quotient_min = lc.quotient->min_distance();
        REQUIRE(quotient_min.has_value());
        CHECK(*quotient_min == lattice.min_manhattan_weight());
    }
}

TEST_CASE("quotient size identity") {
    for (int n = 2; n <= 6; ++n) {
        auto lc = reduce_to_modular(diameter4_lattice(n), Limits{}, false);
        BigInt space = big_pow(lc.m, static_cast<unsigned long>(n));
        CHECK(space % lc.lattice.volume() == 0);
        CHECK(lc.quotient_size * lc.lattice.volume() == space);
    }
}

TEST_CASE("coset ids form a transversal") {
    auto lattice = Lattice({{2, 2}, {0, 4}});
    std::set<std::uint64_t> ids;
    CoordVec p(2);
    for (Coord x = -6; x < 6; ++x)
        for (Coord y = -6; y < 6; ++y) {
            p[0] = x;
            p[1] = y;
            ids.insert(lattice.coset_id(p));
        }
    CHECK(ids.size() == 8);  // = volume
    // Points in the same coset share ids; shifting by a lattice vector fixes the id.
    for (Coord x = -3; x < 3; ++x)
        for (Coord y = -3; y < 3; ++y) {
            CoordVec a{x, y}, b{x + 2, y + 2};
            CHECK(lattice.coset_id(a) == lattice.coset_id(b));
        }
}

TEST_CASE("lattice cosets family") {
    auto lat3 = reduce_to_modular(diameter4_lattice(3));
    auto fam = cosets(lat3);
    CHECK(fam.vectors.size() == 12);  // = 4n = volume
    CHECK(fam.vectors[0] == CoordVec(3, 0));
    std::size_t even = 0, odd = 0, mixed = 0;
    for (auto label : fam.labels)
        (label == Parity::Even ? even : label == Parity::Odd ? odd : mixed) += 1;
    CHECK(even == 6);
    CHECK(odd == 6);
    CHECK(mixed == 0);

    // The big lattice path produces the 24 cosets of the n = 6 code without
    // materializing the quotient.
    auto lat6 = reduce_to_modular(diameter4_lattice(6), Limits{}, false);
    auto fam6 = cosets(lat6);
    CHECK(fam6.vectors.size() == 24);
    even = odd = mixed = 0;
    for (auto label : fam6.labels)
        (label == Parity::Even ? even : label == Parity::Odd ? odd : mixed) += 1;
    CHECK(even == 12);
    CHECK(odd == 12);
}

TEST_CASE("lattice even translates") {
    auto lat6 = reduce_to_modular(diameter4_lattice(6), Limits{}, false);
    auto fam = even_translates(lat6);
    CHECK(fam.vectors.size() == 12);  // 2n
    CHECK(fam.vectors[0] == CoordVec(6, 0));
    for (auto label : fam.labels) CHECK(label == Parity::Even);
}
