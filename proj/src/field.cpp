#include "leecodes/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace leecodes {

namespace {

struct FieldShape {
    int q, p, k;
    std::vector<int> modulus;  // monic irreducible poly coefficients, low degree first
};

// Fixed irreducible polynomials for the supported prime powers.
const FieldShape kShapes[] = {
    {2, 2, 1, {}},          {3, 3, 1, {}},
    {4, 2, 2, {1, 1, 1}},   // x^2 + x + 1
    {5, 5, 1, {}},          {7, 7, 1, {}},
    {8, 2, 3, {1, 1, 0, 1}},   // x^3 + x + 1
    {9, 3, 2, {1, 0, 1}},      // x^2 + 1
    {11, 11, 1, {}},        {13, 13, 1, {}},
    {16, 2, 4, {1, 1, 0, 0, 1}},  // x^4 + x + 1
};

std::vector<int> digits(int value, int p, int k) {
    std::vector<int> d(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        d[static_cast<std::size_t>(i)] = value % p;
        value /= p;
    }
    return d;
}

int undigits(const std::vector<int>& d, int p, int k) {
    int v = 0;
    for (int i = k - 1; i >= 0; --i) v = v * p + d[static_cast<std::size_t>(i)];
    return v;
}

}  // namespace

const std::vector<int>& FieldTable::supported() {
    static const std::vector<int> qs = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};
    return qs;
}

FieldTable FieldTable::make(int q) {
    for (const auto& s : kShapes)
        if (s.q == q) return FieldTable(s.q, s.p, s.k, s.modulus);
    throw std::invalid_argument("FieldTable: unsupported field size");
}

FieldTable::FieldTable(int q, int p, int k, std::vector<int> modulus_poly)
    : q_(q), p_(p), k_(k) {
    const std::size_t qq = static_cast<std::size_t>(q) * static_cast<std::size_t>(q);
    add_.assign(qq, 0);
    mul_.assign(qq, 0);
    neg_.assign(static_cast<std::size_t>(q), 0);
    inv_.assign(static_cast<std::size_t>(q), -1);

    for (int a = 0; a < q; ++a) {
        auto da = digits(a, p, k);
        for (int b = 0; b < q; ++b) {
            auto db = digits(b, p, k);
            std::vector<int> sum(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                sum[static_cast<std::size_t>(i)] =
                    (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p;
            add_[idx(a, b)] = undigits(sum, p, k);

            // Polynomial product reduced by the monic modulus.
            std::vector<int> prod(static_cast<std::size_t>(2 * k - 1), 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    prod[static_cast<std::size_t>(i + j)] =
                        (prod[static_cast<std::size_t>(i + j)] +
                         da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) %
                        p;
            for (int deg = 2 * k - 2; deg >= k; --deg) {
                int c = prod[static_cast<std::size_t>(deg)];
                if (c == 0) continue;
                prod[static_cast<std::size_t>(deg)] = 0;
                for (int i = 0; i < k; ++i)
                    prod[static_cast<std::size_t>(deg - k + i)] =
                        ((prod[static_cast<std::size_t>(deg - k + i)] -
                          c * modulus_poly[static_cast<std::size_t>(i)]) % p + p * p) %
                        p;
            }
            std::vector<int> low(prod.begin(), prod.begin() + k);
            mul_[idx(a, b)] = undigits(low, p, k);
        }
    }
    for (int a = 0; a < q; ++a) {
        auto da = digits(a, p, k);
        for (auto& d : da) d = (p - d) % p;
        neg_[static_cast<std::size_t>(a)] = undigits(da, p, k);
        for (int b = 0; b < q; ++b)
            if (mul_[idx(a, b)] == 1) inv_[static_cast<std::size_t>(a)] = b;
    }
    check_axioms();
}

int FieldTable::inv(int a) const {
    int r = inv_[static_cast<std::size_t>(a)];
    if (r < 0) throw std::invalid_argument("FieldTable: zero has no inverse");
    return r;
}

void FieldTable::check_axioms() const {
    const int q = q_;
    auto fail = [](const char* what) {
        throw std::logic_error(std::string("FieldTable axiom check failed: ") + what);
    };
    for (int a = 0; a < q; ++a) {
        if (add(a, 0) != a) fail("additive identity");
        if (mul(a, 1) != a) fail("multiplicative identity");
        if (add(a, neg(a)) != 0) fail("additive inverse");
        if (a != 0 && mul(a, inv_[static_cast<std::size_t>(a)]) != 1) fail("multiplicative inverse");
        for (int b = 0; b < q; ++b) {
            if (add(a, b) != add(b, a)) fail("addition commutativity");
            if (mul(a, b) != mul(b, a)) fail("multiplication commutativity");
            for (int c = 0; c < q; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c))) fail("addition associativity");
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplication associativity");
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
            }
        }
    }
}

}  // namespace leecodes
