#include "leecodes/enumeration.hpp"

#include <algorithm>
#include <numeric>

#include "leecodes/verify.hpp"

namespace leecodes {

BigInt count_distinct_diameter_perfect(int r, int p) {
    if (r < 1) throw std::invalid_argument("count_distinct_diameter_perfect: r < 1");
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("count_distinct_diameter_perfect: p must be an odd prime");
    for (int f = 3; f * f <= p; f += 2)
        if (p % f == 0)
            throw std::invalid_argument("count_distinct_diameter_perfect: p must be an odd prime");
    BigInt total = 1;
    for (int i = 1; i <= r; ++i) {
        BigInt level = factorial((std::int64_t{1} << i) * p - 1);
        BigInt power;
        mpz_pow_ui(power.get_mpz_t(), level.get_mpz_t(), 1ul << (r - i));
        total *= power;
    }
    return total;
}

std::vector<ModularCode> enumerate_doubled_codes(const ModularCode& c1, const ModularCode& c2,
                                                 std::uint64_t limit, bool verify_each,
                                                 const Limits& limits) {
    if (limit == 0) throw std::invalid_argument("enumerate_doubled_codes: limit must be positive");
    const int n = c1.n();
    std::vector<int> tail(static_cast<std::size_t>(2 * n - 1));
    std::iota(tail.begin(), tail.end(), 2);
    std::vector<ModularCode> distinct;
    std::uint64_t produced = 0;
    do {
        std::vector<int> mapping;
        mapping.reserve(static_cast<std::size_t>(2 * n));
        mapping.push_back(1);
        mapping.insert(mapping.end(), tail.begin(), tail.end());
        auto code = lee_double(c1, c2, PermutationPlan(std::move(mapping)), limits);
        if (verify_each) {
            auto cert = is_diameter_perfect(code, 4, limits);
            if (!cert.pass)
                throw std::logic_error("enumerate_doubled_codes: produced code failed verification");
        }
        if (std::none_of(distinct.begin(), distinct.end(),
                         [&](const ModularCode& seen) { return seen == code; }))
            distinct.push_back(std::move(code));
        if (++produced >= limit) break;
    } while (std::next_permutation(tail.begin(), tail.end()));
    return distinct;
}

}  // namespace leecodes
