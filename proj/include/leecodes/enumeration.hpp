#pragma once

#include "leecodes/products.hpp"

namespace leecodes {

// Number of distinct diameter perfect codes of length 2^r p over Z_{4p}
// produced by the iterated doubling: prod_{i=1..r} ((2^i p - 1)!)^{2^(r-i)}.
// Level i runs 2^(r-i) independent doublings, each choosing a permutation of
// 2^i p even translates with the first element fixed.
BigInt count_distinct_diameter_perfect(int r, int p);

// Applies lee_double for the permutations of the even translates fixing 1,
// in lexicographic order (identity first), and returns the distinct codeword
// sets. At most `limit` permutations are enumerated, so the listing is
// complete exactly when (2n-1)! <= limit. With verify_each set, every
// produced code is checked diameter perfect before being returned.
std::vector<ModularCode> enumerate_doubled_codes(const ModularCode& c1, const ModularCode& c2,
                                                 std::uint64_t limit, bool verify_each = true,
                                                 const Limits& limits = {});

}  // namespace leecodes
