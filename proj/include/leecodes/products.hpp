#pragma once

#include <vector>

#include "leecodes/codes.hpp"

namespace leecodes {

// A bijection of {1..size} with the fixed point pi(1) = 1, so the all-zero
// word survives every product construction.
class PermutationPlan {
public:
    explicit PermutationPlan(std::vector<int> one_based_map);
    static PermutationPlan identity(int size);

    int size() const { return static_cast<int>(map_.size()); }
    int apply(int i) const { return map_[static_cast<std::size_t>(i - 1)]; }
    int inverse(int i) const { return inv_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& mapping() const { return map_; }
    bool is_identity() const;

    friend bool operator==(const PermutationPlan&, const PermutationPlan&) = default;

private:
    std::vector<int> map_, inv_;
};

// Phelps doubling of a binary perfect code of length 2^r - 1: pairs the unit
// translates of the code with the even translates of its extension. Result is
// perfect of length 2^{r+1} - 1.
ModularCode phelps_double(const ModularCode& code, const Limits& limits = {});

// Permuted variant pairing even extended translates of two codes: an extended
// perfect code of length 2^{r+1}, distance four, all weights even.
ModularCode phelps_double_permuted(const ModularCode& b, const ModularCode& c,
                                   const PermutationPlan& pi, const Limits& limits = {});

// q-ary Hamming product: inner perfect code over q letters with q^r translates,
// outer perfect code over q^r letters selects a translate per block.
ModularCode qary_product(const ModularCode& inner, const ModularCode& outer,
                         const Limits& limits = {});

// Doubling for (n, 4, 4n, m) diameter perfect Lee codes; pi acts on the 2n
// even translates. Result is a (2n, 4, 8n, m) diameter perfect code.
ModularCode lee_double(const ModularCode& c1, const ModularCode& c2, const PermutationPlan& pi,
                       const Limits& limits = {});

// Binary-tree iteration of lee_double: level i (1-based) applies 2^{r-i}
// doublings, each consuming one plan from the schedule (empty schedule means
// identity plans throughout).
ModularCode iterate_lee_double(const ModularCode& base, int r,
                               const std::vector<std::vector<PermutationPlan>>& schedule = {},
                               const Limits& limits = {});

// Product of a perfect Lee code (2n+1 unit translates, alphabet tau(2n+1))
// with a perfect Hamming code over 2n+1 letters, one permutation per block.
// Membership is answered by block syndrome decoding without materialization.
class LeeProductCode {
public:
    LeeProductCode(ModularCode inner, ModularCode outer, std::vector<PermutationPlan> plans);

    int block_length() const { return inner_.n(); }
    int blocks() const { return outer_.n(); }
    int n() const { return inner_.n() * outer_.n(); }
    Coord m() const { return inner_.m(); }
    const ModularCode& inner() const { return inner_; }
    const ModularCode& outer() const { return outer_; }
    BigInt size() const;

    bool contains(CoordSpan word) const;
    ModularCode materialize(const Limits& limits = {}) const;

private:
    ModularCode inner_, outer_;
    std::vector<PermutationPlan> plans_;
    std::vector<CoordVec> leaders_;          // unit translate leaders, index 1..2n+1
    std::vector<int> syndrome_to_index_;     // leader syndrome -> 1-based index
};

LeeProductCode lee_product(const ModularCode& inner, const ModularCode& outer,
                           const std::vector<PermutationPlan>& plans, const Limits& limits = {});

}  // namespace leecodes
