#pragma once

#include <vector>

#include "leecodes/word.hpp"

namespace leecodes {

// Arithmetic tables for GF(q), q = p^k <= 16, over element indices 0..q-1.
// Index 0 is the field zero and index 1 the unit. Prime-power fields use the
// base-p digit expansion of the index as polynomial coefficients. The field
// axioms are checked exhaustively at construction.
class FieldTable {
public:
    static FieldTable make(int q);
    static const std::vector<int>& supported();

    int q() const { return q_; }
    int p() const { return p_; }
    int degree() const { return k_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int sub(int a, int b) const { return add(a, neg_[static_cast<std::size_t>(b)]); }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
    int inv(int a) const;

private:
    FieldTable(int q, int p, int k, std::vector<int> modulus_poly);
    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) +
               static_cast<std::size_t>(b);
    }
    void check_axioms() const;

    int q_ = 2, p_ = 2, k_ = 1;
    std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace leecodes
