#pragma once

#include <optional>
#include <vector>

#include "leecodes/bigint.hpp"
#include "leecodes/codes.hpp"
#include "leecodes/word.hpp"

namespace leecodes {

// An integer lattice given by n basis rows, i.e. a linear code in Z^n under
// the Manhattan metric. A triangular canonical form (row-style Hermite normal
// form) is computed once at construction and backs every exact query.
class Lattice {
public:
    explicit Lattice(std::vector<CoordVec> rows);

    int dim() const { return n_; }
    const std::vector<CoordVec>& rows() const { return rows_; }
    const BigInt& volume() const { return volume_; }

    // True iff x is an integer combination of the basis rows.
    bool contains(CoordSpan x) const;

    // Canonical coset representative of x in Z^n / Lambda: the unique point of
    // the HNF box transversal, encoded mixed-radix by the HNF diagonal.
    std::uint64_t coset_id(CoordSpan x) const;

    // Least m > 0 with m*e_i in the lattice for every axis (the exponent of
    // Z^n / Lambda). Computed as the lcm of the per-axis minima.
    Coord period() const;

    // Minimum Manhattan weight over nonzero lattice points, by exhaustive
    // weight-shell search below the row-weight/period upper bound.
    std::int64_t min_manhattan_weight(const Limits& limits = {}) const;

    // Same, restricted to lattice points outside m*Z^n: the minimum Lee weight
    // of the reduced code over Z_m. nullopt when the quotient is trivial.
    std::optional<std::int64_t> min_lee_weight_mod(Coord m, const Limits& limits = {}) const;

    bool all_rows_even_weight() const;

    friend bool operator==(const Lattice& a, const Lattice& b) { return a.rows_ == b.rows_; }

private:
    int n_ = 0;
    std::vector<CoordVec> rows_;
    std::vector<std::vector<BigInt>> hnf_;  // upper triangular, positive diagonal
    BigInt volume_ = 0;
};

// A lattice together with its period m and the reduction over Z_m.
struct LatticeCode {
    Lattice lattice;
    Coord m = 1;
    BigInt quotient_size = 0;                 // m^n / V, always an exact integer
    std::optional<ModularCode> quotient;      // materialized when within the cap
};

// Reduce a lattice to its code over Z_period. Materializes the quotient when
// its size fits the cap (and the caller did not opt out); the quotient always
// contains zero and is closed under addition.
LatticeCode reduce_to_modular(const Lattice& lattice, const Limits& limits = {},
                              bool materialize = true);

// Minimum distance of the reduced code: Lee on the quotient, or Manhattan on
// the lattice itself. Exact.
std::int64_t min_distance(const LatticeCode& code, Metric metric, const Limits& limits = {});

// All m^n/V cosets of the quotient code, leaders found by weight-shell search
// against the lattice; no materialization of the space. The family's base
// pointer carries the quotient only when it is materialized.
TranslateFamily cosets(const LatticeCode& code, const Limits& limits = {});

// The 2n even translates of a distance-4 diameter perfect lattice code,
// validated with lattice arithmetic only.
TranslateFamily even_translates(const LatticeCode& code, const Limits& limits = {});

}  // namespace leecodes
