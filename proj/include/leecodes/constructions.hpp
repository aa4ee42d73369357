#pragma once

#include "leecodes/codes.hpp"
#include "leecodes/field.hpp"
#include "leecodes/lattice.hpp"

namespace leecodes {

// Parity-check code {x in Z_m^n : sum i*x_i = 0 mod 2n+1} with m = tau(2n+1).
// Linear, minimum Lee distance 3, size m^n/(2n+1). Perfect for tau = 1.
ModularCode lee_single_error_code(int n, Coord tau = 1, const Limits& limits = {});

// Smallest alphabet admitting a perfect single-error-correcting Lee code of
// length n: the product of the distinct prime factors of 2n+1.
Coord smallest_perfect_alphabet(int n);

// Two-dimensional perfect R-error-correcting code over Z_{2R^2+2R+1}, from the
// basis {(R+1, R), (-R, R+1)}. Self-verified by an exhaustive cover check.
LatticeCode golomb_welch_2d(int R, const Limits& limits = {});

// The lattice with identity block, odd column [3 5 ... 2n-1] and corner 4n;
// volume 4n, minimum Manhattan distance four, reduces over Z_{4n}.
Lattice diameter4_lattice(int n);

// [[R+1+i, R+1-i], [i, 2(R+1)-i]] for 0 <= i <= R: volume 2(R+1)^2, minimum
// Manhattan distance 2(R+1), diameter perfect against S'_{2,R}.
Lattice diameter_2d_family(int R, int i);

// The fixed 3x3 Minkowski generator matrix; volume 38, minimum Manhattan
// distance 6, diameter perfect against S'_{3,2}.
Lattice minkowski_code();

// Perfect single-error-correcting Hamming code of length (q^r-1)/(q-1) over
// the field's q symbols, materialized from the projective parity-check matrix.
ModularCode hamming_code(const FieldTable& field, int r, const Limits& limits = {});

}  // namespace leecodes
