#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "leecodes/metrics.hpp"
#include "leecodes/word.hpp"

namespace leecodes {

enum class Parity { Even, Odd, Mixed };

// Thrown when a structural hypothesis fails (degenerate lattice, parity
// violation, non-even alphabet where one is required, ...).
struct StructuralError : std::domain_error {
    using std::domain_error::domain_error;
};

// An explicit set of words over Z_m^n. Codewords are stored as radix-m packed
// 64-bit keys in ascending order, which is exactly lexicographic order of the
// coordinate vectors.
class ModularCode {
public:
    ModularCode(int n, Coord m, Metric metric, const std::vector<CoordVec>& words);
    static ModularCode from_encoded(int n, Coord m, Metric metric, std::vector<std::uint64_t> keys);

    int n() const { return n_; }
    Coord m() const { return m_; }
    Metric metric() const { return metric_; }
    std::size_t size() const { return keys_.size(); }
    const std::vector<std::uint64_t>& encoded() const { return keys_; }

    bool contains(CoordSpan w) const;
    bool contains_encoded(std::uint64_t key) const;
    CoordVec word_at(std::size_t i) const { return decode_word(keys_[i], n_, m_); }
    std::vector<CoordVec> words() const;
    bool contains_zero() const { return !keys_.empty() && keys_.front() == 0; }

    // True when linearity is construction-guaranteed or has been verified.
    // For unflagged codes the closure check runs only when |C|^2 stays small;
    // larger unflagged codes report false. The result is memoized without
    // synchronization: call once before sharing a code across threads.
    bool is_linear() const;
    void set_linear_hint(bool linear) const { linear_ = linear; }

    // Minimum distance in the code's metric over distinct codeword pairs;
    // nullopt when |C| < 2. Exact: min-weight scan for linear codes, pairwise
    // or ball-search otherwise.
    std::optional<std::int64_t> min_distance(const Limits& limits = {}) const;

    friend bool operator==(const ModularCode& a, const ModularCode& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.metric_ == b.metric_ && a.keys_ == b.keys_;
    }

private:
    ModularCode() = default;
    int n_ = 1;
    Coord m_ = 1;
    Metric metric_ = Metric::Lee;
    std::vector<std::uint64_t> keys_;
    mutable std::optional<bool> linear_;
};

// An ordered list of translate vectors of a base code. vectors[0] is always
// the all-zero word, so translate 1 is the code itself. The base pointer may
// be empty for families described purely by their vectors (lattice-backed
// codes too large to materialize).
struct TranslateFamily {
    int n = 1;
    Coord m = 1;
    std::shared_ptr<const ModularCode> base;
    BigInt base_size = 0;
    std::vector<CoordVec> vectors;
    std::vector<Parity> labels;
    bool partition = false;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

// {v + c mod m : c in C}. The result is a translate (it usually does not
// contain zero), represented with the same type.
ModularCode translate(const ModularCode& code, const Word& v);

std::vector<CoordVec> translate_words(const ModularCode& code, CoordSpan v);

// All m^n/|C| cosets of a linear code. Canonical leader of a coset is the
// lexicographically least member of minimum Lee weight; the family is ordered
// by (leader weight, leader lex), which puts the code itself first.
TranslateFamily cosets(const ModularCode& code, const Limits& limits = {});

// [0, +e_1, -e_1, ..., +e_n, -e_n] for the Lee metric; all (m-1)n scalar unit
// vectors for Hamming. Flagged `partition` iff the code is perfect.
TranslateFamily unit_translate_family(const ModularCode& code, Metric metric,
                                      const Limits& limits = {});

Parity parity_of_translate(const std::vector<CoordVec>& words, Coord m);
Parity parity_of_translate(const ModularCode& code);

// The 2n even-weight offsets of the anticode S'_{n,1} (seed axis 1), ordered
// 0, 2e_1, e_1+e_2, e_1-e_2, ..., e_1+e_n, e_1-e_n. These index the even
// translates of every distance-4 diameter perfect code, on both Z_m^n and Z^n.
std::vector<CoordVec> even_translate_offsets_d4(int n);
std::vector<CoordVec> odd_translate_offsets_d4(int n);

// The 2n even translates of a distance-4 diameter perfect code, the code
// itself first. Validates uniform parities and pairwise-distinct translates;
// a violation signals that the input is not diameter perfect.
TranslateFamily even_translates(const ModularCode& code, const Limits& limits = {});

// Appends the parity bit to every codeword of a binary code.
ModularCode extend_binary(const ModularCode& code);

// Drops the last coordinate of a binary even-weight code.
ModularCode puncture_binary(const ModularCode& code);

}  // namespace leecodes
