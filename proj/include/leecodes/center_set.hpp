#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>

#include "leecodes/lattice.hpp"
#include "leecodes/metrics.hpp"
#include "leecodes/products.hpp"

namespace leecodes {

// A doubly-infinite sequence over Z_{R+1}: an explicit window of values or an
// index-addressable generator. Generators are defined for every index.
class Sequence {
public:
    enum class Kind { Explicit, Constant, Alternating, Sturmian, Random };

    static Sequence explicit_values(std::vector<int> values, std::int64_t first_index, int modulus);
    static Sequence constant(int value, int modulus);
    static Sequence alternating(int modulus);
    static Sequence sturmian(int modulus);
    static Sequence seeded_random(std::uint64_t seed, int modulus);

    int modulus() const { return modulus_; }
    Kind kind() const { return kind_; }
    int at(std::int64_t i) const;
    bool bounded() const { return kind_ == Kind::Explicit; }
    std::int64_t first_index() const { return first_; }
    std::int64_t last_index() const;  // inclusive; Explicit only

private:
    Kind kind_ = Kind::Constant;
    int modulus_ = 2;
    int value_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<int> values_;
    std::int64_t first_ = 0;
};

// A finitely-describable subset of Z^n: lattice points, the diagonal-strip
// set of a sequence, or a doubling product of two center sets. Serves both as
// the center set of an anticode tiling and as an infinite-extent Manhattan
// code.
class CenterSet {
public:
    static CenterSet from_lattice(LatticeCode code, AnticodeSpec anticode);
    static CenterSet from_sequence(Sequence s, int R);
    static CenterSet product(CenterSet a, CenterSet b, PermutationPlan pi);

    int dim() const { return n_; }
    const AnticodeSpec& anticode() const { return anticode_; }
    bool contains(CoordSpan p) const;

    // 1-based index of the even translate containing p (offset order of
    // even_translate_offsets_d4), or nullopt when p sits in an odd translate.
    // Only meaningful for distance-4 center sets (anticode R = 1).
    std::optional<int> even_translate_index(CoordSpan p) const;

    bool lattice_backed() const;
    bool sequence_backed() const;
    const LatticeCode* lattice() const;
    const Sequence* sequence() const;
    int sequence_radius() const { return seq_R_; }

private:
    CenterSet() = default;
    struct Product {
        std::shared_ptr<const CenterSet> a, b;
        PermutationPlan pi;
    };
    int n_ = 2;
    AnticodeSpec anticode_;
    int seq_R_ = 1;
    std::variant<std::monostate, LatticeCode, Sequence, Product> backing_;
};

// Doubling over Z^n: membership oracle for
// {(x, y) : x in C1^i, y in C2^{pi(i)}} over the even translate families.
// Non-periodicity of either factor is inherited by the result.
CenterSet manhattan_double(const CenterSet& c1, const CenterSet& c2, const PermutationPlan& pi);

}  // namespace leecodes
