#include "leecodes/center_set.hpp"

#include <stdexcept>

namespace leecodes {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Golden-ratio convergent F_45/F_44; exact integer rotation, far beyond any
// desk-scale window before the rational period shows.
constexpr std::int64_t kGoldenNum = 1134903170;
constexpr std::int64_t kGoldenDen = 701408733;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace

Sequence Sequence::explicit_values(std::vector<int> values, std::int64_t first_index,
                                   int modulus) {
    if (modulus < 1) throw std::invalid_argument("Sequence: modulus < 1");
    if (values.empty()) throw std::invalid_argument("Sequence: empty value window");
    Sequence s;
    s.kind_ = Kind::Explicit;
    s.modulus_ = modulus;
    s.first_ = first_index;
    for (auto& v : values) v = ((v % modulus) + modulus) % modulus;
    s.values_ = std::move(values);
    return s;
}

Sequence Sequence::constant(int value, int modulus) {
    if (modulus < 1) throw std::invalid_argument("Sequence: modulus < 1");
    Sequence s;
    s.kind_ = Kind::Constant;
    s.modulus_ = modulus;
    s.value_ = ((value % modulus) + modulus) % modulus;
    return s;
}

Sequence Sequence::alternating(int modulus) {
    if (modulus < 1) throw std::invalid_argument("Sequence: modulus < 1");
    Sequence s;
    s.kind_ = Kind::Alternating;
    s.modulus_ = modulus;
    return s;
}

Sequence Sequence::sturmian(int modulus) {
    if (modulus < 2) throw std::invalid_argument("Sequence: sturmian needs modulus >= 2");
    Sequence s;
    s.kind_ = Kind::Sturmian;
    s.modulus_ = modulus;
    return s;
}

Sequence Sequence::seeded_random(std::uint64_t seed, int modulus) {
    if (modulus < 1) throw std::invalid_argument("Sequence: modulus < 1");
    Sequence s;
    s.kind_ = Kind::Random;
    s.modulus_ = modulus;
    s.seed_ = seed;
    return s;
}

int Sequence::at(std::int64_t i) const {
    switch (kind_) {
        case Kind::Explicit: {
            if (i < first_ || i >= first_ + static_cast<std::int64_t>(values_.size()))
                throw std::out_of_range("Sequence: index outside the supplied range");
            return values_[static_cast<std::size_t>(i - first_)];
        }
        case Kind::Constant:
            return value_;
        case Kind::Alternating:
            return static_cast<int>(((i % modulus_) + modulus_) % modulus_);
        case Kind::Sturmian: {
            std::int64_t b = floor_div(i * kGoldenNum, kGoldenDen);
            return static_cast<int>(((b % modulus_) + modulus_) % modulus_);
        }
        case Kind::Random:
            return static_cast<int>(splitmix64(seed_ ^ static_cast<std::uint64_t>(i)) %
                                    static_cast<std::uint64_t>(modulus_));
    }
    throw std::logic_error("unreachable");
}

std::int64_t Sequence::last_index() const {
    if (kind_ != Kind::Explicit) throw std::logic_error("Sequence: unbounded generator");
    return first_ + static_cast<std::int64_t>(values_.size()) - 1;
}

CenterSet CenterSet::from_lattice(LatticeCode code, AnticodeSpec anticode) {
    if (anticode.n != code.lattice.dim())
        throw std::invalid_argument("CenterSet: anticode dimension mismatch");
    BigInt a_size = anticode.diameter_parity == DiameterParity::Odd
                        ? anticode_size(anticode.n, anticode.R)
                        : lee_sphere_size(anticode.n, anticode.R);
    if (a_size != code.lattice.volume())
        throw std::invalid_argument("CenterSet: anticode size must equal the lattice volume");
    CenterSet cs;
    cs.n_ = code.lattice.dim();
    cs.anticode_ = anticode;
    cs.backing_ = std::move(code);
    return cs;
}

CenterSet CenterSet::from_sequence(Sequence s, int R) {
    if (R < 1) throw std::invalid_argument("CenterSet: R < 1");
    if (s.modulus() != R + 1)
        throw std::invalid_argument("CenterSet: sequence alphabet must be Z_{R+1}");
    CenterSet cs;
    cs.n_ = 2;
    cs.anticode_ = AnticodeSpec{2, R, DiameterParity::Odd, 1};
    cs.seq_R_ = R;
    cs.backing_ = std::move(s);
    return cs;
}

CenterSet CenterSet::product(CenterSet a, CenterSet b, PermutationPlan pi) {
    if (a.anticode_.R != 1 || b.anticode_.R != 1 ||
        a.anticode_.diameter_parity != DiameterParity::Odd ||
        b.anticode_.diameter_parity != DiameterParity::Odd)
        throw std::invalid_argument(
            "CenterSet::product: factors must be distance-4 codes (anticode S'_{n,1})");
    if (a.dim() != b.dim())
        throw std::invalid_argument("CenterSet::product: factor dimensions differ");
    if (pi.size() != 2 * a.dim())
        throw std::invalid_argument("CenterSet::product: permutation size must be 2n");
    for (const CenterSet* factor : {&a, &b})
        if (const auto* lat = factor->lattice(); lat && lat->lattice.min_manhattan_weight() != 4)
            throw std::invalid_argument(
                "CenterSet::product: lattice factor does not have minimum distance 4");
    CenterSet cs;
    cs.n_ = a.dim() + b.dim();
    cs.anticode_ = AnticodeSpec{cs.n_, 1, DiameterParity::Odd, 1};
    cs.backing_ = Product{std::make_shared<CenterSet>(std::move(a)),
                          std::make_shared<CenterSet>(std::move(b)), std::move(pi)};
    return cs;
}

bool CenterSet::contains(CoordSpan p) const {
    if (static_cast<int>(p.size()) != n_)
        throw std::invalid_argument("CenterSet: dimension mismatch");
    if (const auto* lat = std::get_if<LatticeCode>(&backing_)) return lat->lattice.contains(p);
    if (const auto* seq = std::get_if<Sequence>(&backing_)) {
        const std::int64_t step = seq_R_ + 1;
        std::int64_t diag = p[0] - p[1];
        if (diag % (2 * step) != 0) return false;
        std::int64_t i = diag / (2 * step);
        std::int64_t rem = p[1] - seq->at(i);
        return rem % step == 0;
    }
    const auto& prod = std::get<Product>(backing_);
    const int half = prod.a->dim();
    auto idx = prod.a->even_translate_index(p.subspan(0, static_cast<std::size_t>(half)));
    if (!idx.has_value()) return false;
    const auto offsets = even_translate_offsets_d4(half);
    const auto& off = offsets[static_cast<std::size_t>(prod.pi.apply(*idx) - 1)];
    CoordVec y(p.begin() + half, p.end());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= off[i];
    return prod.b->contains(y);
}

std::optional<int> CenterSet::even_translate_index(CoordSpan p) const {
    const auto offsets = even_translate_offsets_d4(n_);
    CoordVec q(static_cast<std::size_t>(n_));
    for (std::size_t idx = 0; idx < offsets.size(); ++idx) {
        for (std::size_t i = 0; i < q.size(); ++i) q[i] = p[i] - offsets[idx][i];
        if (contains(q)) return static_cast<int>(idx) + 1;
    }
    return std::nullopt;
}

bool CenterSet::lattice_backed() const { return std::holds_alternative<LatticeCode>(backing_); }
bool CenterSet::sequence_backed() const { return std::holds_alternative<Sequence>(backing_); }

const LatticeCode* CenterSet::lattice() const { return std::get_if<LatticeCode>(&backing_); }
const Sequence* CenterSet::sequence() const { return std::get_if<Sequence>(&backing_); }

CenterSet manhattan_double(const CenterSet& c1, const CenterSet& c2, const PermutationPlan& pi) {
    return CenterSet::product(c1, c2, pi);
}

}  // namespace leecodes
