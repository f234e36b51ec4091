#ifndef SUNFLOWER_ORDSET_HPP
#define SUNFLOWER_ORDSET_HPP

#include <cstdint>
#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sunflower/errors.hpp"

namespace sunflower {

using ordinal = std::uint64_t;

/// A finite set of ordinals, kept as a strictly increasing sequence.
/// Everything here is finite, so the order type of a set is its length and
/// u(i) is the i-th smallest element.
class OrdSet {
public:
    OrdSet() = default;
    OrdSet(std::initializer_list<ordinal> xs) : OrdSet(std::vector<ordinal>(xs)) {}

    /// Sorts its input. Duplicates are rejected rather than collapsed:
    /// the families we handle are families of sets, and a silent collapse
    /// would hide a caller bug.
    explicit OrdSet(std::vector<ordinal> xs);

    /// Wraps a vector that is already known to be strictly increasing.
    static OrdSet from_sorted(std::vector<ordinal> xs);

    std::size_t otp() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }

    /// The i-th smallest element; i must be < otp().
    ordinal operator[](std::size_t i) const;

    bool contains(ordinal x) const;
    /// otp(u ∩ x) — the number of elements below x.
    std::size_t rank_below(ordinal x) const;

    const std::vector<ordinal>& elems() const { return elems_; }
    std::vector<ordinal>::const_iterator begin() const { return elems_.begin(); }
    std::vector<ordinal>::const_iterator end() const { return elems_.end(); }

    ordinal min() const;
    ordinal max() const;
    /// max with the convention max(∅) + 1 == 0, so "everything above the
    /// set" starts at 0 for the empty set.
    ordinal sup_plus_one() const { return empty() ? 0 : max() + 1; }

    friend bool operator==(const OrdSet&, const OrdSet&) = default;
    friend std::strong_ordering operator<=>(const OrdSet& a, const OrdSet& b) {
        return a.elems_ <=> b.elems_;
    }

    std::string str() const; // "[0,5,7]"

private:
    std::vector<ordinal> elems_;
};

/// A set of positions, each meaningful relative to some bound rho that the
/// consuming operation validates against.
class PosSet {
public:
    PosSet() = default;
    PosSet(std::initializer_list<std::uint32_t> xs) : PosSet(std::vector<std::uint32_t>(xs)) {}
    explicit PosSet(std::vector<std::uint32_t> xs);

    static PosSet full(std::uint32_t rho); // {0, ..., rho-1}

    std::size_t size() const { return pos_.size(); }
    bool empty() const { return pos_.empty(); }
    bool contains(std::uint32_t i) const;
    bool max_below(std::uint32_t bound) const { return pos_.empty() || pos_.back() < bound; }

    const std::vector<std::uint32_t>& positions() const { return pos_; }
    std::vector<std::uint32_t>::const_iterator begin() const { return pos_.begin(); }
    std::vector<std::uint32_t>::const_iterator end() const { return pos_.end(); }

    friend PosSet operator&(const PosSet& a, const PosSet& b);
    bool subset_of(const PosSet& other) const;

    friend bool operator==(const PosSet&, const PosSet&) = default;
    friend std::strong_ordering operator<=>(const PosSet& a, const PosSet& b) {
        return a.pos_ <=> b.pos_;
    }

    /// Bitmask encoding, usable when every position is < 32.
    std::uint32_t bits() const;
    static PosSet from_bits(std::uint32_t bits);

    std::string str() const;

private:
    std::vector<std::uint32_t> pos_;
};

/// tp of an indexed sequence of ordinal sets: slot eta records which members
/// of the sequence contain the eta-th element of the union.
struct TypeProfile {
    std::vector<std::vector<std::size_t>> slots;
    friend bool operator==(const TypeProfile&, const TypeProfile&) = default;
};

/// All position pairs (i, j) with a(i) == b(j). Always a partial bijection
/// since both sides are strictly increasing.
struct IntersectionType {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    friend bool operator==(const IntersectionType&, const IntersectionType&) = default;
};

// --- operations ---

OrdSet set_intersect(const OrdSet& a, const OrdSet& b);
OrdSet set_union(const OrdSet& a, const OrdSet& b);
OrdSet set_minus(const OrdSet& a, const OrdSet& b);

/// u[I] = {u(i) | i in I}. Positions out of range are an input error.
OrdSet image(const OrdSet& u, const PosSet& I);

/// True iff otp(a) == otp(b) and every common element sits at the same
/// position in both sets.
bool aligned(const OrdSet& a, const OrdSet& b);

/// {i < otp(a) | a(i) in b}.
PosSet rmask(const OrdSet& a, const OrdSet& b);

/// True iff the tails a[{i..otp-1}] and b[{i..otp-1}] are aligned.
/// Requires otp(a) == otp(b) and i < otp(a).
bool aligned_above(const OrdSet& a, const OrdSet& b, std::size_t i);

TypeProfile tp(const std::vector<OrdSet>& us);
TypeProfile tp(const OrdSet& u0, const OrdSet& u1);

IntersectionType tp_int(const OrdSet& a, const OrdSet& b);

/// True iff alpha can replace a(i) without disturbing the relative order of
/// the other elements. i must be < otp(a).
bool is_possible(const OrdSet& a, std::size_t i, ordinal alpha);

/// a with its i-th element replaced by alpha; alpha must be i-possible.
OrdSet substitute(const OrdSet& a, std::size_t i, ordinal alpha);

/// The number of common elements of a and b that occupy different positions
/// in the two sets. Zero together with equal otp characterizes alignment.
std::size_t delta_distance(const OrdSet& a, const OrdSet& b);

} // namespace sunflower

#endif
