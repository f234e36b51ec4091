#include "sunflower/ordset.hpp"

#include <algorithm>
#include <sstream>

namespace sunflower {

OrdSet::OrdSet(std::vector<ordinal> xs) : elems_(std::move(xs)) {
    std::sort(elems_.begin(), elems_.end());
    if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
        throw input_error("OrdSet: duplicate element");
}

OrdSet OrdSet::from_sorted(std::vector<ordinal> xs) {
    OrdSet s;
    s.elems_ = std::move(xs);
    return s;
}

ordinal OrdSet::operator[](std::size_t i) const {
    if (i >= elems_.size()) throw input_error("OrdSet: position out of range");
    return elems_[i];
}

bool OrdSet::contains(ordinal x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::size_t OrdSet::rank_below(ordinal x) const {
    return static_cast<std::size_t>(
        std::lower_bound(elems_.begin(), elems_.end(), x) - elems_.begin());
}

ordinal OrdSet::min() const {
    if (elems_.empty()) throw input_error("OrdSet: min of empty set");
    return elems_.front();
}

ordinal OrdSet::max() const {
    if (elems_.empty()) throw input_error("OrdSet: max of empty set");
    return elems_.back();
}

std::string OrdSet::str() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) out << ',';
        out << elems_[i];
    }
    out << ']';
    return out.str();
}

PosSet::PosSet(std::vector<std::uint32_t> xs) : pos_(std::move(xs)) {
    std::sort(pos_.begin(), pos_.end());
    pos_.erase(std::unique(pos_.begin(), pos_.end()), pos_.end());
}

PosSet PosSet::full(std::uint32_t rho) {
    PosSet p;
    p.pos_.resize(rho);
    for (std::uint32_t i = 0; i < rho; ++i) p.pos_[i] = i;
    return p;
}

bool PosSet::contains(std::uint32_t i) const {
    return std::binary_search(pos_.begin(), pos_.end(), i);
}

PosSet operator&(const PosSet& a, const PosSet& b) {
    PosSet out;
    std::set_intersection(a.pos_.begin(), a.pos_.end(), b.pos_.begin(), b.pos_.end(),
                          std::back_inserter(out.pos_));
    return out;
}

bool PosSet::subset_of(const PosSet& other) const {
    return std::includes(other.pos_.begin(), other.pos_.end(), pos_.begin(), pos_.end());
}

std::uint32_t PosSet::bits() const {
    std::uint32_t b = 0;
    for (auto i : pos_) {
        if (i >= 32) throw input_error("PosSet: position too large for bitmask");
        b |= (1u << i);
    }
    return b;
}

PosSet PosSet::from_bits(std::uint32_t bits) {
    PosSet p;
    for (std::uint32_t i = 0; i < 32; ++i)
        if (bits & (1u << i)) p.pos_.push_back(i);
    return p;
}

std::string PosSet::str() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < pos_.size(); ++i) {
        if (i) out << ',';
        out << pos_[i];
    }
    out << '}';
    return out.str();
}

OrdSet set_intersect(const OrdSet& a, const OrdSet& b) {
    std::vector<ordinal> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return OrdSet::from_sorted(std::move(out));
}

OrdSet set_union(const OrdSet& a, const OrdSet& b) {
    std::vector<ordinal> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return OrdSet::from_sorted(std::move(out));
}

OrdSet set_minus(const OrdSet& a, const OrdSet& b) {
    std::vector<ordinal> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return OrdSet::from_sorted(std::move(out));
}

OrdSet image(const OrdSet& u, const PosSet& I) {
    std::vector<ordinal> out;
    out.reserve(I.size());
    for (auto i : I) {
        if (i >= u.otp()) throw input_error("image: position out of range");
        out.push_back(u[i]);
    }
    return OrdSet::from_sorted(std::move(out)); // positions increasing => values increasing
}

bool aligned(const OrdSet& a, const OrdSet& b) {
    if (a.otp() != b.otp()) return false;
    std::size_t i = 0, j = 0;
    while (i < a.otp() && j < b.otp()) {
        if (a[i] < b[j]) ++i;
        else if (b[j] < a[i]) ++j;
        else {
            if (i != j) return false;
            ++i; ++j;
        }
    }
    return true;
}

PosSet rmask(const OrdSet& a, const OrdSet& b) {
    std::vector<std::uint32_t> out;
    std::size_t i = 0, j = 0;
    while (i < a.otp() && j < b.otp()) {
        if (a[i] < b[j]) ++i;
        else if (b[j] < a[i]) ++j;
        else {
            out.push_back(static_cast<std::uint32_t>(i));
            ++i; ++j;
        }
    }
    return PosSet(std::move(out));
}

bool aligned_above(const OrdSet& a, const OrdSet& b, std::size_t i) {
    if (a.otp() != b.otp()) throw input_error("aligned_above: unequal order types");
    if (i >= a.otp()) throw input_error("aligned_above: index out of range");
    // Tails have equal length, so alignment reduces to matching offsets of
    // common elements.
    std::size_t p = i, q = i;
    while (p < a.otp() && q < b.otp()) {
        if (a[p] < b[q]) ++p;
        else if (b[q] < a[p]) ++q;
        else {
            if (p != q) return false;
            ++p; ++q;
        }
    }
    return true;
}

TypeProfile tp(const std::vector<OrdSet>& us) {
    OrdSet uni;
    for (const auto& u : us) uni = set_union(uni, u);
    TypeProfile profile;
    profile.slots.reserve(uni.otp());
    for (ordinal alpha : uni) {
        std::vector<std::size_t> slot;
        for (std::size_t i = 0; i < us.size(); ++i)
            if (us[i].contains(alpha)) slot.push_back(i);
        profile.slots.push_back(std::move(slot));
    }
    return profile;
}

TypeProfile tp(const OrdSet& u0, const OrdSet& u1) { return tp(std::vector<OrdSet>{u0, u1}); }

IntersectionType tp_int(const OrdSet& a, const OrdSet& b) {
    IntersectionType t;
    std::size_t i = 0, j = 0;
    while (i < a.otp() && j < b.otp()) {
        if (a[i] < b[j]) ++i;
        else if (b[j] < a[i]) ++j;
        else {
            t.pairs.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
            ++i; ++j;
        }
    }
    return t;
}

bool is_possible(const OrdSet& a, std::size_t i, ordinal alpha) {
    if (i >= a.otp()) throw input_error("is_possible: index out of range");
    if (i > 0 && !(alpha > a[i - 1])) return false;
    if (i + 1 < a.otp() && !(alpha < a[i + 1])) return false;
    return true;
}

OrdSet substitute(const OrdSet& a, std::size_t i, ordinal alpha) {
    if (!is_possible(a, i, alpha))
        throw input_error("substitute: replacement not possible at this position");
    std::vector<ordinal> out = a.elems();
    out[i] = alpha;
    return OrdSet::from_sorted(std::move(out));
}

std::size_t delta_distance(const OrdSet& a, const OrdSet& b) {
    std::size_t count = 0, i = 0, j = 0;
    while (i < a.otp() && j < b.otp()) {
        if (a[i] < b[j]) ++i;
        else if (b[j] < a[i]) ++j;
        else {
            if (i != j) ++count;
            ++i; ++j;
        }
    }
    return count;
}

} // namespace sunflower
