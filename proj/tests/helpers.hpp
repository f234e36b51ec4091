#ifndef SUNFLOWER_TEST_HELPERS_HPP
#define SUNFLOWER_TEST_HELPERS_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "sunflower/delta.hpp"
#include "sunflower/ordset.hpp"

namespace sunflower::testing {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline OrdSet random_ordset(std::mt19937_64& rng, ordinal max_value, std::size_t max_otp) {
    std::uniform_int_distribution<std::size_t> size_dist(0, max_otp);
    const std::size_t want = std::min<std::size_t>(size_dist(rng), static_cast<std::size_t>(max_value));
    std::vector<ordinal> pool(max_value);
    for (ordinal i = 0; i < max_value; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(want);
    std::sort(pool.begin(), pool.end());
    return OrdSet::from_sorted(std::move(pool));
}

/// A random strictly increasing map applied elementwise: produces an
/// order-isomorphic copy, the cheap source of equal-type positives.
inline std::vector<OrdSet> monotone_image(std::mt19937_64& rng, const std::vector<OrdSet>& us) {
    OrdSet uni;
    for (const auto& u : us) uni = set_union(uni, u);
    std::uniform_int_distribution<ordinal> gap(1, 5);
    std::vector<ordinal> mapped(uni.otp());
    ordinal next = gap(rng);
    for (std::size_t i = 0; i < uni.otp(); ++i) {
        mapped[i] = next;
        next += gap(rng);
    }
    auto apply = [&](const OrdSet& u) {
        std::vector<ordinal> out;
        out.reserve(u.otp());
        for (ordinal x : u) out.push_back(mapped[uni.rank_below(x)]);
        return OrdSet::from_sorted(std::move(out));
    };
    std::vector<OrdSet> vs;
    vs.reserve(us.size());
    for (const auto& u : us) vs.push_back(apply(u));
    return vs;
}

/// Alignment straight from the definition, counting order types of initial
/// segments; kept separate from the merge-walk the library uses.
inline bool oracle_aligned(const OrdSet& a, const OrdSet& b) {
    if (a.otp() != b.otp()) return false;
    for (ordinal gamma : set_intersect(a, b))
        if (a.rank_below(gamma) != b.rank_below(gamma)) return false;
    return true;
}

/// All subsets of {0, ..., universe-1}, for exhaustive sweeps.
inline std::vector<OrdSet> all_subsets(ordinal universe) {
    std::vector<OrdSet> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << universe); ++bits) {
        std::vector<ordinal> xs;
        for (ordinal i = 0; i < universe; ++i)
            if (bits & (std::uint64_t{1} << i)) xs.push_back(i);
        out.push_back(OrdSet::from_sorted(std::move(xs)));
    }
    return out;
}

} // namespace sunflower::testing

#endif
