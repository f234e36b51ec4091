#ifndef SUNFLOWER_COMBINATORICS_HPP
#define SUNFLOWER_COMBINATORICS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "sunflower/ordset.hpp"

namespace sunflower {

/// C(n, k), saturating at cap instead of overflowing. cap defaults high
/// enough for every guard in this project.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k,
                       std::uint64_t cap = UINT64_C(1) << 62);

/// Calls fn for every k-subset of items (taken in the given order, which for
/// an OrdSet is increasing), in lexicographic order of the chosen
/// subsequences. fn returning false stops the enumeration early.
void for_each_combination(const std::vector<ordinal>& items, std::size_t k,
                          const std::function<bool(const std::vector<ordinal>&)>& fn);

/// All k-subsets of items in lexicographic order.
std::vector<OrdSet> combinations(const OrdSet& items, std::size_t k);

} // namespace sunflower

#endif
