#include "sunflower/combinatorics.hpp"

namespace sunflower {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i is always integral at this point
        std::uint64_t num = n - k + i;
        if (result > cap / num) return cap;
        result = result * num / i;
    }
    return result < cap ? result : cap;
}

void for_each_combination(const std::vector<ordinal>& items, std::size_t k,
                          const std::function<bool(const std::vector<ordinal>&)>& fn) {
    const std::size_t n = items.size();
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<ordinal> current(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) current[i] = items[idx[i]];
        if (!fn(current)) return;
        // advance to the next index combination
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

std::vector<OrdSet> combinations(const OrdSet& items, std::size_t k) {
    std::vector<OrdSet> out;
    for_each_combination(items.elems(), k, [&](const std::vector<ordinal>& c) {
        out.push_back(OrdSet::from_sorted(c));
        return true;
    });
    return out;
}

} // namespace sunflower
