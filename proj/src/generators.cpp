#include "sunflower/generators.hpp"

#include <algorithm>

#include "sunflower/combinatorics.hpp"

namespace sunflower {

std::int64_t TupleColoring::at(const std::vector<ordinal>& t) const {
    auto it = map.find(t);
    if (it == map.end()) throw input_error("TupleColoring: missing tuple");
    return it->second;
}

namespace {

OrdSet iota_set(ordinal mu) {
    std::vector<ordinal> xs(mu);
    for (ordinal i = 0; i < mu; ++i) xs[static_cast<std::size_t>(i)] = i;
    return OrdSet::from_sorted(std::move(xs));
}

} // namespace

Family gen_product_family(ordinal mu, std::uint32_t n, const std::vector<ordinal>& offsets) {
    if (offsets.size() != n) throw input_error("gen_product_family: need one offset per coordinate");
    if (mu == 0) throw input_error("gen_product_family: mu must be positive");
    // Blocks [off, off + mu) must be pairwise disjoint and clear of [0, mu).
    std::vector<std::pair<ordinal, ordinal>> blocks{{0, mu}};
    for (ordinal off : offsets) blocks.emplace_back(off, off + mu);
    std::sort(blocks.begin(), blocks.end());
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
        if (blocks[i + 1].first < blocks[i].second)
            throw input_error("gen_product_family: overlapping value blocks");

    OrdSet ground = iota_set(mu);
    std::map<OrdSet, OrdSet> entries;
    for (const auto& b : combinations(ground, n)) {
        std::vector<ordinal> value(n);
        for (std::uint32_t m = 0; m < n; ++m) value[m] = offsets[m] + b[m];
        entries.emplace(b, OrdSet(std::move(value)));
    }
    return Family(n, std::move(ground), std::move(entries));
}

Family gen_shift_family(ordinal mu) {
    if (mu < 2) throw input_error("gen_shift_family: mu must be at least 2");
    OrdSet ground = iota_set(mu);
    std::map<OrdSet, OrdSet> entries;
    for (const auto& b : combinations(ground, 2))
        entries.emplace(b, OrdSet{b[0], b[1] + 1});
    return Family(2, std::move(ground), std::move(entries));
}

Family gen_indicator_family(ordinal mu, std::uint32_t n, const Coloring& c) {
    OrdSet ground = iota_set(mu);
    std::map<OrdSet, OrdSet> entries;
    for (const auto& b : combinations(ground, n)) {
        auto it = c.map.find(b);
        if (it == c.map.end()) throw input_error("gen_indicator_family: coloring not total");
        if (it->second != 0 && it->second != 1)
            throw input_error("gen_indicator_family: colors must be 0 or 1");
        entries.emplace(b, it->second == 0 ? OrdSet{} : OrdSet{0});
    }
    return Family(n, std::move(ground), std::move(entries));
}

Family gen_pairing_family(ordinal mu, const Coloring& c) {
    OrdSet ground = iota_set(mu);
    std::map<OrdSet, OrdSet> entries;
    for (const auto& b : combinations(ground, 2)) {
        auto it = c.map.find(b);
        if (it == c.map.end()) throw input_error("gen_pairing_family: coloring not total");
        if (it->second == 0) {
            entries.emplace(b, OrdSet{});
        } else {
            // Cantor pairing shifted above mu keeps the singletons injective
            // and clear of the ground set.
            const ordinal s = b[0] + b[1];
            entries.emplace(b, OrdSet{mu + s * (s + 1) / 2 + b[1]});
        }
    }
    return Family(2, std::move(ground), std::move(entries));
}

std::int64_t first_difference_color(ordinal alpha, ordinal beta, std::int64_t colors) {
    if (alpha == beta) throw input_error("first_difference_color: values must differ");
    if (colors < 1) throw input_error("first_difference_color: need at least one color");
    std::int64_t bit = 0;
    while (((alpha ^ beta) & (ordinal{1} << bit)) == 0) ++bit;
    return bit % colors;
}

Coloring first_difference_coloring(std::uint32_t bits, std::int64_t colors) {
    if (bits > 20) throw input_error("first_difference_coloring: bits must be at most 20");
    const ordinal mu = ordinal{1} << bits;
    if (binomial(mu, 2) > (UINT64_C(1) << 20))
        throw resource_error("first_difference_coloring: too many pairs to materialize");
    Coloring c;
    c.n = 2;
    c.mu = mu;
    c.colors = colors;
    for (ordinal a = 0; a < mu; ++a)
        for (ordinal b = a + 1; b < mu; ++b)
            c.map.emplace(OrdSet{a, b}, first_difference_color(a, b, colors));
    return c;
}

TupleColoring lift_polarized(const TupleColoring& g, ordinal M) {
    if (g.n < 1) throw input_error("lift_polarized: dimension must be at least 1");
    if (M < g.mu) throw input_error("lift_polarized: M must be at least the base size");
    const std::uint32_t n = g.n;
    const ordinal K = g.mu;
    const std::int64_t stride = g.colors > 0 ? g.colors : 1;

    std::uint64_t tuple_count = 1;
    for (std::uint32_t i = 0; i <= n; ++i) {
        tuple_count *= M;
        if (tuple_count > (UINT64_C(1) << 20))
            throw resource_error("lift_polarized: tuple space too large");
    }

    auto embed = [&](ordinal beta, ordinal x) { return beta <= K ? x : x % K; };

    TupleColoring out;
    out.n = n + 1;
    out.mu = M;
    out.colors = static_cast<std::int64_t>(n + 2) * stride;

    std::vector<ordinal> t(n + 1, 0);
    while (true) {
        bool repeated = false;
        for (std::size_t i = 0; i <= n && !repeated; ++i)
            for (std::size_t j = i + 1; j <= n; ++j)
                if (t[i] == t[j]) { repeated = true; break; }
        std::int64_t color;
        if (repeated) {
            color = static_cast<std::int64_t>(n + 1) * stride; // (n+1, 0)
        } else {
            std::size_t imax = 0;
            for (std::size_t i = 1; i <= n; ++i)
                if (t[i] > t[imax]) imax = i;
            std::vector<ordinal> rest;
            rest.reserve(n);
            for (std::size_t i = 0; i <= n; ++i)
                if (i != imax) rest.push_back(embed(t[imax], t[i]));
            color = static_cast<std::int64_t>(imax) * stride + g.at(rest);
        }
        out.map.emplace(t, color);

        std::size_t i = n + 1;
        while (i > 0 && t[i - 1] + 1 == M) t[--i] = 0;
        if (i == 0) break;
        ++t[i - 1];
    }
    return out;
}

} // namespace sunflower
