#ifndef SUNFLOWER_GENERATORS_HPP
#define SUNFLOWER_GENERATORS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "sunflower/delta.hpp"
#include "sunflower/miner.hpp"

namespace sunflower {

/// A total coloring of the n-element subsets of {0, ..., mu-1}.
struct Coloring {
    std::uint32_t n = 2;
    ordinal mu = 0;
    std::int64_t colors = 2; // color ids live in [0, colors)
    ColorMap map;
};

/// A total coloring of the tuples {0, ..., mu-1}^n, for the polarized side.
struct TupleColoring {
    std::uint32_t n = 1;
    ordinal mu = 0;
    std::int64_t colors = 1;
    std::map<std::vector<ordinal>, std::int64_t> map;

    std::int64_t at(const std::vector<ordinal>& t) const;
};

/// The canonical positive instance: u_b places b(m) into a private block at
/// offsets[m]. Blocks must be pairwise disjoint and clear of [0, mu).
Family gen_product_family(ordinal mu, std::uint32_t n,
                          const std::vector<ordinal>& offsets);

/// u_{αβ} = {α, β+1}: the 2-dimensional family whose overlapping index
/// pairs put the shared value at different positions.
Family gen_shift_family(ordinal mu);

/// u_a = ∅ or {0} according to a two-valued coloring: turns any coloring
/// into a family whose root systems mirror the coloring's monochromatic
/// structure.
Family gen_indicator_family(ordinal mu, std::uint32_t n, const Coloring& c);

/// u_{αβ} = ∅ when colored 0, else a fresh singleton from a pairing
/// injection shifted above mu.
Family gen_pairing_family(ordinal mu, const Coloring& c);

/// The least bit where alpha and beta differ, reduced mod `colors`.
std::int64_t first_difference_color(ordinal alpha, ordinal beta, std::int64_t colors = 2);

/// Materializes the first-difference coloring on [2^bits]^2. bits <= 20;
/// refuses to materialize more than 2^20 pairs.
Coloring first_difference_coloring(std::uint32_t bits, std::int64_t colors = 2);

/// Lifts a coloring of K^n with no constant product to a coloring of
/// M^{n+1}: tuples with a repeated coordinate get the sentinel color pair
/// (n+1, 0); otherwise, with i the position of the strict maximum beta, the
/// color is (i, g(e_beta(rest))) where e_beta is the identity when
/// beta <= K and reduction mod K above that. Pairs (i, v) are encoded as
/// i * g.colors + v.
TupleColoring lift_polarized(const TupleColoring& g, ordinal M);

} // namespace sunflower

#endif
