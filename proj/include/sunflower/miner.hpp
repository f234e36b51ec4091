#ifndef SUNFLOWER_MINER_HPP
#define SUNFLOWER_MINER_HPP

#include <cstdint>
#include <map>
#include <optional>

#include "sunflower/delta.hpp"

namespace sunflower {

using ColorMap = std::map<OrdSet, std::int64_t>; // total over the family's index sets

enum class MineMode { exact, greedy };

struct MineRequest {
    Family family;
    std::optional<ColorMap> coloring; // if present, must be total over [ground]^n
    std::size_t target = 0;           // requested |H|
    MineMode mode = MineMode::exact;
    bool require_moreover = false;
};

struct MineResult {
    OrdSet H;
    UniformWitness witness;
    std::optional<std::int64_t> color;
};

/// Lexicographically least H of the requested size whose restricted family
/// is uniform for the inferred witness, carries one color if a coloring was
/// supplied, and satisfies the substitution clause when asked. The target
/// must be between 2n and |ground|: below 2n the inferred witness does not
/// exist and no other witness search is attempted.
///
/// threads > 1 evaluates candidate subsets in parallel blocks; the returned
/// result is identical for every thread count.
std::optional<MineResult> exhaustive_mine(const MineRequest& req, unsigned threads = 1);

/// The largest size at which exhaustive mining succeeds, with its least H.
/// Returns (0, {}) when no size from 2n up succeeds. Refuses ground sets
/// with more than 2^20 candidate subsets.
std::pair<std::size_t, OrdSet> exhaustive_max(const Family& f,
                                              const std::optional<ColorMap>& coloring,
                                              bool require_moreover = false,
                                              unsigned threads = 1);

/// Heuristic miner following the refinement-chain shape: a virtual top
/// index, per-prefix stable-position profiles folded into the coloring, a
/// recursive (n-1)-dimensional pass, and a final sweep that skips indices
/// whose fresh parts hit already-selected sets. Sound because every
/// candidate is re-verified before being returned; may return none on
/// instances the exhaustive miner solves.
std::optional<MineResult> greedy_mine(const MineRequest& req);

} // namespace sunflower

#endif
