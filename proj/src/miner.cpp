#include "sunflower/miner.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <tuple>

#include "sunflower/combinatorics.hpp"

namespace sunflower {

namespace {

std::optional<std::int64_t> constant_color(const Family& restricted, const ColorMap& coloring) {
    std::optional<std::int64_t> color;
    for (const auto& [index, value] : restricted.entries()) {
        (void)value;
        auto it = coloring.find(index);
        if (it == coloring.end())
            throw input_error("miner: coloring is missing index " + index.str());
        if (!color) color = it->second;
        else if (*color != it->second) return std::nullopt;
    }
    return color ? color : std::optional<std::int64_t>(0);
}

/// Full soundness gate: uniformity with the inferred witness, one color,
/// and (optionally) the substitution clause.
std::optional<MineResult> check_candidate(const Family& f,
                                          const std::optional<ColorMap>& coloring,
                                          bool require_moreover, const OrdSet& H) {
    Family restricted = f.restrict(H);
    auto witness = infer_witness(restricted);
    if (!witness) return std::nullopt;
    if (!verify_uniform(restricted, *witness)) return std::nullopt;
    std::optional<std::int64_t> color;
    if (coloring) {
        color = constant_color(restricted, *coloring);
        if (!color) return std::nullopt;
    }
    if (require_moreover && !verify_moreover(restricted)) return std::nullopt;
    return MineResult{H, std::move(*witness), color};
}

void validate_target(const Family& f, std::size_t target) {
    if (target > f.ground().otp())
        throw input_error("miner: target exceeds the ground set size");
    if (target < 2 * static_cast<std::size_t>(f.dim()))
        throw input_error("miner: target below 2n, no inferred witness exists");
}

} // namespace

std::optional<MineResult> exhaustive_mine(const MineRequest& req, unsigned threads) {
    if (req.mode != MineMode::exact) throw input_error("exhaustive_mine: mode must be exact");
    validate_target(req.family, req.target);
    if (threads == 0) threads = 1;

    // Candidates are scanned in lexicographic order in fixed-size blocks;
    // inside a block the evaluation may fan out across threads, and the
    // earliest hit of the earliest block wins, so the result does not depend
    // on the thread count.
    constexpr std::size_t kBlock = 512;
    std::vector<OrdSet> block;
    block.reserve(kBlock);
    std::optional<MineResult> found;

    auto scan_block = [&]() -> bool {
        if (block.empty()) return false;
        std::size_t hit = block.size();
        if (threads == 1 || block.size() < 2 * threads) {
            for (std::size_t i = 0; i < block.size(); ++i)
                if (check_candidate(req.family, req.coloring, req.require_moreover, block[i])) {
                    hit = i;
                    break;
                }
        } else {
            std::vector<std::future<std::size_t>> futures;
            const std::size_t chunk = (block.size() + threads - 1) / threads;
            for (unsigned t = 0; t < threads; ++t) {
                const std::size_t lo = t * chunk;
                const std::size_t hi = std::min(block.size(), lo + chunk);
                if (lo >= hi) break;
                futures.push_back(std::async(std::launch::async, [&, lo, hi]() -> std::size_t {
                    for (std::size_t i = lo; i < hi; ++i)
                        if (check_candidate(req.family, req.coloring, req.require_moreover,
                                            block[i]))
                            return i;
                    return block.size();
                }));
            }
            for (auto& fu : futures) hit = std::min(hit, fu.get());
        }
        if (hit < block.size())
            found = check_candidate(req.family, req.coloring, req.require_moreover, block[hit]);
        return found.has_value();
    };

    bool stop = false;
    for_each_combination(req.family.ground().elems(), req.target,
                         [&](const std::vector<ordinal>& c) {
                             block.push_back(OrdSet::from_sorted(c));
                             if (block.size() == kBlock) {
                                 if (scan_block()) stop = true;
                                 block.clear();
                             }
                             return !stop;
                         });
    if (!stop) scan_block();
    return found;
}

std::pair<std::size_t, OrdSet> exhaustive_max(const Family& f,
                                              const std::optional<ColorMap>& coloring,
                                              bool require_moreover, unsigned threads) {
    const std::size_t g = f.ground().otp();
    if (g > 20)
        throw resource_error("exhaustive_max: more than 2^20 candidate subsets");
    std::pair<std::size_t, OrdSet> best{0, OrdSet{}};
    // Success is downward closed in the target size (a restriction of a
    // uniform family is uniform with the same witness), so stop at the first
    // failing size.
    for (std::size_t h = 2 * static_cast<std::size_t>(f.dim()); h <= g; ++h) {
        MineRequest req{f, coloring, h, MineMode::exact, require_moreover};
        auto result = exhaustive_mine(req, threads);
        if (!result) break;
        best = {h, result->H};
    }
    return best;
}

// --- greedy miner ---

namespace {

/// Root stand-in: the intersection of all entries end-extending a inside the
/// pool. nullopt when a has no end-extension there.
class DerivedSets {
public:
    DerivedSets(const Family& f, OrdSet pool) : f_(f), pool_(std::move(pool)) {}

    std::optional<OrdSet> get(const OrdSet& a) {
        if (a.otp() == f_.dim()) return f_.at(a);
        auto it = cache_.find(a);
        if (it != cache_.end()) return it->second;
        std::optional<OrdSet> acc;
        const std::size_t missing = f_.dim() - a.otp();
        std::vector<ordinal> above;
        for (ordinal x : pool_)
            if (a.empty() || x > a.max()) above.push_back(x);
        for_each_combination(above, missing, [&](const std::vector<ordinal>& c) {
            OrdSet b = set_union(a, OrdSet::from_sorted(c));
            acc = acc ? set_intersect(*acc, f_.at(b)) : f_.at(b);
            return true;
        });
        cache_.emplace(a, acc);
        return acc;
    }

private:
    const Family& f_;
    OrdSet pool_;
    std::map<OrdSet, std::optional<OrdSet>> cache_;
};

/// Best-effort 1-dimensional pass: bucket by (color, otp), then grow aligned
/// constant-root chains and keep the longest one found.
std::vector<ordinal> greedy_core_1d(const Family& f, const std::optional<ColorMap>& coloring) {
    std::map<std::pair<std::int64_t, std::size_t>, std::vector<ordinal>> buckets;
    for (const auto& [index, value] : f.entries()) {
        std::int64_t color = 0;
        if (coloring) {
            auto it = coloring->find(index);
            if (it == coloring->end())
                throw input_error("miner: coloring is missing index " + index.str());
            color = it->second;
        }
        buckets[{color, value.otp()}].push_back(index[0]);
    }

    auto entry = [&](ordinal alpha) -> const OrdSet& { return f.at(OrdSet{alpha}); };

    std::vector<ordinal> best;
    for (const auto& [key, members] : buckets) {
        (void)key;
        if (members.size() <= best.size()) continue;
        for (std::size_t start = 0; start < members.size(); ++start) {
            if (members.size() - start <= best.size()) break;
            std::vector<ordinal> chain{members[start]};
            std::optional<OrdSet> root;
            std::optional<PosSet> mask;
            for (std::size_t j = start + 1; j < members.size(); ++j) {
                const OrdSet& v = entry(members[j]);
                bool ok = true;
                for (ordinal c : chain) {
                    const OrdSet& u = entry(c);
                    if (!aligned(u, v)) { ok = false; break; }
                    if (root && (set_intersect(u, v) != *root || rmask(u, v) != *mask)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                if (!root && !chain.empty()) {
                    const OrdSet& u = entry(chain[0]);
                    if (u != v) { // first distinct pair fixes root and mask
                        root = set_intersect(u, v);
                        mask = rmask(u, v);
                    }
                }
                chain.push_back(members[j]);
            }
            if (chain.size() > best.size()) best = chain;
        }
    }
    return best;
}

std::vector<ordinal> greedy_core(const Family& f, const std::optional<ColorMap>& coloring) {
    const std::uint32_t n = f.dim();
    if (n == 1) return greedy_core_1d(f, coloring);
    if (f.ground().otp() < n) return {};

    const ordinal top = f.ground().max();
    OrdSet inner = set_minus(f.ground(), OrdSet{top});
    if (inner.otp() < n - 1) return {};

    // Profile each (n-1)-prefix against its last-coordinate extensions: the
    // common order type, the positions whose values never move, and the
    // color, when each of those is constant at all. Prefixes whose profile
    // is degenerate still get a key; the final verification pass weeds them
    // out if they survive.
    std::map<OrdSet, OrdSet> star_entries;
    ColorMap star_colors;
    std::map<std::tuple<std::size_t, std::uint32_t, std::int64_t, bool>, std::int64_t> ids;
    for (const auto& a : combinations(inner, n - 1)) {
        std::vector<ordinal> exts;
        for (ordinal beta : f.ground())
            if (a.empty() || beta > a.max()) exts.push_back(beta);

        const OrdSet& top_entry = f.at(set_union(a, OrdSet{top}));
        bool rho_ok = true;
        for (ordinal beta : exts)
            if (f.at(set_union(a, OrdSet{beta})).otp() != top_entry.otp()) rho_ok = false;

        std::uint32_t stable = 0;
        if (rho_ok && top_entry.otp() <= 32) {
            for (std::size_t i = 0; i < top_entry.otp(); ++i) {
                bool constant = true;
                for (ordinal beta : exts)
                    if (f.at(set_union(a, OrdSet{beta}))[i] != top_entry[i]) {
                        constant = false;
                        break;
                    }
                if (constant) stable |= (1u << i);
            }
        }

        std::int64_t color = 0;
        bool color_ok = true;
        if (coloring) {
            auto it = coloring->find(set_union(a, OrdSet{exts.front()}));
            if (it == coloring->end())
                throw input_error("miner: coloring is missing an index");
            color = it->second;
            for (ordinal beta : exts)
                if (coloring->at(set_union(a, OrdSet{beta})) != color) color_ok = false;
        }

        const auto key = std::make_tuple(rho_ok ? top_entry.otp() : SIZE_MAX, stable, color,
                                         color_ok);
        auto [it, inserted] = ids.emplace(key, static_cast<std::int64_t>(ids.size()));
        (void)inserted;
        star_entries.emplace(a, top_entry);
        star_colors.emplace(a, it->second);
    }

    Family star(n - 1, inner, std::move(star_entries));
    std::vector<ordinal> h0 = greedy_core(star, star_colors);

    // Sweep in increasing order, keeping an index only when every fresh part
    // it contributes misses every set already pinned down.
    std::vector<ordinal> pool_vec = h0;
    pool_vec.push_back(top);
    std::sort(pool_vec.begin(), pool_vec.end());
    OrdSet pool = OrdSet::from_sorted(pool_vec);
    DerivedSets derived(f, pool);

    std::vector<ordinal> chosen;
    for (ordinal beta : pool) {
        OrdSet S = OrdSet::from_sorted(chosen);
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k) {
            for (const auto& a0 : combinations(S, k)) {
                auto extended = derived.get(set_union(a0, OrdSet{beta}));
                if (!extended) continue;
                auto base = derived.get(a0);
                OrdSet fresh = base ? set_minus(*extended, *base) : *extended;
                if (fresh.empty()) continue;
                for (std::size_t m = 0; m <= n && ok; ++m)
                    for (const auto& a1 : combinations(S, m)) {
                        auto blocker = derived.get(a1);
                        if (blocker && !set_intersect(fresh, *blocker).empty()) {
                            ok = false;
                            break;
                        }
                    }
                if (!ok) break;
            }
        }
        if (ok) chosen.push_back(beta);
    }
    return chosen;
}

} // namespace

std::optional<MineResult> greedy_mine(const MineRequest& req) {
    if (req.mode != MineMode::greedy) throw input_error("greedy_mine: mode must be greedy");
    validate_target(req.family, req.target);

    std::vector<ordinal> candidate = greedy_core(req.family, req.coloring);
    if (candidate.size() < req.target) return std::nullopt;
    candidate.resize(req.target);
    return check_candidate(req.family, req.coloring, req.require_moreover,
                           OrdSet::from_sorted(candidate));
}

} // namespace sunflower
