#include "sunflower/cohen.hpp"

#include <algorithm>
#include <stdexcept>

#include "sunflower/combinatorics.hpp"

namespace sunflower {

Condition::Condition(std::vector<std::pair<ordinal, bool>> assignments)
    : asg_(std::move(assignments)) {
    std::sort(asg_.begin(), asg_.end());
    for (std::size_t i = 0; i + 1 < asg_.size(); ++i)
        if (asg_[i].first == asg_[i + 1].first)
            throw input_error("Condition: coordinate assigned twice");
}

OrdSet Condition::dom() const {
    std::vector<ordinal> coords;
    coords.reserve(asg_.size());
    for (const auto& [coord, bit] : asg_) {
        (void)bit;
        coords.push_back(coord);
    }
    return OrdSet::from_sorted(std::move(coords));
}

std::optional<bool> Condition::at(ordinal coord) const {
    auto it = std::lower_bound(asg_.begin(), asg_.end(), std::make_pair(coord, false));
    if (it != asg_.end() && it->first == coord) return it->second;
    return std::nullopt;
}

Condition Condition::restrict(const OrdSet& s) const {
    std::vector<std::pair<ordinal, bool>> out;
    for (const auto& a : asg_)
        if (s.contains(a.first)) out.push_back(a);
    Condition r;
    r.asg_ = std::move(out);
    return r;
}

bool compatible(const Condition& p, const Condition& q) {
    const auto& a = p.assignments();
    const auto& b = q.assignments();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) ++i;
        else if (b[j].first < a[i].first) ++j;
        else {
            if (a[i].second != b[j].second) return false;
            ++i; ++j;
        }
    }
    return true;
}

std::optional<Condition> merge(const Condition& p, const Condition& q) {
    if (!compatible(p, q)) return std::nullopt;
    std::vector<std::pair<ordinal, bool>> out;
    const auto& a = p.assignments();
    const auto& b = q.assignments();
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) out.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first) out.push_back(b[j++]);
        else {
            out.push_back(a[i]);
            ++i; ++j;
        }
    }
    return Condition(std::move(out));
}

Pattern pattern(const Condition& p) {
    Pattern out;
    out.arity = static_cast<std::uint32_t>(p.size());
    out.bits.reserve(p.size());
    for (const auto& [coord, bit] : p.assignments()) {
        (void)coord;
        out.bits.push_back(bit ? '1' : '0');
    }
    return out;
}

ConditionFamily::ConditionFamily(std::uint32_t n, OrdSet ground,
                                 std::map<OrdSet, Condition> entries)
    : n_(n), ground_(std::move(ground)), entries_(std::move(entries)) {
    if (n_ < 1) throw input_error("ConditionFamily: dimension must be at least 1");
    const std::uint64_t expected = binomial(ground_.otp(), n_);
    if (entries_.size() != expected)
        throw input_error("ConditionFamily: not total over the index sets");
    for (const auto& [index, cond] : entries_) {
        (void)cond;
        if (index.otp() != n_) throw input_error("ConditionFamily: index has wrong size");
        for (ordinal x : index)
            if (!ground_.contains(x)) throw input_error("ConditionFamily: index outside ground");
    }
}

const Condition& ConditionFamily::at(const OrdSet& index) const {
    auto it = entries_.find(index);
    if (it == entries_.end())
        throw input_error("ConditionFamily: missing entry for " + index.str());
    return it->second;
}

Family ConditionFamily::domain_family() const {
    std::map<OrdSet, OrdSet> doms;
    for (const auto& [index, cond] : entries_) doms.emplace(index, cond.dom());
    return Family(n_, ground_, std::move(doms));
}

bool Grid::separated() const {
    for (std::size_t m = 0; m + 1 < blocks.size(); ++m) {
        if (blocks[m].empty() || blocks[m + 1].empty()) continue;
        if (!(blocks[m].max() < blocks[m + 1].min())) return false;
    }
    return true;
}

std::optional<OrdSet> knaster_refine(const ConditionFamily& cf, std::size_t target,
                                     unsigned threads) {
    Family domains = cf.domain_family();

    ColorMap coloring;
    std::map<Pattern, std::int64_t> pattern_ids;
    for (const auto& [index, cond] : cf.entries()) {
        auto [it, inserted] = pattern_ids.emplace(pattern(cond),
                                                  static_cast<std::int64_t>(pattern_ids.size()));
        (void)inserted;
        coloring.emplace(index, it->second);
    }

    MineRequest req{std::move(domains), std::move(coloring), target, MineMode::exact, false};
    auto mined = exhaustive_mine(req, threads);
    if (!mined) return std::nullopt;

    // Aligned uniform domains plus one shared pattern force agreement on
    // every common coordinate; check it outright anyway.
    const auto indices = combinations(mined->H, cf.dim());
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t j = i + 1; j < indices.size(); ++j) {
            if (!aligned(indices[i], indices[j])) continue;
            if (!compatible(cf.at(indices[i]), cf.at(indices[j])))
                throw std::logic_error("knaster_refine: aligned pair came out incompatible");
        }
    return mined->H;
}

std::optional<GridResult> grid_build(const ConditionFamily& cf, const OrdSet& H,
                                     const UniformWitness& witness, std::size_t width) {
    const std::uint32_t n = cf.dim();
    Family domains = cf.domain_family().restrict(H);
    if (!verify_uniform(domains, witness))
        throw input_error("grid_build: domain family is not uniform for this witness on H");
    {
        const Pattern* first = nullptr;
        Pattern head;
        for (const auto& [index, value] : domains.entries()) {
            Pattern p = pattern(cf.at(index));
            (void)value;
            if (!first) {
                head = std::move(p);
                first = &head;
            } else if (p != head) {
                throw input_error("grid_build: patterns are not constant on H");
            }
        }
    }

    const std::size_t h = H.otp();
    if (h < n) return std::nullopt;

    // One segment of H per block; the top of the segment plays the role of
    // the limit point above the column entries.
    std::vector<ordinal> tops(n);
    std::vector<std::vector<ordinal>> pools(n);
    for (std::uint32_t m = 0; m < n; ++m) {
        const std::size_t lo = m * h / n;
        const std::size_t hi = (m + 1) * h / n;
        tops[m] = H[hi - 1];
        for (std::size_t i = lo; i + 1 < hi; ++i) pools[m].push_back(H[i]);
    }

    std::vector<std::vector<ordinal>> alphas(n);
    const std::uint32_t full_mask = static_cast<std::uint32_t>((1u << n) - 1);

    auto block_values = [&](std::uint32_t m) {
        std::vector<ordinal> vals = alphas[m];
        vals.push_back(tops[m]);
        std::sort(vals.begin(), vals.end());
        return vals;
    };

    auto current_tuples = [&](std::uint32_t fixed_block, ordinal alpha) {
        std::vector<OrdSet> tuples;
        std::vector<std::vector<ordinal>> choices(n);
        for (std::uint32_t m = 0; m < n; ++m)
            choices[m] = (m == fixed_block) ? std::vector<ordinal>{alpha} : block_values(m);
        std::vector<std::size_t> pick(n, 0);
        while (true) {
            std::vector<ordinal> t(n);
            for (std::uint32_t m = 0; m < n; ++m) t[m] = choices[m][pick[m]];
            tuples.push_back(OrdSet(std::move(t)));
            std::size_t i = n;
            while (i > 0 && pick[i - 1] + 1 == choices[i - 1].size()) pick[--i] = 0;
            if (i == 0) break;
            ++pick[i - 1];
        }
        return tuples;
    };

    OrdSet d = OrdSet(tops);
    Condition qstar = cf.at(d);

    for (std::size_t col = 0; col < width; ++col) {
        for (std::uint32_t m = 0; m < n; ++m) {
            const ordinal lower = alphas[m].empty() ? 0 : alphas[m].back() + 1;
            bool placed = false;
            for (ordinal alpha : pools[m]) {
                if (alpha < lower) continue;
                const auto tuples = current_tuples(m, alpha);
                OrdSet qdom = qstar.dom();
                bool clean = true;
                for (const auto& b : tuples) {
                    const OrdSet& u = cf.at(b).dom();
                    OrdSet fresh = set_minus(u, image(u, witness.at_mask(full_mask ^ (1u << m))));
                    if (!set_intersect(fresh, qdom).empty()) {
                        clean = false;
                        break;
                    }
                }
                if (!clean) continue;
                for (const auto& b : tuples) {
                    auto merged = merge(qstar, cf.at(b));
                    if (!merged)
                        throw std::logic_error("grid_build: fresh-part avoidance left a clash");
                    qstar = std::move(*merged);
                }
                alphas[m].push_back(alpha);
                placed = true;
                break;
            }
            if (!placed) return std::nullopt;
        }
    }

    Grid grid;
    for (std::uint32_t m = 0; m < n; ++m) grid.blocks.push_back(OrdSet(block_values(m)));

    // Soundness sweep: every product tuple's condition is pairwise
    // compatible with the others and sits inside qstar.
    {
        std::vector<std::size_t> pick(n, 0);
        std::vector<Condition> all;
        while (true) {
            std::vector<ordinal> t(n);
            for (std::uint32_t m = 0; m < n; ++m) t[m] = grid.blocks[m][pick[m]];
            all.push_back(cf.at(OrdSet(std::move(t))));
            std::size_t i = n;
            while (i > 0 && pick[i - 1] + 1 == grid.blocks[i - 1].otp()) pick[--i] = 0;
            if (i == 0) break;
            ++pick[i - 1];
        }
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (qstar.restrict(all[i].dom()) != all[i])
                throw std::logic_error("grid_build: qstar does not extend a product condition");
            for (std::size_t j = i + 1; j < all.size(); ++j)
                if (!compatible(all[i], all[j]))
                    throw std::logic_error("grid_build: product conditions clash");
        }
    }

    return GridResult{std::move(grid), std::move(qstar)};
}

std::optional<Grid> polarized_search(const TupleColoring& f, std::size_t t) {
    if (t < 1) throw input_error("polarized_search: block size must be at least 1");
    const std::uint32_t n = f.n;

    std::vector<ordinal> universe;
    for (ordinal x = 0; x < f.mu; ++x) universe.push_back(x);

    // Rough count of block sequences, just to refuse hopeless inputs.
    std::uint64_t estimate = 1;
    for (std::uint32_t m = 0; m < n; ++m) {
        estimate *= binomial(f.mu >= m * t ? f.mu - m * t : 0, t, UINT64_C(1) << 22);
        if (estimate > (UINT64_C(1) << 22))
            throw resource_error("polarized_search: block space too large to enumerate");
    }

    std::vector<OrdSet> chosen;
    std::optional<Grid> found;

    auto product_constant = [&]() {
        std::optional<std::int64_t> color;
        std::vector<std::size_t> pick(n, 0);
        while (true) {
            std::vector<ordinal> tuple(n);
            for (std::uint32_t m = 0; m < n; ++m) tuple[m] = chosen[m][pick[m]];
            const std::int64_t c = f.at(tuple);
            if (!color) color = c;
            else if (*color != c) return false;
            std::size_t i = n;
            while (i > 0 && pick[i - 1] + 1 == chosen[i - 1].otp()) pick[--i] = 0;
            if (i == 0) return true;
            ++pick[i - 1];
        }
    };

    const std::function<bool(std::vector<ordinal>&)> place = [&](std::vector<ordinal>& avail) {
        if (chosen.size() == n) {
            if (product_constant()) {
                found = Grid{chosen};
                return true;
            }
            return false;
        }
        bool hit = false;
        for_each_combination(avail, t, [&](const std::vector<ordinal>& c) {
            chosen.push_back(OrdSet::from_sorted(c));
            std::vector<ordinal> rest;
            std::set_difference(avail.begin(), avail.end(), c.begin(), c.end(),
                                std::back_inserter(rest));
            if (place(rest)) hit = true;
            chosen.pop_back();
            return !hit;
        });
        return hit;
    };

    place(universe);
    return found;
}

} // namespace sunflower
