#include "sunflower/delta.hpp"

#include <algorithm>

#include "sunflower/combinatorics.hpp"

namespace sunflower {

Family::Family(std::uint32_t n, OrdSet ground, std::map<OrdSet, OrdSet> entries)
    : n_(n), ground_(std::move(ground)), entries_(std::move(entries)) {
    if (n_ < 1) throw input_error("Family: dimension must be at least 1");
    const std::uint64_t expected = binomial(ground_.otp(), n_);
    if (entries_.size() != expected)
        throw input_error("Family: expected " + std::to_string(expected) + " entries, got " +
                          std::to_string(entries_.size()));
    for (const auto& [index, value] : entries_) {
        (void)value;
        if (index.otp() != n_) throw input_error("Family: index has wrong size");
        for (ordinal x : index)
            if (!ground_.contains(x)) throw input_error("Family: index outside ground set");
    }
}

const OrdSet& Family::at(const OrdSet& index) const {
    auto it = entries_.find(index);
    if (it == entries_.end()) throw input_error("Family: missing entry for " + index.str());
    return it->second;
}

Family Family::restrict(const OrdSet& sub) const {
    for (ordinal x : sub)
        if (!ground_.contains(x)) throw input_error("Family::restrict: not a subset of ground");
    std::map<OrdSet, OrdSet> out;
    for (const auto& index : combinations(sub, n_)) out.emplace(index, at(index));
    return Family(n_, sub, std::move(out));
}

std::vector<OrdSet> Family::entry_list() const {
    std::vector<OrdSet> out;
    out.reserve(entries_.size());
    for (const auto& [index, value] : entries_) {
        (void)index;
        out.push_back(value);
    }
    return out;
}

void RootSystem::set(std::uint32_t mask, const OrdSet& a, OrdSet root) {
    roots_[{mask, a}] = std::move(root);
}

const OrdSet* RootSystem::find(std::uint32_t mask, const OrdSet& a) const {
    auto it = roots_.find({mask, a});
    return it == roots_.end() ? nullptr : &it->second;
}

namespace {

void report(Violation* out, std::string kind, std::vector<OrdSet> indices, std::string detail) {
    if (out) *out = Violation{std::move(kind), std::move(indices), std::move(detail)};
}

// Distinct member values of a list, in first-occurrence order. The classical
// definitions quantify over distinct members of a family of sets, so repeated
// values collapse.
std::vector<OrdSet> distinct_values(const std::vector<OrdSet>& us) {
    std::vector<OrdSet> vals;
    for (const auto& u : us)
        if (std::find(vals.begin(), vals.end(), u) == vals.end()) vals.push_back(u);
    return vals;
}

} // namespace

std::optional<OrdSet> verify_classical(const std::vector<OrdSet>& us) {
    const auto vals = distinct_values(us);
    if (vals.empty()) return OrdSet{};
    if (vals.size() == 1) return vals.front();
    OrdSet root = set_intersect(vals[0], vals[1]);
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j)
            if (set_intersect(vals[i], vals[j]) != root) return std::nullopt;
    return root;
}

std::optional<Uniform1dWitness> verify_uniform_1d(const std::vector<OrdSet>& us) {
    const auto vals = distinct_values(us);
    if (vals.empty()) return Uniform1dWitness{OrdSet{}, PosSet{}};
    if (vals.size() == 1)
        return Uniform1dWitness{vals.front(), PosSet::full(static_cast<std::uint32_t>(vals.front().otp()))};
    OrdSet root = set_intersect(vals[0], vals[1]);
    PosSet mask = rmask(vals[0], vals[1]);
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j) {
            const OrdSet& u = vals[i];
            const OrdSet& v = vals[j];
            if (!aligned(u, v)) return std::nullopt;
            if (set_intersect(u, v) != root) return std::nullopt;
            if (rmask(u, v) != mask) return std::nullopt;
        }
    return Uniform1dWitness{std::move(root), std::move(mask)};
}

std::vector<OrdSet> refine_uniform_1d(const std::vector<OrdSet>& us) {
    const auto root = verify_classical(us);
    if (!root) throw input_error("refine_uniform_1d: input is not a classical delta-system");
    for (const auto& u : us)
        if (u.otp() != us.front().otp())
            throw input_error("refine_uniform_1d: members must have equal order type");

    std::map<PosSet, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < us.size(); ++i) groups[rmask(us[i], *root)].push_back(i);

    // Largest group wins; ties go to the smallest mask, which comes first in
    // map order.
    const std::vector<std::size_t>* best = nullptr;
    for (const auto& [mask, members] : groups) {
        (void)mask;
        if (!best || members.size() > best->size()) best = &members;
    }
    std::vector<OrdSet> out;
    if (best)
        for (std::size_t i : *best) out.push_back(us[i]);
    return out;
}

bool verify_strict(const Family& f, Violation* out) {
    // key = index intersection, value = (intersection of entries, exemplar pair)
    std::map<OrdSet, std::pair<OrdSet, std::pair<OrdSet, OrdSet>>> seen;
    const auto& entries = f.entries();
    for (auto it = entries.begin(); it != entries.end(); ++it)
        for (auto jt = std::next(it); jt != entries.end(); ++jt) {
            OrdSet key = set_intersect(it->first, jt->first);
            OrdSet value = set_intersect(it->second, jt->second);
            auto found = seen.find(key);
            if (found == seen.end()) {
                seen.emplace(std::move(key), std::make_pair(std::move(value),
                                                            std::make_pair(it->first, jt->first)));
            } else if (found->second.first != value) {
                report(out, "strict-mismatch",
                       {found->second.second.first, found->second.second.second, it->first, jt->first},
                       "intersections " + found->second.first.str() + " vs " + value.str() +
                           " for index intersection " + found->first.str());
                return false;
            }
        }
    return true;
}

bool verify_ndim(const Family& f, const RootSystem& rs, Violation* out) {
    const auto& entries = f.entries();
    for (auto it = entries.begin(); it != entries.end(); ++it)
        for (auto jt = std::next(it); jt != entries.end(); ++jt) {
            const OrdSet& b0 = it->first;
            const OrdSet& b1 = jt->first;
            if (!aligned(b0, b1)) continue;
            const std::uint32_t mask = rmask(b0, b1).bits();
            OrdSet core = set_intersect(b0, b1);
            const OrdSet* root = rs.find(mask, core);
            if (!root)
                throw input_error("verify_ndim: missing root for mask " +
                                  PosSet::from_bits(mask).str() + " at " + core.str());
            OrdSet value = set_intersect(it->second, jt->second);
            if (value != *root) {
                report(out, "root-mismatch", {b0, b1},
                       "entry intersection " + value.str() + " but root " + root->str());
                return false;
            }
        }
    return true;
}

std::optional<UniformWitness> infer_witness(const Family& f) {
    const std::uint32_t n = f.dim();
    if (f.ground().otp() < 2 * static_cast<std::size_t>(n))
        throw input_error("infer_witness: ground set must have at least 2n elements");

    const auto& entries = f.entries();
    const std::size_t rho = entries.begin()->second.otp();
    for (const auto& [index, value] : entries) {
        (void)index;
        if (value.otp() != rho) return std::nullopt;
    }

    UniformWitness w;
    w.n = n;
    w.rho = static_cast<std::uint32_t>(rho);
    w.rmap.assign(std::size_t{1} << n, PosSet{});
    std::vector<bool> have(std::size_t{1} << n, false);
    std::size_t remaining = have.size();

    for (auto it = entries.begin(); it != entries.end() && remaining > 0; ++it)
        for (auto jt = it; jt != entries.end() && remaining > 0; ++jt) {
            if (!aligned(it->first, jt->first)) continue;
            const std::uint32_t mask = rmask(it->first, jt->first).bits();
            if (have[mask]) continue;
            w.rmap[mask] = rmask(it->second, jt->second);
            have[mask] = true;
            --remaining;
        }
    if (remaining > 0) return std::nullopt; // cannot happen with |ground| >= 2n
    return w;
}

bool verify_uniform(const Family& f, const UniformWitness& w, Violation* out) {
    const std::uint32_t n = f.dim();
    if (w.n != n || w.rmap.size() != (std::size_t{1} << n)) {
        report(out, "witness-shape", {}, "witness does not match the family dimension");
        return false;
    }
    for (const auto& p : w.rmap)
        if (!p.max_below(w.rho)) {
            report(out, "witness-shape", {}, "witness mask exceeds rho");
            return false;
        }

    // (1) constant order type rho
    for (const auto& [index, value] : f.entries())
        if (value.otp() != w.rho) {
            report(out, "otp", {index},
                   "otp " + std::to_string(value.otp()) + " != rho " + std::to_string(w.rho));
            return false;
        }

    // (2) aligned index pairs carry aligned values with the witnessed mask;
    // the a == b case forces rmap(n) to be all of rho
    const auto& entries = f.entries();
    for (auto it = entries.begin(); it != entries.end(); ++it)
        for (auto jt = it; jt != entries.end(); ++jt) {
            if (!aligned(it->first, jt->first)) continue;
            const std::uint32_t mask = rmask(it->first, jt->first).bits();
            if (!aligned(it->second, jt->second)) {
                report(out, "value-alignment", {it->first, jt->first},
                       "entries " + it->second.str() + ", " + jt->second.str() + " not aligned");
                return false;
            }
            if (rmask(it->second, jt->second) != w.at_mask(mask)) {
                report(out, "value-mask", {it->first, jt->first},
                       "value mask " + rmask(it->second, jt->second).str() + " != witnessed " +
                           w.at_mask(mask).str());
                return false;
            }
        }

    // (3) masks respect intersections
    for (std::uint32_t m0 = 0; m0 < w.rmap.size(); ++m0)
        for (std::uint32_t m1 = m0; m1 < w.rmap.size(); ++m1)
            if (w.rmap[m0 & m1] != (w.rmap[m0] & w.rmap[m1])) {
                report(out, "mask-intersection", {},
                       "rmap(" + PosSet::from_bits(m0).str() + " ∩ " + PosSet::from_bits(m1).str() +
                           ") differs from the intersection of the masks");
                return false;
            }
    return true;
}

RootSystem derive_roots(const Family& f, const UniformWitness& w) {
    if (!verify_uniform(f, w))
        throw input_error("derive_roots: family is not uniform for this witness");
    const std::uint32_t n = f.dim();
    RootSystem rs(n);

    // For each mask, the first entry index realizing each image; one pass
    // over entries x masks.
    std::map<std::pair<std::uint32_t, OrdSet>, const OrdSet*> first_realizer;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const PosSet pos = PosSet::from_bits(mask);
        for (const auto& [index, value] : f.entries()) {
            (void)value;
            first_realizer.emplace(std::make_pair(mask, image(index, pos)), &index);
        }
    }

    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const std::size_t k = PosSet::from_bits(mask).size();
        for (const auto& a : combinations(f.ground(), k)) {
            auto it = first_realizer.find({mask, a});
            if (it == first_realizer.end())
                rs.set(mask, a, OrdSet{});
            else
                rs.set(mask, a, image(f.at(*it->second), w.at_mask(mask)));
        }
    }
    return rs;
}

bool verify_moreover(const Family& f, Violation* out) {
    const std::uint32_t n = f.dim();
    const auto& entries = f.entries();
    for (auto it = entries.begin(); it != entries.end(); ++it)
        for (auto jt = it; jt != entries.end(); ++jt) {
            const OrdSet& a = it->first;
            const OrdSet& b = jt->first;
            for (std::size_t m = 0; m < n; ++m) {
                if (a[m] != b[m]) continue;
                if (!aligned_above(a, b, m)) continue;
                const IntersectionType before = tp_int(it->second, jt->second);
                for (ordinal alpha : f.ground()) {
                    if (!is_possible(a, m, alpha) || !is_possible(b, m, alpha)) continue;
                    const OrdSet a2 = substitute(a, m, alpha);
                    const OrdSet b2 = substitute(b, m, alpha);
                    if (tp_int(f.at(a2), f.at(b2)) != before) {
                        report(out, "moreover", {a, b, a2, b2},
                               "intersection type changes at coordinate " + std::to_string(m) +
                                   " substituting " + std::to_string(alpha));
                        return false;
                    }
                }
            }
        }
    return true;
}

bool verify_variation(const Family& f, const std::map<OrdSet, OrdSet>& ext, Violation* out) {
    const std::uint32_t n = f.dim();
    std::vector<OrdSet> keys;
    for (std::size_t k = 0; k <= n; ++k)
        for (const auto& a : combinations(f.ground(), k)) {
            if (!ext.count(a)) throw input_error("verify_variation: ext missing key " + a.str());
            keys.push_back(a);
        }

    // (1) containment on full-size indices
    for (const auto& [index, value] : f.entries())
        if (!set_minus(value, ext.at(index)).empty()) {
            report(out, "variation-containment", {index},
                   "ext " + ext.at(index).str() + " does not contain " + value.str());
            return false;
        }

    // (2) tp(ext(a), u_a) constant over full-size indices
    {
        const TypeProfile* reference = nullptr;
        TypeProfile first;
        const OrdSet* first_index = nullptr;
        for (const auto& [index, value] : f.entries()) {
            TypeProfile t = tp(ext.at(index), value);
            if (!reference) {
                first = std::move(t);
                reference = &first;
                first_index = &index;
            } else if (t != *reference) {
                report(out, "variation-type", {*first_index, index},
                       "tp(ext, entry) differs between these indices");
                return false;
            }
        }
    }

    // (3) ext(a) ∩ ext(b) = ext(a ∩ b)
    for (std::size_t i = 0; i < keys.size(); ++i)
        for (std::size_t j = i; j < keys.size(); ++j) {
            OrdSet expect = ext.at(set_intersect(keys[i], keys[j]));
            OrdSet got = set_intersect(ext.at(keys[i]), ext.at(keys[j]));
            if (got != expect) {
                report(out, "variation-intersection", {keys[i], keys[j]},
                       "ext intersection " + got.str() + " != " + expect.str());
                return false;
            }
        }

    // (4) type transfer over nested pairs
    std::vector<std::pair<const OrdSet*, OrdSet>> nested; // (a1, a0) with a0 ⊆ a1
    for (const auto& a1 : keys)
        for (std::size_t k = 0; k <= a1.otp(); ++k)
            for (const auto& a0 : combinations(a1, k)) nested.emplace_back(&a1, a0);
    std::vector<TypeProfile> index_tp(nested.size()), ext_tp(nested.size());
    for (std::size_t i = 0; i < nested.size(); ++i) {
        index_tp[i] = tp(*nested[i].first, nested[i].second);
        ext_tp[i] = tp(ext.at(*nested[i].first), ext.at(nested[i].second));
    }
    for (std::size_t i = 0; i < nested.size(); ++i)
        for (std::size_t j = i + 1; j < nested.size(); ++j) {
            if (index_tp[j] != index_tp[i]) continue;
            if (ext_tp[j] != ext_tp[i]) {
                report(out, "variation-nested", {*nested[i].first, nested[i].second,
                                                 *nested[j].first, nested[j].second},
                       "equal index types but different extension types");
                return false;
            }
        }
    return true;
}

} // namespace sunflower
