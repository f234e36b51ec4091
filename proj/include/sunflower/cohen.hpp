#ifndef SUNFLOWER_COHEN_HPP
#define SUNFLOWER_COHEN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sunflower/delta.hpp"
#include "sunflower/generators.hpp"
#include "sunflower/miner.hpp"

namespace sunflower {

/// A finite partial function from coordinates to bits; its sorted assignment
/// list is the canonical form.
class Condition {
public:
    Condition() = default;
    explicit Condition(std::vector<std::pair<ordinal, bool>> assignments);

    const std::vector<std::pair<ordinal, bool>>& assignments() const { return asg_; }
    std::size_t size() const { return asg_.size(); }
    OrdSet dom() const;
    std::optional<bool> at(ordinal coord) const;

    /// Restriction to the coordinates in s.
    Condition restrict(const OrdSet& s) const;

    friend bool operator==(const Condition&, const Condition&) = default;

private:
    std::vector<std::pair<ordinal, bool>> asg_;
};

/// The domain-free shape of a condition: its bits read off in coordinate
/// order.
struct Pattern {
    std::uint32_t arity = 0;
    std::string bits; // '0'/'1', bits[i] = value at the i-th coordinate
    friend bool operator==(const Pattern&, const Pattern&) = default;
    friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

/// Conditions indexed by the n-element subsets of a ground set; total.
class ConditionFamily {
public:
    ConditionFamily(std::uint32_t n, OrdSet ground, std::map<OrdSet, Condition> entries);

    std::uint32_t dim() const { return n_; }
    const OrdSet& ground() const { return ground_; }
    const std::map<OrdSet, Condition>& entries() const { return entries_; }
    const Condition& at(const OrdSet& index) const;

    /// The family of condition domains, in the same indexing.
    Family domain_family() const;

    friend bool operator==(const ConditionFamily&, const ConditionFamily&) = default;

private:
    std::uint32_t n_ = 1;
    OrdSet ground_;
    std::map<OrdSet, Condition> entries_;
};

/// Blocks A_0, ..., A_{n-1}. Search results only need pairwise disjointness;
/// the matrix construction additionally produces separated blocks
/// (max A_m < min A_{m+1}), which separated() reports.
struct Grid {
    std::vector<OrdSet> blocks;
    bool separated() const;
    friend bool operator==(const Grid&, const Grid&) = default;
};

/// True iff p and q agree on their common coordinates.
bool compatible(const Condition& p, const Condition& q);

/// Union of pairwise compatible conditions; nullopt on any clash.
std::optional<Condition> merge(const Condition& p, const Condition& q);

Pattern pattern(const Condition& p);

/// Finds H such that all aligned index pairs in [H]^n carry compatible
/// conditions: mines the domain family with the pattern coloring, then
/// asserts compatibility over every aligned pair before returning.
std::optional<OrdSet> knaster_refine(const ConditionFamily& cf, std::size_t target,
                                     unsigned threads = 1);

struct GridResult {
    Grid grid;
    Condition qstar;
};

/// The matrix construction at finite width: one top point per block from
/// equal segments of H, then a column-by-column sweep picking the least
/// fresh element whose new condition domains stay clear of everything
/// already committed. Requires the domain family restricted to H to be
/// uniform for the witness and all patterns equal. Returns none when H has
/// no room left.
std::optional<GridResult> grid_build(const ConditionFamily& cf, const OrdSet& H,
                                     const UniformWitness& witness, std::size_t width);

/// Exhaustive polarized search: the lexicographically least sequence of n
/// pairwise disjoint t-blocks with f constant on their product, or none —
/// and none is a proof, the enumeration is complete.
std::optional<Grid> polarized_search(const TupleColoring& f, std::size_t t);

} // namespace sunflower

#endif
