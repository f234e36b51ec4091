#ifndef SUNFLOWER_DELTA_HPP
#define SUNFLOWER_DELTA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sunflower/ordset.hpp"

namespace sunflower {

/// A family of ordinal sets indexed by the n-element subsets of a finite
/// ground set. Entries are total: construction rejects partial families.
class Family {
public:
    Family(std::uint32_t n, OrdSet ground, std::map<OrdSet, OrdSet> entries);

    std::uint32_t dim() const { return n_; }
    const OrdSet& ground() const { return ground_; }
    const std::map<OrdSet, OrdSet>& entries() const { return entries_; }

    const OrdSet& at(const OrdSet& index) const;
    bool has(const OrdSet& index) const { return entries_.count(index) != 0; }

    /// The family restricted to the n-element subsets of sub (sub must be a
    /// subset of the ground set).
    Family restrict(const OrdSet& sub) const;

    /// Entry values in index order; the natural view for n == 1.
    std::vector<OrdSet> entry_list() const;

    friend bool operator==(const Family&, const Family&) = default;

private:
    std::uint32_t n_ = 1;
    OrdSet ground_;
    std::map<OrdSet, OrdSet> entries_;
};

/// Witness for uniformity: a common order type rho and one position set per
/// mask m ⊆ n, stored indexed by the bitmask of m.
struct UniformWitness {
    std::uint32_t n = 0;
    std::uint32_t rho = 0;
    std::vector<PosSet> rmap; // size 2^n, index = bitmask of m

    const PosSet& at_mask(std::uint32_t mask) const { return rmap.at(mask); }
    friend bool operator==(const UniformWitness&, const UniformWitness&) = default;
};

/// Roots R^m_a keyed by (mask of m, a) with |a| == |m|.
class RootSystem {
public:
    RootSystem() = default;
    explicit RootSystem(std::uint32_t n) : n_(n) {}

    std::uint32_t dim() const { return n_; }
    void set(std::uint32_t mask, const OrdSet& a, OrdSet root);
    const OrdSet* find(std::uint32_t mask, const OrdSet& a) const;
    const std::map<std::pair<std::uint32_t, OrdSet>, OrdSet>& roots() const { return roots_; }

    friend bool operator==(const RootSystem&, const RootSystem&) = default;

private:
    std::uint32_t n_ = 1;
    std::map<std::pair<std::uint32_t, OrdSet>, OrdSet> roots_;
};

/// First failure found by a verifier, in a shape the CLI can print as one
/// machine-readable record.
struct Violation {
    std::string kind;             // e.g. "strict-mismatch", "otp", "value-mask"
    std::vector<OrdSet> indices;  // the offending index tuple(s)
    std::string detail;
};

// --- verifiers and related operations ---

/// Classical check: all pairwise intersections of distinct members coincide.
/// Lists of size <= 1 succeed (root = the sole member when there is one).
std::optional<OrdSet> verify_classical(const std::vector<OrdSet>& us);

struct Uniform1dWitness {
    OrdSet root;
    PosSet mask;
    friend bool operator==(const Uniform1dWitness&, const Uniform1dWitness&) = default;
};

/// Uniform 1-d check: every distinct pair aligned with the same intersection
/// and the same position mask.
std::optional<Uniform1dWitness> verify_uniform_1d(const std::vector<OrdSet>& us);

/// Largest sub-list on which the root sits at one fixed position mask.
/// Requires a classical root and constant otp; ties go to the
/// lexicographically smallest mask.
std::vector<OrdSet> refine_uniform_1d(const std::vector<OrdSet>& us);

/// The rejected strong requirement: u_a ∩ u_b is a function of a ∩ b over
/// ALL index pairs, aligned or not.
bool verify_strict(const Family& f, Violation* out = nullptr);

/// Root-system check over the aligned pairs only: whenever a and b are
/// aligned with mask m, u_a ∩ u_b must equal the root at (m, a ∩ b).
/// A missing root key at a realized (m, a ∩ b) is an input error.
bool verify_ndim(const Family& f, const RootSystem& rs, Violation* out = nullptr);

/// Reads rho off the first entry and each rmap(m) off the lexicographically
/// first aligned index pair realizing mask m. Requires |ground| >= 2n so that
/// every mask is realized. The result is a candidate only; callers must pass
/// it to verify_uniform.
std::optional<UniformWitness> infer_witness(const Family& f);

/// Full uniformity check against a witness: constant otp rho, aligned index
/// pairs map to aligned value sets with the witnessed mask, and the witness
/// masks respect intersections. Index pairs include a == b, which forces
/// rmap(n) to be all of rho.
bool verify_uniform(const Family& f, const UniformWitness& w, Violation* out = nullptr);

/// Roots derived from a verified witness: R^m_a is the rmap(m)-image of any
/// entry whose m-positions spell a, and empty when no entry does.
RootSystem derive_roots(const Family& f, const UniformWitness& w);

/// The substitution-stability clause: replacing a shared m-th coordinate by
/// any index value possible for both sides leaves the intersection type of
/// the two entries unchanged.
bool verify_moreover(const Family& f, Violation* out = nullptr);

/// Checks an extension map against the four conclusion clauses of the
/// variation form: containment, constant relative type, intersection
/// functoriality, and type transfer over nested index pairs.
/// ext must be total over the subsets of the ground set of size <= n.
bool verify_variation(const Family& f, const std::map<OrdSet, OrdSet>& ext,
                      Violation* out = nullptr);

} // namespace sunflower

#endif
