#ifndef SUNFLOWER_CARDINAL_HPP
#define SUNFLOWER_CARDINAL_HPP

#include <cstdint>
#include <memory>
#include <string>

#include "sunflower/errors.hpp"

namespace sunflower {

/// Symbolic cardinal expressions: aleph(k) atoms, named regular-cardinal
/// variables, a beth ladder over an arbitrary base, successor, 2^x and
/// 2^{<x}. Immutable; nodes are shared.
class CardExpr {
public:
    enum class Kind { aleph, var, beth, succ, pow2, pow2lt };

    static CardExpr aleph(std::uint32_t k);
    static CardExpr var(std::string name);
    static CardExpr beth(std::uint32_t k);                 // base aleph(0)
    static CardExpr beth(std::uint32_t k, CardExpr base);
    static CardExpr succ(CardExpr e);
    static CardExpr pow2(CardExpr e);
    static CardExpr pow2lt(CardExpr e);

    Kind kind() const { return node_->kind; }
    std::uint32_t index() const;          // aleph / beth level
    const std::string& name() const;      // var
    CardExpr child() const;               // beth base or operand

    bool operator==(const CardExpr& other) const;
    bool operator!=(const CardExpr& other) const { return !(*this == other); }

    std::string str() const;

private:
    struct Node {
        Kind kind;
        std::uint32_t idx = 0;
        std::string name;
        std::shared_ptr<const Node> child;
    };
    explicit CardExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

enum class Tri { yes, no, unknown };

/// Rewrites to the canonical form: 2^x folds into the beth ladder,
/// beth ladders collapse, successors of alephs become alephs, and
/// 2^{<κ⁺} becomes 2^κ. Whatever matches no rule stays symbolic.
/// Idempotent.
CardExpr normalize(const CardExpr& e);

/// sigma(lambda, 1) = lambda; sigma(lambda, k+1) = (2^{< sigma(lambda, k)})⁺,
/// returned normalized. n = 0 is an input error.
CardExpr sigma(const CardExpr& lambda, std::uint32_t n);

/// Compares normal forms. yes on structural equality; no only when the
/// normal forms are provably distinct in ZFC (distinct alephs, distinct
/// levels of one ladder, and the bound beth_j(aleph_i) >= aleph_{i+j});
/// everything else is unknown. No choice of continuum function is assumed.
Tri equals(const CardExpr& a, const CardExpr& b);

/// Text grammar: aleph(k), beth(k), beth(k; base), succ(e), pow2(e),
/// pow2lt(e), and bare identifiers for variables. Finite indices only.
CardExpr parse_card(const std::string& text);

} // namespace sunflower

#endif
