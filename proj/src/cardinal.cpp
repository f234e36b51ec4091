#include "sunflower/cardinal.hpp"

#include <cctype>
#include <utility>

namespace sunflower {

CardExpr CardExpr::aleph(std::uint32_t k) {
    return CardExpr(std::make_shared<const Node>(Node{Kind::aleph, k, {}, nullptr}));
}

CardExpr CardExpr::var(std::string name) {
    return CardExpr(std::make_shared<const Node>(Node{Kind::var, 0, std::move(name), nullptr}));
}

CardExpr CardExpr::beth(std::uint32_t k) { return beth(k, aleph(0)); }

CardExpr CardExpr::beth(std::uint32_t k, CardExpr base) {
    return CardExpr(std::make_shared<const Node>(Node{Kind::beth, k, {}, std::move(base.node_)}));
}

CardExpr CardExpr::succ(CardExpr e) {
    return CardExpr(std::make_shared<const Node>(Node{Kind::succ, 0, {}, std::move(e.node_)}));
}

CardExpr CardExpr::pow2(CardExpr e) {
    return CardExpr(std::make_shared<const Node>(Node{Kind::pow2, 0, {}, std::move(e.node_)}));
}

CardExpr CardExpr::pow2lt(CardExpr e) {
    return CardExpr(std::make_shared<const Node>(Node{Kind::pow2lt, 0, {}, std::move(e.node_)}));
}

std::uint32_t CardExpr::index() const { return node_->idx; }
const std::string& CardExpr::name() const { return node_->name; }

CardExpr CardExpr::child() const {
    if (!node_->child) throw input_error("CardExpr: node has no operand");
    return CardExpr(node_->child);
}

bool CardExpr::operator==(const CardExpr& other) const {
    const Node* a = node_.get();
    const Node* b = other.node_.get();
    while (a && b) {
        if (a == b) return true;
        if (a->kind != b->kind || a->idx != b->idx || a->name != b->name) return false;
        a = a->child.get();
        b = b->child.get();
    }
    return a == b;
}

std::string CardExpr::str() const {
    switch (kind()) {
        case Kind::aleph: return "aleph(" + std::to_string(index()) + ")";
        case Kind::var: return name();
        case Kind::beth: {
            const CardExpr& base = child();
            if (base.kind() == Kind::aleph && base.index() == 0)
                return "beth(" + std::to_string(index()) + ")";
            return "beth(" + std::to_string(index()) + "; " + base.str() + ")";
        }
        case Kind::succ: return "succ(" + child().str() + ")";
        case Kind::pow2: return "pow2(" + child().str() + ")";
        case Kind::pow2lt: return "pow2lt(" + child().str() + ")";
    }
    return "?";
}

namespace {

using Kind = CardExpr::Kind;

// beth(k, base) with beth-of-beth collapsed and level 0 dropped.
CardExpr make_beth(std::uint32_t k, CardExpr base) {
    while (base.kind() == Kind::beth) {
        k += base.index();
        base = base.child();
    }
    if (k == 0) return base;
    return CardExpr::beth(k, std::move(base));
}

} // namespace

CardExpr normalize(const CardExpr& e) {
    switch (e.kind()) {
        case Kind::aleph:
        case Kind::var:
            return e;
        case Kind::beth:
            return make_beth(e.index(), normalize(e.child()));
        case Kind::succ: {
            CardExpr c = normalize(e.child());
            if (c.kind() == Kind::aleph) return CardExpr::aleph(c.index() + 1);
            return CardExpr::succ(std::move(c));
        }
        case Kind::pow2:
            return make_beth(1, normalize(e.child()));
        case Kind::pow2lt: {
            CardExpr c = normalize(e.child());
            // Bounded subsets of a successor are subsets of its predecessor.
            if (c.kind() == Kind::succ) return make_beth(1, c.child());
            if (c.kind() == Kind::aleph) {
                if (c.index() == 0) return c; // finitely many finite patterns
                return make_beth(1, CardExpr::aleph(c.index() - 1));
            }
            return CardExpr::pow2lt(std::move(c));
        }
    }
    throw input_error("normalize: unknown node kind");
}

CardExpr sigma(const CardExpr& lambda, std::uint32_t n) {
    if (n == 0) throw input_error("sigma: n must be at least 1");
    CardExpr r = normalize(lambda);
    for (std::uint32_t i = 1; i < n; ++i)
        r = normalize(CardExpr::succ(CardExpr::pow2lt(r)));
    return r;
}

namespace {

// beth_j(aleph_i) >= aleph_{i+j}, since 2^kappa >= kappa^+ at every rung.
bool provably_distinct(const CardExpr& a, const CardExpr& b) {
    if (a.kind() == Kind::aleph && b.kind() == Kind::aleph) return a.index() != b.index();
    if (a.kind() == Kind::beth && b.kind() == Kind::beth)
        return a.child() == b.child() && a.index() != b.index();
    const auto aleph_vs_beth = [](const CardExpr& al, const CardExpr& be) {
        if (al.kind() != Kind::aleph || be.kind() != Kind::beth) return false;
        const CardExpr& base = be.child();
        return base.kind() == Kind::aleph &&
               al.index() < base.index() + be.index();
    };
    return aleph_vs_beth(a, b) || aleph_vs_beth(b, a);
}

Tri equals_normal(const CardExpr& a, const CardExpr& b) {
    if (a == b) return Tri::yes;
    if (provably_distinct(a, b)) return Tri::no;
    // Successor is injective on cardinals, and aleph(k+1) is succ(aleph(k)).
    if (a.kind() == Kind::succ && b.kind() == Kind::succ)
        return equals_normal(a.child(), b.child());
    if (a.kind() == Kind::succ && b.kind() == Kind::aleph) {
        if (b.index() == 0) return Tri::no;
        return equals_normal(a.child(), CardExpr::aleph(b.index() - 1));
    }
    if (b.kind() == Kind::succ && a.kind() == Kind::aleph)
        return equals_normal(b, a);
    return Tri::unknown;
}

} // namespace

Tri equals(const CardExpr& a, const CardExpr& b) {
    return equals_normal(normalize(a), normalize(b));
}

// --- parser ---

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            throw input_error(std::string("cardinal parse: expected '") + c + "' at offset " +
                              std::to_string(pos));
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos) throw input_error("cardinal parse: expected a name at offset " +
                                            std::to_string(pos));
        return text.substr(start, pos - start);
    }

    std::uint32_t integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) {
            // Give limit-notation a pointed message instead of a generic one.
            std::size_t p = pos;
            while (p < text.size() && std::isalpha(static_cast<unsigned char>(text[p]))) ++p;
            throw input_error("cardinal parse: only finite indices are supported (got '" +
                              text.substr(pos, p - pos) + "')");
        }
        return static_cast<std::uint32_t>(std::stoul(text.substr(start, pos - start)));
    }

    CardExpr expr() {
        std::string head = ident();
        skip_ws();
        if (pos >= text.size() || text[pos] != '(') {
            if (head == "aleph" || head == "beth" || head == "succ" || head == "pow2" ||
                head == "pow2lt")
                throw input_error("cardinal parse: '" + head + "' needs arguments");
            return CardExpr::var(head);
        }
        expect('(');
        CardExpr result = CardExpr::aleph(0);
        if (head == "aleph") {
            result = CardExpr::aleph(integer());
        } else if (head == "beth") {
            std::uint32_t k = integer();
            if (eat(';'))
                result = CardExpr::beth(k, expr());
            else
                result = CardExpr::beth(k);
        } else if (head == "succ") {
            result = CardExpr::succ(expr());
        } else if (head == "pow2") {
            result = CardExpr::pow2(expr());
        } else if (head == "pow2lt") {
            result = CardExpr::pow2lt(expr());
        } else {
            throw input_error("cardinal parse: unknown operator '" + head + "'");
        }
        expect(')');
        return result;
    }
};

} // namespace

CardExpr parse_card(const std::string& text) {
    Parser p(text);
    CardExpr e = p.expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw input_error("cardinal parse: trailing input at offset " + std::to_string(p.pos));
    return e;
}

} // namespace sunflower
