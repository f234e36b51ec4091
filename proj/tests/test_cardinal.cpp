#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sunflower/cardinal.hpp"

#include <functional>
#include <random>

using namespace sunflower;

namespace {

CardExpr random_expr(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 1);
    switch (pick(rng)) {
        case 0: return CardExpr::aleph(static_cast<std::uint32_t>(rng() % 4));
        case 1: return CardExpr::var("x");
        case 2: return CardExpr::succ(random_expr(rng, depth - 1));
        case 3: return CardExpr::pow2(random_expr(rng, depth - 1));
        case 4: return CardExpr::pow2lt(random_expr(rng, depth - 1));
        default:
            return CardExpr::beth(static_cast<std::uint32_t>(rng() % 4),
                                  random_expr(rng, depth - 1));
    }
}

} // namespace

TEST_CASE("normalize folds the two-step ladder rules") {
    // 2^{<kappa+} = 2^kappa, here written through the beth ladder
    CHECK(normalize(CardExpr::pow2lt(CardExpr::succ(CardExpr::aleph(1)))) ==
          CardExpr::beth(1, CardExpr::aleph(1)));
    CHECK(normalize(CardExpr::pow2(CardExpr::beth(1))) == CardExpr::beth(2));
    CHECK(normalize(CardExpr::pow2(CardExpr::aleph(0))) == CardExpr::beth(1));
    CHECK(normalize(CardExpr::beth(0, CardExpr::aleph(3))) == CardExpr::aleph(3));
    CHECK(normalize(CardExpr::succ(CardExpr::aleph(0))) == CardExpr::aleph(1));
    CHECK(normalize(CardExpr::pow2lt(CardExpr::aleph(0))) == CardExpr::aleph(0));
    CHECK(normalize(CardExpr::pow2lt(CardExpr::aleph(2))) ==
          CardExpr::beth(1, CardExpr::aleph(1)));
    // no continuum assumption: 2^{aleph(1)} does not collapse to an aleph
    const CardExpr two_to_omega1 = normalize(CardExpr::pow2(CardExpr::aleph(1)));
    CHECK(two_to_omega1 == CardExpr::beth(1, CardExpr::aleph(1)));
    CHECK(equals(two_to_omega1, CardExpr::aleph(2)) == Tri::unknown);
}

TEST_CASE("normalize is idempotent") {
    auto rng = std::mt19937_64(31337);
    for (int iter = 0; iter < 800; ++iter) {
        const CardExpr e = random_expr(rng, 5);
        const CardExpr n1 = normalize(e);
        CHECK(normalize(n1) == n1);
    }
}

TEST_CASE("sigma base cases") {
    CHECK(sigma(CardExpr::aleph(1), 1) == CardExpr::aleph(1));
    CHECK(sigma(CardExpr::var("lambda"), 1) == CardExpr::var("lambda"));
    CHECK(sigma(CardExpr::aleph(1), 3).str() == "succ(beth(2))");
    CHECK_THROWS_AS(sigma(CardExpr::aleph(1), 0), input_error);
}

TEST_CASE("sigma of a successor base climbs the ladder of its predecessor") {
    for (std::uint32_t n = 1; n <= 8; ++n) {
        CHECK(equals(sigma(CardExpr::succ(CardExpr::beth(1)), n),
                     CardExpr::succ(CardExpr::beth(n))) == Tri::yes);
        CHECK(equals(sigma(CardExpr::aleph(1), n),
                     CardExpr::succ(CardExpr::beth(n - 1))) == Tri::yes);
        CHECK(equals(sigma(CardExpr::succ(CardExpr::aleph(1)), n),
                     CardExpr::succ(CardExpr::beth(n - 1, CardExpr::aleph(1)))) == Tri::yes);
        CHECK(equals(sigma(CardExpr::succ(CardExpr::aleph(0)), n),
                     CardExpr::succ(CardExpr::beth(n - 1, CardExpr::aleph(0)))) == Tri::yes);
    }
}

TEST_CASE("sigma of a symbolic regular cardinal") {
    const CardExpr lambda = CardExpr::var("lambda");
    for (std::uint32_t n = 2; n <= 8; ++n)
        CHECK(equals(sigma(lambda, n),
                     CardExpr::succ(CardExpr::beth(n - 2, CardExpr::pow2lt(lambda)))) == Tri::yes);
}

TEST_CASE("sigma depends on a symbolic base only through bounded powersets") {
    // walk the normal form: every var sits under a pow2lt
    const std::function<bool(const CardExpr&, bool)> var_guarded =
        [&](const CardExpr& e, bool guarded) -> bool {
        switch (e.kind()) {
            case CardExpr::Kind::var: return guarded;
            case CardExpr::Kind::aleph: return true;
            case CardExpr::Kind::pow2lt: return var_guarded(e.child(), true);
            default: return var_guarded(e.child(), guarded);
        }
    };
    for (std::uint32_t n = 2; n <= 8; ++n)
        CHECK(var_guarded(sigma(CardExpr::var("mu"), n), false));
    CHECK_FALSE(var_guarded(sigma(CardExpr::var("mu"), 1), false));
}

TEST_CASE("equals") {
    CHECK(equals(CardExpr::aleph(1), CardExpr::aleph(2)) == Tri::no);
    CHECK(equals(CardExpr::aleph(1), CardExpr::beth(1)) == Tri::unknown);
    CHECK(equals(CardExpr::beth(1), CardExpr::beth(2)) == Tri::no);
    CHECK(equals(CardExpr::beth(2, CardExpr::var("x")), CardExpr::beth(3, CardExpr::var("x"))) ==
          Tri::no);
    CHECK(equals(CardExpr::succ(CardExpr::beth(1)), CardExpr::aleph(1)) == Tri::no);
    CHECK(equals(CardExpr::succ(CardExpr::var("x")), CardExpr::aleph(0)) == Tri::no);
    CHECK(equals(CardExpr::succ(CardExpr::var("x")), CardExpr::succ(CardExpr::var("y"))) ==
          Tri::unknown);
    CHECK(equals(CardExpr::beth(1), CardExpr::aleph(3)) == Tri::unknown);
    CHECK(equals(CardExpr::beth(2), CardExpr::aleph(1)) == Tri::no);
    CHECK(equals(CardExpr::var("x"), CardExpr::var("x")) == Tri::yes);
}

TEST_CASE("parser round-trips and rejections") {
    for (const auto* text : {"aleph(0)", "aleph(3)", "beth(2)", "beth(1; aleph(1))",
                             "succ(beth(2))", "pow2lt(lambda)", "pow2(aleph(1))",
                             "beth(2; pow2lt(kappa))", "lambda"}) {
        const CardExpr e = parse_card(text);
        CHECK(parse_card(e.str()) == e);
    }
    CHECK(parse_card(" succ( beth( 2 ) ) ") == CardExpr::succ(CardExpr::beth(2)));

    CHECK_THROWS_AS(parse_card("aleph(omega)"), input_error);
    CHECK_THROWS_WITH_AS(parse_card("aleph(omega)"),
                         doctest::Contains("finite indices"), input_error);
    CHECK_THROWS_AS(parse_card("aleph"), input_error);
    CHECK_THROWS_AS(parse_card("beth(1, aleph(0))"), input_error);
    CHECK_THROWS_AS(parse_card("pow3(aleph(0))"), input_error);
    CHECK_THROWS_AS(parse_card("succ(aleph(0)) trailing"), input_error);
    CHECK_THROWS_AS(parse_card(""), input_error);
}
