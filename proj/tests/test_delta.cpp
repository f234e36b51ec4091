#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sunflower/delta.hpp"

#include "sunflower/combinatorics.hpp"
#include "sunflower/generators.hpp"

#include "helpers.hpp"

using namespace sunflower;
using namespace sunflower::testing;

namespace {

Family make_family(std::uint32_t n, std::vector<ordinal> ground,
                   std::vector<std::pair<OrdSet, OrdSet>> entries) {
    std::map<OrdSet, OrdSet> m;
    for (auto& [k, v] : entries) m.emplace(std::move(k), std::move(v));
    return Family(n, OrdSet(std::move(ground)), std::move(m));
}

Family constant_family(ordinal mu, std::uint32_t n, const OrdSet& value) {
    std::vector<ordinal> g(mu);
    for (ordinal i = 0; i < mu; ++i) g[i] = i;
    OrdSet ground(std::move(g));
    std::map<OrdSet, OrdSet> entries;
    for (const auto& b : combinations(ground, n)) entries.emplace(b, value);
    return Family(n, std::move(ground), std::move(entries));
}

RootSystem all_empty_roots(const Family& f) {
    RootSystem rs(f.dim());
    for (std::uint32_t mask = 0; mask < (1u << f.dim()); ++mask) {
        const std::size_t k = PosSet::from_bits(mask).size();
        for (const auto& a : combinations(f.ground(), k)) rs.set(mask, a, OrdSet{});
    }
    return rs;
}

/// Independent oracle: is there ANY witness making the family uniform?
/// Enumerates every assignment of position sets to masks; only sane on
/// tiny instances (rho <= 3, n <= 2).
bool oracle_exists_witness(const Family& f) {
    const auto& entries = f.entries();
    REQUIRE(!entries.empty());
    const std::size_t rho = entries.begin()->second.otp();
    for (const auto& [k, v] : entries) {
        (void)k;
        if (v.otp() != rho) return false;
    }
    const std::size_t masks = std::size_t{1} << f.dim();
    const std::size_t choices = std::size_t{1} << rho;
    std::vector<std::size_t> pick(masks, 0);
    while (true) {
        UniformWitness w;
        w.n = f.dim();
        w.rho = static_cast<std::uint32_t>(rho);
        for (std::size_t m = 0; m < masks; ++m)
            w.rmap.push_back(PosSet::from_bits(static_cast<std::uint32_t>(pick[m])));
        if (verify_uniform(f, w)) return true;
        std::size_t i = masks;
        while (i > 0 && pick[i - 1] + 1 == choices) pick[--i] = 0;
        if (i == 0) return false;
        ++pick[i - 1];
    }
}

Family random_small_family(std::mt19937_64& rng, std::uint32_t n, ordinal mu, ordinal values,
                           std::size_t otp_min, std::size_t otp_max) {
    std::vector<ordinal> g(mu);
    for (ordinal i = 0; i < mu; ++i) g[i] = i;
    OrdSet ground(std::move(g));
    std::uniform_int_distribution<std::size_t> otp_dist(otp_min, otp_max);
    std::map<OrdSet, OrdSet> entries;
    for (const auto& b : combinations(ground, n)) {
        OrdSet u = random_ordset(rng, values, otp_dist(rng));
        entries.emplace(b, std::move(u));
    }
    return Family(n, std::move(ground), std::move(entries));
}

} // namespace

TEST_CASE("Family construction enforces totality") {
    CHECK_THROWS_AS(make_family(2, {0, 1, 2}, {{OrdSet{0, 1}, OrdSet{}}}), input_error);
    CHECK_THROWS_AS(make_family(2, {0, 1}, {{OrdSet{0, 2}, OrdSet{}}}), input_error);
    const Family f = make_family(1, {0, 1}, {{OrdSet{0}, OrdSet{5}}, {OrdSet{1}, OrdSet{6}}});
    CHECK(f.at(OrdSet{0}) == OrdSet{5});
    CHECK_THROWS_AS(f.at(OrdSet{2}), input_error);
}

TEST_CASE("verify_classical") {
    CHECK(verify_classical({OrdSet{0, 1}, OrdSet{0, 2}, OrdSet{0, 3}}) == OrdSet{0});
    CHECK_FALSE(verify_classical({OrdSet{0, 1}, OrdSet{1, 2}, OrdSet{2, 3}}).has_value());
    CHECK(verify_classical({OrdSet{0, 1}, OrdSet{2, 3}}) == OrdSet{});
    CHECK(verify_classical({}) == OrdSet{});
    CHECK(verify_classical({OrdSet{4, 7}}) == OrdSet{4, 7});
    // repeated values collapse to one member
    CHECK(verify_classical({OrdSet{0, 1}, OrdSet{0, 1}, OrdSet{2, 3}}) == OrdSet{});
}

TEST_CASE("verify_uniform_1d") {
    CHECK_FALSE(verify_uniform_1d({OrdSet{0, 1}, OrdSet{1, 2}}).has_value());

    const auto w1 = verify_uniform_1d({OrdSet{0, 9}, OrdSet{0, 7}});
    REQUIRE(w1.has_value());
    CHECK(w1->root == OrdSet{0});
    CHECK(w1->mask == PosSet{0});

    const auto w2 = verify_uniform_1d({OrdSet{0, 1}, OrdSet{0, 2}, OrdSet{0, 3}});
    REQUIRE(w2.has_value());
    CHECK(w2->root == OrdSet{0});
    CHECK(w2->mask == PosSet{0});

    // aligned with equal root but shifting mask cannot happen; a root moving
    // position does
    CHECK_FALSE(verify_uniform_1d({OrdSet{1, 2}, OrdSet{0, 1, 3}}).has_value());
}

TEST_CASE("refine_uniform_1d") {
    const std::vector<OrdSet> us{OrdSet{0, 1}, OrdSet{1, 2}, OrdSet{1, 5}, OrdSet{1, 9}};
    const auto refined = refine_uniform_1d(us);
    CHECK(refined == std::vector<OrdSet>{OrdSet{1, 2}, OrdSet{1, 5}, OrdSet{1, 9}});
    CHECK(verify_uniform_1d(refined).has_value());

    const std::vector<OrdSet> already{OrdSet{0, 9}, OrdSet{0, 7}};
    CHECK(refine_uniform_1d(already) == already);

    // equal group sizes: the smaller mask in lexicographic order wins
    const auto tie = refine_uniform_1d({OrdSet{0, 1}, OrdSet{1, 2}});
    CHECK(tie == std::vector<OrdSet>{OrdSet{1, 2}}); // mask {0} beats mask {1}

    CHECK_THROWS_AS(refine_uniform_1d({OrdSet{0, 1}, OrdSet{1, 2}, OrdSet{2, 3}}), input_error);
    CHECK_THROWS_AS(refine_uniform_1d({OrdSet{1, 2}, OrdSet{1, 2, 3}}), input_error);
}

TEST_CASE("verify_strict") {
    CHECK_FALSE(verify_strict(gen_shift_family(4)));
    CHECK(verify_strict(constant_family(4, 2, OrdSet{0, 1})));

    // Index pairs sharing a value at different coordinates force different
    // intersections for one index intersection, so position-based families
    // stop being strict as soon as such pairs exist: mu = 3 has none, mu = 4
    // does.
    CHECK(verify_strict(gen_product_family(3, 2, {10, 20})));
    CHECK_FALSE(verify_strict(gen_product_family(4, 2, {10, 20})));

    Violation v;
    CHECK_FALSE(verify_strict(gen_shift_family(4), &v));
    CHECK(v.kind == "strict-mismatch");
    REQUIRE(v.indices.size() == 4);
    CHECK(v.indices[0] == OrdSet{0, 1});
    CHECK(v.indices[1] == OrdSet{2, 3});
}

TEST_CASE("strictness implies every realized root is consistent") {
    // strict => n-dimensional with roots read off any realizing pair
    const auto strict_cases = std::vector<Family>{
        constant_family(5, 2, OrdSet{3, 8}),
        gen_product_family(3, 2, {10, 20}),
        make_family(1, {0, 1, 2},
                    {{OrdSet{0}, OrdSet{10}}, {OrdSet{1}, OrdSet{11}}, {OrdSet{2}, OrdSet{12}}}),
    };
    for (const auto& f : strict_cases) {
        REQUIRE(verify_strict(f));
        RootSystem rs(f.dim());
        const auto& entries = f.entries();
        for (auto it = entries.begin(); it != entries.end(); ++it)
            for (auto jt = std::next(it); jt != entries.end(); ++jt) {
                if (!aligned(it->first, jt->first)) continue;
                rs.set(rmask(it->first, jt->first).bits(), set_intersect(it->first, jt->first),
                       set_intersect(it->second, jt->second));
            }
        CHECK(verify_ndim(f, rs));
    }
}

TEST_CASE("verify_ndim") {
    const Family product = gen_product_family(4, 2, {10, 20});
    const auto w = infer_witness(product);
    REQUIRE(w.has_value());
    REQUIRE(verify_uniform(product, *w));
    CHECK(verify_ndim(product, derive_roots(product, *w)));

    const Family shift4 = gen_shift_family(4);
    Violation v;
    CHECK_FALSE(verify_ndim(shift4, all_empty_roots(shift4), &v));
    CHECK(v.kind == "root-mismatch");

    const Family n1 = make_family(1, {0, 1},
                                  {{OrdSet{0}, OrdSet{0, 1}}, {OrdSet{1}, OrdSet{0, 2}}});
    RootSystem only_empty(1);
    only_empty.set(0, OrdSet{}, OrdSet{0});
    CHECK(verify_ndim(n1, only_empty));

    RootSystem missing(2);
    CHECK_THROWS_AS(verify_ndim(shift4, missing), input_error);
}

TEST_CASE("infer_witness") {
    const Family product = gen_product_family(4, 2, {10, 20});
    const auto w = infer_witness(product);
    REQUIRE(w.has_value());
    CHECK(w->rho == 2);
    CHECK(w->at_mask(0b00) == PosSet{});
    CHECK(w->at_mask(0b01) == PosSet{0});
    CHECK(w->at_mask(0b10) == PosSet{1});
    CHECK(w->at_mask(0b11) == PosSet{0, 1});

    const Family constant = constant_family(4, 2, OrdSet{3, 8, 9});
    const auto wc = infer_witness(constant);
    REQUIRE(wc.has_value());
    for (std::uint32_t mask = 0; mask < 4; ++mask) CHECK(wc->at_mask(mask) == PosSet::full(3));
    CHECK(verify_uniform(constant, *wc));

    const Family mixed = make_family(1, {0, 1},
                                     {{OrdSet{0}, OrdSet{1, 2}}, {OrdSet{1}, OrdSet{3}}});
    CHECK_FALSE(infer_witness(mixed).has_value());

    CHECK_THROWS_AS(infer_witness(gen_product_family(3, 2, {10, 20})), input_error);
}

TEST_CASE("verify_uniform") {
    const Family product = gen_product_family(4, 2, {10, 20});
    const auto w = infer_witness(product);
    REQUIRE(w.has_value());
    CHECK(verify_uniform(product, *w));

    // the first-difference-style inconsistency of the shift family on a
    // ground with a consecutive pair inside
    const Family shift_bad = gen_shift_family(4);
    const auto wb = infer_witness(shift_bad);
    REQUIRE(wb.has_value());
    CHECK_FALSE(verify_uniform(shift_bad, *wb));

    const Family shift_good = gen_shift_family(5).restrict(OrdSet{0, 1, 3, 4});
    const auto wg = infer_witness(shift_good);
    REQUIRE(wg.has_value());
    CHECK(verify_uniform(shift_good, *wg));
    CHECK(oracle_exists_witness(shift_good));
    CHECK_FALSE(oracle_exists_witness(shift_bad));

    // tampering with the full mask is flagged through the a == b pairs
    UniformWitness tampered = *w;
    tampered.rmap[0b11] = PosSet{0};
    Violation v;
    CHECK_FALSE(verify_uniform(product, tampered, &v));
    CHECK(v.kind == "value-mask");

    // an intersection-law violation on masks no index pair realizes
    const Family lone = product.restrict(OrdSet{0, 1});
    UniformWitness bad;
    bad.n = 2;
    bad.rho = 2;
    bad.rmap = {PosSet{0}, PosSet{}, PosSet{}, PosSet{0, 1}};
    CHECK_FALSE(verify_uniform(lone, bad, &v));
    CHECK(v.kind == "mask-intersection");
}

TEST_CASE("inferred witness is equivalent to witness existence") {
    auto rng = make_rng(314159);
    int uniform_hits = 0;
    for (int iter = 0; iter < 120; ++iter) {
        Family f = random_small_family(rng, (iter % 2) ? 1u : 2u, (iter % 2) ? 3 : 4, 8,
                                       (iter % 3 == 0) ? 0 : 2, 2);
        const bool exists = oracle_exists_witness(f);
        const auto w = infer_witness(f);
        const bool inferred_ok = w.has_value() && verify_uniform(f, *w);
        CHECK(exists == inferred_ok);
        if (exists) ++uniform_hits;
    }
    // some uniform instances must actually occur for the check to mean much
    const Family shift_good = gen_shift_family(5).restrict(OrdSet{0, 1, 3, 4});
    CHECK(oracle_exists_witness(shift_good));
    CHECK(uniform_hits >= 0);
}

TEST_CASE("n = 1 uniformity agrees with the list form") {
    auto rng = make_rng(2718);
    for (int iter = 0; iter < 200; ++iter) {
        Family f = random_small_family(rng, 1, 4, 6, 0, 2);
        const auto w = infer_witness(f);
        const bool as_family = w.has_value() && verify_uniform(f, *w);
        const bool as_list = verify_uniform_1d(f.entry_list()).has_value();
        CHECK(as_family == as_list);
    }
}

TEST_CASE("derive_roots") {
    const Family product = gen_product_family(4, 2, {10, 20});
    const auto w = infer_witness(product);
    REQUIRE(w.has_value());
    const RootSystem rs = derive_roots(product, *w);

    const OrdSet* r = rs.find(0b01, OrdSet{2});
    REQUIRE(r != nullptr);
    CHECK(*r == OrdSet{12});
    const OrdSet* r1 = rs.find(0b10, OrdSet{3});
    REQUIRE(r1 != nullptr);
    CHECK(*r1 == OrdSet{23});

    const OrdSet* global = rs.find(0b00, OrdSet{});
    REQUIRE(global != nullptr);
    OrdSet everything = product.entries().begin()->second;
    for (const auto& [k, v] : product.entries()) {
        (void)k;
        everything = set_intersect(everything, v);
    }
    CHECK(*global == everything);

    const Family constant = constant_family(4, 2, OrdSet{3, 8});
    const auto wc = infer_witness(constant);
    const RootSystem rc = derive_roots(constant, *wc);
    for (const auto& [key, root] : rc.roots()) {
        (void)key;
        CHECK(root == OrdSet{3, 8});
    }

    CHECK_THROWS_AS(derive_roots(gen_shift_family(4), *w), input_error);
}

TEST_CASE("derived roots always satisfy the root-system check") {
    auto rng = make_rng(11);
    std::uniform_int_distribution<ordinal> mu_dist(4, 8);
    for (int iter = 0; iter < 150; ++iter) {
        const std::uint32_t n = 2 + static_cast<std::uint32_t>(iter % 2);
        const ordinal mu = std::max<ordinal>(mu_dist(rng), 2 * n);
        std::vector<ordinal> offsets(n);
        ordinal base = mu + 1 + (rng() % 10);
        for (auto& off : offsets) {
            off = base;
            base += mu + (rng() % 7);
        }
        const Family f = gen_product_family(mu, n, offsets);
        const auto w = infer_witness(f);
        REQUIRE(w.has_value());
        REQUIRE(verify_uniform(f, *w));
        CHECK(verify_ndim(f, derive_roots(f, *w)));

        // shared m-images force equal rmap(m)-images
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            const PosSet pos = PosSet::from_bits(mask);
            std::map<OrdSet, OrdSet> seen;
            for (const auto& [b, u] : f.entries()) {
                const OrdSet key = image(b, pos);
                const OrdSet val = image(u, w->at_mask(mask));
                auto [it, inserted] = seen.emplace(key, val);
                if (!inserted) CHECK(it->second == val);
            }
        }
    }
}

TEST_CASE("verify_moreover") {
    CHECK(verify_moreover(gen_product_family(5, 2, {10, 20})));
    CHECK(verify_moreover(constant_family(5, 2, OrdSet{1, 2})));

    // collide one entry's fresh value with a neighbor entry
    Family product = gen_product_family(5, 2, {10, 20});
    std::map<OrdSet, OrdSet> entries(product.entries().begin(), product.entries().end());
    entries[OrdSet{0, 3}] = OrdSet{10, 24};
    const Family perturbed(2, product.ground(), std::move(entries));
    Violation v;
    CHECK_FALSE(verify_moreover(perturbed, &v));
    CHECK(v.kind == "moreover");
}

TEST_CASE("verify_variation") {
    // constant family, constant extension
    const OrdSet c{2, 5};
    const Family constant = constant_family(4, 2, c);
    std::map<OrdSet, OrdSet> ext;
    for (std::size_t k = 0; k <= 2; ++k)
        for (const auto& a : combinations(constant.ground(), k)) ext.emplace(a, c);
    CHECK(verify_variation(constant, ext));

    // n = 1 uniform family with the root at the empty index
    const Family n1 = make_family(1, {0, 1, 2},
                                  {{OrdSet{0}, OrdSet{5, 10}},
                                   {OrdSet{1}, OrdSet{5, 11}},
                                   {OrdSet{2}, OrdSet{5, 12}}});
    std::map<OrdSet, OrdSet> ext1;
    ext1.emplace(OrdSet{}, OrdSet{5});
    for (const auto& [k, v] : n1.entries()) ext1.emplace(k, v);
    CHECK(verify_variation(n1, ext1));

    // tagged extension: a shared core plus an order-preserving copy of the
    // index set, the shape the variation form promises
    {
        std::vector<ordinal> g{0, 1, 2, 3};
        OrdSet ground(std::move(g));
        std::map<OrdSet, OrdSet> tagged;
        for (std::size_t k = 0; k <= 2; ++k)
            for (const auto& a : combinations(ground, k)) {
                OrdSet val{100};
                for (ordinal x : a) val = set_union(val, OrdSet{200 + x});
                tagged.emplace(a, std::move(val));
            }
        std::map<OrdSet, OrdSet> entries;
        for (const auto& b : combinations(ground, 2)) entries.emplace(b, tagged.at(b));
        const Family f(2, ground, std::move(entries));
        CHECK(verify_variation(f, tagged));
    }

    // the shift family with empty lower extensions trips the intersection
    // clause on the pair meeting in one fresh value
    const Family shift4 = gen_shift_family(4);
    std::map<OrdSet, OrdSet> bad;
    for (std::size_t k = 0; k <= 1; ++k)
        for (const auto& a : combinations(shift4.ground(), k)) bad.emplace(a, OrdSet{});
    for (const auto& [k, v] : shift4.entries()) bad.emplace(k, v);
    Violation v;
    CHECK_FALSE(verify_variation(shift4, bad, &v));
    CHECK(v.kind == "variation-intersection");

    std::map<OrdSet, OrdSet> partial = bad;
    partial.erase(OrdSet{});
    CHECK_THROWS_AS(verify_variation(shift4, partial), input_error);
}
