#include "efluct/errors.hpp"
#include "efluct/limits.hpp"
#include "efluct/spoke_arc.hpp"

#include <doctest.h>

using namespace efluct;

TEST_CASE("worked example") {
    const AnnularFrame f(4, 6);
    const auto pi = Pairing::from_blocks({{1, 5}, {2, 10}, {3, 4}, {6, 9}, {7, 8}});
    const auto cfg = decompose(pi, f);
    CHECK(cfg.a == 2);
    CHECK(cfg.inner == std::vector<int>{0, 1});
    CHECK(cfg.outer == std::vector<int>{4, 9});
    CHECK(cfg.inner_arc_lengths == std::vector<int>{0, 2});
    CHECK(cfg.outer_arc_lengths == std::vector<int>{4, 0});
    CHECK(cfg.inner_pairings[1].to_string() == "{{1,2}}");        // {3,4}
    CHECK(cfg.outer_pairings[0].to_string() == "{{1,4},{2,3}}"); // {6,9},{7,8}
    CHECK(compose(cfg, f) == pi);
}

TEST_CASE("small decompositions") {
    auto one = decompose(Pairing::from_blocks({{1, 2}}), AnnularFrame(1, 1));
    CHECK(one.a == 1);
    CHECK(one.inner == std::vector<int>{0});
    CHECK(one.outer == std::vector<int>{1});
    CHECK(one.inner_arc_lengths == std::vector<int>{0});
    CHECK(compose(one, AnnularFrame(1, 1)) == Pairing::from_blocks({{1, 2}}));

    auto two = decompose(Pairing::from_blocks({{1, 3}, {2, 4}}), AnnularFrame(2, 2));
    CHECK(two.a == 2);
    CHECK(two.inner == std::vector<int>{0, 1});
    CHECK(two.outer == std::vector<int>{2, 3});
    CHECK(two.inner_arc_lengths == std::vector<int>{0, 0});
    CHECK(two.outer_arc_lengths == std::vector<int>{0, 0});
}

TEST_CASE("bijection on NC2(4,6)") {
    const AnnularFrame f(4, 6);
    for (const auto& pi : enumerate_nc2_annular(f)) {
        const auto cfg = decompose(pi, f);
        CHECK(compose(cfg, f) == pi);
        CHECK(cfg.inner.front() == *std::min_element(cfg.inner.begin(), cfg.inner.end()));
        int si = 0, so = 0;
        for (int x : cfg.inner_arc_lengths) {
            CHECK(x % 2 == 0);
            si += x;
        }
        for (int x : cfg.outer_arc_lengths) {
            CHECK(x % 2 == 0);
            so += x;
        }
        CHECK(si == f.p - cfg.a);
        CHECK(so == f.q - cfg.a);
        for (const auto& arc : cfg.inner_pairings) CHECK(is_noncrossing_disc(arc));
        for (const auto& arc : cfg.outer_pairings) CHECK(is_noncrossing_disc(arc));
        for (int k = 1; k < cfg.a; ++k) CHECK(compose(rotate(cfg, k), f) == pi);
    }
}

TEST_CASE("stratified Fuss-Catalan identity") {
    for (int p = 1; p <= 7; ++p)
        for (int q = 1; p + q <= 12; ++q) {
            if ((p + q) % 2) continue;
            std::map<int, std::int64_t> strata;
            for (const auto& pi : enumerate_nc2_annular(AnnularFrame(p, q))) ++strata[spoke_count(pi, AnnularFrame(p, q))];
            for (int a = 1; a <= std::min(p, q); ++a) {
                if ((p - a) % 2) continue;
                const auto want = static_cast<std::int64_t>(p) * q * fuss_catalan(a, (p - a) / 2) * fuss_catalan(a, (q - a) / 2) / a;
                CHECK(strata[a] == want);
            }
        }
}

TEST_CASE("compose rejects bad configurations") {
    const AnnularFrame f(4, 6);
    auto cfg = decompose(Pairing::from_blocks({{1, 5}, {2, 10}, {3, 4}, {6, 9}, {7, 8}}), f);
    auto bad = cfg;
    bad.inner_arc_lengths = {2, 0};
    CHECK_THROWS_AS(compose(bad, f), InputError);
    bad = cfg;
    bad.outer = {4, 4};
    CHECK_THROWS_AS(compose(bad, f), InputError);
    bad = cfg;
    bad.outer_pairings[0] = Pairing::from_blocks({{1, 3}, {2, 4}});
    CHECK_THROWS_AS(compose(bad, f), InputError);
    CHECK_THROWS_AS(decompose(Pairing::from_blocks({{1, 2}, {3, 4}}), AnnularFrame(2, 2)), InputError);
}
