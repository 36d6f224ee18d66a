#include "efluct/errors.hpp"
#include "efluct/pairing.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace efluct;

TEST_CASE("pairing streams") {
    CHECK(enumerate_pairings(2).size() == 1);
    CHECK(enumerate_pairings(2)[0] == Pairing::from_blocks({{1, 2}}));
    CHECK(enumerate_pairings(4).size() == 3);
    CHECK(enumerate_pairings(8).size() == 105);
    std::set<Pairing> distinct;
    for (const auto& pi : enumerate_pairings(10)) distinct.insert(pi);
    CHECK(distinct.size() == 945);
    // canonical order: 1 paired with 2, then 3, then 4
    auto four = enumerate_pairings(4);
    CHECK(four[0].to_string() == "{{1,2},{3,4}}");
    CHECK(four[1].to_string() == "{{1,3},{2,4}}");
    CHECK(four[2].to_string() == "{{1,4},{2,3}}");
    CHECK_THROWS_AS(enumerate_pairings(5), InputError);
    CHECK_THROWS_AS(enumerate_pairings(18), InputError);
}

TEST_CASE("stream and callback agree") {
    std::vector<Pairing> viaCallback;
    for_each_pairing(8, {}, [&](const Pairing& pi) { viaCallback.push_back(pi); });
    CHECK(viaCallback == enumerate_pairings(8));
}

TEST_CASE("cycle counts") {
    CHECK(cycle_count(std::vector<int>{0, 1, 2, 3, 4}) == 5);
    CHECK(cycle_count(std::vector<int>{1, 2, 0, 4, 3}) == 2);
    // p=q=1: rho = id, pi = (1 2), rho pi = (1 2)
    const AnnularFrame f(1, 1);
    CHECK(cycle_count(compose(f.rho(), Pairing::from_blocks({{1, 2}}).partners())) == 1);
    CHECK_THROWS_AS(cycle_count(std::vector<int>{0, 0, 1}), InputError);
    CHECK_THROWS_AS(cycle_count(std::vector<int>{0, 3}), InputError);
}

TEST_CASE("composition convention") {
    const Permutation s{1, 2, 0}, m{0, 2, 1};
    const auto sm = compose(s, m);
    for (int t = 0; t < 3; ++t) CHECK(sm[static_cast<std::size_t>(t)] == s[static_cast<std::size_t>(m[static_cast<std::size_t>(t)])]);
    CHECK(compose(s, inverse(s)) == Permutation{0, 1, 2});
}

TEST_CASE("disc non-crossing") {
    CHECK(is_noncrossing_disc(Pairing::from_blocks({{1, 2}, {3, 4}})));
    CHECK_FALSE(is_noncrossing_disc(Pairing::from_blocks({{1, 3}, {2, 4}})));
    CHECK(is_noncrossing_disc(Pairing::from_blocks({{1, 4}, {2, 3}})));
    for (int n = 0; n <= 14; n += 2) {
        long direct = 0, filtered = 0;
        for_each_noncrossing_pairing(n, {}, [&](const Pairing& pi) {
            ++direct;
            CHECK(is_noncrossing_disc(pi));
        });
        if (n <= 12)
            for (const auto& pi : enumerate_pairings(n)) filtered += is_noncrossing_disc(pi);
        else
            filtered = direct;
        CHECK(direct == oracle::catalan(n / 2));
        CHECK(filtered == direct);
    }
}

TEST_CASE("annular non-crossing") {
    CHECK(is_noncrossing_annular(Pairing::from_blocks({{1, 3}, {2, 4}}), AnnularFrame(2, 2)));
    CHECK_FALSE(is_noncrossing_annular(Pairing::from_blocks({{1, 2}, {3, 4}}), AnnularFrame(2, 2)));
    CHECK(is_noncrossing_annular(Pairing::from_blocks({{1, 5}, {2, 10}, {3, 4}, {6, 9}, {7, 8}}), AnnularFrame(4, 6)));
    CHECK(is_noncrossing_annular(Pairing::from_blocks({{1, 4}, {2, 3}}), AnnularFrame(2, 2)));
    // crossing spokes plus an arc on a larger annulus
    CHECK_FALSE(is_noncrossing_annular(Pairing::from_blocks({{1, 4}, {2, 5}, {3, 6}}), AnnularFrame(3, 3)));
    CHECK_THROWS_AS(is_noncrossing_annular(Pairing::from_blocks({{1, 2}}), AnnularFrame(2, 2)), InputError);

    CHECK(enumerate_nc2_annular(AnnularFrame(2, 2)).size() == 2);
    CHECK(enumerate_nc2_annular(AnnularFrame(3, 1)).size() == 3);
    CHECK(enumerate_nc2_annular(AnnularFrame(1, 3)).size() == 3);
    CHECK(enumerate_nc2_annular(AnnularFrame(3, 2)).empty());
    CHECK_THROWS_AS(AnnularFrame(0, 2), InputError);
}

TEST_CASE("closed counts") {
    CHECK(nc2_count_closed(2, 2) == 2);
    CHECK(nc2_count_closed(4, 2) == 8);
    CHECK(nc2_count_closed(3, 2) == 0);
    CHECK(binomial_half(4, 3) == 0);
    CHECK(binomial_half(4, -2) == 0);
    CHECK(binomial_half(4, 2) == 4);
    CHECK(double_factorial(7) == 105);
    for (int p = 1; p <= 9; ++p)
        for (int q = 1; q + p <= 12; ++q) {
            const auto n = static_cast<std::int64_t>(enumerate_nc2_annular(AnnularFrame(p, q)).size());
            CHECK(n == nc2_count_closed(p, q));
            if ((p + q) % 2 == 0) {
                std::int64_t sum = 0;
                for (int a = 1; a <= std::min(p, q); ++a)
                    if ((p - a) % 2 == 0) sum += a * oracle::choose(p, (p - a) / 2) * oracle::choose(q, (q - a) / 2);
                CHECK(n == sum);
            }
        }
}

TEST_CASE("spoke counts") {
    CHECK(spoke_count(Pairing::from_blocks({{1, 3}, {2, 4}}), AnnularFrame(2, 2)) == 2);
    CHECK(spoke_count(Pairing::from_blocks({{1, 5}, {2, 10}, {3, 4}, {6, 9}, {7, 8}}), AnnularFrame(4, 6)) == 2);
    CHECK(spoke_count(Pairing::from_blocks({{1, 4}, {2, 3}}), AnnularFrame(3, 1)) == 1);
}

TEST_CASE("pairing validation") {
    CHECK_THROWS_AS(Pairing(std::vector<int>{0, 1}), InputError);
    CHECK_THROWS_AS(Pairing(std::vector<int>{1, 2, 0}), InputError);
    CHECK_THROWS_AS(Pairing::from_blocks({{1, 1}}), InputError);
    CHECK(Pairing().size() == 0);
}
