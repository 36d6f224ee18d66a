#include "efluct/errors.hpp"
#include "efluct/freeness.hpp"

#include <doctest.h>

using namespace efluct;

namespace {
GammaPoly k(std::int64_t c) { return GammaPoly::constant(c); }
ClusterWord cw(const char* s) { return parse_cluster_word(s); }
} // namespace

TEST_CASE("cluster means") {
    CHECK(cluster_mean({1, {Letter::One, Letter::Star}}) == k(1));
    CHECK(cluster_mean({3, {Letter::One, Letter::One}}) == GammaPoly::power(3, 1));
    CHECK(cluster_mean({1, {Letter::One}}).is_zero());
}

TEST_CASE("two-color XX* clusters") {
    const auto a = cw("x1 s1 | x2 s2");
    for (auto [ch, want] : {std::pair{Channel::Complex, 1}, std::pair{Channel::Real, 2}}) {
        CHECK(centered_cov_limit(a, a, ch) == k(want));
        CHECK(sstar_cov_limit(a, a, ch) == k(want));
        CHECK(second_order_rhs(a, a, ch) == k(want));
    }
    const auto three = cw("x1 s1 | x2 s2 | x1 s1 | x2 s2");
    for (auto ch : {Channel::Complex, Channel::Real}) {
        CHECK(centered_cov_limit(a, three, ch).is_zero());
        CHECK(sstar_cov_limit(a, three, ch).is_zero());
        CHECK(second_order_rhs(a, three, ch).is_zero());
    }
}

TEST_CASE("single cluster against another color") {
    CHECK(sstar_cov_limit(cw("x1 s1"), cw("x2 s2"), Channel::Real).is_zero());
    CHECK(centered_cov_limit(cw("x1 x1"), cw("x2 x2"), Channel::Complex).is_zero());
}

TEST_CASE("two-variable polynomial agreement") {
    const auto a = cw("x1 x1 | x2 s2");
    const auto b = cw("x1 s1 | x2 x2");
    for (auto ch : {Channel::Complex, Channel::Real}) {
        const auto c = centered_cov_limit(a, b, ch);
        CHECK(c == sstar_cov_limit(a, b, ch));
        CHECK(c == second_order_rhs(a, b, ch));
        CHECK_FALSE(c.is_zero());
    }
}

TEST_CASE("alternation hypothesis") {
    CHECK_THROWS_AS(centered_cov_limit(cw("x1 | x1"), cw("x1 | x2"), Channel::Complex), InputError);
    CHECK_THROWS_AS(sstar_cov_limit(cw("x1 | x2 | x1"), cw("x1 | x2"), Channel::Complex), InputError);
    CHECK_THROWS_AS(parse_cluster_word("x1 x2"), InputError);
    CHECK(cw("x1").cyclically_alternating());
    const auto rep = verify_second_order_freeness({{cw("x1 | x1 s1"), cw("x2 | x1"), Channel::Real}});
    CHECK(rep.rejected == 1);
    CHECK(rep.cases[0].status == CaseStatus::Rejected);
}

TEST_CASE("default grid") {
    const auto grid = default_freeness_grid();
    const auto rep = verify_second_order_freeness(grid);
    CHECK(rep.failed == 0);
    CHECK(rep.rejected == 0);
    CHECK(rep.passed == static_cast<long>(grid.size()));
    bool saw_unequal = false;
    for (const auto& c : grid) saw_unequal = saw_unequal || c.inner.count() != c.outer.count();
    CHECK(saw_unequal);
}

TEST_CASE("cluster matchings") {
    for (const auto& c : default_freeness_grid()) {
        const auto m = check_matchings(c.inner, c.outer, c.channel);
        CHECK(m.ok());
        if (c.inner.count() != c.outer.count()) CHECK(m.diagrams == 0);
    }
}

TEST_CASE("Monte Carlo agrees with the exact finite-N value") {
    EnsembleSpec spec;
    spec.N = 128;
    spec.gamma = {{1, 0.5}, {2, -0.3}};
    spec.seed = 2718;
    const auto a = cw("x1 s1 | x2 x2");
    const auto b = cw("x1 x1 | x2 s2");
    for (auto ch : {Channel::Complex, Channel::Real}) {
        spec.channel = ch;
        const double exact = exact_centered_cov(a, b, spec);
        const auto est = mc_centered_cov(a, b, spec, 1000);
        CAPTURE(to_string(ch));
        CAPTURE(exact);
        CAPTURE(est.estimate);
        CAPTURE(est.se);
        CHECK(std::abs(est.estimate - cplx(exact)) <= 4 * est.se);
        // limit differs from the finite-N value only at O(1/N)
        CHECK(std::abs(exact - centered_cov_limit(a, b, ch).evaluate({{1, 0.5}, {2, -0.3}})) < 0.1);
    }
}
