#include "efluct/errors.hpp"
#include "efluct/gamma_poly.hpp"
#include "efluct/spoke_arc.hpp"
#include "efluct/weights.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace efluct;

namespace {
const Letter O = Letter::One, S = Letter::Star;
GammaPoly g(int e, std::int64_t c = 1) { return GammaPoly::power(kDefaultColor, e, c); }
} // namespace

TEST_CASE("gamma poly arithmetic") {
    const auto a = g(2, 2) + GammaPoly::constant(1);
    CHECK(a.to_string() == "2*g1^2 + 1");
    CHECK((a - a).is_zero());
    CHECK((a * a).coefficient({{1, 4}}) == 4);
    CHECK((a * a).coefficient({}) == 1);
    CHECK(a.evaluate_uniform(0.5) == doctest::Approx(1.5));
    CHECK(a.evaluate_exact({{1, Rational(1, 3)}}) == Rational(11, 9));
    const auto two = GammaPoly::power(1, 1) * GammaPoly::power(2, 3);
    CHECK(two.to_string() == "g1*g2^3");
    CHECK(two.evaluate({{1, 2.0}, {2, 0.5}}) == doctest::Approx(0.25));
    CHECK(GammaPoly().to_string() == "0");
}

TEST_CASE("word grammar") {
    CHECK(parse_word("xs") == Word({O, S}));
    CHECK(parse_word("x s, x") == Word({O, S, O}));
    const auto w = parse_word("x1 s1 x2 s2");
    CHECK(w.colors == ColorWord{1, 1, 2, 2});
    CHECK(format_word(w) == "x1 s1 x2 s2");
    CHECK(format_word(parse_word("XSX")) == "xsx");
    CHECK_THROWS_AS(parse_word("x y"), InputError);
    try {
        parse_word("xs q");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("position 3") != std::string::npos);
    }
    CHECK(transpose(parse_word("x1 x1 s2")) == parse_word("x2 s1 s1"));
}

TEST_CASE("same-type statistics") {
    const auto p12 = Pairing::from_blocks({{1, 2}});
    CHECK(same_type_count(p12, {O, O}) == 1);
    CHECK(same_type_count(p12, {O, S}) == 0);
    const auto cross = Pairing::from_blocks({{1, 3}, {2, 4}});
    CHECK(same_type_count(cross, {O, O, S, S}) == 0);
    CHECK(spoke_type_count(cross, {O, O, O, O}, AnnularFrame(2, 2)) == 2);
    CHECK(spoke_type_count(cross, {O, O, S, S}, AnnularFrame(2, 2)) == 0);
    const auto fig = Pairing::from_blocks({{1, 5}, {2, 10}, {3, 4}, {6, 9}, {7, 8}});
    CHECK(spoke_type_count(fig, TypeWord(10, O), AnnularFrame(4, 6)) == 2);
    CHECK_THROWS_AS(same_type_count(p12, {O}), InputError);
}

TEST_CASE("pair weights") {
    const auto cross = Pairing::from_blocks({{1, 3}, {2, 4}});
    CHECK(pair_weight(cross, TypeWord{O, O, S, S}, AnnularFrame(2, 2), Channel::Complex) == GammaPoly::constant(1));
    CHECK(pair_weight(cross, TypeWord{O, O, S, S}, AnnularFrame(2, 2), Channel::Real) == GammaPoly::constant(1) + g(2));
    CHECK(pair_weight(Pairing::from_blocks({{1, 2}}), TypeWord{O, O}, AnnularFrame(1, 1), Channel::Real) ==
          g(1) + GammaPoly::constant(1));
    // single color: gamma^s + gamma^(s + a - 2 s_sp)
    std::mt19937_64 rng(3);
    for (int p = 1; p <= 5; ++p)
        for (int q = 1; q <= 5; ++q) {
            if ((p + q) % 2) continue;
            const AnnularFrame f(p, q);
            TypeWord tau(static_cast<std::size_t>(p + q));
            for (auto& t : tau) t = (rng() & 1u) ? S : O;
            for (const auto& pi : enumerate_nc2_annular(f)) {
                const int s = same_type_count(pi, tau), a = spoke_count(pi, f), ssp = spoke_type_count(pi, tau, f);
                CHECK(pair_weight(pi, tau, f, Channel::Real) == g(s) + g(s + a - 2 * ssp));
            }
        }
}

TEST_CASE("arc weights") {
    CHECK(arc_weight({O, O, O, O}) == g(2, 2));
    CHECK(arc_weight({O, S, O, S, O, S}) == GammaPoly::constant(5));
    CHECK(arc_weight({}) == GammaPoly::constant(1));
    CHECK_THROWS_AS(arc_weight({O}), InputError);
    for (int n = 0; n <= 7; ++n) {
        CHECK(arc_weight(TypeWord(static_cast<std::size_t>(2 * n), O)) == g(n, oracle::catalan(n)));
        CHECK(arc_weight(alternating_word(n).types) == GammaPoly::constant(oracle::catalan(n)));
    }
    CHECK(multicolor_arc_weight({O, S}, {1, 1}) == GammaPoly::constant(1));
    CHECK(multicolor_arc_weight({O, O}, {1, 2}).is_zero());
    CHECK(multicolor_arc_weight({O, S, O, S}, {1, 2, 2, 1}) == GammaPoly::constant(1));
    CHECK(multicolor_arc_weight({O, O, S, O}, ColorWord(4, 1)) == arc_weight({O, O, S, O}));
}

TEST_CASE("weight factorization over spokes and arcs") {
    std::mt19937_64 rng(9);
    for (int p = 1; p <= 6; ++p)
        for (int q = 1; p + q <= 10; ++q) {
            if ((p + q) % 2) continue;
            const AnnularFrame f(p, q);
            TypeWord tau(static_cast<std::size_t>(p + q));
            for (auto& t : tau) t = (rng() & 1u) ? S : O;
            for (const auto& pi : enumerate_nc2_annular(f)) {
                const auto cfg = decompose(pi, f);
                int s = spoke_type_count(pi, tau, f);
                for (int r = 0; r < cfg.a; ++r) {
                    const auto ru = static_cast<std::size_t>(r);
                    for (auto [start, len, arc] : {std::tuple{cfg.inner[ru], cfg.inner_arc_lengths[ru], &cfg.inner_pairings[ru]},
                                                   std::tuple{cfg.outer[ru], cfg.outer_arc_lengths[ru], &cfg.outer_pairings[ru]}}) {
                        TypeWord local;
                        int t = start;
                        for (int i = 0; i < len; ++i) local.push_back(tau[static_cast<std::size_t>(t = f.rho_of(t))]);
                        s += same_type_count(*arc, local);
                    }
                }
                CHECK(s == same_type_count(pi, tau));
            }
        }
}
