#include "efluct/errors.hpp"
#include "efluct/sampler.hpp"
#include "efluct/wick.hpp"

#include <doctest.h>

using namespace efluct;

TEST_CASE("construction edge cases") {
    Rng rng = replicate_stream(1, 0);
    const Matrix herm = sample_elliptic(16, 1.0, Channel::Complex, rng);
    for (int i = 0; i < 16; ++i)
        for (int j = i + 1; j < 16; ++j) CHECK(herm(j, i) == std::conj(herm(i, j)));
    const Matrix sym = sample_elliptic(16, 1.0, Channel::Real, rng);
    CHECK((sym - sym.transpose()).norm() == 0.0);
    CHECK(sym.imag().norm() == 0.0);
    CHECK_THROWS_AS(sample_elliptic(4, 1.5, Channel::Real, rng), InputError);
}

TEST_CASE("Ginibre pair correlation vanishes") {
    const auto m = entry_moments(0.0, Channel::Complex, 20000, 77);
    CHECK(std::abs(m.offdiag_pair.mean.real()) <= 4 * m.offdiag_pair.se_re);
    CHECK(std::abs(m.offdiag_pair.mean.imag()) <= 4 * m.offdiag_pair.se_im);
}

TEST_CASE("real diagonal variance") {
    for (double g : {-0.5, 0.3}) {
        const auto m = entry_moments(g, Channel::Real, 20000, 78);
        CHECK(std::abs(m.diag_square.mean.real() - (1 + g)) <= 4 * m.diag_square.se_re);
    }
}

TEST_CASE("trace words") {
    Rng rng = replicate_stream(5, 0);
    MatrixSet mats{{1, sample_elliptic(8, 0.4, Channel::Complex, rng)}};
    const auto xs = evaluate_trace_word(mats, parse_word("xs"), true);
    CHECK(xs.real() >= 0);
    CHECK(std::abs(xs.imag()) < 1e-12);
    CHECK(evaluate_trace_word(mats, Word(), false) == cplx(8.0));
    CHECK(evaluate_trace_word(mats, Word(), true) == cplx(1.0));
    const Matrix& x = mats.at(1);
    const cplx direct = (x * x.adjoint() * x).trace() / std::pow(8.0, 1.5);
    CHECK(std::abs(evaluate_trace_word(mats, parse_word("x s x")) - direct) < 1e-12);
    CHECK_THROWS_AS(evaluate_trace_word(mats, parse_word("x2")), InputError);
}

TEST_CASE("normalized second moment at N=128") {
    EnsembleSpec spec;
    spec.N = 128;
    spec.default_gamma = 0.7;
    std::vector<cplx> v;
    for (int r = 0; r < 10000; ++r) {
        Rng rng = replicate_stream(99, static_cast<std::uint64_t>(r));
        const auto mats = sample_family(spec, {1}, rng);
        v.push_back(evaluate_trace_word(mats, pure_word(2), true));
    }
    cplx mean = 0;
    for (auto z : v) mean += z;
    mean /= static_cast<double>(v.size());
    double var = 0;
    for (auto z : v) var += std::norm(z - mean);
    const double se = std::sqrt(var / static_cast<double>(v.size() - 1) / static_cast<double>(v.size()));
    // E tr X^2 = gamma exactly at every N
    TraceWordSystem s;
    s.words = {pure_word(2)};
    const double exact = exact_moment(s, true).evaluate(128, {}, 0.7);
    CHECK(exact == doctest::Approx(0.7));
    CHECK(std::abs(mean - cplx(exact)) <= 4 * se);
}

TEST_CASE("covariance estimates") {
    EnsembleSpec spec;
    spec.N = 24;
    spec.default_gamma = 0.5;
    spec.seed = 4;
    const auto c = estimate_cov(spec, pure_word(1), pure_word(1), 4000);
    CHECK(std::abs(c.estimate - cplx(0.5)) <= 4 * c.se);
    spec.channel = Channel::Real;
    spec.default_gamma = 0.3;
    const auto r = estimate_cov(spec, pure_word(1), pure_word(1), 4000);
    CHECK(std::abs(r.estimate - cplx(1.3)) <= 4 * r.se);
    CHECK(r.reps == 4000);
    CHECK(r.se > 0);
}

TEST_CASE("determinism across threads") {
    EnsembleSpec spec;
    spec.N = 16;
    spec.default_gamma = 0.2;
    spec.seed = 123;
    const auto a = estimate_cov(spec, parse_word("xs"), parse_word("xx"), 400);
    spec.threads = 3;
    const auto b = estimate_cov(spec, parse_word("xs"), parse_word("xx"), 400);
    CHECK(a.estimate == b.estimate);
    CHECK(a.se == b.se);
    spec.seed = 124;
    CHECK(estimate_cov(spec, parse_word("xs"), parse_word("xx"), 400).estimate != a.estimate);
}
