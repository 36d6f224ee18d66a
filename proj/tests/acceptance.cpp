// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "efluct/freeness.hpp"
#include "efluct/limits.hpp"
#include "efluct/sampler.hpp"
#include "efluct/verify.hpp"
#include "efluct/wick.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

using namespace efluct;

namespace {

int failures = 0;

void criterion(int id, const std::string& what, double budget_s, const std::function<std::string(bool&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
        detail = body(ok);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_s) {
        ok = false;
        detail += " [over time budget " + std::to_string(budget_s) + " s]";
    }
    if (!ok) ++failures;
    std::printf("%s  %2d  %-34s %8.2f s  %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), secs, detail.c_str());
    std::fflush(stdout);
}

std::string summary(const SuiteReport& r, bool& ok) {
    ok = ok && r.ok();
    std::string s = std::to_string(r.passed()) + "/" + std::to_string(r.checks.size()) + " checks";
    for (const auto& c : r.checks)
        if (!c.pass) {
            s += "; first failure: " + c.name + " (" + c.detail + ")";
            break;
        }
    return s;
}

struct McCase {
    Family family;
    int p, q;
    Channel channel;
    double gamma;
};

} // namespace

int main() {
    VerifyOptions opt;

    criterion(1, "diagram counts p+q<=14", 10, [&](bool& ok) {
        auto r = verify_counts(opt);
        // spoke-count sum with test-side binomials
        for (int p = 1; p < 14; ++p)
            for (int q = 1; p + q <= 14; ++q) {
                if ((p + q) % 2) continue;
                std::int64_t sum = 0;
                for (int a = 1; a <= std::min(p, q); ++a)
                    if ((p - a) % 2 == 0) sum += a * oracle::choose(p, (p - a) / 2) * oracle::choose(q, (q - a) / 2);
                if (sum != nc2_count_closed(p, q)) r.add("test-side sum", false, std::to_string(p) + "," + std::to_string(q));
            }
        return summary(r, ok);
    });

    criterion(2, "closed vs semi-closed", 30, [&](bool& ok) { return summary(verify_closed_vs_semiclosed(opt), ok); });

    criterion(3, "oracle N^0 agreement", 300, [&](bool& ok) {
        const auto corpus = oracle_corpus(opt.max_letters, opt.corpus_size, opt.corpus_seed);
        if (corpus.size() < 50) ok = false;
        bool two_colors = false, mixed = false;
        for (const auto& wp : corpus) {
            const auto j = wp.joined();
            two_colors = two_colors || !j.single_color();
            for (std::size_t t = 1; t < j.size(); ++t) mixed = mixed || j.types[t] != j.types[0];
            if (j.size() > 10) ok = false;
        }
        ok = ok && two_colors && mixed;
        return std::to_string(corpus.size()) + " word pairs; " + summary(verify_oracle(opt), ok);
    });

    criterion(4, "connectedness identity", 300, [&](bool& ok) { return summary(verify_connectedness(opt), ok); });

    criterion(5, "third cumulants vanish at N^0", 300, [&](bool& ok) {
        const auto systems = cumulant3_corpus(opt.corpus_seed);
        if (systems.size() < 10) ok = false;
        return std::to_string(systems.size()) + " systems; " + summary(verify_cumulant3(opt), ok);
    });

    criterion(6, "Fuss-Catalan series and arcs", 60, [&](bool& ok) { return summary(verify_fuss_catalan(opt), ok); });

    criterion(7, "real = complex + transpose", 60, [&](bool& ok) { return summary(verify_real_transpose(opt), ok); });

    criterion(8, "second-order freeness grid", 120, [&](bool& ok) {
        const auto grid = default_freeness_grid();
        const auto rep = verify_second_order_freeness(grid);
        ok = rep.failed == 0 && rep.rejected == 0 && rep.passed == static_cast<long>(grid.size());
        return std::to_string(rep.passed) + "/" + std::to_string(grid.size()) + " cases agree (centered, S*, rhs)";
    });

    criterion(9, "Monte Carlo vs exact at N=128", 1800, [&](bool& ok) {
        const std::vector<McCase> cases{
            {Family::PurePure, 1, 1, Channel::Complex, 0.5}, {Family::PurePure, 1, 1, Channel::Real, 0.0},
            {Family::PurePure, 2, 2, Channel::Complex, 0.0}, {Family::PurePure, 2, 2, Channel::Real, 0.5},
            {Family::PureAdjoint, 2, 2, Channel::Complex, 0.5}, {Family::Alternating, 1, 1, Channel::Complex, 0.0}};
        std::string out;
        int good = 0;
        for (const auto& c : cases) {
            const auto t0 = std::chrono::steady_clock::now();
            EnsembleSpec spec;
            spec.N = 128;
            spec.default_gamma = c.gamma;
            spec.channel = c.channel;
            spec.seed = 0xacce97;
            const auto wp = family_words(c.family, c.p, c.q);
            const auto est = estimate_cov(spec, wp.inner, wp.outer, 20000);
            const double exact = exact_cov(wp.inner, wp.outer, c.channel).evaluate(128, {}, c.gamma);
            const double dev = std::abs(est.estimate - cplx(exact));
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            const bool pass = dev <= 4 * est.se && est.se <= 0.05 && secs < 300;
            good += pass;
            std::printf("        %-13s (%d,%d) %-7s g=%.1f  est=%.4f exact=%.4f se=%.4f  %s\n", to_string(c.family), c.p,
                        c.q, to_string(c.channel), c.gamma, est.estimate.real(), exact, est.se, pass ? "ok" : "MISS");
        }
        ok = good == static_cast<int>(cases.size());
        out = std::to_string(good) + "/6 cases within 4 SE";
        return out;
    });

    criterion(10, "entry second moments", 60, [&](bool& ok) {
        int good = 0, total = 0;
        std::string miss;
        for (auto ch : {Channel::Complex, Channel::Real})
            for (double g : {-0.9, 0.0, 0.6}) {
                const auto m = entry_moments(g, ch, 100000, 0x5a3e);
                const auto t = entry_targets(g, ch);
                const std::vector<std::tuple<const char*, MeanEstimate, cplx>> stats{
                    {"XijXji", m.offdiag_pair, t.offdiag_pair},
                    {"Xij^2", m.offdiag_square, t.offdiag_square},
                    {"|Xij|^2", m.offdiag_abs2, t.offdiag_abs2},
                    {"Xii^2", m.diag_square, t.diag_square},
                    {"|Xii|^2", m.diag_abs2, t.diag_abs2}};
                for (const auto& [name, est, want] : stats) {
                    ++total;
                    const bool pass = est.samples >= 100000 &&
                                      std::abs(est.mean.real() - want.real()) <= 4 * est.se_re &&
                                      std::abs(est.mean.imag() - want.imag()) <= 4 * est.se_im;
                    good += pass;
                    if (!pass && miss.empty())
                        miss = std::string("; miss ") + name + " " + to_string(ch) + " g=" + std::to_string(g);
                }
            }
        ok = good == total;
        return std::to_string(good) + "/" + std::to_string(total) + " statistics within 4 SE" + miss;
    });

    std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
