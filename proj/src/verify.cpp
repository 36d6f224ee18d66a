#include "efluct/verify.hpp"

#include "efluct/errors.hpp"
#include "efluct/freeness.hpp"
#include "efluct/json_io.hpp"
#include "efluct/spoke_arc.hpp"

#include <chrono>
#include <map>
#include <random>
#include <set>

namespace efluct {

long SuiteReport::passed() const {
    long n = 0;
    for (const auto& c : checks) n += c.pass;
    return n;
}

long SuiteReport::failed() const { return static_cast<long>(checks.size()) - passed(); }

void SuiteReport::add(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
}

namespace {

template <class F>
SuiteReport timed(const std::string& name, F&& body) {
    SuiteReport r;
    r.suite = name;
    const auto t0 = std::chrono::steady_clock::now();
    body(r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string pq(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

std::string label(const WordPair& wp) { return format_word(wp.inner) + " | " + format_word(wp.outer); }

std::string mismatch(const std::string& a, const std::string& b) { return a + " vs " + b; }

} // namespace

std::vector<WordPair> oracle_corpus(int max_letters, int size, std::uint64_t seed) {
    std::vector<WordPair> out;
    auto push = [&](WordPair wp) {
        if (static_cast<int>(wp.inner.size() + wp.outer.size()) <= max_letters) out.push_back(std::move(wp));
    };
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {1, 3}, {3, 3}, {2, 4}, {4, 4}, {5, 3}})
        push(family_words(Family::PurePure, p, q));
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 1}, {3, 3}, {2, 4}})
        push(family_words(Family::PureAdjoint, p, q));
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}})
        push(family_words(Family::Alternating, p, q));
    for (const char* inner : {"x1 s1 x2 s2", "x1 x2", "x1 x1 x2 s2", "x1 s2 s1 x2"})
        for (const char* outer : {"x1 s1 x2 s2", "x2 x1", "s2 x2 s1 x1 x1 x1"})
            push({parse_word(inner), parse_word(outer)});
    push({parse_word("x1 x2 x1"), parse_word("x2")}); // odd total: zero throughout

    std::mt19937_64 rng(seed);
    while (static_cast<int>(out.size()) < size) {
        const int total = 2 + 2 * static_cast<int>(rng() % static_cast<std::uint64_t>(max_letters / 2));
        if (total < 2) continue;
        const int p = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(total - 1));
        const int colors = 1 + static_cast<int>(rng() % 2);
        auto draw = [&](int len) {
            Word w;
            for (int i = 0; i < len; ++i) {
                w.types.push_back((rng() & 1u) ? Letter::Star : Letter::One);
                w.colors.push_back(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(colors)));
            }
            return w;
        };
        WordPair wp{draw(p), draw(total - p)};
        out.push_back(std::move(wp));
    }
    return out;
}

std::vector<TraceWordSystem> cumulant3_corpus(std::uint64_t seed) {
    std::vector<TraceWordSystem> out;
    auto add = [&](std::vector<Word> words) {
        TraceWordSystem s;
        s.words = std::move(words);
        out.push_back(std::move(s));
    };
    add({pure_word(2), pure_word(2), pure_word(2)});
    add({alternating_word(1), alternating_word(1), alternating_word(1)});
    add({pure_word(1), pure_word(1), pure_word(2)});
    add({pure_word(3), pure_word(3), pure_word(2)});
    add({alternating_word(2), alternating_word(1), pure_word(2)});
    add({parse_word("x1 x2"), parse_word("x2 x1"), parse_word("x1 s1 x2 s2")});
    std::mt19937_64 rng(seed);
    while (out.size() < 14) {
        std::vector<Word> words;
        int total = 0;
        for (int r = 0; r < 3; ++r) {
            const int len = 1 + static_cast<int>(rng() % 4);
            Word w;
            for (int i = 0; i < len; ++i) {
                w.types.push_back((rng() & 1u) ? Letter::Star : Letter::One);
                w.colors.push_back(1 + static_cast<int>(rng() % 2));
            }
            total += len;
            words.push_back(std::move(w));
        }
        if (total % 2 != 0 || total > kComplexLetterCap) continue;
        add(std::move(words));
    }
    return out;
}

SuiteReport verify_counts(const VerifyOptions& opt) {
    return timed("counts", [&](SuiteReport& r) {
        for (int n = 2; n <= std::min(opt.max_total, kDefaultPairingCap); n += 2) {
            long c = 0;
            PairingStream s(n);
            while (s.next()) ++c;
            r.add("pairings n=" + std::to_string(n), c == double_factorial(n - 1),
                  std::to_string(c) + " vs " + std::to_string(double_factorial(n - 1)));
        }
        for (int total = 2; total <= opt.max_total; ++total)
            for (int p = 1; p < total; ++p) {
                const int q = total - p;
                const auto diagrams = enumerate_nc2_annular(AnnularFrame(p, q));
                const auto closed = nc2_count_closed(p, q);
                const auto by_spokes = nc2_count_by_spokes(p, q);
                std::map<int, std::int64_t> strata;
                for (const auto& pi : diagrams) ++strata[spoke_count(pi, AnnularFrame(p, q))];
                bool strata_ok = true;
                for (int a = 1; a <= std::min(p, q); ++a) {
                    const auto want = nc2_count_with_spokes(p, q, a);
                    const auto got = strata.count(a) ? strata[a] : 0;
                    std::int64_t fc = 0;
                    // pq/a FC FC is integral but p*q/a alone may not be
                    if ((p - a) % 2 == 0 && (q - a) % 2 == 0)
                        fc = static_cast<std::int64_t>(p) * q * fuss_catalan(a, (p - a) / 2) *
                             fuss_catalan(a, (q - a) / 2) / a;
                    strata_ok = strata_ok && want == got && fc == got;
                }
                const auto n = static_cast<std::int64_t>(diagrams.size());
                r.add("NC2" + pq(p, q), n == closed && (total % 2 != 0 || n == by_spokes) && strata_ok,
                      "enumerated " + std::to_string(n) + ", product formula " + std::to_string(closed) +
                          ", spoke sum " + std::to_string(by_spokes));
            }
    });
}

SuiteReport verify_spoke_arc(const VerifyOptions& opt) {
    return timed("spoke-arc", [&](SuiteReport& r) {
        const int max_total = std::min(opt.max_total, 12);
        std::mt19937_64 rng(opt.corpus_seed);
        for (int total = 2; total <= max_total; total += 2)
            for (int p = 1; p < total; ++p) {
                const int q = total - p;
                const AnnularFrame frame(p, q);
                bool round = true, factor = true, labels = true;
                std::map<std::vector<int>, std::set<std::vector<int>>> inner_lists, outer_lists;
                TypeWord tau(static_cast<std::size_t>(total));
                for (auto& t : tau) t = (rng() & 1u) ? Letter::Star : Letter::One;
                const Word word(tau);
                for (const auto& pi : enumerate_nc2_annular(frame)) {
                    const auto cfg = decompose(pi, frame);
                    round = round && compose(cfg, frame) == pi;
                    for (int k = 0; k < cfg.a; ++k) {
                        const auto rot = rotate(cfg, k);
                        round = round && compose(rot, frame) == pi && decompose(compose(rot, frame), frame) == cfg;
                        inner_lists[rot.inner_arc_lengths].insert(rot.inner);
                        outer_lists[rot.outer_arc_lengths].insert(rot.outer);
                    }
                    // gamma^s = gamma^{s_sp} * prod over arcs of gamma^{s(arc)}
                    int s = spoke_type_count(pi, tau, frame);
                    auto arc_types = [&](int start, int len, bool inner) {
                        TypeWord w;
                        int t = start;
                        for (int i = 0; i < len; ++i) {
                            t = frame.rho_of(t);
                            w.push_back(tau[static_cast<std::size_t>(t)]);
                        }
                        (void)inner;
                        return w;
                    };
                    for (int k = 0; k < cfg.a; ++k) {
                        const auto ku = static_cast<std::size_t>(k);
                        s += same_type_count(cfg.inner_pairings[ku],
                                             arc_types(cfg.inner[ku], cfg.inner_arc_lengths[ku], true));
                        s += same_type_count(cfg.outer_pairings[ku],
                                             arc_types(cfg.outer[ku], cfg.outer_arc_lengths[ku], false));
                    }
                    factor = factor && s == same_type_count(pi, tau);
                }
                for (const auto& [iota, lists] : inner_lists) labels = labels && static_cast<int>(lists.size()) == p;
                for (const auto& [o, lists] : outer_lists) labels = labels && static_cast<int>(lists.size()) == q;
                r.add("bijection" + pq(p, q), round);
                r.add("weight factorization" + pq(p, q), factor, "type word " + format_word(word));
                r.add("labelings" + pq(p, q), labels);
            }
    });
}

SuiteReport verify_closed_vs_semiclosed(const VerifyOptions&) {
    return timed("closed-vs-semiclosed", [&](SuiteReport& r) {
        auto check = [&](Family f, int p, int q) {
            for (auto ch : {Channel::Complex, Channel::Real}) {
                const auto closed = cov_limit_closed(f, p, q, ch);
                const auto semi = cov_limit_semiclosed(family_words(f, p, q), ch);
                r.add(std::string(to_string(f)) + pq(p, q) + " " + to_string(ch), closed == semi,
                      mismatch(closed.to_string(), semi.to_string()));
            }
        };
        for (auto f : {Family::PurePure, Family::PureAdjoint})
            for (int p = 1; p <= 6; ++p)
                for (int q = 1; q <= 6; ++q)
                    if ((p + q) % 2 == 0) check(f, p, q);
        for (int p = 1; p <= 3; ++p)
            for (int q = 1; q <= 3; ++q) check(Family::Alternating, p, q);
        for (int p = 1; p <= 6; ++p) {
            const auto at_one = cov_limit_closed(Family::PurePure, p, p, Channel::Complex).evaluate_uniform(1.0);
            r.add("gamma=1 pure" + pq(p, p), at_one == static_cast<double>(nc2_count_closed(p, p)));
            const auto at_zero = cov_limit_closed(Family::PureAdjoint, p, p, Channel::Complex).evaluate_uniform(0.0);
            r.add("gamma=0 pure-adjoint" + pq(p, p), at_zero == p);
        }
    });
}

SuiteReport verify_oracle(const VerifyOptions& opt) {
    return timed("oracle", [&](SuiteReport& r) {
        const auto corpus = oracle_corpus(opt.max_letters, opt.corpus_size, opt.corpus_seed);
        for (const auto& wp : corpus)
            for (auto ch : {Channel::Complex, Channel::Real}) {
                const auto cum = exact_cov(wp.inner, wp.outer, ch);
                const auto semi = cov_limit_semiclosed(wp, ch);
                bool shape = cum.is_zero() || cum.max_exponent() <= 0;
                if (ch == Channel::Complex)
                    for (const auto& [e, c] : cum.terms()) shape = shape && e % 2 == 0;
                r.add("N^0 " + label(wp) + " " + to_string(ch), cum.coefficient(0) == semi,
                      mismatch(cum.coefficient(0).to_string(), semi.to_string()));
                r.add("exponents " + label(wp) + " " + to_string(ch), shape, cum.to_string());
            }
        std::set<Word> seen;
        for (const auto& wp : corpus)
            for (const auto* w : {&wp.inner, &wp.outer}) {
                if (!seen.insert(*w).second) continue;
                TraceWordSystem s;
                s.words = {*w};
                for (auto ch : {Channel::Complex, Channel::Real}) {
                    s.channel = ch;
                    const auto m = exact_moment(s, true);
                    const auto lim = moment_limit(*w);
                    r.add("first moment " + format_word(*w) + " " + to_string(ch),
                          m.coefficient(0) == lim && (m.is_zero() || m.max_exponent() <= 0),
                          mismatch(m.to_string(), lim.to_string()));
                }
            }
    });
}

SuiteReport verify_connectedness(const VerifyOptions& opt) {
    return timed("connectedness", [&](SuiteReport& r) {
        for (const auto& wp : oracle_corpus(opt.max_letters, opt.corpus_size, opt.corpus_seed))
            for (auto ch : {Channel::Complex, Channel::Real}) {
                TraceWordSystem both, a, b;
                both.channel = a.channel = b.channel = ch;
                both.words = {wp.inner, wp.outer};
                a.words = {wp.inner};
                b.words = {wp.outer};
                const auto lhs = exact_moment(both) - exact_moment(a) * exact_moment(b);
                const auto rhs = connected_only_cov(both);
                r.add(label(wp) + " " + to_string(ch), lhs == rhs, mismatch(lhs.to_string(), rhs.to_string()));
            }
    });
}

SuiteReport verify_cumulant3(const VerifyOptions& opt) {
    return timed("cumulant3", [&](SuiteReport& r) {
        for (const auto& sys : cumulant3_corpus(opt.corpus_seed)) {
            const auto k3 = exact_cumulant(sys);
            bool ok = true;
            for (const auto& [e, c] : k3.terms()) ok = ok && e < 0;
            std::string name;
            for (const auto& w : sys.words) name += (name.empty() ? "" : " | ") + format_word(w);
            r.add("k3 " + name, ok, k3.to_string());
        }
    });
}

SuiteReport verify_fuss_catalan(const VerifyOptions&) {
    return timed("fuss-catalan", [&](SuiteReport& r) {
        for (int a = 1; a <= 6; ++a) {
            const auto series = fuss_catalan_series(a, 10);
            bool ok = true;
            for (int n = 0; n <= 10; ++n) ok = ok && series[static_cast<std::size_t>(n)] == fuss_catalan(a, n);
            r.add("series a=" + std::to_string(a), ok);
        }
        for (int a = 1; a <= 5; ++a)
            for (int n = 0; n <= 5; ++n)
                for (auto fam : {ArcFamily::Pure, ArcFamily::Alternating}) {
                    // all compositions of n into a non-negative parts (arc half-lengths)
                    GammaPoly sum;
                    std::vector<int> parts(static_cast<std::size_t>(a), 0);
                    std::function<void(int, int)> rec = [&](int k, int left) {
                        if (k == a - 1) {
                            parts[static_cast<std::size_t>(k)] = left;
                            GammaPoly prod = GammaPoly::constant(1);
                            for (int h : parts)
                                prod *= fam == ArcFamily::Pure ? arc_weight(pure_word(2 * h).types)
                                                               : arc_weight(alternating_word(h).types);
                            sum += prod;
                            return;
                        }
                        for (int h = 0; h <= left; ++h) {
                            parts[static_cast<std::size_t>(k)] = h;
                            rec(k + 1, left - h);
                        }
                    };
                    rec(0, n);
                    const auto want = arc_compression(a, n, fam);
                    r.add(std::string("arcs ") + (fam == ArcFamily::Pure ? "pure" : "alternating") + " a=" +
                              std::to_string(a) + " n=" + std::to_string(n),
                          sum == want, mismatch(sum.to_string(), want.to_string()));
                }
    });
}

SuiteReport verify_real_transpose(const VerifyOptions& opt) {
    return timed("real-transpose", [&](SuiteReport& r) {
        for (const auto& wp : oracle_corpus(opt.max_letters, opt.corpus_size, opt.corpus_seed)) {
            const auto real = cov_limit_semiclosed(wp, Channel::Real);
            const auto sum = cov_limit_semiclosed(wp, Channel::Complex) +
                             cov_limit_semiclosed({wp.inner, transpose(wp.outer)}, Channel::Complex);
            r.add(label(wp), real == sum, mismatch(real.to_string(), sum.to_string()));
        }
    });
}

SuiteReport verify_freeness(const VerifyOptions&) {
    return timed("freeness", [&](SuiteReport& r) {
        const auto report = verify_second_order_freeness(default_freeness_grid());
        r.add("default grid", report.failed == 0 && report.rejected == 0,
              std::to_string(report.passed) + " pass, " + std::to_string(report.failed) + " fail, " +
                  std::to_string(report.rejected) + " rejected");
        for (const auto& c : report.cases)
            if (c.status != CaseStatus::Pass)
                r.add(format_cluster_word(c.input.inner) + " || " + format_cluster_word(c.input.outer), false,
                      c.note + ": " + c.centered.to_string() + " / " + c.sstar.to_string() + " / " + c.rhs.to_string());
        long diagrams = 0;
        bool order = true;
        for (const auto& c : default_freeness_grid()) {
            const auto m = check_matchings(c.inner, c.outer, c.channel);
            diagrams += m.diagrams;
            order = order && m.ok();
        }
        r.add("cluster matchings reverse (complex) / preserve (transposed)", order,
              std::to_string(diagrams) + " diagrams inspected");
        const auto bad = verify_second_order_freeness({{parse_cluster_word("x1 | x1 s1"), parse_cluster_word("x2 | x1"),
                                                        Channel::Complex}});
        r.add("non-alternating input rejected", bad.rejected == 1);
    });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"counts", "spoke-arc", "closed-vs-semiclosed", "oracle",
                                                "fuss-catalan", "real-transpose", "freeness"};
    return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "all") {
        std::vector<SuiteReport> out;
        for (const auto& n : suite_names())
            for (auto& r : run_suite(n, opt)) out.push_back(std::move(r));
        return out;
    }
    if (name == "counts") return {verify_counts(opt)};
    if (name == "spoke-arc") return {verify_spoke_arc(opt)};
    if (name == "closed-vs-semiclosed") return {verify_closed_vs_semiclosed(opt)};
    if (name == "oracle") return {verify_oracle(opt), verify_connectedness(opt), verify_cumulant3(opt)};
    if (name == "fuss-catalan") return {verify_fuss_catalan(opt)};
    if (name == "real-transpose") return {verify_real_transpose(opt)};
    if (name == "freeness") return {verify_freeness(opt)};
    throw InputError("unknown suite '" + name + "'");
}

nlohmann::ordered_json to_json(const SuiteReport& r) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json item = {{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) item["detail"] = c.detail;
        checks.push_back(item);
    }
    return {{"suite", r.suite},
            {"passed", r.passed()},
            {"failed", r.failed()},
            {"seconds", r.seconds},
            {"checks", checks}};
}

} // namespace efluct
