#include "efluct/freeness.hpp"

#include "efluct/errors.hpp"
#include "efluct/wick.hpp"

#include <cctype>
#include <set>

namespace efluct {

Word ClusterWord::flatten() const { return flatten_without(0); }

Word ClusterWord::flatten_without(unsigned drop) const {
    Word w;
    for (std::size_t k = 0; k < clusters.size(); ++k) {
        if ((drop >> k) & 1u) continue;
        const auto& c = clusters[k];
        w.types.insert(w.types.end(), c.types.begin(), c.types.end());
        w.colors.insert(w.colors.end(), c.types.size(), c.color);
    }
    return w;
}

bool ClusterWord::cyclically_alternating() const {
    if (clusters.empty()) return false;
    for (const auto& c : clusters)
        if (c.types.empty()) return false;
    if (clusters.size() == 1) return true;
    for (std::size_t k = 0; k < clusters.size(); ++k)
        if (clusters[k].color == clusters[(k + 1) % clusters.size()].color) return false;
    return true;
}

ClusterWord parse_cluster_word(std::string_view text) {
    ClusterWord cw;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto bar = text.find('|', start);
        const auto piece = text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
        const Word w = parse_word(piece);
        if (w.empty()) throw InputError("empty cluster at position " + std::to_string(start));
        if (!w.single_color()) throw InputError("cluster '" + std::string(piece) + "' mixes colors");
        cw.clusters.push_back({w.colors.front(), w.types});
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return cw;
}

std::string format_cluster_word(const ClusterWord& cw) {
    std::string out;
    for (const auto& c : cw.clusters) {
        if (!out.empty()) out += " | ";
        for (std::size_t t = 0; t < c.types.size(); ++t) {
            if (t) out += ' ';
            out += c.types[t] == Letter::One ? 'x' : 's';
            out += std::to_string(c.color);
        }
    }
    return out;
}

Cluster transpose(const Cluster& c) { return {c.color, transpose(c.types)}; }

GammaPoly cluster_mean(const Cluster& c) { return moment_limit(c.word()); }

namespace {

void require_alternating(const ClusterWord& inner, const ClusterWord& outer) {
    if (!inner.cyclically_alternating())
        throw InputError("inner word '" + format_cluster_word(inner) + "' is not cyclically alternating");
    if (!outer.cyclically_alternating())
        throw InputError("outer word '" + format_cluster_word(outer) + "' is not cyclically alternating");
    if (inner.count() + outer.count() > 16) throw InputError("too many clusters");
}

// Cluster index of every letter of the joined word (inner clusters first).
std::vector<int> cluster_of_letters(const ClusterWord& inner, const ClusterWord& outer) {
    std::vector<int> owner;
    int k = 0;
    for (const auto* cw : {&inner, &outer})
        for (const auto& c : cw->clusters) {
            owner.insert(owner.end(), c.types.size(), k);
            ++k;
        }
    return owner;
}

bool every_cluster_external(const Pairing& pi, const std::vector<int>& owner, int clusters) {
    std::vector<char> seen(static_cast<std::size_t>(clusters), 0);
    for (int t = 0; t < pi.size(); ++t) {
        const int k = owner[static_cast<std::size_t>(t)];
        if (owner[static_cast<std::size_t>(pi.partner(t))] != k) seen[static_cast<std::size_t>(k)] = 1;
    }
    for (char s : seen)
        if (!s) return false;
    return true;
}

GammaPoly centered_phi(const Cluster& a, const Cluster& b) {
    return moment_limit(concat(a.word(), b.word())) - cluster_mean(a) * cluster_mean(b);
}

} // namespace

GammaPoly centered_cov_limit(const ClusterWord& inner, const ClusterWord& outer, Channel channel) {
    require_alternating(inner, outer);
    const auto p = inner.count(), q = outer.count();
    std::vector<GammaPoly> means;
    for (const auto* cw : {&inner, &outer})
        for (const auto& c : cw->clusters) means.push_back(cluster_mean(c));
    GammaPoly total;
    const unsigned all = 1u << (p + q);
    for (unsigned m = 0; m < all; ++m) {
        const unsigned drop_inner = m & ((1u << p) - 1u);
        const unsigned drop_outer = m >> p;
        if (drop_inner == (1u << p) - 1u || drop_outer == (1u << q) - 1u) continue; // Tr(I) is constant
        GammaPoly coeff = GammaPoly::constant(1);
        int size = 0;
        for (std::size_t t = 0; t < p + q; ++t)
            if ((m >> t) & 1u) {
                coeff *= means[t];
                ++size;
            }
        if (coeff.is_zero()) continue;
        if (size % 2) coeff = -coeff;
        const WordPair wp{inner.flatten_without(drop_inner), outer.flatten_without(drop_outer)};
        total += coeff * cov_limit_semiclosed(wp, channel);
    }
    return total;
}

GammaPoly sstar_cov_limit(const ClusterWord& inner, const ClusterWord& outer, Channel channel) {
    require_alternating(inner, outer);
    const WordPair wp{inner.flatten(), outer.flatten()};
    const auto owner = cluster_of_letters(inner, outer);
    const int clusters = static_cast<int>(inner.count() + outer.count());
    const auto frame = wp.frame();
    const auto joined = wp.joined();
    GammaPoly total;
    for_each_annular_diagram(wp, [&](const Pairing& pi) {
        if (every_cluster_external(pi, owner, clusters)) total += cross_weight(pi, joined);
    });
    if (channel == Channel::Real)
        for_each_outer_reversed_diagram(wp, [&](const Pairing& pi) {
            if (every_cluster_external(pi, owner, clusters)) total += straight_spoke_weight(pi, joined, frame);
        });
    return total;
}

GammaPoly second_order_rhs(const ClusterWord& inner, const ClusterWord& outer, Channel channel) {
    require_alternating(inner, outer);
    const auto p = inner.count();
    if (p != outer.count()) return {};
    const auto ip = static_cast<int>(p);
    auto mod = [ip](int x) { return static_cast<std::size_t>(((x % ip) + ip) % ip); };
    GammaPoly total;
    for (int k = 0; k < ip; ++k) {
        GammaPoly prod = GammaPoly::constant(1);
        for (int i = 0; i < ip && !prod.is_zero(); ++i)
            prod *= centered_phi(inner.clusters[static_cast<std::size_t>(i)], outer.clusters[mod(k - i)]);
        total += prod;
    }
    if (channel == Channel::Real)
        for (int k = 0; k < ip; ++k) {
            GammaPoly prod = GammaPoly::constant(1);
            for (int i = 0; i < ip && !prod.is_zero(); ++i)
                prod *= centered_phi(inner.clusters[static_cast<std::size_t>(i)], transpose(outer.clusters[mod(k + i)]));
            total += prod;
        }
    return total;
}

std::optional<std::vector<int>> induced_matching(const Pairing& pi, const ClusterWord& inner,
                                                 const ClusterWord& outer) {
    const auto owner = cluster_of_letters(inner, outer);
    const int p = static_cast<int>(inner.count());
    std::vector<std::set<int>> partners(static_cast<std::size_t>(p));
    for (int t = 0; t < pi.size(); ++t) {
        const int k = owner[static_cast<std::size_t>(t)];
        if (k >= p) continue;
        const int l = owner[static_cast<std::size_t>(pi.partner(t))];
        if (l != k) partners[static_cast<std::size_t>(k)].insert(l);
    }
    std::vector<int> sigma;
    for (const auto& s : partners) {
        if (s.size() != 1 || *s.begin() < p) return std::nullopt;
        sigma.push_back(*s.begin() - p);
    }
    return sigma;
}

MatchingCheck check_matchings(const ClusterWord& inner, const ClusterWord& outer, Channel channel) {
    require_alternating(inner, outer);
    const WordPair wp{inner.flatten(), outer.flatten()};
    const auto owner = cluster_of_letters(inner, outer);
    const int clusters = static_cast<int>(inner.count() + outer.count());
    const int p = static_cast<int>(inner.count());
    const int q = static_cast<int>(outer.count());
    MatchingCheck check;
    auto shifts_by = [&](const std::vector<int>& sigma, int step) {
        if (p != q) return false;
        for (int k = 0; k < p; ++k)
            if (sigma[static_cast<std::size_t>((k + 1) % p)] != ((sigma[static_cast<std::size_t>(k)] + step) % q + q) % q)
                return false;
        return true;
    };
    auto inspect = [&](const Pairing& pi, int step, long& counter) {
        if (!every_cluster_external(pi, owner, clusters)) return;
        ++check.diagrams;
        auto sigma = induced_matching(pi, inner, outer);
        if (sigma && shifts_by(*sigma, step)) ++counter;
    };
    for_each_annular_diagram(wp, [&](const Pairing& pi) { inspect(pi, -1, check.reversing); });
    if (channel == Channel::Real)
        for_each_outer_reversed_diagram(wp, [&](const Pairing& pi) { inspect(pi, +1, check.preserving); });
    return check;
}

std::vector<FreenessCase> default_freeness_grid() {
    const std::vector<TypeWord> shapes{{Letter::One}, {Letter::One, Letter::One}, {Letter::One, Letter::Star}};
    std::vector<FreenessCase> grid;
    auto build = [&](const std::vector<int>& colors, const std::vector<std::size_t>& pick) {
        ClusterWord cw;
        for (std::size_t k = 0; k < colors.size(); ++k) cw.clusters.push_back({colors[k], shapes[pick[k]]});
        return cw;
    };
    // All shape assignments for a list of colors.
    auto all_words = [&](const std::vector<int>& colors) {
        std::vector<ClusterWord> out;
        std::vector<std::size_t> pick(colors.size(), 0);
        while (true) {
            out.push_back(build(colors, pick));
            std::size_t k = 0;
            while (k < pick.size() && ++pick[k] == shapes.size()) pick[k++] = 0;
            if (k == pick.size()) break;
        }
        return out;
    };
    for (auto channel : {Channel::Complex, Channel::Real}) {
        for (const auto& outer_colors : std::vector<std::vector<int>>{{1, 2}, {2, 1}})
            for (const auto& a : all_words({1, 2}))
                for (const auto& b : all_words(outer_colors)) grid.push_back({a, b, channel});
        for (const auto& outer_colors : std::vector<std::vector<int>>{{1, 2, 3}, {3, 2, 1}})
            for (const auto& a : all_words({1, 2, 3}))
                for (const auto& b : all_words(outer_colors)) grid.push_back({a, b, channel});
        // p != q
        for (const auto& a : all_words({1, 2}))
            for (const auto& b : std::vector<ClusterWord>{build({1, 2, 1, 2}, {2, 2, 2, 2}), build({2, 1, 2, 1}, {1, 2, 0, 2}),
                                                          build({1, 2, 1, 2}, {0, 0, 2, 2})})
                grid.push_back({a, b, channel});
        for (const auto& a : std::vector<ClusterWord>{build({1}, {2}), build({2}, {1})})
            for (const auto& b : all_words({1, 2})) grid.push_back({a, b, channel});
    }
    return grid;
}

FreenessReport verify_second_order_freeness(const std::vector<FreenessCase>& grid) {
    FreenessReport report;
    for (const auto& c : grid) {
        FreenessResult r;
        r.input = c;
        try {
            r.centered = centered_cov_limit(c.inner, c.outer, c.channel);
            r.sstar = sstar_cov_limit(c.inner, c.outer, c.channel);
            r.rhs = second_order_rhs(c.inner, c.outer, c.channel);
            r.status = (r.centered == r.sstar && r.sstar == r.rhs) ? CaseStatus::Pass : CaseStatus::Fail;
            if (r.status == CaseStatus::Fail) r.note = "polynomials differ";
        } catch (const InputError& e) {
            r.status = CaseStatus::Rejected;
            r.note = e.what();
        }
        switch (r.status) {
        case CaseStatus::Pass: ++report.passed; break;
        case CaseStatus::Fail: ++report.failed; break;
        case CaseStatus::Rejected: ++report.rejected; break;
        }
        report.cases.push_back(std::move(r));
    }
    return report;
}

namespace {

TraceWordSystem system_of(std::vector<Word> words, Channel channel) {
    TraceWordSystem s;
    s.words = std::move(words);
    s.channel = channel;
    return s;
}

std::vector<double> exact_means(const ClusterWord& inner, const ClusterWord& outer, const EnsembleSpec& spec) {
    std::vector<double> out;
    for (const auto* cw : {&inner, &outer})
        for (const auto& c : cw->clusters)
            out.push_back(exact_moment(system_of({c.word()}, spec.channel), true)
                              .evaluate(spec.N, spec.gamma, spec.default_gamma));
    return out;
}

} // namespace

double exact_centered_cov(const ClusterWord& inner, const ClusterWord& outer, const EnsembleSpec& spec) {
    spec.validate();
    const auto p = inner.count(), q = outer.count();
    const auto means = exact_means(inner, outer, spec);
    double total = 0.0;
    const unsigned all = 1u << (p + q);
    for (unsigned m = 0; m < all; ++m) {
        const unsigned drop_inner = m & ((1u << p) - 1u);
        const unsigned drop_outer = m >> p;
        if (drop_inner == (1u << p) - 1u || drop_outer == (1u << q) - 1u) continue;
        double coeff = 1.0;
        int size = 0;
        for (std::size_t t = 0; t < p + q; ++t)
            if ((m >> t) & 1u) {
                coeff *= means[t];
                ++size;
            }
        if (coeff == 0.0) continue;
        if (size % 2) coeff = -coeff;
        const auto cov = exact_cumulant(
            system_of({inner.flatten_without(drop_inner), outer.flatten_without(drop_outer)}, spec.channel));
        total += coeff * cov.evaluate(spec.N, spec.gamma, spec.default_gamma);
    }
    return total;
}

CovEstimate mc_centered_cov(const ClusterWord& inner, const ClusterWord& outer, const EnsembleSpec& spec, int reps) {
    const auto means = exact_means(inner, outer, spec);
    std::vector<int> colors;
    for (const auto* cw : {&inner, &outer})
        for (const auto& c : cw->clusters) colors.push_back(c.color);
    const double scale = 1.0 / std::sqrt(static_cast<double>(spec.N));
    auto centered_trace = [&](const MatrixSet& mats, const ClusterWord& cw, std::size_t offset) {
        Matrix prod;
        for (std::size_t k = 0; k < cw.count(); ++k) {
            const auto& c = cw.clusters[k];
            const Matrix& x = mats.at(c.color);
            Matrix y;
            for (std::size_t t = 0; t < c.types.size(); ++t) {
                Matrix f = c.types[t] == Letter::One ? Matrix(x * scale) : Matrix(x.adjoint() * scale);
                y = t == 0 ? std::move(f) : Matrix(y * f);
            }
            y.diagonal().array() -= means[offset + k];
            if (k + 1 == cw.count()) return k == 0 ? y.trace() : cplx(prod.cwiseProduct(y.transpose()).sum());
            prod = k == 0 ? std::move(y) : Matrix(prod * y);
        }
        return cplx(0.0);
    };
    return estimate_cov_generic(spec, reps, [&](Rng& rng) {
        const auto mats = sample_family(spec, colors, rng);
        return std::make_pair(centered_trace(mats, inner, 0), centered_trace(mats, outer, inner.count()));
    });
}

} // namespace efluct
