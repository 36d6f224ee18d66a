#include "efluct/limits.hpp"

#include "efluct/errors.hpp"

#include <algorithm>

namespace efluct {

const char* to_string(Family f) {
    switch (f) {
    case Family::PurePure: return "pure";
    case Family::PureAdjoint: return "pure-adjoint";
    case Family::Alternating: return "alternating";
    }
    return "?";
}

Family parse_family(std::string_view text) {
    if (text == "pure") return Family::PurePure;
    if (text == "pure-adjoint") return Family::PureAdjoint;
    if (text == "alternating") return Family::Alternating;
    throw InputError("unknown family '" + std::string(text) + "'");
}

WordPair family_words(Family family, int p, int q) {
    if (p < 1 || q < 1) throw InputError("family words need p, q >= 1");
    switch (family) {
    case Family::PurePure: return {pure_word(p), pure_word(q)};
    case Family::PureAdjoint: return {pure_word(p), adjoint_word(q)};
    case Family::Alternating: return {alternating_word(p), alternating_word(q)};
    }
    throw InputError("unknown family");
}

GammaPoly moment_limit(const Word& word) {
    if (word.size() % 2 != 0) return {};
    return multicolor_arc_weight(word);
}

void for_each_annular_diagram(const WordPair& wp, const std::function<void(const Pairing&)>& fn) {
    const auto frame = wp.frame();
    const auto joined = wp.joined();
    for (const auto& pi : enumerate_nc2_annular(frame, joined.colors)) fn(pi);
}

void for_each_outer_reversed_diagram(const WordPair& wp, const std::function<void(const Pairing&)>& fn) {
    const auto frame = wp.frame();
    const auto reflect = outer_reflection(frame);
    const auto joined = wp.joined();
    // Colors seen through the reflection: position t of the reflected
    // picture carries the color of reflect(t).
    ColorWord reflected(joined.colors.size());
    for (std::size_t t = 0; t < reflected.size(); ++t)
        reflected[t] = joined.colors[static_cast<std::size_t>(reflect[t])];
    for (const auto& pi : enumerate_nc2_annular(frame, reflected)) fn(conjugate(pi, reflect));
}

GammaPoly cov_limit_semiclosed(const WordPair& wp, Channel channel) {
    GammaPoly total;
    if (wp.inner.empty() || wp.outer.empty()) return total;
    if ((wp.inner.size() + wp.outer.size()) % 2 != 0) return total;
    const auto frame = wp.frame();
    const auto joined = wp.joined();
    for_each_annular_diagram(wp, [&](const Pairing& pi) { total += cross_weight(pi, joined); });
    if (channel == Channel::Real)
        for_each_outer_reversed_diagram(wp, [&](const Pairing& pi) {
            total += straight_spoke_weight(pi, joined, frame);
        });
    return total;
}

GammaPoly cov_limit_closed(Family family, int p, int q, Channel channel) {
    if (p < 1 || q < 1) throw InputError("closed covariance needs p, q >= 1");
    const int g = kDefaultColor;
    GammaPoly total;
    for (int a = 1; a <= std::min(p, q); ++a) {
        GammaPoly term;
        switch (family) {
        case Family::PurePure: {
            const auto count = a * binomial_half(p, p - a) * binomial_half(q, q - a);
            if (count == 0) continue;
            const int half = (p + q) / 2;
            if (channel == Channel::Complex)
                term = GammaPoly::power(g, half, count);
            else
                term = GammaPoly::power(g, half - a, count) * (GammaPoly::power(g, a) + GammaPoly::constant(1));
            break;
        }
        case Family::PureAdjoint: {
            const auto count = a * binomial_half(p, p - a) * binomial_half(q, q - a);
            if (count == 0) continue;
            const int half = (p + q) / 2;
            term = GammaPoly::power(g, half - a, count);
            if (channel == Channel::Real) term *= GammaPoly::power(g, a) + GammaPoly::constant(1);
            break;
        }
        case Family::Alternating: {
            const auto count = a * binomial(2 * p, p - a) * binomial(2 * q, q - a) * (channel == Channel::Real ? 2 : 1);
            if (count == 0) continue;
            term = (GammaPoly::power(g, 2 * a) + GammaPoly::constant(1)) * count;
            break;
        }
        }
        total += term;
    }
    return total;
}

std::int64_t fuss_catalan(int a, int n) {
    if (a < 1 || n < 0) throw InputError("fuss_catalan needs a >= 1 and n >= 0");
    const auto top = static_cast<__int128>(a) * binomial(2 * n + a, n);
    return static_cast<std::int64_t>(top / (2 * n + a));
}

std::int64_t catalan(int n) { return fuss_catalan(1, n); }

std::vector<std::int64_t> fuss_catalan_series(int a, int n_max) {
    if (a < 1 || n_max < 0) throw InputError("fuss_catalan_series needs a >= 1 and n_max >= 0");
    const auto len = static_cast<std::size_t>(n_max + 1);
    // Catalan series from C(z) = 1 + z C(z)^2.
    std::vector<std::int64_t> cat(len, 0);
    cat[0] = 1;
    for (std::size_t n = 1; n < len; ++n)
        for (std::size_t k = 0; k < n; ++k) cat[n] += cat[k] * cat[n - 1 - k];
    std::vector<std::int64_t> power(len, 0);
    power[0] = 1;
    for (int r = 0; r < a; ++r) {
        std::vector<std::int64_t> next(len, 0);
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = 0; i + j < len; ++j) next[i + j] += power[i] * cat[j];
        power = std::move(next);
    }
    return power;
}

GammaPoly arc_compression(int a, int n, ArcFamily family) {
    const auto fc = fuss_catalan(a, n);
    return family == ArcFamily::Pure ? GammaPoly::power(kDefaultColor, n, fc) : GammaPoly::constant(fc);
}

} // namespace efluct
