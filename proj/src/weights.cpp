#include "efluct/weights.hpp"

#include "efluct/errors.hpp"

namespace efluct {

const char* to_string(Channel c) { return c == Channel::Complex ? "complex" : "real"; }

Channel parse_channel(std::string_view text) {
    if (text == "complex") return Channel::Complex;
    if (text == "real") return Channel::Real;
    throw InputError("unknown channel '" + std::string(text) + "' (expected complex or real)");
}

namespace {

void check_length(const Pairing& pi, std::size_t len) {
    if (static_cast<std::size_t>(pi.size()) != len) throw InputError("word length differs from pairing size");
}

// Product over pairs of gamma_c whenever the pair is "weighted": same-type
// for cross contractions, mixed-type for straight spokes.
GammaPoly weight_product(const Pairing& pi, const Word& word, const AnnularFrame* straight_spokes) {
    std::map<int, int> exps;
    for (auto [x, y] : pi.blocks()) {
        const auto ux = static_cast<std::size_t>(x), uy = static_cast<std::size_t>(y);
        bool same = word.types[ux] == word.types[uy];
        if (straight_spokes && straight_spokes->is_inner(x) != straight_spokes->is_inner(y)) same = !same;
        if (same) ++exps[word.colors[ux]];
    }
    Monomial m(exps.begin(), exps.end());
    return GammaPoly::monomial(1, std::move(m));
}

} // namespace

int same_type_count(const Pairing& pi, const TypeWord& tau) {
    check_length(pi, tau.size());
    int s = 0;
    for (auto [x, y] : pi.blocks())
        if (tau[static_cast<std::size_t>(x)] == tau[static_cast<std::size_t>(y)]) ++s;
    return s;
}

int spoke_type_count(const Pairing& pi, const TypeWord& tau, const AnnularFrame& frame) {
    check_length(pi, tau.size());
    if (pi.size() != frame.total()) throw InputError("spoke_type_count: pairing size differs from p+q");
    int s = 0;
    for (auto [x, y] : pi.blocks())
        if (frame.is_inner(x) != frame.is_inner(y) &&
            tau[static_cast<std::size_t>(x)] == tau[static_cast<std::size_t>(y)])
            ++s;
    return s;
}

GammaPoly cross_weight(const Pairing& pi, const Word& word) {
    check_length(pi, word.size());
    return weight_product(pi, word, nullptr);
}

GammaPoly straight_spoke_weight(const Pairing& pi, const Word& word, const AnnularFrame& frame) {
    check_length(pi, word.size());
    if (pi.size() != frame.total()) throw InputError("pair_weight: pairing size differs from p+q");
    return weight_product(pi, word, &frame);
}

GammaPoly pair_weight(const Pairing& pi, const Word& word, const AnnularFrame& frame, Channel channel) {
    if (pi.size() != frame.total()) throw InputError("pair_weight: pairing size differs from p+q");
    GammaPoly w = cross_weight(pi, word);
    if (channel == Channel::Real) w += straight_spoke_weight(pi, word, frame);
    return w;
}

GammaPoly pair_weight(const Pairing& pi, const TypeWord& tau, const AnnularFrame& frame, Channel channel) {
    return pair_weight(pi, Word(tau), frame, channel);
}

GammaPoly multicolor_arc_weight(const TypeWord& tau, const ColorWord& colors) {
    if (tau.size() != colors.size()) throw InputError("arc weight: type and color words differ in length");
    if (tau.size() % 2 != 0) throw InputError("arc weight needs an even-length word");
    const Word word(tau, colors);
    GammaPoly total;
    for_each_noncrossing_pairing(static_cast<int>(tau.size()), colors,
                                 [&](const Pairing& pi) { total += cross_weight(pi, word); });
    return total;
}

GammaPoly multicolor_arc_weight(const Word& word) { return multicolor_arc_weight(word.types, word.colors); }

GammaPoly arc_weight(const TypeWord& tau) {
    if (tau.size() % 2 != 0) throw InputError("arc weight needs an even-length word");
    return multicolor_arc_weight(tau, ColorWord(tau.size(), kDefaultColor));
}

} // namespace efluct
