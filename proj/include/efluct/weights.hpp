#pragma once

#include "efluct/gamma_poly.hpp"
#include "efluct/pairing.hpp"
#include "efluct/words.hpp"

namespace efluct {

enum class Channel { Complex, Real };

const char* to_string(Channel c);
Channel parse_channel(std::string_view text);

// s(pi; tau): pairs whose endpoints carry equal types.
int same_type_count(const Pairing& pi, const TypeWord& tau);

// s_sp(pi; tau): spokes whose endpoints carry equal types.
int spoke_type_count(const Pairing& pi, const TypeWord& tau, const AnnularFrame& frame);

/// Weight of one diagram.
///
/// Complex: product over pairs of gamma_c for same-type pairs.
/// Real: the complex weight plus the spokes-straight weight, in which a spoke
/// contributes gamma_c when its endpoints have *different* types while arc
/// pairs keep the complex rule. For one color this is
/// gamma^s + gamma^(s + a - 2 s_sp).
GammaPoly pair_weight(const Pairing& pi, const Word& word, const AnnularFrame& frame, Channel channel);
GammaPoly pair_weight(const Pairing& pi, const TypeWord& tau, const AnnularFrame& frame, Channel channel);

// Only the spokes-straight / arcs-cross term of the real weight.
GammaPoly straight_spoke_weight(const Pairing& pi, const Word& word, const AnnularFrame& frame);
// Only the all-cross term (identical to the complex weight).
GammaPoly cross_weight(const Pairing& pi, const Word& word);

// F(tau): sum over NC_2(|tau|) of gamma^s. Throws on odd length.
GammaPoly arc_weight(const TypeWord& tau);

// F_c(tau): color-respecting non-crossing pairings, gamma_c per same-type pair.
GammaPoly multicolor_arc_weight(const TypeWord& tau, const ColorWord& colors);
GammaPoly multicolor_arc_weight(const Word& word);

} // namespace efluct
