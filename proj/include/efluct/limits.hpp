#pragma once

#include "efluct/gamma_poly.hpp"
#include "efluct/pairing.hpp"
#include "efluct/weights.hpp"
#include "efluct/words.hpp"

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace efluct {

/// Two trace words Tr(inner) and Tr(outer), placed on the inner and outer
/// circle of an annulus.
struct WordPair {
    Word inner;
    Word outer;

    AnnularFrame frame() const { return AnnularFrame(static_cast<int>(inner.size()), static_cast<int>(outer.size())); }
    Word joined() const { return concat(inner, outer); }
    bool operator==(const WordPair&) const = default;
};

enum class Family { PurePure, PureAdjoint, Alternating };

const char* to_string(Family f);
Family parse_family(std::string_view text);

// The word pair of a named family. Alternating takes cycle counts: Tr(XX*)^p
// carries 2p letters.
WordPair family_words(Family family, int p, int q);

// lim E tr(word): color-respecting NC_2 sum; zero for odd length.
GammaPoly moment_limit(const Word& word);

// Visits every color-respecting pi in NC_2(p,q) for the pair.
void for_each_annular_diagram(const WordPair& wp, const std::function<void(const Pairing&)>& fn);

// Visits the color-respecting diagrams that are non-crossing for the trace
// permutation with the outer circle reversed (the straight-spoke diagrams of
// the real channel), expressed in the original labeling.
void for_each_outer_reversed_diagram(const WordPair& wp, const std::function<void(const Pairing&)>& fn);

/// Limiting covariance of Tr(inner), Tr(outer) as a diagram sum.
///
/// Complex: sum over NC_2(p,q) of gamma^s.
/// Real: the complex sum plus the spokes-straight term, which is summed over
/// the outer-reversed diagrams with weight gamma^(s + a - 2 s_sp).
GammaPoly cov_limit_semiclosed(const WordPair& wp, Channel channel);

// Closed forms for the three canonical families (zero-binomial convention).
GammaPoly cov_limit_closed(Family family, int p, int q, Channel channel);

std::int64_t catalan(int n);
// FC(a, n) = a/(2n+a) * C(2n+a, n).
std::int64_t fuss_catalan(int a, int n);
// [z^n] C(z)^a for n <= n_max, by truncated series powers of the Catalan
// series (no use of the closed formula).
std::vector<std::int64_t> fuss_catalan_series(int a, int n_max);

enum class ArcFamily { Pure, Alternating };

// gamma^n FC(a, n) for pure arcs, FC(a, n) for alternating arcs.
GammaPoly arc_compression(int a, int n, ArcFamily family);

} // namespace efluct
