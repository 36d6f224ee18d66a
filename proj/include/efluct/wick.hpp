#pragma once

#include "efluct/n_expansion.hpp"
#include "efluct/pairing.hpp"
#include "efluct/weights.hpp"
#include "efluct/words.hpp"

#include <map>
#include <vector>

namespace efluct {

inline constexpr int kComplexLetterCap = 12;
inline constexpr int kRealLetterCap = 10;

/// Product of m traces Tr(W_1) ... Tr(W_m) of independent elliptic ensembles,
/// one per color. Colors without an explicit channel use `channel`.
struct TraceWordSystem {
    std::vector<Word> words;
    Channel channel = Channel::Complex;
    std::map<int, Channel> channel_by_color;

    Channel channel_of(int color) const;
    bool any_real() const;
    int total_letters() const;
    // The concatenated trace permutation with one cycle per non-empty word.
    Permutation rho() const;
};

struct OracleCaps {
    int complex_letters = kComplexLetterCap;
    int real_letters = kRealLetterCap;
};

/// E[prod_r Tr W_r] (or prod_r tr W_r when normalized) with letters X/sqrt(N),
/// exact at every N. Empty words contribute Tr(I) = N.
NExpansion exact_moment(const TraceWordSystem& system, bool normalized = false, OracleCaps caps = {});

/// Classical joint cumulant of the m <= 4 traces by Moebius inversion over set
/// partitions of [m].
NExpansion exact_cumulant(const TraceWordSystem& system, bool normalized = false, OracleCaps caps = {});

/// Two-trace covariance as the sum over pairings with at least one pair
/// between the two words.
NExpansion connected_only_cov(const TraceWordSystem& system, OracleCaps caps = {});

// Convenience: exact covariance of Tr(a), Tr(b) in one channel.
NExpansion exact_cov(const Word& a, const Word& b, Channel channel, OracleCaps caps = {});

// All set partitions of {0..m-1} as lists of blocks, restricted growth order.
std::vector<std::vector<std::vector<int>>> set_partitions(int m);

} // namespace efluct
