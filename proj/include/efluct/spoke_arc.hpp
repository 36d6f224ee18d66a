#pragma once

#include "efluct/pairing.hpp"

#include <vector>

namespace efluct {

/// Labeled spoke-arc configuration of an annular non-crossing pairing.
///
/// Spoke r joins inner[r] to outer[r] (0-based positions in the frame).
/// Arc r on each circle is the run of points that follows the r-th spoke
/// endpoint in trace order up to the next spoke endpoint on that circle:
/// after inner[r] that is inner[r+1]; after outer[r] it is outer[r-1], since
/// non-crossing spokes meet the outer circle in reversed cyclic order.
/// Arc pairings are relabeled to 0..len-1 in trace order.
///
/// Canonical representative of the Z_a orbit: inner[0] is the smallest inner
/// spoke endpoint.
struct SpokeArcConfig {
    int a = 0;
    std::vector<int> inner;            // U
    std::vector<int> outer;            // V
    std::vector<int> inner_arc_lengths; // iota, sums to p - a
    std::vector<int> outer_arc_lengths; // o, sums to q - a
    std::vector<Pairing> inner_pairings;
    std::vector<Pairing> outer_pairings;

    bool operator==(const SpokeArcConfig&) const = default;
};

// Throws InputError unless pi is in NC_2(p,q).
SpokeArcConfig decompose(const Pairing& pi, const AnnularFrame& frame);

// Inverse of decompose. Accepts any simultaneous rotation of the spoke
// labels; throws InputError on inconsistent endpoints, lengths or pairings.
Pairing compose(const SpokeArcConfig& cfg, const AnnularFrame& frame);

// Simultaneous cyclic relabeling of the spokes by `shift`.
SpokeArcConfig rotate(const SpokeArcConfig& cfg, int shift);

} // namespace efluct
