#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace efluct {

// Permutations are 0-based images: perm[t] is the image of t.
// Composition convention: compose(s, m)[t] = s[m[t]], i.e. (sm)(t) = s(m(t)).
using Permutation = std::vector<int>;

Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation inverse(const Permutation& perm);

// Number of disjoint cycles. Throws InputError if perm is not a bijection.
int cycle_count(std::span<const int> perm);

/// A fixed-point-free involution on {0, ..., n-1}.
///
/// Positions are stored 0-based; the text form and JSON use 1-based labels
/// to match the usual diagram pictures. The empty pairing (n = 0) is allowed
/// so that empty arcs and empty words have a representation.
class Pairing {
public:
    Pairing() = default;
    explicit Pairing(std::vector<int> partner);
    // From 1-based blocks, e.g. {{1,3},{2,4}}.
    static Pairing from_blocks(const std::vector<std::pair<int, int>>& blocks_one_based);

    int size() const { return static_cast<int>(partner_.size()); }
    int partner(int t) const { return partner_[static_cast<std::size_t>(t)]; }
    const std::vector<int>& partners() const { return partner_; }

    // Blocks {x,y} with x < y, ordered by x (0-based).
    std::vector<std::pair<int, int>> blocks() const;
    std::string to_string() const; // "{{1,3},{2,4}}"

    bool operator==(const Pairing&) const = default;
    auto operator<=>(const Pairing&) const = default;

private:
    std::vector<int> partner_;
};

/// Two concentric circles: positions 0..p-1 inner, p..p+q-1 outer.
/// The trace permutation rho = (1..p)(p+1..p+q) is derived from (p, q).
struct AnnularFrame {
    int p = 1;
    int q = 1;

    AnnularFrame() = default;
    AnnularFrame(int inner, int outer);

    int total() const { return p + q; }
    bool is_inner(int t) const { return t < p; }
    Permutation rho() const;
    int rho_of(int t) const { return t < p ? (t + 1) % p : p + (t - p + 1) % q; }
    int rho_inv_of(int t) const { return t < p ? (t + p - 1) % p : p + (t - p + q - 1) % q; }
};

inline constexpr int kDefaultPairingCap = 16;

/// Lazily walks all pairings of {0..n-1} in canonical order: the smallest
/// unpaired point is matched with each larger unpaired point in turn.
/// Each stream owns its state; separate streams may run on separate threads.
class PairingStream {
public:
    explicit PairingStream(int n, int cap = kDefaultPairingCap);
    std::optional<Pairing> next();

private:
    bool advance(std::size_t level);
    bool descend(std::size_t level);

    int n_;
    std::vector<int> partner_;
    std::vector<int> left_;   // smallest free point at each level
    std::vector<int> right_;  // its current mate
    bool started_ = false;
    bool done_ = false;
};

// Callback-style enumeration, same order as PairingStream. If `colors` is
// non-empty only color-respecting pairings are produced.
void for_each_pairing(int n, std::span<const int> colors,
                      const std::function<void(const Pairing&)>& fn,
                      int cap = kDefaultPairingCap);

std::vector<Pairing> enumerate_pairings(int n, int cap = kDefaultPairingCap);

// Non-crossing pairings of a disc of n points, generated directly
// (first point matched with each admissible partner, recursively).
void for_each_noncrossing_pairing(int n, std::span<const int> colors,
                                  const std::function<void(const Pairing&)>& fn);

bool is_noncrossing_disc(const Pairing& pi);

// Connectedness plus #(pi) + #(pi^{-1} rho) = p + q.
bool is_noncrossing_annular(const Pairing& pi, const AnnularFrame& frame);

// Genus-zero test with respect to an arbitrary two-cycle trace permutation
// (used for the outer-reversed orientation).
bool is_noncrossing_annular(const Pairing& pi, const Permutation& trace_perm, int p);

// All of NC_2(p,q) in canonical pairing order; empty for odd p+q.
std::vector<Pairing> enumerate_nc2_annular(const AnnularFrame& frame,
                                           std::span<const int> colors = {});

// Reflection of the outer circle: p+j <-> p+q-1-j. Conjugating a pairing by
// it maps rho-non-crossing diagrams to diagrams non-crossing for the
// outer-reversed trace permutation.
Permutation outer_reflection(const AnnularFrame& frame);
Pairing conjugate(const Pairing& pi, const Permutation& relabel);

// Number of pairs joining the two circles.
int spoke_count(const Pairing& pi, const AnnularFrame& frame);

// Exact binomial; 0 when k < 0 or k > n.
std::int64_t binomial(int n, int k);
// C(n, twice_k / 2), zero when twice_k is odd or negative.
std::int64_t binomial_half(int n, int twice_k);
std::int64_t double_factorial(int n);

// |NC_2(p,q)| by the closed product formula.
std::int64_t nc2_count_closed(int p, int q);
// Same count as a sum over spoke numbers: sum_a a C(p,(p-a)/2) C(q,(q-a)/2).
std::int64_t nc2_count_by_spokes(int p, int q);
// Count with exactly a spokes: a C(p,(p-a)/2) C(q,(q-a)/2).
std::int64_t nc2_count_with_spokes(int p, int q, int a);

} // namespace efluct
