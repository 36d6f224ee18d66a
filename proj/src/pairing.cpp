#include "efluct/pairing.hpp"

#include "efluct/errors.hpp"

#include <algorithm>
#include <sstream>

namespace efluct {

Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.size() != inner.size()) throw InputError("compose: size mismatch");
    Permutation out(inner.size());
    for (std::size_t t = 0; t < inner.size(); ++t) out[t] = outer[static_cast<std::size_t>(inner[t])];
    return out;
}

Permutation inverse(const Permutation& perm) {
    Permutation inv(perm.size());
    for (std::size_t t = 0; t < perm.size(); ++t) inv[static_cast<std::size_t>(perm[t])] = static_cast<int>(t);
    return inv;
}

int cycle_count(std::span<const int> perm) {
    const auto n = perm.size();
    std::vector<char> hit(n, 0);
    for (int v : perm) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || hit[static_cast<std::size_t>(v)])
            throw InputError("cycle_count: input is not a bijection");
        hit[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<char> seen(n, 0);
    int cycles = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (auto t = s; !seen[t]; t = static_cast<std::size_t>(perm[t])) seen[t] = 1;
    }
    return cycles;
}

Pairing::Pairing(std::vector<int> partner) : partner_(std::move(partner)) {
    const int n = size();
    if (n % 2 != 0) throw InputError("pairing must have an even number of points");
    for (int t = 0; t < n; ++t) {
        const int u = partner_[static_cast<std::size_t>(t)];
        if (u < 0 || u >= n || u == t || partner_[static_cast<std::size_t>(u)] != t)
            throw InputError("pairing must be a fixed-point-free involution");
    }
}

Pairing Pairing::from_blocks(const std::vector<std::pair<int, int>>& blocks_one_based) {
    std::vector<int> partner(blocks_one_based.size() * 2, -1);
    for (auto [x, y] : blocks_one_based) {
        const int a = x - 1, b = y - 1;
        if (a < 0 || b < 0 || a >= static_cast<int>(partner.size()) || b >= static_cast<int>(partner.size()))
            throw InputError("pairing block out of range");
        if (partner[static_cast<std::size_t>(a)] != -1 || partner[static_cast<std::size_t>(b)] != -1)
            throw InputError("pairing blocks overlap");
        partner[static_cast<std::size_t>(a)] = b;
        partner[static_cast<std::size_t>(b)] = a;
    }
    return Pairing(std::move(partner));
}

std::vector<std::pair<int, int>> Pairing::blocks() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(partner_.size() / 2);
    for (int t = 0; t < size(); ++t)
        if (t < partner(t)) out.emplace_back(t, partner(t));
    return out;
}

std::string Pairing::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto [x, y] : blocks()) {
        if (!first) os << ',';
        first = false;
        os << '{' << x + 1 << ',' << y + 1 << '}';
    }
    os << '}';
    return os.str();
}

AnnularFrame::AnnularFrame(int inner, int outer) : p(inner), q(outer) {
    if (p < 1 || q < 1) throw InputError("annular frame needs p >= 1 and q >= 1");
}

Permutation AnnularFrame::rho() const {
    Permutation r(static_cast<std::size_t>(total()));
    for (int t = 0; t < total(); ++t) r[static_cast<std::size_t>(t)] = rho_of(t);
    return r;
}

// ---------------------------------------------------------------------------

PairingStream::PairingStream(int n, int cap) : n_(n) {
    if (n < 0 || n % 2 != 0) throw InputError("enumerate_pairings: n must be even and non-negative");
    if (n > cap) throw InputError("enumerate_pairings: n exceeds cap " + std::to_string(cap));
    partner_.assign(static_cast<std::size_t>(n), -1);
    left_.assign(static_cast<std::size_t>(n / 2), -1);
    right_.assign(static_cast<std::size_t>(n / 2), -1);
}

bool PairingStream::descend(std::size_t level) {
    for (auto l = level; l < left_.size(); ++l) {
        int a = 0;
        while (partner_[static_cast<std::size_t>(a)] != -1) ++a;
        int b = a + 1;
        while (partner_[static_cast<std::size_t>(b)] != -1) ++b;
        left_[l] = a;
        right_[l] = b;
        partner_[static_cast<std::size_t>(a)] = b;
        partner_[static_cast<std::size_t>(b)] = a;
    }
    return true;
}

bool PairingStream::advance(std::size_t level) {
    for (auto l = level + 1; l-- > 0;) {
        const int a = left_[l];
        int b = right_[l];
        partner_[static_cast<std::size_t>(a)] = -1;
        partner_[static_cast<std::size_t>(b)] = -1;
        for (++b; b < n_ && partner_[static_cast<std::size_t>(b)] != -1; ++b) {}
        if (b < n_) {
            right_[l] = b;
            partner_[static_cast<std::size_t>(a)] = b;
            partner_[static_cast<std::size_t>(b)] = a;
            return descend(l + 1);
        }
    }
    return false;
}

std::optional<Pairing> PairingStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        descend(0);
    } else if (left_.empty() || !advance(left_.size() - 1)) {
        done_ = true;
        return std::nullopt;
    }
    return Pairing(partner_);
}

namespace {

void pair_recursive(std::vector<int>& partner, std::span<const int> colors,
                    const std::function<void(const Pairing&)>& fn) {
    const int n = static_cast<int>(partner.size());
    int a = 0;
    while (a < n && partner[static_cast<std::size_t>(a)] != -1) ++a;
    if (a == n) {
        fn(Pairing(partner));
        return;
    }
    for (int b = a + 1; b < n; ++b) {
        if (partner[static_cast<std::size_t>(b)] != -1) continue;
        if (!colors.empty() && colors[static_cast<std::size_t>(a)] != colors[static_cast<std::size_t>(b)]) continue;
        partner[static_cast<std::size_t>(a)] = b;
        partner[static_cast<std::size_t>(b)] = a;
        pair_recursive(partner, colors, fn);
        partner[static_cast<std::size_t>(a)] = -1;
        partner[static_cast<std::size_t>(b)] = -1;
    }
}

// Pairs the interval [lo, hi) non-crossingly, then continues with `rest`.
void nc_recursive(std::vector<int>& partner, std::span<const int> colors,
                  std::vector<std::pair<int, int>>& pending,
                  const std::function<void(const Pairing&)>& fn) {
    while (!pending.empty() && pending.back().first >= pending.back().second) pending.pop_back();
    if (pending.empty()) {
        fn(Pairing(partner));
        return;
    }
    const auto [lo, hi] = pending.back();
    pending.pop_back();
    for (int b = lo + 1; b < hi; b += 2) {
        if (!colors.empty() && colors[static_cast<std::size_t>(lo)] != colors[static_cast<std::size_t>(b)]) continue;
        partner[static_cast<std::size_t>(lo)] = b;
        partner[static_cast<std::size_t>(b)] = lo;
        auto saved = pending;
        pending.emplace_back(b + 1, hi);
        pending.emplace_back(lo + 1, b);
        nc_recursive(partner, colors, pending, fn);
        pending = std::move(saved);
        partner[static_cast<std::size_t>(lo)] = -1;
        partner[static_cast<std::size_t>(b)] = -1;
    }
    pending.emplace_back(lo, hi);
}

void check_colors(int n, std::span<const int> colors) {
    if (!colors.empty() && static_cast<int>(colors.size()) != n)
        throw InputError("color list length does not match the number of points");
}

} // namespace

void for_each_pairing(int n, std::span<const int> colors,
                      const std::function<void(const Pairing&)>& fn, int cap) {
    if (n < 0 || n % 2 != 0) throw InputError("enumerate_pairings: n must be even and non-negative");
    if (n > cap) throw InputError("enumerate_pairings: n exceeds cap " + std::to_string(cap));
    check_colors(n, colors);
    std::vector<int> partner(static_cast<std::size_t>(n), -1);
    pair_recursive(partner, colors, fn);
}

std::vector<Pairing> enumerate_pairings(int n, int cap) {
    std::vector<Pairing> out;
    PairingStream stream(n, cap);
    while (auto pi = stream.next()) out.push_back(std::move(*pi));
    return out;
}

void for_each_noncrossing_pairing(int n, std::span<const int> colors,
                                  const std::function<void(const Pairing&)>& fn) {
    if (n < 0 || n % 2 != 0) throw InputError("non-crossing pairings need an even number of points");
    check_colors(n, colors);
    std::vector<int> partner(static_cast<std::size_t>(n), -1);
    std::vector<std::pair<int, int>> pending{{0, n}};
    nc_recursive(partner, colors, pending, fn);
}

bool is_noncrossing_disc(const Pairing& pi) {
    for (auto [a, c] : pi.blocks())
        for (int b = a + 1; b < c; ++b) {
            const int d = pi.partner(b);
            if (d < a || d > c) return false;
        }
    return true;
}

bool is_noncrossing_annular(const Pairing& pi, const Permutation& trace_perm, int p) {
    const int n = pi.size();
    if (static_cast<int>(trace_perm.size()) != n) throw InputError("annular predicate: size mismatch");
    bool connected = false;
    for (int t = 0; t < p && !connected; ++t) connected = pi.partner(t) >= p;
    if (!connected) return false;
    // pi is an involution, so pi^{-1} = pi.
    const auto kreweras = compose(pi.partners(), trace_perm);
    return n / 2 + cycle_count(kreweras) == n;
}

bool is_noncrossing_annular(const Pairing& pi, const AnnularFrame& frame) {
    if (pi.size() != frame.total()) throw InputError("annular predicate: pairing size differs from p+q");
    return is_noncrossing_annular(pi, frame.rho(), frame.p);
}

std::vector<Pairing> enumerate_nc2_annular(const AnnularFrame& frame, std::span<const int> colors) {
    std::vector<Pairing> out;
    const int n = frame.total();
    if (n % 2 != 0) return out;
    check_colors(n, colors);
    const auto rho = frame.rho();
    for_each_pairing(n, colors, [&](const Pairing& pi) {
        if (is_noncrossing_annular(pi, rho, frame.p)) out.push_back(pi);
    }, std::max(n, kDefaultPairingCap));
    return out;
}

Permutation outer_reflection(const AnnularFrame& frame) {
    Permutation r(static_cast<std::size_t>(frame.total()));
    for (int t = 0; t < frame.total(); ++t)
        r[static_cast<std::size_t>(t)] = frame.is_inner(t) ? t : frame.p + (frame.q - 1 - (t - frame.p));
    return r;
}

Pairing conjugate(const Pairing& pi, const Permutation& relabel) {
    std::vector<int> partner(static_cast<std::size_t>(pi.size()));
    for (int t = 0; t < pi.size(); ++t)
        partner[static_cast<std::size_t>(relabel[static_cast<std::size_t>(t)])] =
            relabel[static_cast<std::size_t>(pi.partner(t))];
    return Pairing(std::move(partner));
}

int spoke_count(const Pairing& pi, const AnnularFrame& frame) {
    if (pi.size() != frame.total()) throw InputError("spoke_count: pairing size differs from p+q");
    int a = 0;
    for (int t = 0; t < frame.p; ++t)
        if (pi.partner(t) >= frame.p) ++a;
    return a;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::int64_t binomial_half(int n, int twice_k) {
    if (twice_k < 0 || twice_k % 2 != 0) return 0;
    return binomial(n, twice_k / 2);
}

std::int64_t double_factorial(int n) {
    std::int64_t r = 1;
    for (int k = n; k > 1; k -= 2) r *= k;
    return r;
}

std::int64_t nc2_count_closed(int p, int q) {
    if ((p + q) % 2 != 0) return 0;
    const std::int64_t num = 2LL * ((p + 1) / 2) * ((q + 1) / 2) * binomial(p, p / 2) * binomial(q, q / 2);
    return num / (p + q);
}

std::int64_t nc2_count_with_spokes(int p, int q, int a) {
    return a * binomial_half(p, p - a) * binomial_half(q, q - a);
}

std::int64_t nc2_count_by_spokes(int p, int q) {
    std::int64_t total = 0;
    for (int a = 1; a <= std::min(p, q); ++a) total += nc2_count_with_spokes(p, q, a);
    return total;
}

} // namespace efluct
