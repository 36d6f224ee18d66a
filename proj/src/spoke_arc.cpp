#include "efluct/spoke_arc.hpp"

#include "efluct/errors.hpp"

#include <algorithm>
#include <numeric>

namespace efluct {

namespace {

// Points strictly after `from` in trace order on one circle, until `to`.
std::vector<int> run_between(const AnnularFrame& frame, int from, int to) {
    std::vector<int> pts;
    for (int t = frame.rho_of(from); t != to; t = frame.rho_of(t)) pts.push_back(t);
    return pts;
}

Pairing restrict_to(const Pairing& pi, const std::vector<int>& pts) {
    std::vector<int> local(pts.size(), -1);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const int mate = pi.partner(pts[k]);
        const auto it = std::find(pts.begin(), pts.end(), mate);
        if (it == pts.end()) throw InputError("decompose: arc point paired outside its arc");
        local[k] = static_cast<int>(it - pts.begin());
    }
    return Pairing(std::move(local));
}

template <class T>
std::vector<T> rotated(const std::vector<T>& v, int shift) {
    std::vector<T> out(v.size());
    const int n = static_cast<int>(v.size());
    for (int r = 0; r < n; ++r) out[static_cast<std::size_t>(r)] = v[static_cast<std::size_t>((r + shift) % n)];
    return out;
}

} // namespace

SpokeArcConfig decompose(const Pairing& pi, const AnnularFrame& frame) {
    if (pi.size() != frame.total() || !is_noncrossing_annular(pi, frame))
        throw InputError("decompose: pairing is not annular non-crossing for this frame");
    SpokeArcConfig cfg;
    for (int t = 0; t < frame.p; ++t) {
        if (pi.partner(t) >= frame.p) {
            cfg.inner.push_back(t);
            cfg.outer.push_back(pi.partner(t));
        }
    }
    cfg.a = static_cast<int>(cfg.inner.size());
    for (int r = 0; r < cfg.a; ++r) {
        const auto next = static_cast<std::size_t>((r + 1) % cfg.a);
        const auto prev = static_cast<std::size_t>((r + cfg.a - 1) % cfg.a);
        const auto ur = static_cast<std::size_t>(r);
        auto in_pts = cfg.a == 1 ? run_between(frame, cfg.inner[0], cfg.inner[0])
                                 : run_between(frame, cfg.inner[ur], cfg.inner[next]);
        auto out_pts = cfg.a == 1 ? run_between(frame, cfg.outer[0], cfg.outer[0])
                                  : run_between(frame, cfg.outer[ur], cfg.outer[prev]);
        cfg.inner_arc_lengths.push_back(static_cast<int>(in_pts.size()));
        cfg.outer_arc_lengths.push_back(static_cast<int>(out_pts.size()));
        cfg.inner_pairings.push_back(restrict_to(pi, in_pts));
        cfg.outer_pairings.push_back(restrict_to(pi, out_pts));
    }
    return cfg;
}

Pairing compose(const SpokeArcConfig& cfg, const AnnularFrame& frame) {
    const int a = cfg.a;
    const auto ua = static_cast<std::size_t>(a);
    if (a < 1) throw InputError("compose: need at least one spoke");
    if (cfg.inner.size() != ua || cfg.outer.size() != ua || cfg.inner_arc_lengths.size() != ua ||
        cfg.outer_arc_lengths.size() != ua || cfg.inner_pairings.size() != ua || cfg.outer_pairings.size() != ua)
        throw InputError("compose: list lengths disagree with spoke count");
    const int in_sum = std::accumulate(cfg.inner_arc_lengths.begin(), cfg.inner_arc_lengths.end(), 0);
    const int out_sum = std::accumulate(cfg.outer_arc_lengths.begin(), cfg.outer_arc_lengths.end(), 0);
    if (in_sum != frame.p - a || out_sum != frame.q - a)
        throw InputError("compose: arc lengths do not sum to p-a and q-a");

    std::vector<int> partner(static_cast<std::size_t>(frame.total()), -1);
    auto link = [&](int x, int y) {
        if (x < 0 || y < 0 || x >= frame.total() || y >= frame.total() || partner[static_cast<std::size_t>(x)] != -1 ||
            partner[static_cast<std::size_t>(y)] != -1)
            throw InputError("compose: endpoints collide or are out of range");
        partner[static_cast<std::size_t>(x)] = y;
        partner[static_cast<std::size_t>(y)] = x;
    };
    for (std::size_t r = 0; r < ua; ++r) {
        if (!frame.is_inner(cfg.inner[r]) || frame.is_inner(cfg.outer[r]))
            throw InputError("compose: spoke endpoints on the wrong circle");
        link(cfg.inner[r], cfg.outer[r]);
    }
    auto fill_arc = [&](int start, int len, const Pairing& local, std::size_t expected_end_idx, bool inner) {
        if (len % 2 != 0) throw InputError("compose: arc lengths must be even");
        if (local.size() != len) throw InputError("compose: arc pairing size differs from arc length");
        if (!is_noncrossing_disc(local)) throw InputError("compose: arc pairing is crossing");
        std::vector<int> pts;
        int t = frame.rho_of(start);
        for (int k = 0; k < len; ++k, t = frame.rho_of(t)) pts.push_back(t);
        const int expected_end = inner ? cfg.inner[expected_end_idx] : cfg.outer[expected_end_idx];
        if (t != expected_end) throw InputError("compose: arc lengths inconsistent with spoke endpoints");
        for (auto [x, y] : local.blocks()) link(pts[static_cast<std::size_t>(x)], pts[static_cast<std::size_t>(y)]);
    };
    for (std::size_t r = 0; r < ua; ++r) {
        const auto next = (r + 1) % ua;
        const auto prev = (r + ua - 1) % ua;
        fill_arc(cfg.inner[r], cfg.inner_arc_lengths[r], cfg.inner_pairings[r], next, true);
        fill_arc(cfg.outer[r], cfg.outer_arc_lengths[r], cfg.outer_pairings[r], prev, false);
    }
    Pairing pi(std::move(partner));
    if (!is_noncrossing_annular(pi, frame)) throw InputError("compose: configuration is not annular non-crossing");
    return pi;
}

SpokeArcConfig rotate(const SpokeArcConfig& cfg, int shift) {
    if (cfg.a == 0) return cfg;
    const int s = ((shift % cfg.a) + cfg.a) % cfg.a;
    SpokeArcConfig out = cfg;
    out.inner = rotated(cfg.inner, s);
    out.outer = rotated(cfg.outer, s);
    out.inner_arc_lengths = rotated(cfg.inner_arc_lengths, s);
    out.outer_arc_lengths = rotated(cfg.outer_arc_lengths, s);
    out.inner_pairings = rotated(cfg.inner_pairings, s);
    out.outer_pairings = rotated(cfg.outer_pairings, s);
    return out;
}

} // namespace efluct
