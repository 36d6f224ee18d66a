#include "efluct/wick.hpp"

#include "efluct/errors.hpp"

#include <numeric>

namespace efluct {

Channel TraceWordSystem::channel_of(int color) const {
    auto it = channel_by_color.find(color);
    return it == channel_by_color.end() ? channel : it->second;
}

bool TraceWordSystem::any_real() const {
    for (const auto& w : words)
        for (int c : w.colors)
            if (channel_of(c) == Channel::Real) return true;
    return false;
}

int TraceWordSystem::total_letters() const {
    int n = 0;
    for (const auto& w : words) n += static_cast<int>(w.size());
    return n;
}

Permutation TraceWordSystem::rho() const {
    Permutation r;
    int start = 0;
    for (const auto& w : words) {
        const int len = static_cast<int>(w.size());
        for (int j = 0; j < len; ++j) r.push_back(start + (j + 1) % len);
        start += len;
    }
    return r;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    int components;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)), components(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            auto& px = parent[static_cast<std::size_t>(x)];
            px = parent[static_cast<std::size_t>(px)];
            x = px;
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
};

void check_caps(const TraceWordSystem& system, const OracleCaps& caps) {
    for (const auto& w : system.words)
        if (w.types.size() != w.colors.size()) throw InputError("trace word: type and color lengths differ");
    const int n = system.total_letters();
    const int cap = system.any_real() ? caps.real_letters : caps.complex_letters;
    if (n > cap)
        throw ResourceError("oracle: " + std::to_string(n) + " letters exceeds the cap of " + std::to_string(cap));
}

struct Flat {
    TypeWord types;
    ColorWord colors;
    std::vector<int> owner; // which word each letter belongs to
    Permutation rho;
};

Flat flatten(const TraceWordSystem& system) {
    Flat f;
    for (std::size_t r = 0; r < system.words.size(); ++r) {
        const auto& w = system.words[r];
        f.types.insert(f.types.end(), w.types.begin(), w.types.end());
        f.colors.insert(f.colors.end(), w.colors.begin(), w.colors.end());
        f.owner.insert(f.owner.end(), w.size(), static_cast<int>(r));
    }
    f.rho = system.rho();
    return f;
}

// Sum of the Wick contributions of one pairing, added into `out`.
void contract(const Pairing& pi, const Flat& f, const TraceWordSystem& system, NExpansion& out) {
    const int n = pi.size();
    const auto blocks = pi.blocks();
    const int half = n / 2;
    bool real = false;
    for (auto [x, y] : blocks) real = real || system.channel_of(f.colors[static_cast<std::size_t>(x)]) == Channel::Real;

    auto rho = [&](int t) { return f.rho[static_cast<std::size_t>(t)]; };

    if (!real) {
        // i_x = i_{rho(pi(x))} for every x: components are the cycles of rho pi.
        Dsu dsu(n);
        std::map<int, int> exps;
        for (auto [x, y] : blocks) {
            dsu.unite(x, rho(y));
            dsu.unite(y, rho(x));
            if (f.types[static_cast<std::size_t>(x)] == f.types[static_cast<std::size_t>(y)])
                ++exps[f.colors[static_cast<std::size_t>(x)]];
        }
        out.add_term(dsu.components - half, GammaPoly::monomial(1, Monomial(exps.begin(), exps.end())));
        return;
    }

    // Complex-channel pairs are always cross; real-channel pairs branch.
    std::vector<std::size_t> branching;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        if (system.channel_of(f.colors[static_cast<std::size_t>(blocks[b].first)]) == Channel::Real)
            branching.push_back(b);
    const std::uint32_t assignments = 1u << branching.size();
    std::vector<char> straight(blocks.size(), 0);
    for (std::uint32_t mask = 0; mask < assignments; ++mask) {
        for (std::size_t k = 0; k < branching.size(); ++k) straight[branching[k]] = (mask >> k) & 1u;
        Dsu dsu(n);
        std::map<int, int> exps;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            auto [x, y] = blocks[b];
            const bool same = f.types[static_cast<std::size_t>(x)] == f.types[static_cast<std::size_t>(y)];
            if (straight[b]) {
                dsu.unite(x, y);
                dsu.unite(rho(x), rho(y));
                if (!same) ++exps[f.colors[static_cast<std::size_t>(x)]];
            } else {
                dsu.unite(x, rho(y));
                dsu.unite(rho(x), y);
                if (same) ++exps[f.colors[static_cast<std::size_t>(x)]];
            }
        }
        out.add_term(dsu.components - half, GammaPoly::monomial(1, Monomial(exps.begin(), exps.end())));
    }
}

NExpansion pairing_sum(const TraceWordSystem& nonempty, const OracleCaps& caps, bool connected_only) {
    const Flat f = flatten(nonempty);
    const int n = static_cast<int>(f.types.size());
    NExpansion out;
    if (n % 2 != 0) return out;
    for_each_pairing(n, f.colors, [&](const Pairing& pi) {
        if (connected_only) {
            bool link = false;
            for (int t = 0; t < n && !link; ++t)
                link = f.owner[static_cast<std::size_t>(t)] != f.owner[static_cast<std::size_t>(pi.partner(t))];
            if (!link) return;
        }
        contract(pi, f, nonempty, out);
    }, std::max(n, std::max(caps.complex_letters, caps.real_letters)));
    return out;
}

TraceWordSystem subsystem(const TraceWordSystem& system, const std::vector<int>& which) {
    TraceWordSystem sub;
    sub.channel = system.channel;
    sub.channel_by_color = system.channel_by_color;
    for (int r : which) sub.words.push_back(system.words[static_cast<std::size_t>(r)]);
    return sub;
}

} // namespace

std::vector<std::vector<std::vector<int>>> set_partitions(int m) {
    std::vector<std::vector<std::vector<int>>> out;
    if (m <= 0) return out;
    std::vector<int> label(static_cast<std::size_t>(m), 0);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == m) {
            std::vector<std::vector<int>> part(static_cast<std::size_t>(blocks));
            for (int t = 0; t < m; ++t) part[static_cast<std::size_t>(label[static_cast<std::size_t>(t)])].push_back(t);
            out.push_back(std::move(part));
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            label[static_cast<std::size_t>(i)] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

NExpansion exact_moment(const TraceWordSystem& system, bool normalized, OracleCaps caps) {
    if (system.words.empty()) throw InputError("exact_moment needs at least one trace word");
    check_caps(system, caps);
    TraceWordSystem nonempty = system;
    nonempty.words.clear();
    int empties = 0;
    for (const auto& w : system.words) {
        if (w.empty())
            ++empties;
        else
            nonempty.words.push_back(w);
    }
    NExpansion result = nonempty.words.empty() ? NExpansion::term(0, GammaPoly::constant(1))
                                               : pairing_sum(nonempty, caps, false);
    result = result.shifted(empties);
    if (normalized) result = result.shifted(-static_cast<int>(system.words.size()));
    return result;
}

NExpansion exact_cumulant(const TraceWordSystem& system, bool normalized, OracleCaps caps) {
    const int m = static_cast<int>(system.words.size());
    if (m < 1 || m > 4) throw InputError("exact_cumulant supports 1 to 4 trace words");
    check_caps(system, caps);
    std::map<std::vector<int>, NExpansion> block_moment;
    NExpansion total;
    for (const auto& alpha : set_partitions(m)) {
        const auto k = static_cast<std::int64_t>(alpha.size());
        std::int64_t mu = (k % 2 == 1) ? 1 : -1;
        for (std::int64_t i = 2; i < k; ++i) mu *= i;
        NExpansion prod = NExpansion::term(0, GammaPoly::constant(1));
        for (const auto& block : alpha) {
            auto it = block_moment.find(block);
            if (it == block_moment.end())
                it = block_moment.emplace(block, exact_moment(subsystem(system, block), false, caps)).first;
            prod *= it->second;
        }
        total += prod * mu;
    }
    return normalized ? total.shifted(-m) : total;
}

NExpansion connected_only_cov(const TraceWordSystem& system, OracleCaps caps) {
    if (system.words.size() != 2) throw InputError("connected_only_cov needs exactly two trace words");
    check_caps(system, caps);
    if (system.words[0].empty() || system.words[1].empty()) return {};
    return pairing_sum(system, caps, true);
}

NExpansion exact_cov(const Word& a, const Word& b, Channel channel, OracleCaps caps) {
    TraceWordSystem sys;
    sys.words = {a, b};
    sys.channel = channel;
    return exact_cumulant(sys, false, caps);
}

} // namespace efluct
