#pragma once

// Independent reference computations used only by the tests.

#include "efluct/gamma_poly.hpp"
#include "efluct/pairing.hpp"
#include "efluct/weights.hpp"
#include "efluct/words.hpp"

#include <functional>
#include <map>
#include <vector>

namespace oracle {

using efluct::Rational;

// C_n by the convolution recurrence.
inline std::int64_t catalan(int n) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(n + 1), 0);
    c[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - 1 - i)];
    return c[static_cast<std::size_t>(n)];
}

inline std::int64_t choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<std::int64_t> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<std::int64_t> next(row.size() + 1, 1);
        for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
        row = next;
    }
    return row[static_cast<std::size_t>(k)];
}

// One Gaussian factor of a trace word: entry (row, col) of color c, maybe conjugated.
struct Entry {
    int row, col, color;
    bool conj;
};

// E[a b] for two entries, straight from the entry covariances.
inline Rational pair_moment(const Entry& a, const Entry& b, efluct::Channel ch, const std::map<int, Rational>& gamma) {
    if (a.color != b.color) return 0;
    const Rational g = gamma.at(a.color);
    const bool transposed = a.row == b.col && a.col == b.row; // (a,b) pattern (ij, ji)
    const bool same = a.row == b.row && a.col == b.col;       // (ij, ij)
    if (ch == efluct::Channel::Real) return Rational(same ? 1 : 0) + (transposed ? g : Rational(0));
    if (a.conj == b.conj) return transposed ? g : Rational(0); // E X_ab X_ba = gamma, E X_ab^2 = 0 off-diagonal
    return same ? Rational(1) : Rational(0);                  // E X_ab conj(X_ab) = 1
}

// E[prod_r Tr(W_r)] with letters X/sqrt(N), summing explicitly over all
// index assignments and all Isserlis pairings. Result is multiplied by
// N^{n/2} to stay rational: returns N^{n/2} * E[...].
inline Rational brute_moment_scaled(const std::vector<efluct::Word>& words,
                                    const std::function<efluct::Channel(int)>& channel_of, int N,
                                    const std::map<int, Rational>& gamma) {
    std::vector<int> rho, colors;
    std::vector<efluct::Letter> types;
    int start = 0;
    for (const auto& w : words) {
        const int len = static_cast<int>(w.size());
        for (int j = 0; j < len; ++j) {
            rho.push_back(start + (j + 1) % len);
            types.push_back(w.types[static_cast<std::size_t>(j)]);
            colors.push_back(w.colors[static_cast<std::size_t>(j)]);
        }
        start += len;
    }
    const int n = start;
    if (n % 2) return 0;
    const auto pairings = efluct::enumerate_pairings(n);
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    Rational total = 0;
    while (true) {
        std::vector<Entry> e;
        for (int t = 0; t < n; ++t) {
            const int a = idx[static_cast<std::size_t>(t)], b = idx[static_cast<std::size_t>(rho[static_cast<std::size_t>(t)])];
            const bool star = types[static_cast<std::size_t>(t)] == efluct::Letter::Star;
            // X* entry (a,b) is conj(X_{ba}) (plain X_{ba} in the real case)
            const int c = colors[static_cast<std::size_t>(t)];
            e.push_back(star ? Entry{b, a, c, channel_of(c) == efluct::Channel::Complex}
                             : Entry{a, b, colors[static_cast<std::size_t>(t)], false});
        }
        for (const auto& pi : pairings) {
            Rational prod = 1;
            for (auto [x, y] : pi.blocks()) {
                const auto& ex = e[static_cast<std::size_t>(x)];
                prod *= pair_moment(ex, e[static_cast<std::size_t>(y)], channel_of(ex.color), gamma);
                if (prod == 0) break;
            }
            total += prod;
        }
        int k = 0;
        while (k < n && ++idx[static_cast<std::size_t>(k)] == N) idx[static_cast<std::size_t>(k++)] = 0;
        if (k == n) break;
    }
    // empty words carry Tr(I) = N
    for (const auto& w : words)
        if (w.empty()) total *= N;
    return total;
}

inline Rational brute_moment_scaled(const std::vector<efluct::Word>& words, efluct::Channel ch, int N,
                                    const std::map<int, Rational>& gamma) {
    return brute_moment_scaled(words, [ch](int) { return ch; }, N, gamma);
}

} // namespace oracle
