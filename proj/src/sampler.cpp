#include "efluct/sampler.hpp"

#include "efluct/errors.hpp"

#include <algorithm>
#include <boost/random/normal_distribution.hpp>
#include <cmath>
#include <set>
#include <thread>

namespace efluct {

double EnsembleSpec::gamma_of(int color) const {
    auto it = gamma.find(color);
    return it == gamma.end() ? default_gamma : it->second;
}

void EnsembleSpec::validate() const {
    if (N < 1) throw InputError("N must be positive");
    auto bad = [](double g) { return !(std::abs(g) <= 1.0); };
    if (bad(default_gamma)) throw InputError("gamma must lie in [-1, 1]");
    for (auto [c, g] : gamma)
        if (bad(g)) throw InputError("gamma for color " + std::to_string(c) + " must lie in [-1, 1]");
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng replicate_stream(std::uint64_t master, std::uint64_t index) {
    const std::uint64_t k = splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
    std::seed_seq seq{static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

Matrix sample_elliptic(int N, double gamma, Channel channel, Rng& rng) {
    if (N < 1) throw InputError("N must be positive");
    if (!(std::abs(gamma) <= 1.0)) throw InputError("gamma must lie in [-1, 1]");
    boost::random::normal_distribution<double> z(0.0, 1.0);
    const double rest = std::sqrt(std::max(0.0, 1.0 - gamma * gamma));
    Matrix x(N, N);
    if (channel == Channel::Complex) {
        const double h = std::sqrt(0.5);
        auto g = [&]() {
            const double re = z(rng);
            return cplx(h * re, h * z(rng));
        };
        const double dr = std::sqrt((1.0 + gamma) / 2.0), di = std::sqrt((1.0 - gamma) / 2.0);
        for (int i = 0; i < N; ++i) {
            const double u = z(rng);
            x(i, i) = cplx(dr * u, di * z(rng));
            for (int j = i + 1; j < N; ++j) {
                const cplx g1 = g();
                const cplx g2 = g();
                x(i, j) = g1;
                x(j, i) = gamma * std::conj(g1) + rest * g2;
            }
        }
    } else {
        const double d = std::sqrt(1.0 + gamma);
        for (int i = 0; i < N; ++i) {
            x(i, i) = d * z(rng);
            for (int j = i + 1; j < N; ++j) {
                const double g1 = z(rng);
                const double g2 = z(rng);
                x(i, j) = g1;
                x(j, i) = gamma * g1 + rest * g2;
            }
        }
    }
    return x;
}

MatrixSet sample_family(const EnsembleSpec& spec, const std::vector<int>& colors, Rng& rng) {
    std::set<int> distinct(colors.begin(), colors.end());
    MatrixSet out;
    for (int c : distinct) out.emplace(c, sample_elliptic(spec.N, spec.gamma_of(c), spec.channel, rng));
    return out;
}

cplx evaluate_trace_word(const MatrixSet& mats, const Word& word, bool normalized) {
    if (word.types.size() != word.colors.size()) throw InputError("word: type and color lengths differ");
    if (mats.empty()) throw InputError("evaluate_trace_word: no matrices");
    const auto n = static_cast<double>(mats.begin()->second.rows());
    const auto len = word.size();
    if (len == 0) return normalized ? cplx(1.0) : cplx(n);
    auto factor = [&](std::size_t t) -> Matrix {
        auto it = mats.find(word.colors[t]);
        if (it == mats.end()) throw InputError("no matrix for color " + std::to_string(word.colors[t]));
        return word.types[t] == Letter::One ? Matrix(it->second) : Matrix(it->second.adjoint());
    };
    Matrix left = factor(0);
    for (std::size_t t = 1; t + 1 < len; ++t) left = left * factor(t);
    cplx tr;
    if (len == 1) {
        tr = left.trace();
    } else {
        const Matrix last = factor(len - 1);
        tr = left.cwiseProduct(last.transpose()).sum();
    }
    tr /= std::pow(n, static_cast<double>(len) / 2.0);
    return normalized ? tr / n : tr;
}

namespace {

cplx covariance(const std::vector<cplx>& a, const std::vector<cplx>& b, std::size_t lo, std::size_t hi) {
    const auto m = static_cast<double>(hi - lo);
    cplx ma = 0, mb = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= m;
    mb /= m;
    cplx s = 0;
    for (std::size_t i = lo; i < hi; ++i) s += (a[i] - ma) * (b[i] - mb);
    return s / (m - 1.0);
}

} // namespace

CovEstimate estimate_cov_generic(const EnsembleSpec& spec, int reps,
                                 const std::function<std::pair<cplx, cplx>(Rng&)>& draw, int batches) {
    spec.validate();
    if (reps < 2) throw InputError("need at least two replicates");
    if (batches < 2 || reps < 2 * batches) throw InputError("too few replicates for the batch count");
    std::vector<cplx> a(static_cast<std::size_t>(reps)), b(static_cast<std::size_t>(reps));
    auto run = [&](int first, int stride) {
        for (int r = first; r < reps; r += stride) {
            Rng rng = replicate_stream(spec.seed, static_cast<std::uint64_t>(r));
            auto [x, y] = draw(rng);
            a[static_cast<std::size_t>(r)] = x;
            b[static_cast<std::size_t>(r)] = y;
        }
    };
    const int workers = std::clamp(spec.threads, 1, reps);
    if (workers == 1) {
        run(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
        for (auto& t : pool) t.join();
    }
    CovEstimate est;
    est.reps = reps;
    est.N = spec.N;
    est.seed = spec.seed;
    est.gamma = spec.gamma;
    est.estimate = covariance(a, b, 0, a.size());
    std::vector<cplx> bm;
    const auto per = static_cast<std::size_t>(reps / batches);
    for (int k = 0; k < batches; ++k) {
        const auto lo = static_cast<std::size_t>(k) * per;
        const auto hi = (k + 1 == batches) ? a.size() : lo + per;
        bm.push_back(covariance(a, b, lo, hi));
    }
    cplx mean = 0;
    for (auto v : bm) mean += v;
    mean /= static_cast<double>(batches);
    double vr = 0, vi = 0;
    for (auto v : bm) {
        vr += std::pow(v.real() - mean.real(), 2);
        vi += std::pow(v.imag() - mean.imag(), 2);
    }
    const double denom = static_cast<double>(batches) * (batches - 1);
    est.se = std::sqrt(vr / denom + vi / denom);
    return est;
}

CovEstimate estimate_cov(const EnsembleSpec& spec, const Word& inner, const Word& outer, int reps, int batches) {
    auto colors = inner.colors;
    colors.insert(colors.end(), outer.colors.begin(), outer.colors.end());
    if (colors.empty()) colors.push_back(kDefaultColor);
    return estimate_cov_generic(spec, reps, [&](Rng& rng) {
        const auto mats = sample_family(spec, colors, rng);
        return std::make_pair(evaluate_trace_word(mats, inner), evaluate_trace_word(mats, outer));
    }, batches);
}

namespace {

struct Accumulator {
    double sr = 0, sr2 = 0, si = 0, si2 = 0;
    long n = 0;
    void add(cplx v) {
        sr += v.real();
        sr2 += v.real() * v.real();
        si += v.imag();
        si2 += v.imag() * v.imag();
        ++n;
    }
    MeanEstimate result() const {
        MeanEstimate m;
        const auto dn = static_cast<double>(n);
        m.samples = n;
        m.mean = cplx(sr / dn, si / dn);
        m.se_re = std::sqrt(std::max(0.0, (sr2 / dn - std::pow(sr / dn, 2)) / (dn - 1)));
        m.se_im = std::sqrt(std::max(0.0, (si2 / dn - std::pow(si / dn, 2)) / (dn - 1)));
        return m;
    }
};

} // namespace

EntryMoments entry_moments(double gamma, Channel channel, long min_samples, std::uint64_t seed, int N) {
    if (N < 2) throw InputError("entry moments need N >= 2");
    Accumulator pair, sq, abs2, dsq, dabs2;
    for (std::uint64_t draw = 0; dsq.n < min_samples; ++draw) {
        Rng rng = replicate_stream(seed, draw);
        const Matrix x = sample_elliptic(N, gamma, channel, rng);
        for (int i = 0; i < N; ++i) {
            dsq.add(x(i, i) * x(i, i));
            dabs2.add(std::norm(x(i, i)));
            for (int j = i + 1; j < N; ++j) {
                pair.add(x(i, j) * x(j, i));
                sq.add(x(i, j) * x(i, j));
                abs2.add(std::norm(x(i, j)));
            }
        }
    }
    return {pair.result(), sq.result(), abs2.result(), dsq.result(), dabs2.result()};
}

EntryTargets entry_targets(double gamma, Channel channel) {
    if (channel == Channel::Complex) return {gamma, 0.0, 1.0, gamma, 1.0};
    return {gamma, 1.0, 1.0, 1.0 + gamma, 1.0 + gamma};
}

} // namespace efluct
