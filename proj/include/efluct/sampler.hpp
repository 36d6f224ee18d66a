#pragma once

#include "efluct/weights.hpp"
#include "efluct/words.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>

namespace efluct {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Rng = std::mt19937_64;

inline constexpr const char* kRngName = "mt19937_64 keyed by splitmix64(seed, replicate); boost ziggurat normals";

struct EnsembleSpec {
    int N = 64;
    std::map<int, double> gamma; // per color
    double default_gamma = 0.0;
    Channel channel = Channel::Complex;
    std::uint64_t seed = 20240917;
    int threads = 1;

    double gamma_of(int color) const;
    void validate() const;
};

struct CovEstimate {
    cplx estimate;
    double se = 0.0;
    int reps = 0;
    int N = 0;
    std::uint64_t seed = 0;
    std::map<int, double> gamma;
};

std::uint64_t splitmix64(std::uint64_t x);
// Independent stream for replicate `index` of a run keyed by `master`.
Rng replicate_stream(std::uint64_t master, std::uint64_t index);

// Raw (unnormalized) elliptic matrix. Throws InputError for |gamma| > 1.
Matrix sample_elliptic(int N, double gamma, Channel channel, Rng& rng);

using MatrixSet = std::map<int, Matrix>;

// One matrix per color in `colors`, drawn in increasing color order.
MatrixSet sample_family(const EnsembleSpec& spec, const std::vector<int>& colors, Rng& rng);

// Tr (or tr) of prod_t X_{c_t}^{tau_t} / sqrt(N); Star is the adjoint.
cplx evaluate_trace_word(const MatrixSet& mats, const Word& word, bool normalized = false);

/// Sample covariance of two scalar statistics over `reps` independent
/// replicates; standard error from `batches` batch means.
CovEstimate estimate_cov_generic(const EnsembleSpec& spec, int reps,
                                 const std::function<std::pair<cplx, cplx>(Rng&)>& draw, int batches = 20);

CovEstimate estimate_cov(const EnsembleSpec& spec, const Word& inner, const Word& outer, int reps,
                         int batches = 20);

struct MeanEstimate {
    cplx mean;
    double se_re = 0.0;
    double se_im = 0.0;
    long samples = 0;
};

struct EntryMoments {
    MeanEstimate offdiag_pair;   // E X_ij X_ji
    MeanEstimate offdiag_square; // E X_ij^2
    MeanEstimate offdiag_abs2;   // E |X_ij|^2
    MeanEstimate diag_square;    // E X_ii^2
    MeanEstimate diag_abs2;      // E |X_ii|^2
};

// Raw entry second moments from enough N x N draws to reach `min_samples`
// diagonal entries.
EntryMoments entry_moments(double gamma, Channel channel, long min_samples, std::uint64_t seed, int N = 32);

struct EntryTargets {
    cplx offdiag_pair, offdiag_square, offdiag_abs2, diag_square, diag_abs2;
};
EntryTargets entry_targets(double gamma, Channel channel);

} // namespace efluct
