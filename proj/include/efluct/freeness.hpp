#pragma once

#include "efluct/gamma_poly.hpp"
#include "efluct/limits.hpp"
#include "efluct/sampler.hpp"
#include "efluct/weights.hpp"
#include "efluct/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace efluct {

// A single-color monomial Y; used centered as Y - E tr(Y).
struct Cluster {
    int color = kDefaultColor;
    TypeWord types;

    Word word() const { return Word(types, color); }
    bool operator==(const Cluster&) const = default;
};

struct ClusterWord {
    std::vector<Cluster> clusters;

    std::size_t count() const { return clusters.size(); }
    Word flatten() const;
    // Adjacent clusters, read cyclically, carry distinct colors. A single
    // cluster counts as alternating.
    bool cyclically_alternating() const;
    // Only the clusters whose index bit is clear in `drop`.
    Word flatten_without(unsigned drop) const;
    bool operator==(const ClusterWord&) const = default;
};

// "x1 s1 | x2 x2" style: clusters separated by '|', each single-colored.
ClusterWord parse_cluster_word(std::string_view text);
std::string format_cluster_word(const ClusterWord& cw);

Cluster transpose(const Cluster& c);

GammaPoly cluster_mean(const Cluster& c);

// Inclusion-exclusion over deleted clusters. Throws InputError unless both
// words are cyclically alternating with non-empty clusters.
GammaPoly centered_cov_limit(const ClusterWord& inner, const ClusterWord& outer, Channel channel);

// Direct diagram sum over the diagrams in which every cluster has a letter
// paired outside itself.
GammaPoly sstar_cov_limit(const ClusterWord& inner, const ClusterWord& outer, Channel channel);

// delta_{p,q} sum_k prod_i phi(A_i B_{k-i}), plus the transposed rotations
// sum_k prod_i phi(A_i B^T_{k+i}) in the real channel.
GammaPoly second_order_rhs(const ClusterWord& inner, const ClusterWord& outer, Channel channel);

// Cluster matching induced by a diagram: sigma[k] is the outer cluster that
// inner cluster k is joined to, if every inner cluster meets exactly one
// outer cluster and nothing else.
std::optional<std::vector<int>> induced_matching(const Pairing& pi, const ClusterWord& inner,
                                                 const ClusterWord& outer);

struct MatchingCheck {
    long diagrams = 0;
    long reversing = 0;  // complex-channel diagrams with sigma(k+1) = sigma(k) - 1
    long preserving = 0; // outer-reversed diagrams with sigma(k+1) = sigma(k) + 1
    bool ok() const { return reversing + preserving == diagrams; }
};

// Inspect every contributing diagram of sstar_cov_limit.
MatchingCheck check_matchings(const ClusterWord& inner, const ClusterWord& outer, Channel channel);

struct FreenessCase {
    ClusterWord inner;
    ClusterWord outer;
    Channel channel = Channel::Complex;
};

enum class CaseStatus { Pass, Fail, Rejected };

struct FreenessResult {
    FreenessCase input;
    CaseStatus status = CaseStatus::Pass;
    GammaPoly centered, sstar, rhs;
    std::string note;
};

struct FreenessReport {
    std::vector<FreenessResult> cases;
    long passed = 0, failed = 0, rejected = 0;
    bool ok() const { return failed == 0; }
};

std::vector<FreenessCase> default_freeness_grid();
FreenessReport verify_second_order_freeness(const std::vector<FreenessCase>& grid);

// Exact finite-N covariance of the centered products, centering each cluster
// by its exact mean at the same N.
double exact_centered_cov(const ClusterWord& inner, const ClusterWord& outer, const EnsembleSpec& spec);
CovEstimate mc_centered_cov(const ClusterWord& inner, const ClusterWord& outer, const EnsembleSpec& spec,
                            int reps);

} // namespace efluct
