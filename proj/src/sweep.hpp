// Copyright the wsnet authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "metrics.hpp"
#include "network.hpp"
#include "topology.hpp"

namespace wsnet {

/// Evenly spaced thresholds over [start, end]. Values are derived from
/// integer step indices, never accumulated floating addition, so the end
/// of a 0..1 grid with step 0.01 is exactly 1.0.
class ThresholdGrid {
public:
    /// Throws Error(Usage) unless 0 <= start <= end <= 1, step > 0 and
    /// (end - start) / step is an integer within 1e-9.
    ThresholdGrid(double start, double end, double step);

    size_t size() const { return count_; }
    double at(size_t i) const;
    double start() const { return at(0); }
    double end() const { return at(count_ - 1); }

private:
    long long start_nano_ = 0;
    long long step_nano_ = 0;
    size_t count_ = 0;
};

struct SweepConfig {
    std::vector<MetricParams> metrics;  // empty means all three kinds
    double t_start = 0.0;
    double t_end = 1.0;
    double t_step = 0.01;
    bool count_exact_co_occurrence = false;
    bool vacuous_links = false;
    int jobs = 0;  // 0: hardware concurrency
    /// Invoked after each completed (metric, threshold) step.
    std::function<void(const std::string& stage, size_t done, size_t total)> progress;
};

/// Records ordered by (metric list position, threshold ascending); one
/// per grid point, n_similarities always filled. Per metric, n_links is
/// non-increasing in the threshold.
struct SweepResult {
    std::vector<MetricParams> metrics;
    double t_start = 0.0;
    double t_end = 1.0;
    double t_step = 0.01;
    bool count_exact_co_occurrence = false;
    bool vacuous_links = false;
    std::vector<PropertyRecord> records;
};

/// Builds the network and computes all properties for every metric and
/// grid threshold. Name-pair scores are computed once per metric and
/// reused across all thresholds; the result record for a given (metric,
/// threshold) equals what build_network + compute_all + similarity_pairs
/// produce independently.
SweepResult run_sweep(const Corpus& corpus, const SweepConfig& config);

/// 100 * (avg_degree(t) - avg_degree(1)) / avg_degree(1): how far the
/// network at t sits above the exact-match network, in percent of the
/// latter. nullopt when avg_degree(1) is 0. Throws Error(Usage)
/// when the sweep lacks a record at t or at threshold 1 for the metric.
std::optional<double> proportional_variation(const SweepResult& result, MetricKind metric,
                                             double threshold);

struct InflectionResult {
    double threshold = 0.0;
    bool no_inflection = false;  // avg_degree curve has no curvature at all
};

/// Grid threshold maximizing |second difference| of avg_degree; a
/// diagnostic mirror of reading the curve's knee off a plot. Ties pick
/// the smallest threshold. Throws Error(Undefined) with fewer than three
/// records for the metric.
InflectionResult find_inflection(const SweepResult& result, MetricKind metric);

enum class PairLabel { Appropriate, FalsePositive };

/// Human judgments over unordered name pairs, keyed on normalized names
/// in lexicographic order.
class GroundTruthLabels {
public:
    GroundTruthLabels() = default;

    /// CSV with header name_a,name_b,label; label is "appropriate" or
    /// "false_positive". Names are normalized on load.
    static GroundTruthLabels parse_labels_csv(std::string_view text,
                                              const NormalizeOptions& normalize = {});
    static GroundTruthLabels load_labels_file(const std::string& path,
                                              const NormalizeOptions& normalize = {});

    void add(const std::string& name_a, const std::string& name_b, PairLabel label,
             const NormalizeOptions& normalize = {});
    std::optional<PairLabel> lookup(const std::string& name_a, const std::string& name_b) const;
    size_t size() const { return labels_.size(); }

private:
    std::map<std::pair<std::string, std::string>, PairLabel> labels_;
};

struct FpStats {
    uint64_t n_retrieved = 0;
    uint64_t n_false_positive = 0;
    /// 100 * n_false_positive / denominator. The denominator is the
    /// labeled retrieved pairs; under strict_labels the unlabeled pairs
    /// count in it too (a lower bound on the rate). nullopt when the
    /// denominator is 0.
    std::optional<double> fp_percent;
    std::vector<SimilarityPair> unlabeled;
};

FpStats fp_report(const MatchReport& report, const GroundTruthLabels& labels,
                  bool strict_labels = false);

/// Sweep CSV: header metric,threshold,n_nodes,n_links,min_degree,
/// max_degree,avg_degree,density,transitivity,degree_correlation,
/// avg_distance,n_isolated,n_similarities. Thresholds carry two
/// decimals; undefined values are empty cells.
std::string sweep_to_csv(const SweepResult& result);

void save_sweep_csv(const SweepResult& result, const std::string& path);

}  // namespace wsnet
