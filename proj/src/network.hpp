// Copyright the wsnet authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "metrics.hpp"

namespace wsnet {

struct BuildOptions {
    /// A service with an empty input set would, by vacuous truth, receive
    /// a link from everyone. Off by default: such services get no
    /// incoming links.
    bool vacuous_links = false;
    int jobs = 1;
};

/// Directed service interaction graph: a link sourceed at alpha and
/// targeted at beta means alpha's outputs cover every input beta needs at
/// this metric and threshold. No self-links.
struct InteractionNetwork {
    std::vector<std::string> nodes;  // service ids, corpus order
    std::vector<std::pair<uint32_t, uint32_t>> links;  // (source, target) indices, sorted
    MetricParams metric;
    double threshold = 0.0;
    std::string corpus_fingerprint;

    size_t node_count() const { return nodes.size(); }
    size_t link_count() const { return links.size(); }
};

/// True iff every input name of target has a matching output name of
/// source. Empty target input sets follow options.vacuous_links.
bool link_exists(const ServiceDescription& source, const ServiceDescription& target,
                 const MetricParams& metric, double threshold,
                 const BuildOptions& options = {});

InteractionNetwork build_network(const Corpus& corpus, const MetricParams& metric,
                                 double threshold, const BuildOptions& options = {});

/// An unordered name pair scored at or above some threshold.
struct SimilarityPair {
    std::string name_a;  // name_a <= name_b lexicographically
    std::string name_b;
    double score = 0.0;

    bool operator==(const SimilarityPair& o) const {
        return name_a == o.name_a && name_b == o.name_b;
    }
    bool operator<(const SimilarityPair& o) const {
        return name_a != o.name_a ? name_a < o.name_a : name_b < o.name_b;
    }
};

/// The similarity pairs retrieved from a corpus vocabulary at one metric
/// and threshold, together with the exact-match baseline (threshold 1).
///
/// A pair qualifies when one side occurs in an output role and the other
/// in an input role. Distinct names are always eligible;
/// count_exact_co_occurrence additionally counts each name occurring in
/// both roles as a pair with itself (only such pairs can reach score 1).
struct MatchReport {
    MetricParams metric;
    double threshold = 1.0;
    bool count_exact_co_occurrence = false;
    std::vector<SimilarityPair> pairs;           // sorted
    std::vector<SimilarityPair> baseline_pairs;  // the pairs at threshold 1
    std::vector<SimilarityPair> additional() const;
};

MatchReport similarity_pairs(const Corpus& corpus, const MetricParams& metric, double threshold,
                             bool count_exact_co_occurrence = false, int jobs = 1);

/// The pairs the lower threshold adds: low.pairs minus high.pairs.
/// Throws Error(Mismatch) unless both reports share metric and counting
/// mode and low.threshold <= high.threshold.
std::vector<SimilarityPair> diff_reports(const MatchReport& low, const MatchReport& high);

enum class ExportFormat { Dot, GraphML, Json };

ExportFormat export_format_from_name(std::string_view name);

std::string export_network(const InteractionNetwork& net, ExportFormat format);

void export_network_file(const InteractionNetwork& net, ExportFormat format,
                         const std::string& path);

}  // namespace wsnet
