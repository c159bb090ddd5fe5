// Copyright the wsnet authors
// SPDX-License-Identifier: Apache-2.0
#include "network.hpp"

#include <algorithm>
#include <unordered_map>

#include "error.hpp"
#include "parallel.hpp"
#include "unicode.hpp"

namespace wsnet {

namespace {

void check_threshold(double threshold) {
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
        throw Error(ErrorCode::Usage, "threshold must lie in [0, 1]");
    }
}

std::vector<std::u32string> decode_vocabulary(const std::vector<VocabEntry>& vocab) {
    std::vector<std::u32string> decoded(vocab.size());
    for (size_t i = 0; i < vocab.size(); ++i) decoded[i] = decode_utf8(vocab[i].name);
    return decoded;
}

}  // namespace

bool link_exists(const ServiceDescription& source, const ServiceDescription& target,
                 const MetricParams& metric, double threshold, const BuildOptions& options) {
    metric.validate();
    check_threshold(threshold);
    const ServiceIo source_io = service_io(source);
    const ServiceIo target_io = service_io(target);
    if (target_io.inputs.empty()) return options.vacuous_links;
    for (const std::string& needed : target_io.inputs) {
        bool covered = false;
        for (const std::string& provided : source_io.outputs) {
            if (match(metric, threshold, provided, needed)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

InteractionNetwork build_network(const Corpus& corpus, const MetricParams& metric,
                                 double threshold, const BuildOptions& options) {
    metric.validate();
    check_threshold(threshold);

    const auto& vocab = corpus.vocabulary();
    const std::vector<std::u32string> names = decode_vocabulary(vocab);
    const size_t n_services = corpus.service_count();

    // Score every (output-role, input-role) name combination once.
    std::vector<uint32_t> in_ids;
    std::vector<uint32_t> out_ids;
    std::vector<uint32_t> in_row(vocab.size(), 0);   // vocab id -> row
    std::vector<uint32_t> out_col(vocab.size(), 0);  // vocab id -> column
    for (uint32_t v = 0; v < vocab.size(); ++v) {
        if (vocab[v].input_role) {
            in_row[v] = static_cast<uint32_t>(in_ids.size());
            in_ids.push_back(v);
        }
        if (vocab[v].output_role) {
            out_col[v] = static_cast<uint32_t>(out_ids.size());
            out_ids.push_back(v);
        }
    }
    std::vector<double> scores(in_ids.size() * out_ids.size());
    parallel_for(in_ids.size(), options.jobs, [&](size_t r) {
        const std::u32string& in_name = names[in_ids[r]];
        double* row = scores.data() + r * out_ids.size();
        for (size_t c = 0; c < out_ids.size(); ++c) {
            row[c] = similarity(metric, names[out_ids[c]], in_name);
        }
    });

    auto covered = [&](uint32_t in_vocab_id, const std::vector<uint32_t>& outputs) {
        const double* row = scores.data() + in_row[in_vocab_id] * out_ids.size();
        for (uint32_t out_vocab_id : outputs) {
            if (row[out_col[out_vocab_id]] >= threshold) return true;
        }
        return false;
    };

    std::vector<std::vector<uint32_t>> targets_per_source(n_services);
    parallel_for(n_services, options.jobs, [&](size_t source) {
        const std::vector<uint32_t>& outputs = corpus.service_outputs(source);
        std::vector<uint32_t>& targets = targets_per_source[source];
        for (size_t target = 0; target < n_services; ++target) {
            if (target == source) continue;
            const std::vector<uint32_t>& inputs = corpus.service_inputs(target);
            if (inputs.empty()) {
                if (options.vacuous_links) targets.push_back(static_cast<uint32_t>(target));
                continue;
            }
            bool all = true;
            for (uint32_t needed : inputs) {
                if (!covered(needed, outputs)) {
                    all = false;
                    break;
                }
            }
            if (all) targets.push_back(static_cast<uint32_t>(target));
        }
    });

    InteractionNetwork net;
    net.metric = metric;
    net.threshold = threshold;
    net.corpus_fingerprint = corpus.fingerprint();
    net.nodes.reserve(n_services);
    for (const ServiceDescription& s : corpus.services()) net.nodes.push_back(s.id);
    for (uint32_t source = 0; source < n_services; ++source) {
        for (uint32_t target : targets_per_source[source]) {
            net.links.emplace_back(source, target);
        }
    }
    return net;
}

std::vector<SimilarityPair> MatchReport::additional() const {
    std::vector<SimilarityPair> out;
    std::set_difference(pairs.begin(), pairs.end(), baseline_pairs.begin(), baseline_pairs.end(),
                        std::back_inserter(out));
    return out;
}

MatchReport similarity_pairs(const Corpus& corpus, const MetricParams& metric, double threshold,
                             bool count_exact_co_occurrence, int jobs) {
    metric.validate();
    check_threshold(threshold);

    const auto& vocab = corpus.vocabulary();
    const std::vector<std::u32string> names = decode_vocabulary(vocab);

    MatchReport report;
    report.metric = metric;
    report.threshold = threshold;
    report.count_exact_co_occurrence = count_exact_co_occurrence;

    // Unordered pairs of distinct names where one side can provide (output
    // role) what the other consumes (input role).
    auto qualifies = [&](uint32_t a, uint32_t b) {
        return (vocab[a].output_role && vocab[b].input_role) ||
               (vocab[a].input_role && vocab[b].output_role);
    };

    const size_t n = vocab.size();
    std::vector<std::vector<SimilarityPair>> found(n);
    std::vector<std::vector<SimilarityPair>> found_baseline(n);
    parallel_for(n, jobs, [&](size_t a) {
        if (count_exact_co_occurrence && vocab[a].input_role && vocab[a].output_role) {
            // The same name consumed somewhere and provided somewhere: an
            // exact match by definition, present at every threshold.
            found[a].push_back(SimilarityPair{vocab[a].name, vocab[a].name, 1.0});
            found_baseline[a].push_back(SimilarityPair{vocab[a].name, vocab[a].name, 1.0});
        }
        for (size_t b = a + 1; b < n; ++b) {
            if (!qualifies(static_cast<uint32_t>(a), static_cast<uint32_t>(b))) continue;
            const double score = similarity(metric, names[a], names[b]);
            if (score >= threshold) {
                found[a].push_back(SimilarityPair{vocab[a].name, vocab[b].name, score});
            }
            if (score >= 1.0) {
                found_baseline[a].push_back(SimilarityPair{vocab[a].name, vocab[b].name, score});
            }
        }
    });
    for (size_t a = 0; a < n; ++a) {
        report.pairs.insert(report.pairs.end(), found[a].begin(), found[a].end());
        report.baseline_pairs.insert(report.baseline_pairs.end(), found_baseline[a].begin(),
                                     found_baseline[a].end());
    }
    // Vocabulary is sorted by name, so per-bucket output is already in
    // (name_a, name_b) order; concatenation preserves it.
    return report;
}

std::vector<SimilarityPair> diff_reports(const MatchReport& low, const MatchReport& high) {
    if (low.metric.kind != high.metric.kind ||
        (low.metric.kind == MetricKind::JaroWinkler &&
         (low.metric.jw_prefix_scale != high.metric.jw_prefix_scale ||
          low.metric.jw_max_prefix != high.metric.jw_max_prefix))) {
        throw Error(ErrorCode::Mismatch, "cannot diff reports computed with different metrics");
    }
    if (low.count_exact_co_occurrence != high.count_exact_co_occurrence) {
        throw Error(ErrorCode::Mismatch, "cannot diff reports with different counting modes");
    }
    if (low.threshold > high.threshold) {
        throw Error(ErrorCode::Mismatch,
                    "diff expects the lower-threshold report first");
    }
    std::vector<SimilarityPair> out;
    std::set_difference(low.pairs.begin(), low.pairs.end(), high.pairs.begin(), high.pairs.end(),
                        std::back_inserter(out));
    return out;
}

}  // namespace wsnet
