// Copyright the wsnet authors
// SPDX-License-Identifier: Apache-2.0
#include "sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "csv.hpp"
#include "error.hpp"
#include "parallel.hpp"

namespace wsnet {

ThresholdGrid::ThresholdGrid(double start, double end, double step) {
    if (!(start >= 0.0 && start <= 1.0 && end >= 0.0 && end <= 1.0)) {
        throw Error(ErrorCode::Usage, "threshold grid bounds must lie in [0, 1]");
    }
    if (start > end) throw Error(ErrorCode::Usage, "threshold grid start exceeds end");
    if (!(step > 0.0)) throw Error(ErrorCode::Usage, "threshold grid step must be positive");
    const double steps = (end - start) / step;
    const auto n = static_cast<long long>(std::llround(steps));
    if (std::fabs(static_cast<double>(n) * step - (end - start)) > 1e-9) {
        throw Error(ErrorCode::Usage, "threshold grid (end - start) is not a multiple of step");
    }
    start_nano_ = std::llround(start * 1e9);
    step_nano_ = std::llround(step * 1e9);
    count_ = static_cast<size_t>(n) + 1;
}

double ThresholdGrid::at(size_t i) const {
    return static_cast<double>(start_nano_ + static_cast<long long>(i) * step_nano_) / 1e9;
}

namespace {

std::vector<MetricParams> resolve_metrics(const std::vector<MetricParams>& requested) {
    if (!requested.empty()) {
        for (const MetricParams& m : requested) m.validate();
        return requested;
    }
    return {MetricParams{MetricKind::Levenshtein}, MetricParams{MetricKind::Jaro},
            MetricParams{MetricKind::JaroWinkler}};
}

constexpr double kNeverLinks = -1.0;
constexpr double kAlwaysLinks = 2.0;

}  // namespace

SweepResult run_sweep(const Corpus& corpus, const SweepConfig& config) {
    if (corpus.service_count() == 0) {
        throw Error(ErrorCode::EmptyInput, "cannot sweep an empty corpus");
    }
    const ThresholdGrid grid(config.t_start, config.t_end, config.t_step);
    const std::vector<MetricParams> metrics = resolve_metrics(config.metrics);
    const int jobs = effective_jobs(config.jobs);

    SweepResult result;
    result.metrics = metrics;
    result.t_start = config.t_start;
    result.t_end = config.t_end;
    result.t_step = config.t_step;
    result.count_exact_co_occurrence = config.count_exact_co_occurrence;
    result.vacuous_links = config.vacuous_links;
    result.records.reserve(metrics.size() * grid.size());

    const auto& vocab = corpus.vocabulary();
    std::vector<std::u32string> names(vocab.size());
    for (size_t i = 0; i < vocab.size(); ++i) names[i] = decode_utf8(vocab[i].name);

    std::vector<uint32_t> in_ids;
    std::vector<uint32_t> out_ids;
    std::vector<uint32_t> in_row(vocab.size(), 0);
    std::vector<uint32_t> out_col(vocab.size(), 0);
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

    uint64_t co_occurring = 0;
    for (const VocabEntry& e : vocab) {
        if (e.input_role && e.output_role) ++co_occurring;
    }

    const size_t n_services = corpus.service_count();
    std::vector<std::string> node_ids;
    node_ids.reserve(n_services);
    for (const ServiceDescription& s : corpus.services()) node_ids.push_back(s.id);

    const size_t total_steps = metrics.size() * grid.size();
    size_t done_steps = 0;

    for (const MetricParams& metric : metrics) {
        // Scores are threshold-independent: one (output name, input name)
        // table per metric serves the whole grid.
        std::vector<double> scores(in_ids.size() * out_ids.size());
        parallel_for(in_ids.size(), jobs, [&](size_t r) {
            const std::u32string& in_name = names[in_ids[r]];
            double* row = scores.data() + r * out_ids.size();
            for (size_t c = 0; c < out_ids.size(); ++c) {
                row[c] = similarity(metric, names[out_ids[c]], in_name);
            }
        });

        // Retrieved-similarity counting: scores of all qualifying
        // unordered distinct-name pairs, sorted for threshold lookup.
        std::vector<double> pair_scores;
        for (size_t a = 0; a < vocab.size(); ++a) {
            for (size_t b = a + 1; b < vocab.size(); ++b) {
                if (vocab[a].output_role && vocab[b].input_role) {
                    pair_scores.push_back(scores[in_row[b] * out_ids.size() + out_col[a]]);
                } else if (vocab[a].input_role && vocab[b].output_role) {
                    pair_scores.push_back(scores[in_row[a] * out_ids.size() + out_col[b]]);
                }
            }
        }
        std::sort(pair_scores.begin(), pair_scores.end());
        auto count_retrieved = [&](double t) -> uint64_t {
            const auto it = std::lower_bound(pair_scores.begin(), pair_scores.end(), t);
            uint64_t n = static_cast<uint64_t>(pair_scores.end() - it);
            if (config.count_exact_co_occurrence) n += co_occurring;
            return n;
        };

        // The smallest threshold at which a link no longer exists is
        // min over required inputs of the best providing output score.
        std::vector<double> cover(n_services * n_services, kNeverLinks);
        parallel_for(n_services, jobs, [&](size_t source) {
            const std::vector<uint32_t>& outputs = corpus.service_outputs(source);
            for (size_t target = 0; target < n_services; ++target) {
                if (target == source) continue;
                const std::vector<uint32_t>& inputs = corpus.service_inputs(target);
                double& slot = cover[source * n_services + target];
                if (inputs.empty()) {
                    slot = config.vacuous_links ? kAlwaysLinks : kNeverLinks;
                    continue;
                }
                if (outputs.empty()) continue;  // nothing can cover them
                double worst = kAlwaysLinks;
                for (uint32_t needed : inputs) {
                    const double* row = scores.data() + in_row[needed] * out_ids.size();
                    double best = kNeverLinks;
                    for (uint32_t provided : outputs) {
                        best = std::max(best, row[out_col[provided]]);
                    }
                    worst = std::min(worst, best);
                }
                slot = worst;
            }
        });

        for (size_t gi = 0; gi < grid.size(); ++gi) {
            const double t = grid.at(gi);
            InteractionNetwork net;
            net.metric = metric;
            net.threshold = t;
            net.corpus_fingerprint = corpus.fingerprint();
            net.nodes = node_ids;
            for (uint32_t source = 0; source < n_services; ++source) {
                const double* row = cover.data() + static_cast<size_t>(source) * n_services;
                for (uint32_t target = 0; target < n_services; ++target) {
                    if (row[target] >= t) net.links.emplace_back(source, target);
                }
            }
            PropertyRecord rec = compute_all(net, jobs);
            rec.n_similarities = count_retrieved(t);
            result.records.push_back(std::move(rec));
            ++done_steps;
            if (config.progress) {
                config.progress(metric_name(metric.kind), done_steps, total_steps);
            }
        }
    }
    return result;
}

namespace {

std::vector<const PropertyRecord*> records_for(const SweepResult& result, MetricKind metric) {
    std::vector<const PropertyRecord*> out;
    for (const PropertyRecord& r : result.records) {
        if (r.metric == metric) out.push_back(&r);
    }
    return out;
}

}  // namespace

std::optional<double> proportional_variation(const SweepResult& result, MetricKind metric,
                                             double threshold) {
    const PropertyRecord* at_t = nullptr;
    const PropertyRecord* at_one = nullptr;
    for (const PropertyRecord& r : result.records) {
        if (r.metric != metric) continue;
        if (std::fabs(r.threshold - threshold) <= 1e-9) at_t = &r;
        if (std::fabs(r.threshold - 1.0) <= 1e-9) at_one = &r;
    }
    if (!at_t || !at_one) {
        throw Error(ErrorCode::Usage, "sweep has no record at the requested threshold "
                                      "(and at 1.0) for metric " +
                                          std::string(metric_name(metric)));
    }
    if (at_one->avg_degree == 0.0) return std::nullopt;
    return 100.0 * (at_t->avg_degree - at_one->avg_degree) / at_one->avg_degree;
}

InflectionResult find_inflection(const SweepResult& result, MetricKind metric) {
    const std::vector<const PropertyRecord*> recs = records_for(result, metric);
    if (recs.size() < 3) {
        throw Error(ErrorCode::Undefined,
                    "inflection detection needs at least three records per metric");
    }
    double best_mag = -1.0;
    double best_threshold = 0.0;
    for (size_t i = 1; i + 1 < recs.size(); ++i) {
        const double second_diff =
            recs[i + 1]->avg_degree - 2.0 * recs[i]->avg_degree + recs[i - 1]->avg_degree;
        const double mag = std::fabs(second_diff);
        if (mag > best_mag) {
            best_mag = mag;
            best_threshold = recs[i]->threshold;
        }
    }
    return InflectionResult{best_threshold, best_mag == 0.0};
}

GroundTruthLabels GroundTruthLabels::parse_labels_csv(std::string_view text,
                                                      const NormalizeOptions& normalize) {
    const auto rows = parse_csv(text);
    if (rows.empty() || rows[0] != std::vector<std::string>{"name_a", "name_b", "label"}) {
        throw Error(ErrorCode::Schema, "labels CSV must start with header name_a,name_b,label");
    }
    GroundTruthLabels labels;
    for (size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.size() != 3) {
            throw Error(ErrorCode::Schema,
                        "labels CSV row " + std::to_string(i + 1) + ": expected 3 fields");
        }
        PairLabel label;
        if (row[2] == "appropriate") {
            label = PairLabel::Appropriate;
        } else if (row[2] == "false_positive") {
            label = PairLabel::FalsePositive;
        } else {
            throw Error(ErrorCode::Schema, "labels CSV row " + std::to_string(i + 1) +
                                               ": label must be appropriate or false_positive");
        }
        labels.add(row[0], row[1], label, normalize);
    }
    return labels;
}

GroundTruthLabels GroundTruthLabels::load_labels_file(const std::string& path,
                                                      const NormalizeOptions& normalize) {
    return parse_labels_csv(read_file(path), normalize);
}

void GroundTruthLabels::add(const std::string& name_a, const std::string& name_b, PairLabel label,
                            const NormalizeOptions& normalize) {
    std::string a = normalize_name(name_a, normalize);
    std::string b = normalize_name(name_b, normalize);
    if (b < a) std::swap(a, b);
    auto [it, inserted] = labels_.emplace(std::make_pair(std::move(a), std::move(b)), label);
    if (!inserted && it->second != label) {
        throw Error(ErrorCode::Schema, "conflicting labels for pair (" + it->first.first + ", " +
                                           it->first.second + ")");
    }
}

std::optional<PairLabel> GroundTruthLabels::lookup(const std::string& name_a,
                                                   const std::string& name_b) const {
    const std::string* a = &name_a;
    const std::string* b = &name_b;
    if (*b < *a) std::swap(a, b);
    const auto it = labels_.find(std::make_pair(*a, *b));
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

FpStats fp_report(const MatchReport& report, const GroundTruthLabels& labels, bool strict_labels) {
    FpStats stats;
    stats.n_retrieved = report.pairs.size();
    uint64_t labeled = 0;
    for (const SimilarityPair& pair : report.pairs) {
        const auto label = labels.lookup(pair.name_a, pair.name_b);
        if (!label) {
            stats.unlabeled.push_back(pair);
            continue;
        }
        ++labeled;
        if (*label == PairLabel::FalsePositive) ++stats.n_false_positive;
    }
    // Unlabeled pairs drop out of the denominator unless strict_labels
    // folds them in (yielding a lower bound on the rate).
    const uint64_t denominator = strict_labels ? stats.n_retrieved : labeled;
    if (denominator > 0) {
        stats.fp_percent =
            100.0 * static_cast<double>(stats.n_false_positive) / static_cast<double>(denominator);
    }
    return stats;
}

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

std::string sweep_to_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "metric,threshold,n_nodes,n_links,min_degree,max_degree,avg_degree,density,"
           "transitivity,degree_correlation,avg_distance,n_isolated,n_similarities\n";
    char tbuf[32];
    for (const PropertyRecord& r : result.records) {
        std::snprintf(tbuf, sizeof(tbuf), "%.2f", r.threshold);
        out << metric_name(r.metric) << ',' << tbuf << ',' << r.n_nodes << ',' << r.n_links << ','
            << r.min_degree << ',' << r.max_degree << ',' << format_double(r.avg_degree) << ','
            << (r.density ? format_double(*r.density) : "") << ','
            << (r.transitivity ? format_double(*r.transitivity) : "") << ','
            << (r.degree_correlation ? format_double(*r.degree_correlation) : "") << ','
            << (r.avg_distance ? format_double(*r.avg_distance) : "") << ',' << r.n_isolated << ','
            << (r.n_similarities ? std::to_string(*r.n_similarities) : "") << '\n';
    }
    return out.str();
}

void save_sweep_csv(const SweepResult& result, const std::string& path) {
    write_file(path, sweep_to_csv(result));
}

}  // namespace wsnet
