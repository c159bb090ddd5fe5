// Copyright the wsnet authors
// SPDX-License-Identifier: Apache-2.0
//
// extern-C surface over the C++ core: opaque handles, status codes and a
// thread-local last-error message.

#include "wsnet/wsnet.h"

#include <cstring>
#include <string>
#include <vector>

#include "chart.hpp"
#include "corpus.hpp"
#include "error.hpp"
#include "metrics.hpp"
#include "network.hpp"
#include "sweep.hpp"
#include "parallel.hpp"
#include "topology.hpp"

struct wsnet_corpus {
    wsnet::Corpus impl;
};
struct wsnet_network {
    wsnet::InteractionNetwork impl;
};
struct wsnet_match_report {
    wsnet::MatchReport impl;
};
struct wsnet_pair_list {
    std::vector<wsnet::SimilarityPair> impl;
};
struct wsnet_labels {
    wsnet::GroundTruthLabels impl;
    wsnet::NormalizeOptions normalize;
};
struct wsnet_sweep_result {
    wsnet::SweepResult impl;
};

namespace {

thread_local std::string g_last_error;

wsnet_status status_of(wsnet::ErrorCode code) {
    using wsnet::ErrorCode;
    switch (code) {
        case ErrorCode::Usage: return WSNET_ERR_USAGE;
        case ErrorCode::Io: return WSNET_ERR_IO;
        case ErrorCode::Parse: return WSNET_ERR_PARSE;
        case ErrorCode::Schema: return WSNET_ERR_SCHEMA;
        case ErrorCode::EmptyInput: return WSNET_ERR_EMPTY_INPUT;
        case ErrorCode::Mismatch: return WSNET_ERR_MISMATCH;
        case ErrorCode::Undefined: return WSNET_ERR_UNDEFINED;
        case ErrorCode::Internal: return WSNET_ERR_INTERNAL;
    }
    return WSNET_ERR_INTERNAL;
}

/// Runs fn, translating exceptions into status codes.
template <typename Fn>
wsnet_status guarded(Fn&& fn) {
    try {
        fn();
        return WSNET_OK;
    } catch (const wsnet::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return WSNET_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return WSNET_ERR_INTERNAL;
    }
}

wsnet::MetricParams to_params(const wsnet_metric_params* params) {
    if (!params) throw wsnet::Error(wsnet::ErrorCode::Usage, "metric params must not be NULL");
    if (params->kind != WSNET_METRIC_LEVENSHTEIN && params->kind != WSNET_METRIC_JARO &&
        params->kind != WSNET_METRIC_JARO_WINKLER) {
        throw wsnet::Error(wsnet::ErrorCode::Usage, "unknown metric kind");
    }
    wsnet::MetricParams out;
    out.kind = static_cast<wsnet::MetricKind>(params->kind);
    out.jw_prefix_scale = params->jw_prefix_scale;
    out.jw_max_prefix = params->jw_max_prefix;
    out.validate();
    return out;
}

wsnet::LoadOptions to_load_options(const wsnet_load_options* options) {
    wsnet::LoadOptions out;
    if (!options) return out;
    switch (options->name_source) {
        case WSNET_NAME_SOURCE_ELEMENT: out.name_source = wsnet::NameSource::Element; break;
        case WSNET_NAME_SOURCE_PART: out.name_source = wsnet::NameSource::Part; break;
        case WSNET_NAME_SOURCE_QUALIFIED: out.name_source = wsnet::NameSource::Qualified; break;
        default:
            throw wsnet::Error(wsnet::ErrorCode::Usage, "unknown name source");
    }
    out.normalize.fold_case = options->fold_case != 0;
    out.strict = options->strict != 0;
    return out;
}

wsnet::WarningSink warning_sink(wsnet_warning_fn warn, void* user) {
    if (!warn) return nullptr;
    return [warn, user](const std::string& message) { warn(message.c_str(), user); };
}

void require(bool condition, const char* message) {
    if (!condition) throw wsnet::Error(wsnet::ErrorCode::Usage, message);
}

void fill_record(const wsnet::PropertyRecord& rec, wsnet_property_record* out) {
    out->metric = static_cast<wsnet_metric_kind>(rec.metric);
    out->threshold = rec.threshold;
    out->n_nodes = static_cast<int64_t>(rec.n_nodes);
    out->n_links = static_cast<int64_t>(rec.n_links);
    out->min_degree = static_cast<int64_t>(rec.min_degree);
    out->max_degree = static_cast<int64_t>(rec.max_degree);
    out->avg_degree = rec.avg_degree;
    out->density = rec.density.value_or(0.0);
    out->density_defined = rec.density.has_value();
    out->transitivity = rec.transitivity.value_or(0.0);
    out->transitivity_defined = rec.transitivity.has_value();
    out->degree_correlation = rec.degree_correlation.value_or(0.0);
    out->degree_correlation_defined = rec.degree_correlation.has_value();
    out->avg_distance = rec.avg_distance.value_or(0.0);
    out->avg_distance_defined = rec.avg_distance.has_value();
    out->n_isolated = static_cast<int64_t>(rec.n_isolated);
    out->n_similarities = rec.n_similarities ? static_cast<int64_t>(*rec.n_similarities) : -1;
}

}  // namespace

extern "C" {

const char* wsnet_status_name(wsnet_status status) {
    switch (status) {
        case WSNET_OK: return "ok";
        case WSNET_ERR_USAGE: return "usage";
        case WSNET_ERR_IO: return "io";
        case WSNET_ERR_PARSE: return "parse";
        case WSNET_ERR_SCHEMA: return "schema";
        case WSNET_ERR_EMPTY_INPUT: return "empty-input";
        case WSNET_ERR_MISMATCH: return "mismatch";
        case WSNET_ERR_UNDEFINED: return "undefined";
        case WSNET_ERR_INTERNAL: return "internal";
    }
    return "?";
}

const char* wsnet_last_error(void) { return g_last_error.c_str(); }

const char* wsnet_version(void) { return "0.1.0"; }

wsnet_metric_params wsnet_metric_defaults(wsnet_metric_kind kind) {
    wsnet_metric_params p;
    p.kind = kind;
    p.jw_prefix_scale = 0.1;
    p.jw_max_prefix = 4;
    return p;
}

wsnet_status wsnet_metric_from_name(const char* name, wsnet_metric_kind* out) {
    return guarded([&] {
        require(name && out, "name and out must not be NULL");
        *out = static_cast<wsnet_metric_kind>(wsnet::metric_from_name(name));
    });
}

const char* wsnet_metric_name(wsnet_metric_kind kind) {
    switch (kind) {
        case WSNET_METRIC_LEVENSHTEIN: return "levenshtein";
        case WSNET_METRIC_JARO: return "jaro";
        case WSNET_METRIC_JARO_WINKLER: return "jaro-winkler";
    }
    return "?";
}

wsnet_status wsnet_levenshtein_distance(const char* s1, const char* s2, int64_t* out) {
    return guarded([&] {
        require(s1 && s2 && out, "strings and out must not be NULL");
        *out = wsnet::levenshtein_distance(std::string_view(s1), std::string_view(s2));
    });
}

wsnet_status wsnet_similarity(const wsnet_metric_params* params, const char* s1, const char* s2,
                              double* out) {
    return guarded([&] {
        require(s1 && s2 && out, "strings and out must not be NULL");
        *out = wsnet::similarity(to_params(params), std::string_view(s1), std::string_view(s2));
    });
}

wsnet_status wsnet_match(const wsnet_metric_params* params, double threshold, const char* s1,
                         const char* s2, int* out) {
    return guarded([&] {
        require(s1 && s2 && out, "strings and out must not be NULL");
        require(threshold >= 0.0 && threshold <= 1.0, "threshold must lie in [0, 1]");
        *out = wsnet::match(to_params(params), threshold, s1, s2) ? 1 : 0;
    });
}

wsnet_load_options wsnet_load_defaults(void) {
    wsnet_load_options o;
    o.name_source = WSNET_NAME_SOURCE_ELEMENT;
    o.fold_case = 0;
    o.strict = 0;
    return o;
}

wsnet_status wsnet_corpus_load_json_file(const char* path, const wsnet_load_options* options,
                                         wsnet_warning_fn warn, void* user, wsnet_corpus** out) {
    return guarded([&] {
        require(path && out, "path and out must not be NULL");
        *out = new wsnet_corpus{
            wsnet::load_json_corpus_file(path, to_load_options(options), warning_sink(warn, user))};
    });
}

wsnet_status wsnet_corpus_load_json_text(const char* text, const wsnet_load_options* options,
                                         wsnet_warning_fn warn, void* user, wsnet_corpus** out) {
    return guarded([&] {
        require(text && out, "text and out must not be NULL");
        *out = new wsnet_corpus{
            wsnet::load_json_corpus(text, to_load_options(options), warning_sink(warn, user))};
    });
}

wsnet_status wsnet_corpus_load_wsdl_files(const char* const* paths, size_t n_paths,
                                          const wsnet_load_options* options,
                                          wsnet_file_error_fn on_error, wsnet_warning_fn warn,
                                          void* user, wsnet_corpus** out) {
    return guarded([&] {
        require(out && (paths || n_paths == 0), "paths and out must not be NULL");
        std::vector<std::string> files(paths, paths + n_paths);
        std::function<void(const std::string&, const std::string&)> error_cb;
        if (on_error) {
            error_cb = [on_error, user](const std::string& path, const std::string& message) {
                on_error(path.c_str(), message.c_str(), user);
            };
        }
        *out = new wsnet_corpus{wsnet::load_wsdl_corpus(files, to_load_options(options), error_cb,
                                                        warning_sink(warn, user))};
    });
}

wsnet_status wsnet_corpus_load_wsdl_text(const char* text, const char* service_id,
                                         const wsnet_load_options* options, wsnet_warning_fn warn,
                                         void* user, wsnet_corpus** out) {
    return guarded([&] {
        require(text && service_id && out, "text, service_id and out must not be NULL");
        std::vector<wsnet::ServiceDescription> services;
        services.push_back(wsnet::parse_wsdl(text, service_id, to_load_options(options),
                                             warning_sink(warn, user)));
        *out = new wsnet_corpus{wsnet::Corpus(std::move(services))};
    });
}

wsnet_status wsnet_corpus_save_json(const wsnet_corpus* corpus, const char* path) {
    return guarded([&] {
        require(corpus && path, "corpus and path must not be NULL");
        wsnet::save_json_corpus_file(corpus->impl, path);
    });
}

size_t wsnet_corpus_service_count(const wsnet_corpus* corpus) {
    return corpus ? corpus->impl.service_count() : 0;
}

size_t wsnet_corpus_operation_count(const wsnet_corpus* corpus) {
    return corpus ? corpus->impl.operation_count() : 0;
}

size_t wsnet_corpus_vocabulary_size(const wsnet_corpus* corpus) {
    return corpus ? corpus->impl.vocabulary().size() : 0;
}

const char* wsnet_corpus_service_id(const wsnet_corpus* corpus, size_t index) {
    if (!corpus || index >= corpus->impl.service_count()) return nullptr;
    return corpus->impl.services()[index].id.c_str();
}

const char* wsnet_corpus_fingerprint(const wsnet_corpus* corpus) {
    return corpus ? corpus->impl.fingerprint().c_str() : "";
}

void wsnet_corpus_free(wsnet_corpus* corpus) { delete corpus; }

wsnet_build_options wsnet_build_defaults(void) {
    wsnet_build_options o;
    o.vacuous_links = 0;
    o.jobs = 0;
    return o;
}

wsnet_status wsnet_network_build(const wsnet_corpus* corpus, const wsnet_metric_params* metric,
                                 double threshold, const wsnet_build_options* options,
                                 wsnet_network** out) {
    return guarded([&] {
        require(corpus && out, "corpus and out must not be NULL");
        wsnet::BuildOptions build;
        if (options) {
            build.vacuous_links = options->vacuous_links != 0;
            build.jobs = options->jobs;
        }
        build.jobs = wsnet::effective_jobs(build.jobs);
        *out = new wsnet_network{
            wsnet::build_network(corpus->impl, to_params(metric), threshold, build)};
    });
}

size_t wsnet_network_node_count(const wsnet_network* net) {
    return net ? net->impl.node_count() : 0;
}

size_t wsnet_network_link_count(const wsnet_network* net) {
    return net ? net->impl.link_count() : 0;
}

const char* wsnet_network_node_id(const wsnet_network* net, size_t index) {
    if (!net || index >= net->impl.node_count()) return nullptr;
    return net->impl.nodes[index].c_str();
}

wsnet_status wsnet_network_link(const wsnet_network* net, size_t index, const char** source,
                                const char** target) {
    return guarded([&] {
        require(net && source && target, "net, source and target must not be NULL");
        require(index < net->impl.link_count(), "link index out of range");
        const auto& [s, t] = net->impl.links[index];
        *source = net->impl.nodes[s].c_str();
        *target = net->impl.nodes[t].c_str();
    });
}

wsnet_status wsnet_network_export(const wsnet_network* net, wsnet_export_format format,
                                  const char* path) {
    return guarded([&] {
        require(net && path, "net and path must not be NULL");
        wsnet::ExportFormat fmt;
        switch (format) {
            case WSNET_EXPORT_DOT: fmt = wsnet::ExportFormat::Dot; break;
            case WSNET_EXPORT_GRAPHML: fmt = wsnet::ExportFormat::GraphML; break;
            case WSNET_EXPORT_JSON: fmt = wsnet::ExportFormat::Json; break;
            default: throw wsnet::Error(wsnet::ErrorCode::Usage, "unknown export format");
        }
        wsnet::export_network_file(net->impl, fmt, path);
    });
}

void wsnet_network_free(wsnet_network* net) { delete net; }

wsnet_status wsnet_network_properties(const wsnet_network* net, int jobs,
                                      wsnet_property_record* out) {
    return guarded([&] {
        require(net && out, "net and out must not be NULL");
        fill_record(wsnet::compute_all(net->impl, wsnet::effective_jobs(jobs)), out);
    });
}

wsnet_status wsnet_match_report_compute(const wsnet_corpus* corpus,
                                        const wsnet_metric_params* metric, double threshold,
                                        int count_exact_co_occurrence, int jobs,
                                        wsnet_match_report** out) {
    return guarded([&] {
        require(corpus && out, "corpus and out must not be NULL");
        *out = new wsnet_match_report{
            wsnet::similarity_pairs(corpus->impl, to_params(metric), threshold,
                                    count_exact_co_occurrence != 0, wsnet::effective_jobs(jobs))};
    });
}

size_t wsnet_match_report_count(const wsnet_match_report* report) {
    return report ? report->impl.pairs.size() : 0;
}

wsnet_status wsnet_match_report_get(const wsnet_match_report* report, size_t index,
                                    const char** name_a, const char** name_b, double* score) {
    return guarded([&] {
        require(report && name_a && name_b && score, "arguments must not be NULL");
        require(index < report->impl.pairs.size(), "pair index out of range");
        const wsnet::SimilarityPair& p = report->impl.pairs[index];
        *name_a = p.name_a.c_str();
        *name_b = p.name_b.c_str();
        *score = p.score;
    });
}

size_t wsnet_match_report_baseline_count(const wsnet_match_report* report) {
    return report ? report->impl.baseline_pairs.size() : 0;
}

size_t wsnet_match_report_additional_count(const wsnet_match_report* report) {
    if (!report) return 0;
    return report->impl.pairs.size() - report->impl.baseline_pairs.size();
}

wsnet_status wsnet_match_report_diff(const wsnet_match_report* low, const wsnet_match_report* high,
                                     wsnet_pair_list** out) {
    return guarded([&] {
        require(low && high && out, "low, high and out must not be NULL");
        *out = new wsnet_pair_list{wsnet::diff_reports(low->impl, high->impl)};
    });
}

size_t wsnet_pairs_count(const wsnet_pair_list* pairs) { return pairs ? pairs->impl.size() : 0; }

wsnet_status wsnet_pairs_get(const wsnet_pair_list* pairs, size_t index, const char** name_a,
                             const char** name_b, double* score) {
    return guarded([&] {
        require(pairs && name_a && name_b && score, "arguments must not be NULL");
        require(index < pairs->impl.size(), "pair index out of range");
        const wsnet::SimilarityPair& p = pairs->impl[index];
        *name_a = p.name_a.c_str();
        *name_b = p.name_b.c_str();
        *score = p.score;
    });
}

void wsnet_pairs_free(wsnet_pair_list* pairs) { delete pairs; }

void wsnet_match_report_free(wsnet_match_report* report) { delete report; }

wsnet_status wsnet_labels_load_csv(const char* path, int fold_case, wsnet_labels** out) {
    return guarded([&] {
        require(path && out, "path and out must not be NULL");
        wsnet::NormalizeOptions normalize;
        normalize.fold_case = fold_case != 0;
        *out = new wsnet_labels{wsnet::GroundTruthLabels::load_labels_file(path, normalize),
                                normalize};
    });
}

size_t wsnet_labels_count(const wsnet_labels* labels) { return labels ? labels->impl.size() : 0; }

int wsnet_labels_lookup(const wsnet_labels* labels, const char* name_a, const char* name_b) {
    if (!labels || !name_a || !name_b) return -1;
    try {
        const auto label = labels->impl.lookup(wsnet::normalize_name(name_a, labels->normalize),
                                               wsnet::normalize_name(name_b, labels->normalize));
        if (!label) return -1;
        return *label == wsnet::PairLabel::FalsePositive ? 1 : 0;
    } catch (const std::exception&) {
        return -1;
    }
}

void wsnet_labels_free(wsnet_labels* labels) { delete labels; }

wsnet_status wsnet_fp_report(const wsnet_match_report* report, const wsnet_labels* labels,
                             int strict_labels, wsnet_fp_stats* out) {
    return guarded([&] {
        require(report && labels && out, "report, labels and out must not be NULL");
        const wsnet::FpStats stats =
            wsnet::fp_report(report->impl, labels->impl, strict_labels != 0);
        out->n_retrieved = static_cast<int64_t>(stats.n_retrieved);
        out->n_false_positive = static_cast<int64_t>(stats.n_false_positive);
        out->fp_percent = stats.fp_percent.value_or(0.0);
        out->fp_percent_defined = stats.fp_percent.has_value();
        out->n_unlabeled = static_cast<int64_t>(stats.unlabeled.size());
    });
}

wsnet_sweep_config wsnet_sweep_defaults(void) {
    wsnet_sweep_config c;
    c.metrics = nullptr;
    c.n_metrics = 0;
    c.t_start = 0.0;
    c.t_end = 1.0;
    c.t_step = 0.01;
    c.count_exact_co_occurrence = 0;
    c.vacuous_links = 0;
    c.jobs = 0;
    c.progress = nullptr;
    c.user = nullptr;
    return c;
}

wsnet_status wsnet_sweep_run(const wsnet_corpus* corpus, const wsnet_sweep_config* config,
                             wsnet_sweep_result** out) {
    return guarded([&] {
        require(corpus && config && out, "corpus, config and out must not be NULL");
        wsnet::SweepConfig cfg;
        for (size_t i = 0; i < config->n_metrics; ++i) {
            require(config->metrics != nullptr, "metrics must not be NULL when n_metrics > 0");
            cfg.metrics.push_back(to_params(&config->metrics[i]));
        }
        cfg.t_start = config->t_start;
        cfg.t_end = config->t_end;
        cfg.t_step = config->t_step;
        cfg.count_exact_co_occurrence = config->count_exact_co_occurrence != 0;
        cfg.vacuous_links = config->vacuous_links != 0;
        cfg.jobs = config->jobs;
        if (config->progress) {
            wsnet_progress_fn progress = config->progress;
            void* user = config->user;
            cfg.progress = [progress, user](const std::string& stage, size_t done, size_t total) {
                progress(stage.c_str(), done, total, user);
            };
        }
        *out = new wsnet_sweep_result{wsnet::run_sweep(corpus->impl, cfg)};
    });
}

size_t wsnet_sweep_record_count(const wsnet_sweep_result* result) {
    return result ? result->impl.records.size() : 0;
}

wsnet_status wsnet_sweep_record(const wsnet_sweep_result* result, size_t index,
                                wsnet_property_record* out) {
    return guarded([&] {
        require(result && out, "result and out must not be NULL");
        require(index < result->impl.records.size(), "record index out of range");
        fill_record(result->impl.records[index], out);
    });
}

wsnet_status wsnet_sweep_write_csv(const wsnet_sweep_result* result, const char* path) {
    return guarded([&] {
        require(result && path, "result and path must not be NULL");
        wsnet::save_sweep_csv(result->impl, path);
    });
}

wsnet_status wsnet_sweep_proportional_variation(const wsnet_sweep_result* result,
                                                wsnet_metric_kind metric, double threshold,
                                                double* out) {
    return guarded([&] {
        require(result && out, "result and out must not be NULL");
        const auto variation = wsnet::proportional_variation(
            result->impl, static_cast<wsnet::MetricKind>(metric), threshold);
        if (!variation) {
            throw wsnet::Error(wsnet::ErrorCode::Undefined,
                               "proportional variation undefined: avg_degree at threshold 1 is 0");
        }
        *out = *variation;
    });
}

wsnet_status wsnet_sweep_find_inflection(const wsnet_sweep_result* result,
                                         wsnet_metric_kind metric, double* threshold,
                                         int* no_inflection) {
    return guarded([&] {
        require(result && threshold && no_inflection, "arguments must not be NULL");
        const wsnet::InflectionResult r =
            wsnet::find_inflection(result->impl, static_cast<wsnet::MetricKind>(metric));
        *threshold = r.threshold;
        *no_inflection = r.no_inflection ? 1 : 0;
    });
}

void wsnet_sweep_free(wsnet_sweep_result* result) { delete result; }

wsnet_status wsnet_chart_render(const char* csv_path, const char* property, const char* svg_path) {
    return guarded([&] {
        require(csv_path && property && svg_path, "paths and property must not be NULL");
        wsnet::render_chart_file(csv_path, property, svg_path);
    });
}

}  // extern "C"
