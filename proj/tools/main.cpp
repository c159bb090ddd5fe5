// Copyright the wsnet authors
// SPDX-License-Identifier: Apache-2.0
//
// wsnet command line front end. Everything goes through the public C API;
// diagnostics to stderr, data to files or stdout, exit 0 iff no error.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wsnet/wsnet.h"

namespace {

namespace fs = std::filesystem;

void print_warning(const char* message, void*) {
    std::cerr << "warning: " << message << "\n";
}

int api_error(const std::string& context) {
    std::cerr << "wsnet: " << context << ": " << wsnet_last_error() << "\n";
    return 1;
}

std::string quote_csv(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    return out + "\"";
}

std::string format_opt(double value, bool defined) {
    if (!defined) return "";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", value);
    return buf;
}

struct MetricFlags {
    std::string metric = "levenshtein";
    double jw_prefix_scale = 0.1;
    int jw_max_prefix = 4;

    bool resolve(wsnet_metric_params* out) const {
        wsnet_metric_kind kind;
        if (wsnet_metric_from_name(metric.c_str(), &kind) != WSNET_OK) return false;
        *out = wsnet_metric_defaults(kind);
        out->jw_prefix_scale = jw_prefix_scale;
        out->jw_max_prefix = jw_max_prefix;
        return true;
    }
};

struct LoadFlags {
    std::string name_source = "element";
    bool fold_case = false;
    bool strict = false;

    bool resolve(wsnet_load_options* out) const {
        *out = wsnet_load_defaults();
        if (name_source == "element") {
            out->name_source = WSNET_NAME_SOURCE_ELEMENT;
        } else if (name_source == "part") {
            out->name_source = WSNET_NAME_SOURCE_PART;
        } else if (name_source == "qualified") {
            out->name_source = WSNET_NAME_SOURCE_QUALIFIED;
        } else {
            std::cerr << "wsnet: unknown --name-source '" << name_source
                      << "' (valid: part, element, qualified)\n";
            return false;
        }
        out->fold_case = fold_case ? 1 : 0;
        out->strict = strict ? 1 : 0;
        return true;
    }
};

void add_metric_flags(CLI::App* cmd, MetricFlags& flags) {
    cmd->add_option("--metric", flags.metric, "similarity metric (levenshtein, jaro, jaro-winkler)")
        ->capture_default_str();
    cmd->add_option("--jw-prefix-scale", flags.jw_prefix_scale,
                    "jaro-winkler prefix scale p in [0, 0.25]")
        ->capture_default_str();
    cmd->add_option("--jw-max-prefix", flags.jw_max_prefix, "jaro-winkler prefix length cap")
        ->capture_default_str();
}

void add_load_flags(CLI::App* cmd, LoadFlags& flags) {
    cmd->add_option("--name-source", flags.name_source,
                    "parameter name rule for WSDL parts: part, element or qualified")
        ->capture_default_str();
    cmd->add_flag("--fold-case", flags.fold_case, "lowercase ASCII letters during normalization");
    cmd->add_flag("--strict", flags.strict, "reject unknown JSON corpus keys");
}

wsnet_corpus* load_corpus(const std::string& path, const wsnet_load_options& options) {
    wsnet_corpus* corpus = nullptr;
    if (wsnet_corpus_load_json_file(path.c_str(), &options, print_warning, nullptr, &corpus) !=
        WSNET_OK) {
        return nullptr;
    }
    return corpus;
}

// ---------------------------------------------------------------- extract

int cmd_extract(const std::vector<std::string>& inputs, const std::string& out_path,
                const LoadFlags& load_flags, bool keep_going) {
    wsnet_load_options options;
    if (!load_flags.resolve(&options)) return 1;

    std::vector<std::string> files;
    std::string json_input;
    for (const std::string& input : inputs) {
        std::error_code ec;
        if (fs::is_directory(input, ec)) {
            for (const auto& entry : fs::recursive_directory_iterator(input)) {
                if (entry.is_regular_file() && entry.path().extension() == ".wsdl") {
                    files.push_back(entry.path().string());
                }
            }
        } else if (fs::path(input).extension() == ".json") {
            if (!json_input.empty() || inputs.size() > 1) {
                std::cerr << "wsnet extract: a JSON corpus must be the only input\n";
                return 1;
            }
            json_input = input;
        } else {
            files.push_back(input);
        }
    }
    std::sort(files.begin(), files.end());

    wsnet_corpus* corpus = nullptr;
    size_t failed = 0;
    if (!json_input.empty()) {
        corpus = load_corpus(json_input, options);
        if (!corpus) return api_error("extract " + json_input);
    } else {
        if (files.empty()) {
            std::cerr << "wsnet extract: no input documents\n";
            return 1;
        }
        std::vector<const char*> paths;
        paths.reserve(files.size());
        for (const std::string& f : files) paths.push_back(f.c_str());
        auto on_error = [](const char* path, const char* message, void* user) {
            std::cerr << "error: " << path << ": " << message << "\n";
            ++*static_cast<size_t*>(user);
        };
        if (wsnet_corpus_load_wsdl_files(paths.data(), paths.size(), &options, on_error,
                                         print_warning, &failed, &corpus) != WSNET_OK) {
            return api_error("extract");
        }
        if (failed > 0 && !keep_going) {
            std::cerr << "wsnet extract: " << failed << " of " << files.size()
                      << " documents failed (use --keep-going to write the rest)\n";
            wsnet_corpus_free(corpus);
            return 1;
        }
        if (failed > 0) {
            std::cerr << "warning: skipped " << failed << " of " << files.size()
                      << " documents\n";
        }
    }

    if (wsnet_corpus_save_json(corpus, out_path.c_str()) != WSNET_OK) {
        wsnet_corpus_free(corpus);
        return api_error("extract: writing " + out_path);
    }
    std::cout << wsnet_corpus_service_count(corpus) << " services, "
              << wsnet_corpus_operation_count(corpus) << " operations, "
              << wsnet_corpus_vocabulary_size(corpus) << " distinct parameter names\n";
    wsnet_corpus_free(corpus);
    return 0;
}

// ------------------------------------------------------------------ build

int cmd_build(const std::string& corpus_path, const MetricFlags& metric_flags, double threshold,
              const std::string& format_name, const std::string& out_path,
              const LoadFlags& load_flags, bool vacuous_links, int jobs) {
    // Flag validation happens before any file is touched.
    if (threshold < 0.0 || threshold > 1.0) {
        std::cerr << "wsnet build: threshold must lie in [0, 1]\n";
        return 1;
    }
    wsnet_export_format format;
    if (format_name == "dot") {
        format = WSNET_EXPORT_DOT;
    } else if (format_name == "graphml") {
        format = WSNET_EXPORT_GRAPHML;
    } else if (format_name == "json") {
        format = WSNET_EXPORT_JSON;
    } else {
        std::cerr << "wsnet build: unknown --format '" << format_name
                  << "' (valid: dot, graphml, json)\n";
        return 1;
    }
    wsnet_metric_params metric;
    if (!metric_flags.resolve(&metric)) return api_error("build");
    wsnet_load_options options;
    if (!load_flags.resolve(&options)) return 1;

    wsnet_corpus* corpus = load_corpus(corpus_path, options);
    if (!corpus) return api_error("build: " + corpus_path);

    wsnet_build_options build = wsnet_build_defaults();
    build.vacuous_links = vacuous_links ? 1 : 0;
    build.jobs = jobs;
    wsnet_network* net = nullptr;
    if (wsnet_network_build(corpus, &metric, threshold, &build, &net) != WSNET_OK) {
        wsnet_corpus_free(corpus);
        return api_error("build");
    }
    if (wsnet_network_export(net, format, out_path.c_str()) != WSNET_OK) {
        wsnet_network_free(net);
        wsnet_corpus_free(corpus);
        return api_error("build: writing " + out_path);
    }

    wsnet_property_record rec;
    if (wsnet_network_properties(net, jobs, &rec) != WSNET_OK) {
        wsnet_network_free(net);
        wsnet_corpus_free(corpus);
        return api_error("build: properties");
    }
    char threshold_str[32];
    std::snprintf(threshold_str, sizeof(threshold_str), "%.2f", rec.threshold);
    std::cout << "metric=" << wsnet_metric_name(rec.metric) << " threshold=" << threshold_str
              << " nodes=" << rec.n_nodes << " links=" << rec.n_links
              << " min_degree=" << rec.min_degree << " max_degree=" << rec.max_degree
              << " avg_degree=" << format_opt(rec.avg_degree, true)
              << " density=" << format_opt(rec.density, rec.density_defined)
              << " transitivity=" << format_opt(rec.transitivity, rec.transitivity_defined)
              << " degree_correlation="
              << format_opt(rec.degree_correlation, rec.degree_correlation_defined)
              << " avg_distance=" << format_opt(rec.avg_distance, rec.avg_distance_defined)
              << " isolated=" << rec.n_isolated << "\n";

    wsnet_network_free(net);
    wsnet_corpus_free(corpus);
    return 0;
}

// ------------------------------------------------------------------ sweep

int cmd_sweep(const std::string& corpus_path, const std::string& metrics_arg, double from,
              double to, double step, const std::string& out_path, const LoadFlags& load_flags,
              bool count_exact, bool vacuous_links, int jobs, double jw_prefix_scale,
              int jw_max_prefix, bool quiet) {
    std::vector<wsnet_metric_params> metrics;
    std::string token;
    std::istringstream in(metrics_arg);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        wsnet_metric_kind kind;
        if (wsnet_metric_from_name(token.c_str(), &kind) != WSNET_OK) {
            return api_error("sweep");
        }
        wsnet_metric_params params = wsnet_metric_defaults(kind);
        params.jw_prefix_scale = jw_prefix_scale;
        params.jw_max_prefix = jw_max_prefix;
        metrics.push_back(params);
    }
    wsnet_load_options options;
    if (!load_flags.resolve(&options)) return 1;

    wsnet_corpus* corpus = load_corpus(corpus_path, options);
    if (!corpus) return api_error("sweep: " + corpus_path);

    wsnet_sweep_config config = wsnet_sweep_defaults();
    config.metrics = metrics.empty() ? nullptr : metrics.data();
    config.n_metrics = metrics.size();
    config.t_start = from;
    config.t_end = to;
    config.t_step = step;
    config.count_exact_co_occurrence = count_exact ? 1 : 0;
    config.vacuous_links = vacuous_links ? 1 : 0;
    config.jobs = jobs;
    if (!quiet) {
        config.progress = [](const char* stage, size_t done, size_t total, void*) {
            std::fprintf(stderr, "\r%-12s %zu/%zu", stage, done, total);
            if (done == total) std::fprintf(stderr, "\n");
        };
    }

    wsnet_sweep_result* result = nullptr;
    if (wsnet_sweep_run(corpus, &config, &result) != WSNET_OK) {
        wsnet_corpus_free(corpus);
        return api_error("sweep");
    }
    const wsnet_status st = wsnet_sweep_write_csv(result, out_path.c_str());
    wsnet_sweep_free(result);
    wsnet_corpus_free(corpus);
    if (st != WSNET_OK) return api_error("sweep: writing " + out_path);
    return 0;
}

// ------------------------------------------------------------------- diff

int cmd_diff(const std::string& corpus_path, const MetricFlags& metric_flags, double low,
             double high, const std::string& out_path, const LoadFlags& load_flags,
             bool count_exact, int jobs) {
    wsnet_metric_params metric;
    if (!metric_flags.resolve(&metric)) return api_error("diff");
    wsnet_load_options options;
    if (!load_flags.resolve(&options)) return 1;

    wsnet_corpus* corpus = load_corpus(corpus_path, options);
    if (!corpus) return api_error("diff: " + corpus_path);

    wsnet_match_report* report_low = nullptr;
    wsnet_match_report* report_high = nullptr;
    wsnet_pair_list* pairs = nullptr;
    const int co = count_exact ? 1 : 0;
    if (wsnet_match_report_compute(corpus, &metric, low, co, jobs, &report_low) != WSNET_OK ||
        wsnet_match_report_compute(corpus, &metric, high, co, jobs, &report_high) != WSNET_OK ||
        wsnet_match_report_diff(report_low, report_high, &pairs) != WSNET_OK) {
        wsnet_match_report_free(report_low);
        wsnet_match_report_free(report_high);
        wsnet_corpus_free(corpus);
        return api_error("diff");
    }

    std::ostringstream out;
    out << "name_a,name_b,score\n";
    for (size_t i = 0; i < wsnet_pairs_count(pairs); ++i) {
        const char* a = nullptr;
        const char* b = nullptr;
        double score = 0;
        wsnet_pairs_get(pairs, i, &a, &b, &score);
        char score_str[32];
        std::snprintf(score_str, sizeof(score_str), "%.6f", score);
        out << quote_csv(a) << ',' << quote_csv(b) << ',' << score_str << "\n";
    }
    std::cerr << wsnet_pairs_count(pairs) << " pairs at " << low << " beyond " << high << "\n";

    int rc = 0;
    if (out_path.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
        file << out.str();
        if (!file) {
            std::cerr << "wsnet diff: cannot write " << out_path << "\n";
            rc = 1;
        }
    }
    wsnet_pairs_free(pairs);
    wsnet_match_report_free(report_low);
    wsnet_match_report_free(report_high);
    wsnet_corpus_free(corpus);
    return rc;
}

// -------------------------------------------------------------- fp-report

int cmd_fp_report(const std::string& corpus_path, const MetricFlags& metric_flags,
                  double threshold, const std::string& labels_path, bool strict_labels,
                  const LoadFlags& load_flags, bool count_exact, int jobs) {
    wsnet_metric_params metric;
    if (!metric_flags.resolve(&metric)) return api_error("fp-report");
    wsnet_load_options options;
    if (!load_flags.resolve(&options)) return 1;

    wsnet_corpus* corpus = load_corpus(corpus_path, options);
    if (!corpus) return api_error("fp-report: " + corpus_path);

    wsnet_labels* labels = nullptr;
    if (wsnet_labels_load_csv(labels_path.c_str(), options.fold_case, &labels) != WSNET_OK) {
        wsnet_corpus_free(corpus);
        return api_error("fp-report: " + labels_path);
    }

    wsnet_match_report* report = nullptr;
    wsnet_fp_stats stats;
    if (wsnet_match_report_compute(corpus, &metric, threshold, count_exact ? 1 : 0, jobs,
                                   &report) != WSNET_OK ||
        wsnet_fp_report(report, labels, strict_labels ? 1 : 0, &stats) != WSNET_OK) {
        wsnet_match_report_free(report);
        wsnet_labels_free(labels);
        wsnet_corpus_free(corpus);
        return api_error("fp-report");
    }

    std::cout << "retrieved=" << stats.n_retrieved
              << " labeled=" << (stats.n_retrieved - stats.n_unlabeled)
              << " false_positives=" << stats.n_false_positive
              << " fp_percent=" << format_opt(stats.fp_percent, stats.fp_percent_defined)
              << " unlabeled=" << stats.n_unlabeled << "\n";
    // The unlabeled pairs follow so they can be labeled and fed back in.
    for (size_t i = 0; i < wsnet_match_report_count(report); ++i) {
        const char* a = nullptr;
        const char* b = nullptr;
        double score = 0;
        wsnet_match_report_get(report, i, &a, &b, &score);
        if (wsnet_labels_lookup(labels, a, b) == -1) {
            std::cout << quote_csv(a) << ',' << quote_csv(b) << "\n";
        }
    }

    wsnet_match_report_free(report);
    wsnet_labels_free(labels);
    wsnet_corpus_free(corpus);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wsnet - web service composition network toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags like --jobs may follow the subcommand
    app.set_version_flag("--version", std::string(wsnet_version()));

    int jobs = 0;
    app.add_option("--jobs", jobs, "worker threads (0: all cores)")->capture_default_str();

    // extract
    auto* extract = app.add_subcommand("extract", "parse WSDL files or a JSON corpus into the "
                                                  "normalized corpus JSON");
    std::vector<std::string> extract_inputs;
    std::string extract_out;
    LoadFlags extract_load;
    bool keep_going = false;
    extract->add_option("inputs", extract_inputs, "WSDL files, directories or one JSON corpus")
        ->required();
    extract->add_option("-o,--out", extract_out, "output corpus JSON path")->required();
    add_load_flags(extract, extract_load);
    extract->add_flag("--keep-going", keep_going, "skip unparseable documents");

    // build
    auto* build = app.add_subcommand("build", "build an interaction network at one threshold");
    std::string build_corpus, build_format = "dot", build_out;
    MetricFlags build_metric;
    LoadFlags build_load;
    double build_threshold = 1.0;
    bool build_vacuous = false;
    build->add_option("corpus", build_corpus, "corpus JSON path")->required();
    add_metric_flags(build, build_metric);
    build->add_option("--threshold", build_threshold, "match threshold in [0, 1]")
        ->capture_default_str();
    build->add_option("--format", build_format, "dot, graphml or json")->capture_default_str();
    build->add_option("-o,--out", build_out, "output network path")->required();
    add_load_flags(build, build_load);
    build->add_flag("--vacuous-links", build_vacuous,
                    "services needing no inputs accept links from everyone");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "sweep the threshold grid and write property "
                                              "records as CSV");
    std::string sweep_corpus, sweep_out;
    std::string sweep_metrics = "levenshtein,jaro,jaro-winkler";
    double sweep_from = 0.0, sweep_to = 1.0, sweep_step = 0.01;
    double sweep_jw_scale = 0.1;
    int sweep_jw_prefix = 4;
    LoadFlags sweep_load;
    bool sweep_count_exact = false, sweep_vacuous = false, sweep_quiet = false;
    sweep->add_option("corpus", sweep_corpus, "corpus JSON path")->required();
    sweep->add_option("--metrics", sweep_metrics, "comma-separated metric list")
        ->capture_default_str();
    sweep->add_option("--from", sweep_from, "grid start")->capture_default_str();
    sweep->add_option("--to", sweep_to, "grid end")->capture_default_str();
    sweep->add_option("--step", sweep_step, "grid step")->capture_default_str();
    sweep->add_option("--jw-prefix-scale", sweep_jw_scale, "jaro-winkler prefix scale")
        ->capture_default_str();
    sweep->add_option("--jw-max-prefix", sweep_jw_prefix, "jaro-winkler prefix cap")
        ->capture_default_str();
    sweep->add_option("-o,--out", sweep_out, "output CSV path")->required();
    add_load_flags(sweep, sweep_load);
    sweep->add_flag("--count-exact-co-occurrence", sweep_count_exact,
                    "count names occurring in both roles as exact pairs");
    sweep->add_flag("--vacuous-links", sweep_vacuous,
                    "services needing no inputs accept links from everyone");
    sweep->add_flag("--quiet", sweep_quiet, "suppress progress output");

    // diff
    auto* diff = app.add_subcommand("diff", "similarity pairs a lower threshold adds over a "
                                            "higher one");
    std::string diff_corpus, diff_out;
    MetricFlags diff_metric;
    LoadFlags diff_load;
    double diff_low = 0.96, diff_high = 1.0;
    bool diff_count_exact = false;
    diff->add_option("corpus", diff_corpus, "corpus JSON path")->required();
    add_metric_flags(diff, diff_metric);
    diff->add_option("--low", diff_low, "lower threshold")->capture_default_str();
    diff->add_option("--high", diff_high, "higher threshold")->capture_default_str();
    diff->add_option("-o,--out", diff_out, "output CSV path (default: stdout)");
    add_load_flags(diff, diff_load);
    diff->add_flag("--count-exact-co-occurrence", diff_count_exact,
                   "count names occurring in both roles as exact pairs");

    // fp-report
    auto* fp = app.add_subcommand("fp-report", "false-positive statistics against a labels file");
    std::string fp_corpus, fp_labels;
    MetricFlags fp_metric;
    LoadFlags fp_load;
    double fp_threshold = 0.75;
    bool fp_strict = false, fp_count_exact = false;
    fp->add_option("corpus", fp_corpus, "corpus JSON path")->required();
    add_metric_flags(fp, fp_metric);
    fp->add_option("--threshold", fp_threshold, "match threshold")->capture_default_str();
    fp->add_option("--labels", fp_labels, "labels CSV (name_a,name_b,label)")->required();
    add_load_flags(fp, fp_load);
    fp->add_flag("--strict-labels", fp_strict,
                 "count unlabeled pairs in the percentage denominator");
    fp->add_flag("--count-exact-co-occurrence", fp_count_exact,
                 "count names occurring in both roles as exact pairs");

    // chart
    auto* chart = app.add_subcommand("chart", "render one sweep CSV property as an SVG chart");
    std::string chart_csv, chart_property, chart_out;
    chart->add_option("csv", chart_csv, "sweep CSV path")->required();
    chart->add_option("--property", chart_property, "column to plot (e.g. avg_degree)")
        ->required();
    chart->add_option("-o,--out", chart_out, "output SVG path")->required();

    CLI11_PARSE(app, argc, argv);

    if (extract->parsed()) {
        return cmd_extract(extract_inputs, extract_out, extract_load, keep_going);
    }
    if (build->parsed()) {
        return cmd_build(build_corpus, build_metric, build_threshold, build_format, build_out,
                         build_load, build_vacuous, jobs);
    }
    if (sweep->parsed()) {
        return cmd_sweep(sweep_corpus, sweep_metrics, sweep_from, sweep_to, sweep_step, sweep_out,
                         sweep_load, sweep_count_exact, sweep_vacuous, jobs, sweep_jw_scale,
                         sweep_jw_prefix, sweep_quiet);
    }
    if (diff->parsed()) {
        return cmd_diff(diff_corpus, diff_metric, diff_low, diff_high, diff_out, diff_load,
                        diff_count_exact, jobs);
    }
    if (fp->parsed()) {
        return cmd_fp_report(fp_corpus, fp_metric, fp_threshold, fp_labels, fp_strict, fp_load,
                             fp_count_exact, jobs);
    }
    if (chart->parsed()) {
        if (wsnet_chart_render(chart_csv.c_str(), chart_property.c_str(), chart_out.c_str()) !=
            WSNET_OK) {
            return api_error("chart");
        }
        return 0;
    }
    return 0;
}
