// Copyright the wsnet authors
// SPDX-License-Identifier: Apache-2.0
#include "metrics.hpp"

#include <algorithm>
#include <vector>

#include "error.hpp"
#include "unicode.hpp"

namespace wsnet {

const char* metric_name(MetricKind kind) {
    switch (kind) {
        case MetricKind::Levenshtein: return "levenshtein";
        case MetricKind::Jaro: return "jaro";
        case MetricKind::JaroWinkler: return "jaro-winkler";
    }
    return "?";
}

MetricKind metric_from_name(std::string_view name) {
    if (name == "levenshtein") return MetricKind::Levenshtein;
    if (name == "jaro") return MetricKind::Jaro;
    if (name == "jaro-winkler") return MetricKind::JaroWinkler;
    throw Error(ErrorCode::Usage, "unknown metric '" + std::string(name) +
                                      "' (valid: levenshtein, jaro, jaro-winkler)");
}

void MetricParams::validate() const {
    if (jw_prefix_scale < 0.0 || jw_prefix_scale > 0.25) {
        throw Error(ErrorCode::Usage, "jaro-winkler prefix scale must lie in [0, 0.25]");
    }
    if (jw_max_prefix < 0) {
        throw Error(ErrorCode::Usage, "jaro-winkler max prefix must be >= 0");
    }
    if (jw_prefix_scale * jw_max_prefix > 1.0) {
        throw Error(ErrorCode::Usage,
                    "jaro-winkler prefix scale * max prefix must not exceed 1");
    }
}

uint32_t levenshtein_distance(std::u32string_view s1, std::u32string_view s2) {
    const size_t n1 = s1.size();
    const size_t n2 = s2.size();
    if (n1 == 0) return static_cast<uint32_t>(n2);
    if (n2 == 0) return static_cast<uint32_t>(n1);

    std::vector<uint32_t> prev(n2 + 1);
    std::vector<uint32_t> cur(n2 + 1);
    for (size_t j = 0; j <= n2; ++j) prev[j] = static_cast<uint32_t>(j);
    for (size_t i = 1; i <= n1; ++i) {
        cur[0] = static_cast<uint32_t>(i);
        for (size_t j = 1; j <= n2; ++j) {
            const uint32_t sub = prev[j - 1] + (s1[i - 1] == s2[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[n2];
}

double levenshtein_similarity(std::u32string_view s1, std::u32string_view s2) {
    const size_t longest = std::max(s1.size(), s2.size());
    if (longest == 0) return 1.0;
    return 1.0 - static_cast<double>(levenshtein_distance(s1, s2)) /
                     static_cast<double>(longest);
}

double jaro_similarity(std::u32string_view s1, std::u32string_view s2) {
    if (s1 == s2) return 1.0;
    if (s1.empty() || s2.empty()) return 0.0;

    const size_t n1 = s1.size();
    const size_t n2 = s2.size();
    const size_t half = std::max(n1, n2) / 2;
    const size_t window = half > 0 ? half - 1 : 0;

    std::vector<char> matched2(n2, 0);
    std::vector<char32_t> seq1;  // matched characters in s1 scan order
    seq1.reserve(std::min(n1, n2));
    for (size_t i = 0; i < n1; ++i) {
        const size_t lo = i > window ? i - window : 0;
        const size_t hi = std::min(n2 - 1, i + window);
        for (size_t j = lo; j <= hi; ++j) {
            if (!matched2[j] && s1[i] == s2[j]) {
                matched2[j] = 1;
                seq1.push_back(s1[i]);
                break;
            }
        }
    }
    const size_t m = seq1.size();
    if (m == 0) return 0.0;

    // Half the positions where the matched sequence read off s1 differs
    // from the one read off s2 are transpositions.
    size_t mismatches = 0;
    size_t k = 0;
    for (size_t j = 0; j < n2; ++j) {
        if (!matched2[j]) continue;
        if (s2[j] != seq1[k]) ++mismatches;
        ++k;
    }
    const double t = static_cast<double>(mismatches) / 2.0;
    const double md = static_cast<double>(m);
    return (md / static_cast<double>(n1) + md / static_cast<double>(n2) + (md - t) / md) / 3.0;
}

double jaro_winkler_similarity(std::u32string_view s1, std::u32string_view s2,
                               double prefix_scale, int max_prefix) {
    const double dj = jaro_similarity(s1, s2);
    size_t l = 0;
    const size_t limit = std::min({s1.size(), s2.size(), static_cast<size_t>(max_prefix)});
    while (l < limit && s1[l] == s2[l]) ++l;
    return dj + static_cast<double>(l) * prefix_scale * (1.0 - dj);
}

double similarity(const MetricParams& params, std::u32string_view s1, std::u32string_view s2) {
    switch (params.kind) {
        case MetricKind::Levenshtein: return levenshtein_similarity(s1, s2);
        case MetricKind::Jaro: return jaro_similarity(s1, s2);
        case MetricKind::JaroWinkler:
            params.validate();
            return jaro_winkler_similarity(s1, s2, params.jw_prefix_scale, params.jw_max_prefix);
    }
    throw Error(ErrorCode::Internal, "unhandled metric kind");
}

uint32_t levenshtein_distance(std::string_view s1, std::string_view s2) {
    return levenshtein_distance(decode_utf8(s1), decode_utf8(s2));
}

double levenshtein_similarity(std::string_view s1, std::string_view s2) {
    return levenshtein_similarity(decode_utf8(s1), decode_utf8(s2));
}

double jaro_similarity(std::string_view s1, std::string_view s2) {
    return jaro_similarity(decode_utf8(s1), decode_utf8(s2));
}

double jaro_winkler_similarity(std::string_view s1, std::string_view s2,
                               double prefix_scale, int max_prefix) {
    return jaro_winkler_similarity(decode_utf8(s1), decode_utf8(s2), prefix_scale, max_prefix);
}

double similarity(const MetricParams& params, std::string_view s1, std::string_view s2) {
    return similarity(params, decode_utf8(s1), decode_utf8(s2));
}

bool match(const MetricParams& params, double threshold, std::string_view p1, std::string_view p2) {
    return similarity(params, p1, p2) >= threshold;
}

}  // namespace wsnet
