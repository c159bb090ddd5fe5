// Copyright the wsnet authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace wsnet {

enum class MetricKind { Levenshtein, Jaro, JaroWinkler };

const char* metric_name(MetricKind kind);

/// Parses "levenshtein", "jaro" or "jaro-winkler"; throws Error(Usage)
/// on anything else.
MetricKind metric_from_name(std::string_view name);

/// A similarity scoring function over parameter names. The Jaro-Winkler
/// prefix parameters are ignored by the other two kinds.
struct MetricParams {
    MetricKind kind = MetricKind::Levenshtein;
    double jw_prefix_scale = 0.1;  // p, in [0, 0.25]
    int jw_max_prefix = 4;         // prefix length cap, >= 0

    /// Throws Error(Usage) unless p in [0,0.25], cap >= 0 and p*cap <= 1.
    /// p*cap <= 1 keeps Jaro-Winkler scores inside [0,1].
    void validate() const;
};

/// Minimum number of single-character insertions, deletions and
/// substitutions transforming one string into the other. Counted over
/// Unicode scalar values, not bytes.
uint32_t levenshtein_distance(std::u32string_view s1, std::u32string_view s2);
uint32_t levenshtein_distance(std::string_view s1, std::string_view s2);

/// 1 - distance / max(|s1|, |s2|); 1 when both strings are empty.
double levenshtein_similarity(std::u32string_view s1, std::u32string_view s2);
double levenshtein_similarity(std::string_view s1, std::string_view s2);

/// Jaro score: characters match when equal and not farther apart than
/// floor(max(|s1|,|s2|)/2) - 1 (clamped at 0), paired greedily left to
/// right; transpositions are half the positions where the two matched
/// sequences differ. 0 when nothing matches, 1 iff the strings are equal.
double jaro_similarity(std::u32string_view s1, std::u32string_view s2);
double jaro_similarity(std::string_view s1, std::string_view s2);

/// Jaro boosted by the common prefix: dw = dj + l*p*(1 - dj) with l the
/// common prefix length capped at max_prefix. Never below plain Jaro.
double jaro_winkler_similarity(std::u32string_view s1, std::u32string_view s2,
                               double prefix_scale = 0.1, int max_prefix = 4);
double jaro_winkler_similarity(std::string_view s1, std::string_view s2,
                               double prefix_scale = 0.1, int max_prefix = 4);

double similarity(const MetricParams& params, std::u32string_view s1, std::u32string_view s2);
double similarity(const MetricParams& params, std::string_view s1, std::string_view s2);

/// The matching function: names are similar when the score reaches the
/// threshold (inclusive, so a threshold of 1 still accepts exact matches).
bool match(const MetricParams& params, double threshold, std::string_view p1, std::string_view p2);

}  // namespace wsnet
