// Copyright the wsnet authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "network.hpp"

namespace wsnet {

/// One row of topology measures for a network. Degree means total degree
/// (in + out). Fields that are undefined for the input (zero-variance
/// assortativity, no reachable pair, too few nodes) stay empty rather
/// than defaulting to 0.
struct PropertyRecord {
    MetricKind metric = MetricKind::Levenshtein;
    double threshold = 0.0;
    uint64_t n_nodes = 0;
    uint64_t n_links = 0;
    uint64_t min_degree = 0;
    uint64_t max_degree = 0;
    double avg_degree = 0.0;  // 2E/N
    std::optional<double> density;            // E/(N(N-1))
    std::optional<double> transitivity;       // undirected projection
    std::optional<double> degree_correlation; // undirected projection, total degrees
    std::optional<double> avg_distance;       // directed, reachable pairs only
    uint64_t n_isolated = 0;
    std::optional<uint64_t> n_similarities;   // filled by sweep, not by compute_all
};

struct DegreeStats {
    uint64_t min = 0;
    uint64_t max = 0;
    double average = 0.0;
};

/// Min/max/average of total degree. Throws Error(Undefined) on an empty
/// network.
DegreeStats degree_stats(const InteractionNetwork& net);

/// E/(N(N-1)) for a directed simple graph without self-links. Throws
/// Error(Undefined) when N < 2.
double density(const InteractionNetwork& net);

/// Global clustering on the undirected projection: 3 * triangles /
/// connected triples; 0 when there is no connected triple. Throws
/// Error(Undefined) when N < 3.
double transitivity(const InteractionNetwork& net);

/// Degree assortativity: Pearson correlation of total degrees across the
/// endpoints of every undirected-projection link, each link contributing
/// both orientations. nullopt when all endpoint degrees are equal (zero
/// variance). Throws Error(Undefined) on a network without links.
std::optional<double> degree_correlation(const InteractionNetwork& net);

/// Mean directed shortest-path length over ordered pairs (u,v), u != v,
/// with v reachable from u; unreachable pairs and isolated nodes are
/// excluded. nullopt when no pair is reachable.
std::optional<double> average_distance(const InteractionNetwork& net, int jobs = 1);

/// Nodes with total degree zero.
uint64_t isolated_count(const InteractionNetwork& net);

/// All measures in one record; undefined component results become empty
/// fields instead of aborting. Throws Error(Undefined) only for an empty
/// network.
PropertyRecord compute_all(const InteractionNetwork& net, int jobs = 1);

}  // namespace wsnet
