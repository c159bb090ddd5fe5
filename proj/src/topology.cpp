// Copyright the wsnet authors
// SPDX-License-Identifier: Apache-2.0
#include "topology.hpp"

#include <algorithm>
#include <vector>

#include "error.hpp"
#include "parallel.hpp"

namespace wsnet {

namespace {

struct Adjacency {
    size_t n = 0;
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint64_t> degree;  // in + out
    std::vector<std::vector<uint32_t>> undirected;  // deduplicated projection

    explicit Adjacency(const InteractionNetwork& net) {
        n = net.node_count();
        out.resize(n);
        degree.assign(n, 0);
        undirected.resize(n);
        for (const auto& [s, t] : net.links) {
            out[s].push_back(t);
            ++degree[s];
            ++degree[t];
            undirected[s].push_back(t);
            undirected[t].push_back(s);
        }
        for (auto& nbrs : undirected) {
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        }
    }
};

void require_nodes(const InteractionNetwork& net, size_t minimum, const char* what) {
    if (net.node_count() < minimum) {
        throw Error(ErrorCode::Undefined, std::string(what) + " is undefined for a network with " +
                                              std::to_string(net.node_count()) + " node(s)");
    }
}

DegreeStats degree_stats_from(const Adjacency& adj, size_t n_links) {
    DegreeStats stats;
    stats.min = *std::min_element(adj.degree.begin(), adj.degree.end());
    stats.max = *std::max_element(adj.degree.begin(), adj.degree.end());
    stats.average = 2.0 * static_cast<double>(n_links) / static_cast<double>(adj.n);
    return stats;
}

double transitivity_from(const Adjacency& adj) {
    const size_t n = adj.n;
    const size_t words = (n + 63) / 64;
    std::vector<uint64_t> bits(n * words, 0);
    for (size_t u = 0; u < n; ++u) {
        for (uint32_t v : adj.undirected[u]) bits[u * words + v / 64] |= 1ULL << (v % 64);
    }
    uint64_t triples = 0;
    uint64_t closed = 0;  // ordered around each edge; 3 per triangle
    for (size_t u = 0; u < n; ++u) {
        const uint64_t d = adj.undirected[u].size();
        triples += d * (d - 1) / 2;
        const uint64_t* row_u = bits.data() + u * words;
        for (uint32_t v : adj.undirected[u]) {
            if (v <= u) continue;  // each undirected edge once
            const uint64_t* row_v = bits.data() + static_cast<size_t>(v) * words;
            uint64_t common = 0;
            for (size_t w = 0; w < words; ++w) common += __builtin_popcountll(row_u[w] & row_v[w]);
            closed += common;
        }
    }
    if (triples == 0) return 0.0;
    // closed counts each triangle once per edge, i.e. 3 * triangles.
    return static_cast<double>(closed) / static_cast<double>(triples);
}

std::optional<double> degree_correlation_from(const Adjacency& adj) {
    // Exact integer sums; each undirected link contributes (du,dv) and
    // (dv,du), so both marginals coincide.
    uint64_t count = 0;
    uint64_t sum_x = 0;
    uint64_t sum_xx = 0;
    uint64_t sum_xy = 0;
    for (size_t u = 0; u < adj.n; ++u) {
        for (uint32_t v : adj.undirected[u]) {
            if (v <= u) continue;
            const uint64_t du = adj.degree[u];
            const uint64_t dv = adj.degree[v];
            count += 2;
            sum_x += du + dv;
            sum_xx += du * du + dv * dv;
            sum_xy += 2 * du * dv;
        }
    }
    const auto num = static_cast<__int128>(count) * sum_xy - static_cast<__int128>(sum_x) * sum_x;
    const auto den = static_cast<__int128>(count) * sum_xx - static_cast<__int128>(sum_x) * sum_x;
    if (den == 0) return std::nullopt;
    return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
}

struct DistanceSum {
    uint64_t total = 0;
    uint64_t reachable_pairs = 0;
};

std::optional<double> average_distance_from(const Adjacency& adj, int jobs) {
    const size_t n = adj.n;
    std::vector<DistanceSum> per_source(n);
    parallel_for(n, jobs, [&](size_t source) {
        if (adj.out[source].empty()) return;
        std::vector<uint32_t> dist(n, UINT32_MAX);
        std::vector<uint32_t> queue;
        queue.reserve(n);
        dist[source] = 0;
        queue.push_back(static_cast<uint32_t>(source));
        size_t head = 0;
        DistanceSum& sum = per_source[source];
        while (head < queue.size()) {
            const uint32_t u = queue[head++];
            const uint32_t next = dist[u] + 1;
            for (uint32_t v : adj.out[u]) {
                if (dist[v] != UINT32_MAX) continue;
                dist[v] = next;
                sum.total += next;
                ++sum.reachable_pairs;
                queue.push_back(v);
            }
        }
    });
    DistanceSum all;
    for (const DistanceSum& s : per_source) {
        all.total += s.total;
        all.reachable_pairs += s.reachable_pairs;
    }
    if (all.reachable_pairs == 0) return std::nullopt;
    return static_cast<double>(all.total) / static_cast<double>(all.reachable_pairs);
}

uint64_t isolated_from(const Adjacency& adj) {
    return static_cast<uint64_t>(std::count(adj.degree.begin(), adj.degree.end(), 0));
}

}  // namespace

DegreeStats degree_stats(const InteractionNetwork& net) {
    require_nodes(net, 1, "degree");
    return degree_stats_from(Adjacency(net), net.link_count());
}

double density(const InteractionNetwork& net) {
    require_nodes(net, 2, "density");
    const double n = static_cast<double>(net.node_count());
    return static_cast<double>(net.link_count()) / (n * (n - 1.0));
}

double transitivity(const InteractionNetwork& net) {
    require_nodes(net, 3, "transitivity");
    return transitivity_from(Adjacency(net));
}

std::optional<double> degree_correlation(const InteractionNetwork& net) {
    if (net.link_count() == 0) {
        throw Error(ErrorCode::Undefined, "degree correlation is undefined without links");
    }
    return degree_correlation_from(Adjacency(net));
}

std::optional<double> average_distance(const InteractionNetwork& net, int jobs) {
    return average_distance_from(Adjacency(net), jobs);
}

uint64_t isolated_count(const InteractionNetwork& net) {
    return isolated_from(Adjacency(net));
}

PropertyRecord compute_all(const InteractionNetwork& net, int jobs) {
    require_nodes(net, 1, "topology");
    const Adjacency adj(net);

    PropertyRecord rec;
    rec.metric = net.metric.kind;
    rec.threshold = net.threshold;
    rec.n_nodes = net.node_count();
    rec.n_links = net.link_count();

    const DegreeStats deg = degree_stats_from(adj, net.link_count());
    rec.min_degree = deg.min;
    rec.max_degree = deg.max;
    rec.avg_degree = deg.average;
    if (rec.n_nodes >= 2) rec.density = density(net);
    if (rec.n_nodes >= 3) rec.transitivity = transitivity_from(adj);
    if (rec.n_links > 0) rec.degree_correlation = degree_correlation_from(adj);
    rec.avg_distance = average_distance_from(adj, jobs);
    rec.n_isolated = isolated_from(adj);
    return rec;
}

}  // namespace wsnet
