// Copyright the wsnet authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "error.hpp"
#include "oracles.hpp"
#include "test_util.hpp"
#include "topology.hpp"

using namespace wsnet;

namespace {

InteractionNetwork make_net(size_t n, std::vector<std::pair<uint32_t, uint32_t>> links) {
    InteractionNetwork net;
    for (size_t i = 0; i < n; ++i) net.nodes.push_back("n" + std::to_string(i));
    std::sort(links.begin(), links.end());
    net.links = std::move(links);
    return net;
}

InteractionNetwork from_digraph(const oracle::Digraph& g) {
    return make_net(g.n, g.edges);
}

bool close(double a, double b, double rel = 1e-12) {
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= rel * scale;
}

}  // namespace

TEST_CASE("degree stats") {
    // Directed triangle cycle: every node has in 1 + out 1.
    const auto triangle = make_net(3, {{0, 1}, {1, 2}, {2, 0}});
    const DegreeStats stats = degree_stats(triangle);
    CHECK(stats.min == 2);
    CHECK(stats.max == 2);
    CHECK(stats.average == 2.0);

    const auto lonely = make_net(1, {});
    const DegreeStats zero = degree_stats(lonely);
    CHECK(zero.min == 0);
    CHECK(zero.max == 0);
    CHECK(zero.average == 0.0);

    CHECK_THROWS_AS(degree_stats(make_net(0, {})), Error);
}

TEST_CASE("average degree on a 894-node network") {
    // 894 nodes, 4470 links: average total degree 2E/N = 10.
    std::vector<std::pair<uint32_t, uint32_t>> links;
    uint32_t s = 0;
    for (uint32_t i = 0; i < 4470; ++i) {
        links.emplace_back(s, (s + 1 + i % 892) % 894);
        s = (s + 1) % 894;
    }
    const auto net = make_net(894, links);
    REQUIRE(net.link_count() == 4470);
    CHECK(degree_stats(net).average == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("density") {
    const auto complete3 = make_net(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
    CHECK(density(complete3) == 1.0);
    CHECK(density(make_net(3, {{0, 1}})) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK_THROWS_AS(density(make_net(1, {})), Error);
    // n=894, E=4793 sits at the reference value 0.006.
    CHECK(4793.0 / (894.0 * 893.0) == doctest::Approx(0.006).epsilon(1e-2));
}

TEST_CASE("transitivity") {
    const auto triangle = make_net(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(transitivity(triangle) == 1.0);
    const auto path = make_net(3, {{0, 1}, {1, 2}});
    CHECK(transitivity(path) == 0.0);
    // Triangle a,b,c plus pendant d-a: one triangle, five connected triples.
    const auto pendant = make_net(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}});
    CHECK(transitivity(pendant) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK_THROWS_AS(transitivity(make_net(2, {{0, 1}})), Error);
    // Reciprocal directed links are one undirected edge, not two.
    const auto reciprocal = make_net(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(transitivity(reciprocal) == 0.0);
}

TEST_CASE("degree correlation") {
    // Star with 5 leaves: every link joins degree 5 to degree 1.
    const auto star = make_net(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    const auto r = degree_correlation(star);
    REQUIRE(r.has_value());
    CHECK(*r == -1.0);

    // A ring has all degrees equal: zero variance, undefined.
    const auto ring = make_net(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK_FALSE(degree_correlation(ring).has_value());

    const auto two_links = make_net(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(degree_correlation(two_links).has_value());

    CHECK_THROWS_AS(degree_correlation(make_net(3, {})), Error);
}

TEST_CASE("average distance") {
    const auto complete3 = make_net(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
    CHECK(average_distance(complete3) == 1.0);

    // Directed 4-cycle: distances 1, 2, 3 from every node.
    const auto cycle = make_net(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(average_distance(cycle) == 2.0);

    // Two disconnected complete components: cross pairs are excluded.
    const auto two_components =
        make_net(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
    CHECK(average_distance(two_components) == 1.0);

    CHECK_FALSE(average_distance(make_net(3, {})).has_value());
}

TEST_CASE("isolated count") {
    // The example network: alpha -> beta, gamma untouched.
    const auto fig2 = make_net(3, {{0, 1}});
    CHECK(isolated_count(fig2) == 1);
    const auto complete3 = make_net(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
    CHECK(isolated_count(complete3) == 0);
    CHECK(isolated_count(make_net(5, {})) == 5);
}

TEST_CASE("compute_all on the directed triangle") {
    const auto triangle = make_net(3, {{0, 1}, {1, 2}, {2, 0}});
    const PropertyRecord rec = compute_all(triangle);
    CHECK(rec.n_nodes == 3);
    CHECK(rec.n_links == 3);
    CHECK(rec.min_degree == 2);
    CHECK(rec.max_degree == 2);
    CHECK(rec.avg_degree == 2.0);
    REQUIRE(rec.density.has_value());
    CHECK(*rec.density == 0.5);
    REQUIRE(rec.transitivity.has_value());
    CHECK(*rec.transitivity == 1.0);
    CHECK_FALSE(rec.degree_correlation.has_value());  // zero variance
    REQUIRE(rec.avg_distance.has_value());
    CHECK(*rec.avg_distance == 1.5);
    CHECK(rec.n_isolated == 0);
    CHECK_FALSE(rec.n_similarities.has_value());
}

TEST_CASE("compute_all on a single isolated node") {
    const PropertyRecord rec = compute_all(make_net(1, {}));
    CHECK(rec.min_degree == 0);
    CHECK(rec.max_degree == 0);
    CHECK(rec.avg_degree == 0.0);
    CHECK_FALSE(rec.density.has_value());
    CHECK_FALSE(rec.transitivity.has_value());
    CHECK_FALSE(rec.degree_correlation.has_value());
    CHECK_FALSE(rec.avg_distance.has_value());
    CHECK(rec.n_isolated == 1);
    CHECK_THROWS_AS(compute_all(make_net(0, {})), Error);
}

TEST_CASE("all measures match naive references on random digraphs") {
    std::mt19937 rng(20116);
    for (int iter = 0; iter < 200; ++iter) {
        const oracle::Digraph g = oracle::random_digraph(rng, 8);
        const InteractionNetwork net = from_digraph(g);
        CAPTURE(iter);
        CAPTURE(g.n);
        CAPTURE(g.edges.size());

        const PropertyRecord rec = compute_all(net, 2);

        uint64_t min_deg = UINT64_MAX, max_deg = 0;
        const auto deg = g.total_degree();
        for (uint64_t d : deg) {
            min_deg = std::min(min_deg, d);
            max_deg = std::max(max_deg, d);
        }
        REQUIRE(rec.min_degree == min_deg);
        REQUIRE(rec.max_degree == max_deg);
        REQUIRE(close(rec.avg_degree, 2.0 * static_cast<double>(g.edges.size()) /
                                          static_cast<double>(g.n)));

        if (g.n >= 2) {
            REQUIRE(rec.density.has_value());
            REQUIRE(close(*rec.density, oracle::naive_density(g)));
        }
        if (g.n >= 3) {
            REQUIRE(rec.transitivity.has_value());
            REQUIRE(close(*rec.transitivity, oracle::naive_transitivity(g)));
        }
        const auto r_oracle = oracle::naive_assortativity(g);
        if (!g.edges.empty()) {
            REQUIRE(rec.degree_correlation.has_value() == r_oracle.has_value());
            if (r_oracle) REQUIRE(close(*rec.degree_correlation, *r_oracle));
        }
        const auto d_oracle = oracle::naive_avg_distance(g);
        REQUIRE(rec.avg_distance.has_value() == d_oracle.has_value());
        if (d_oracle) REQUIRE(close(*rec.avg_distance, *d_oracle));
        REQUIRE(rec.n_isolated == oracle::naive_isolated(g));
    }
}

TEST_CASE("records satisfy the degree-density identity") {
    std::mt19937 rng(88211);
    for (int iter = 0; iter < 100; ++iter) {
        const oracle::Digraph g = oracle::random_digraph(rng, 8);
        if (g.n < 2) continue;
        const PropertyRecord rec = compute_all(from_digraph(g));
        REQUIRE(close(rec.avg_degree, *rec.density * 2.0 * static_cast<double>(rec.n_nodes - 1)));
        REQUIRE(close(rec.avg_degree,
                      2.0 * static_cast<double>(rec.n_links) / static_cast<double>(rec.n_nodes)));
    }
}

TEST_CASE("adding a link never hurts max degree or reachability") {
    std::mt19937 rng(40332);
    for (int iter = 0; iter < 50; ++iter) {
        oracle::Digraph g = oracle::random_digraph(rng, 7);
        if (g.n < 2) continue;
        // find an absent ordered pair
        auto adj = g.adjacency();
        std::vector<std::pair<uint32_t, uint32_t>> absent;
        for (uint32_t i = 0; i < g.n; ++i) {
            for (uint32_t j = 0; j < g.n; ++j) {
                if (i != j && !adj[i][j]) absent.emplace_back(i, j);
            }
        }
        if (absent.empty()) continue;
        const auto before = compute_all(from_digraph(g));

        oracle::Digraph bigger = g;
        bigger.edges.push_back(absent[iter % absent.size()]);
        const auto after = compute_all(from_digraph(bigger));

        REQUIRE(after.max_degree >= before.max_degree);
        // distances between previously reachable pairs cannot grow
        static constexpr uint32_t kInf = UINT32_MAX / 4;
        auto distances = [](const oracle::Digraph& graph) {
            std::vector<std::vector<uint32_t>> dist(graph.n,
                                                    std::vector<uint32_t>(graph.n, kInf));
            for (size_t i = 0; i < graph.n; ++i) dist[i][i] = 0;
            for (const auto& [s, t] : graph.edges) dist[s][t] = 1;
            for (size_t k = 0; k < graph.n; ++k) {
                for (size_t i = 0; i < graph.n; ++i) {
                    for (size_t j = 0; j < graph.n; ++j) {
                        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
                    }
                }
            }
            return dist;
        };
        const auto d_before = distances(g);
        const auto d_after = distances(bigger);
        for (size_t i = 0; i < g.n; ++i) {
            for (size_t j = 0; j < g.n; ++j) {
                if (d_before[i][j] < kInf) REQUIRE(d_after[i][j] <= d_before[i][j]);
            }
        }
    }
}

TEST_CASE("average distance on a strongly connected graph covers all pairs") {
    // Directed cycle plus a chord keeps strong connectivity.
    const auto net = make_net(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 4}});
    const auto avg = average_distance(net);
    REQUIRE(avg.has_value());
    const oracle::Digraph g{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 4}}};
    constexpr uint32_t kInf = UINT32_MAX / 4;
    // every ordered pair must be reachable
    const auto d = [&] {
        std::vector<std::vector<uint32_t>> dist(g.n, std::vector<uint32_t>(g.n, kInf));
        for (size_t i = 0; i < g.n; ++i) dist[i][i] = 0;
        for (const auto& [s, t] : g.edges) dist[s][t] = 1;
        for (size_t k = 0; k < g.n; ++k)
            for (size_t i = 0; i < g.n; ++i)
                for (size_t j = 0; j < g.n; ++j)
                    dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
        return dist;
    }();
    uint64_t total = 0;
    for (size_t i = 0; i < g.n; ++i) {
        for (size_t j = 0; j < g.n; ++j) {
            if (i != j) {
                REQUIRE(d[i][j] < kInf);
                total += d[i][j];
            }
        }
    }
    CHECK(*avg == doctest::Approx(static_cast<double>(total) / 20.0).epsilon(1e-12));
}
