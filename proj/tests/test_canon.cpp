#include <algorithm>
#include <random>

#include "doctest.h"
#include "locver/canon.hpp"
#include "locver/zoo.hpp"

using namespace locver;

namespace {

// relabel a configuration by a node permutation (perm[old] = new)
Configuration relabel(const Configuration& c, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : c.graph.edges()) edges.push_back({perm[u], perm[v]});
    std::vector<Bytes> input(c.input.size());
    for (int u = 0; u < c.n(); ++u) input[perm[u]] = c.input[u];
    return Configuration(Graph(c.n(), edges), input);
}

}  // namespace

TEST_SUITE_BEGIN("canon");

TEST_CASE("canonical code is invariant under relabeling") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        const auto& catalog = canon::connected_graph_catalog(n);
        const Graph& g = catalog[rng() % catalog.size()];
        std::vector<int> bits;
        for (int u = 0; u < n; ++u) bits.push_back(static_cast<int>(rng() % 2));
        Configuration c = zoo::bool_config(g, bits);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canon::canonical_code(c) == canon::canonical_code(relabel(c, perm)));
    }
}

TEST_CASE("isomorphism distinguishes inputs") {
    Configuration a = zoo::bool_config(path_graph(3), {1, 0, 0});
    Configuration b = zoo::bool_config(path_graph(3), {0, 0, 1});  // mirror image
    Configuration c = zoo::bool_config(path_graph(3), {0, 1, 0});
    CHECK(canon::isomorphic(a, b));
    CHECK_FALSE(canon::isomorphic(a, c));
    CHECK_FALSE(canon::isomorphic(a, zoo::bool_config(cycle_graph(3), {1, 0, 0})));
}

TEST_CASE("rooted codes separate orbits") {
    Configuration p4 = blank_config(path_graph(4));
    // endpoints are one orbit, the middle nodes another
    CHECK(canon::canonical_code_rooted(p4, 0) == canon::canonical_code_rooted(p4, 3));
    CHECK(canon::canonical_code_rooted(p4, 1) == canon::canonical_code_rooted(p4, 2));
    CHECK(canon::canonical_code_rooted(p4, 0) != canon::canonical_code_rooted(p4, 1));
}

TEST_CASE("connected graph catalog sizes") {
    CHECK(canon::connected_graph_catalog(1).size() == 1);
    CHECK(canon::connected_graph_catalog(2).size() == 1);
    CHECK(canon::connected_graph_catalog(3).size() == 2);
    CHECK(canon::connected_graph_catalog(4).size() == 6);
    CHECK(canon::connected_graph_catalog(5).size() == 21);
    CHECK(canon::connected_graph_catalog(6).size() == 112);
    CHECK(canon::tree_catalog(4).size() == 2);
    CHECK(canon::tree_catalog(5).size() == 3);
    CHECK(canon::tree_catalog(6).size() == 6);
}

TEST_CASE("graph automorphism counts") {
    CHECK(canon::graph_automorphisms(path_graph(3)).size() == 2);
    CHECK(canon::graph_automorphisms(cycle_graph(4)).size() == 8);
    CHECK(canon::graph_automorphisms(complete_graph(3)).size() == 6);
    CHECK(canon::graph_automorphisms(star_graph(3)).size() == 6);
}

TEST_SUITE_END();
