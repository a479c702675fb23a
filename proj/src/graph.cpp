#include "locver/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "locver/errors.hpp"

namespace locver {

bool is_connected(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 0) return false;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                q.push(v);
            }
        }
    }
    return reached == n;
}

Graph::Graph(int node_count, std::vector<std::pair<int, int>> edge_list) : n_(node_count) {
    if (n_ <= 0) throw domain_error("graph needs at least one node");
    std::set<std::pair<int, int>> normalized;
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) throw domain_error("edge endpoint out of range");
        if (u == v) throw domain_error("self-loops are not allowed");
        normalized.insert({std::min(u, v), std::max(u, v)});
    }
    if (normalized.size() != edge_list.size()) throw domain_error("parallel edges are not allowed");
    edges_.assign(normalized.begin(), normalized.end());
    if (!is_connected(n_, edges_)) throw domain_error("graph must be connected");
    adj_.assign(static_cast<std::size_t>(n_), {});
    for (auto [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(int u, int v) const {
    const auto& list = neighbors(u);
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<int> Graph::distances_from(int u) const {
    if (u < 0 || u >= n_) throw domain_error("unknown node " + std::to_string(u));
    std::vector<int> dist(static_cast<std::size_t>(n_), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(u)] = 0;
    q.push(u);
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (int b : neighbors(a)) {
            if (dist[static_cast<std::size_t>(b)] < 0) {
                dist[static_cast<std::size_t>(b)] = dist[static_cast<std::size_t>(a)] + 1;
                q.push(b);
            }
        }
    }
    return dist;
}

int Graph::distance(int u, int v) const { return distances_from(u)[static_cast<std::size_t>(v)]; }

int Graph::diameter() const {
    int best = 0;
    for (int u = 0; u < n_; ++u) {
        auto d = distances_from(u);
        for (int x : d) best = std::max(best, x);
    }
    return best;
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw domain_error("cycle needs at least 3 nodes");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph(n, e);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph(n, e);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return Graph(leaves + 1, e);
}

}  // namespace locver
