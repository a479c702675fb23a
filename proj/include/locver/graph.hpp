#pragma once

#include <utility>
#include <vector>

namespace locver {

// A connected simple graph on nodes 0..n-1. Node indices are internal and are
// distinct from the identity assignment used when running local algorithms.
class Graph {
  public:
    Graph(int node_count, std::vector<std::pair<int, int>> edge_list);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int u) const { return adj_[static_cast<std::size_t>(u)]; }
    int degree(int u) const { return static_cast<int>(neighbors(u).size()); }
    bool has_edge(int u, int v) const;

    std::vector<int> distances_from(int u) const;
    int distance(int u, int v) const;
    int diameter() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

  private:
    int n_;
    std::vector<std::pair<int, int>> edges_;       // normalized u < v, sorted
    std::vector<std::vector<int>> adj_;            // sorted adjacency lists
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);

bool is_connected(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace locver
