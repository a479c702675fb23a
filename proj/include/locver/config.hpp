#pragma once

#include <cstdint>
#include <vector>

#include "locver/bytes.hpp"
#include "locver/graph.hpp"

namespace locver {

// A configuration: connected labeled graph. Every node has an input entry
// (possibly the empty string).
struct Configuration {
    Configuration(Graph g, std::vector<Bytes> inputs);

    Graph graph;
    std::vector<Bytes> input;  // node -> bit-string

    int n() const { return graph.n(); }

    bool operator==(const Configuration& other) const {
        return graph == other.graph && input == other.input;
    }
};

// Builds a configuration where every node carries the empty input.
Configuration blank_config(Graph g);

// Distinct non-negative identities, one per node.
struct IdentityAssignment {
    explicit IdentityAssignment(std::vector<std::uint64_t> values);

    std::vector<std::uint64_t> id;  // node -> identity

    std::uint64_t of(int node) const { return id[static_cast<std::size_t>(node)]; }
    int n() const { return static_cast<int>(id.size()); }

    bool operator==(const IdentityAssignment& other) const { return id == other.id; }
};

// Consecutive identities 1..n.
IdentityAssignment consecutive_ids(int n);

// A per-node bit-string, total over the nodes.
using CertificateAssignment = std::vector<Bytes>;

}  // namespace locver
