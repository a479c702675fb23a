#pragma once

#include <functional>
#include <vector>

#include "locver/config.hpp"

namespace locver::canon {

// Canonical vertex order of a configuration: order[pos] = node. Computed by
// exhaustive permutation search restricted to (degree, input) classes, which
// is exact and fine at desk scale (n <= 10, far less in practice).
//
// Provers take a Canonicalizer so the policy can be swapped out.
using Canonicalizer = std::function<std::vector<int>(const Configuration&)>;

std::vector<int> canonical_order(const Configuration& config);
const Canonicalizer& default_canonicalizer();

// Canonical byte code; equal codes iff input-preserving isomorphic.
Bytes canonical_code(const Configuration& config);

// Canonical code among orders that place `root` first. Used to break ties
// between otherwise symmetric candidate nodes without consulting identities.
Bytes canonical_code_rooted(const Configuration& config, int root);

bool isomorphic(const Configuration& a, const Configuration& b);

// All graph automorphisms (input-blind), as node permutations.
std::vector<std::vector<int>> graph_automorphisms(const Graph& g);

// Connected graphs on exactly n nodes, one representative per isomorphism
// class, in a deterministic order. Cached.
const std::vector<Graph>& connected_graph_catalog(int n);

// The trees from the catalog.
std::vector<Graph> tree_catalog(int n);

}  // namespace locver::canon
