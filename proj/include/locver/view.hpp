#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "locver/config.hpp"

namespace locver {

// Everything a node can learn in t rounds: nodes at distance <= t, edges with
// at least one endpoint at distance <= t-1 (edges between two frontier nodes
// at distance exactly t are not learnable), plus inputs, identities, every
// certificate level, and exact distance-from-center annotations.
//
// Local node 0 is always the center; local nodes are ordered by
// (distance, identity), so equal views have equal representations.
struct BallView {
    int radius = 0;
    std::vector<int> dist;                        // local node -> distance from center
    std::vector<Bytes> input;                     // local node -> input
    std::vector<std::uint64_t> id;                // local node -> identity
    std::vector<CertificateAssignment> certs;     // level -> local node -> certificate
    std::vector<std::pair<int, int>> edges;       // local edges, normalized and sorted
    std::vector<std::vector<int>> adj;            // local adjacency lists

    int size() const { return static_cast<int>(dist.size()); }
    const std::vector<int>& center_neighbors() const { return adj[0]; }
    const Bytes& cert(int level, int local) const {
        return certs[static_cast<std::size_t>(level)][static_cast<std::size_t>(local)];
    }
};

BallView ball(const Configuration& config, const IdentityAssignment& ids,
              const std::vector<CertificateAssignment>& certs, int u, int t);

// As ball(), but also reports which global node each local index came from.
// The mapping is engine bookkeeping; verdict functions never see it.
std::pair<BallView, std::vector<int>> ball_with_map(const Configuration& config,
                                                    const IdentityAssignment& ids,
                                                    const std::vector<CertificateAssignment>& certs,
                                                    int u, int t);

// Center-preserving isomorphism matching inputs, certificates and distance
// annotations; identities are compared only when compare_ids is set.
bool views_isomorphic(const BallView& a, const BallView& b, bool compare_ids);

// The radius-t view around one of a larger view's nodes, computed inside the
// larger view. Faithful whenever t plus the node's distance from the original
// center stays within the original radius (every needed node and edge is then
// visible). Composition of local algorithms runs on this.
BallView subview(const BallView& big, int center_local, int t);

}  // namespace locver
