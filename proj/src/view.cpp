#include "locver/view.hpp"

#include <algorithm>
#include <string>

#include "locver/errors.hpp"

namespace locver {

std::pair<BallView, std::vector<int>> ball_with_map(const Configuration& config,
                                                    const IdentityAssignment& ids,
                                                    const std::vector<CertificateAssignment>& certs,
                                                    int u, int t) {
    const Graph& g = config.graph;
    if (u < 0 || u >= g.n()) throw domain_error("unknown node " + std::to_string(u));
    if (t < 0) throw domain_error("radius must be non-negative");
    if (ids.n() != g.n()) throw usage_error("identity assignment does not cover the graph");
    for (const auto& level : certs)
        if (static_cast<int>(level.size()) != g.n())
            throw usage_error("certificate assignment does not cover the graph");

    std::vector<int> dist = g.distances_from(u);
    std::vector<int> members;
    for (int v = 0; v < g.n(); ++v)
        if (dist[static_cast<std::size_t>(v)] <= t) members.push_back(v);
    std::sort(members.begin(), members.end(), [&](int a, int b) {
        int da = dist[static_cast<std::size_t>(a)], db = dist[static_cast<std::size_t>(b)];
        if (da != db) return da < db;
        return ids.of(a) < ids.of(b);
    });

    std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < members.size(); ++i) local[static_cast<std::size_t>(members[i])] = static_cast<int>(i);

    BallView view;
    view.radius = t;
    view.dist.reserve(members.size());
    view.input.reserve(members.size());
    view.id.reserve(members.size());
    for (int v : members) {
        view.dist.push_back(dist[static_cast<std::size_t>(v)]);
        view.input.push_back(config.input[static_cast<std::size_t>(v)]);
        view.id.push_back(ids.of(v));
    }
    view.certs.resize(certs.size());
    for (std::size_t level = 0; level < certs.size(); ++level) {
        view.certs[level].reserve(members.size());
        for (int v : members) view.certs[level].push_back(certs[level][static_cast<std::size_t>(v)]);
    }
    view.adj.assign(members.size(), {});
    for (auto [a, b] : g.edges()) {
        int la = local[static_cast<std::size_t>(a)], lb = local[static_cast<std::size_t>(b)];
        if (la < 0 || lb < 0) continue;
        // visible only if one endpoint is strictly inside the ball
        int da = dist[static_cast<std::size_t>(a)], db = dist[static_cast<std::size_t>(b)];
        if (std::min(da, db) > t - 1) continue;
        view.edges.push_back({std::min(la, lb), std::max(la, lb)});
        view.adj[static_cast<std::size_t>(la)].push_back(lb);
        view.adj[static_cast<std::size_t>(lb)].push_back(la);
    }
    std::sort(view.edges.begin(), view.edges.end());
    for (auto& list : view.adj) std::sort(list.begin(), list.end());
    return {std::move(view), std::move(members)};
}

BallView ball(const Configuration& config, const IdentityAssignment& ids,
              const std::vector<CertificateAssignment>& certs, int u, int t) {
    return ball_with_map(config, ids, certs, u, t).first;
}

namespace {

bool node_compatible(const BallView& a, const BallView& b, int i, int j, bool compare_ids) {
    if (a.dist[static_cast<std::size_t>(i)] != b.dist[static_cast<std::size_t>(j)]) return false;
    if (a.input[static_cast<std::size_t>(i)] != b.input[static_cast<std::size_t>(j)]) return false;
    if (compare_ids && a.id[static_cast<std::size_t>(i)] != b.id[static_cast<std::size_t>(j)]) return false;
    if (a.adj[static_cast<std::size_t>(i)].size() != b.adj[static_cast<std::size_t>(j)].size()) return false;
    for (std::size_t level = 0; level < a.certs.size(); ++level)
        if (a.certs[level][static_cast<std::size_t>(i)] != b.certs[level][static_cast<std::size_t>(j)]) return false;
    return true;
}

bool extend(const BallView& a, const BallView& b, std::vector<int>& map, std::vector<char>& used,
            int next, bool compare_ids) {
    int k = a.size();
    if (next == k) return true;
    for (int j = 0; j < k; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        if (!node_compatible(a, b, next, j, compare_ids)) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev) {
            bool ea = std::binary_search(a.adj[static_cast<std::size_t>(next)].begin(),
                                         a.adj[static_cast<std::size_t>(next)].end(), prev);
            bool eb = std::binary_search(b.adj[static_cast<std::size_t>(j)].begin(),
                                         b.adj[static_cast<std::size_t>(j)].end(),
                                         map[static_cast<std::size_t>(prev)]);
            if (ea != eb) ok = false;
        }
        if (!ok) continue;
        map[static_cast<std::size_t>(next)] = j;
        used[static_cast<std::size_t>(j)] = 1;
        if (extend(a, b, map, used, next + 1, compare_ids)) return true;
        used[static_cast<std::size_t>(j)] = 0;
    }
    return false;
}

}  // namespace

BallView subview(const BallView& big, int center_local, int t) {
    int k = big.size();
    if (center_local < 0 || center_local >= k) throw domain_error("unknown view node");
    std::vector<int> dist(static_cast<std::size_t>(k), -1);
    std::vector<int> queue{center_local};
    dist[static_cast<std::size_t>(center_local)] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int a = queue[qi];
        if (dist[static_cast<std::size_t>(a)] == t) continue;
        for (int b : big.adj[static_cast<std::size_t>(a)])
            if (dist[static_cast<std::size_t>(b)] < 0) {
                dist[static_cast<std::size_t>(b)] = dist[static_cast<std::size_t>(a)] + 1;
                queue.push_back(b);
            }
    }
    std::vector<int> members;
    for (int v = 0; v < k; ++v)
        if (dist[static_cast<std::size_t>(v)] >= 0 && dist[static_cast<std::size_t>(v)] <= t) members.push_back(v);
    std::sort(members.begin(), members.end(), [&](int a, int b) {
        int da = dist[static_cast<std::size_t>(a)], db = dist[static_cast<std::size_t>(b)];
        if (da != db) return da < db;
        return big.id[static_cast<std::size_t>(a)] < big.id[static_cast<std::size_t>(b)];
    });
    std::vector<int> local(static_cast<std::size_t>(k), -1);
    for (std::size_t i = 0; i < members.size(); ++i) local[static_cast<std::size_t>(members[i])] = static_cast<int>(i);

    BallView out;
    out.radius = t;
    for (int v : members) {
        out.dist.push_back(dist[static_cast<std::size_t>(v)]);
        out.input.push_back(big.input[static_cast<std::size_t>(v)]);
        out.id.push_back(big.id[static_cast<std::size_t>(v)]);
    }
    out.certs.resize(big.certs.size());
    for (std::size_t level = 0; level < big.certs.size(); ++level)
        for (int v : members) out.certs[level].push_back(big.certs[level][static_cast<std::size_t>(v)]);
    out.adj.assign(members.size(), {});
    for (auto [a, b] : big.edges) {
        int la = local[static_cast<std::size_t>(a)], lb = local[static_cast<std::size_t>(b)];
        if (la < 0 || lb < 0) continue;
        if (std::min(dist[static_cast<std::size_t>(a)], dist[static_cast<std::size_t>(b)]) > t - 1) continue;
        out.edges.push_back({std::min(la, lb), std::max(la, lb)});
        out.adj[static_cast<std::size_t>(la)].push_back(lb);
        out.adj[static_cast<std::size_t>(lb)].push_back(la);
    }
    std::sort(out.edges.begin(), out.edges.end());
    for (auto& list : out.adj) std::sort(list.begin(), list.end());
    return out;
}

bool views_isomorphic(const BallView& a, const BallView& b, bool compare_ids) {
    if (a.size() != b.size()) return false;
    if (a.radius != b.radius) return false;
    if (a.edges.size() != b.edges.size()) return false;
    if (a.certs.size() != b.certs.size()) return false;
    if (!node_compatible(a, b, 0, 0, compare_ids)) return false;  // center-preserving
    std::vector<int> map(static_cast<std::size_t>(a.size()), -1);
    std::vector<char> used(static_cast<std::size_t>(a.size()), 0);
    map[0] = 0;
    used[0] = 1;
    return extend(a, b, map, used, 1, compare_ids);
}

}  // namespace locver
