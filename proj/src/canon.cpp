#include "locver/canon.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "locver/errors.hpp"

namespace locver::canon {

namespace {

Bytes encode_under_order(const Configuration& config, const std::vector<int>& order) {
    int n = config.n();
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
    Bytes out;
    put_varint(out, static_cast<std::uint64_t>(n));
    // adjacency bits, row-major over canonical positions, packed MSB-first
    std::uint8_t acc = 0;
    int nbits = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            bool bit = config.graph.has_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
            acc = static_cast<std::uint8_t>(acc << 1 | (bit ? 1 : 0));
            if (++nbits == 8) {
                out.push_back(acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
    for (int i = 0; i < n; ++i) put_length_prefixed(out, config.input[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
    return out;
}

// Enumerates orders consistent with (degree, input) classes; optionally pins
// one node to position 0. Keeps the encoding-minimal order.
struct OrderSearch {
    const Configuration& config;
    std::vector<std::vector<int>> class_blocks;  // nodes grouped per class, classes in canonical order
    std::vector<int> current;
    std::vector<int> best_order;
    Bytes best_code;
    bool have_best = false;

    explicit OrderSearch(const Configuration& cfg, int pinned_root = -1) : config(cfg) {
        int n = cfg.n();
        // class key: pinned flag first so the root block comes first
        std::map<std::tuple<int, int, Bytes>, std::vector<int>> classes;
        for (int v = 0; v < n; ++v) {
            int pin = (v == pinned_root) ? 0 : 1;
            classes[{pin, cfg.graph.degree(v), cfg.input[static_cast<std::size_t>(v)]}].push_back(v);
        }
        for (auto& [key, nodes] : classes) class_blocks.push_back(nodes);
    }

    void consider() {
        Bytes code = encode_under_order(config, current);
        if (!have_best || code < best_code) {
            best_code = std::move(code);
            best_order = current;
            have_best = true;
        }
    }

    void recurse(std::size_t block, std::vector<int>& nodes) {
        if (block == class_blocks.size()) {
            consider();
            return;
        }
        std::vector<int>& blk = class_blocks[block];
        std::sort(blk.begin(), blk.end());
        do {
            std::size_t before = current.size();
            current.insert(current.end(), blk.begin(), blk.end());
            recurse(block + 1, nodes);
            current.resize(before);
        } while (std::next_permutation(blk.begin(), blk.end()));
    }

    void run() {
        std::vector<int> scratch;
        recurse(0, scratch);
    }
};

}  // namespace

std::vector<int> canonical_order(const Configuration& config) {
    OrderSearch search(config);
    search.run();
    return search.best_order;
}

const Canonicalizer& default_canonicalizer() {
    static const Canonicalizer fn = [](const Configuration& c) { return canonical_order(c); };
    return fn;
}

Bytes canonical_code(const Configuration& config) {
    OrderSearch search(config);
    search.run();
    return search.best_code;
}

Bytes canonical_code_rooted(const Configuration& config, int root) {
    if (root < 0 || root >= config.n()) throw domain_error("unknown root node");
    OrderSearch search(config, root);
    search.run();
    return search.best_code;
}

bool isomorphic(const Configuration& a, const Configuration& b) {
    if (a.n() != b.n() || a.graph.edges().size() != b.graph.edges().size()) return false;
    return canonical_code(a) == canonical_code(b);
}

std::vector<std::vector<int>> graph_automorphisms(const Graph& g) {
    int n = g.n();
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> autos;
    do {
        bool ok = true;
        for (auto [u, v] : g.edges()) {
            if (!g.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) {
                ok = false;
                break;
            }
        }
        if (ok) autos.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return autos;
}

namespace {

// Enumerate connected graphs on n nodes up to isomorphism by canonical
// edge-bitmask filtering over all permutations.
std::vector<Graph> build_catalog(int n) {
    if (n == 1) return {Graph(1, {})};
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
    int m = static_cast<int>(slots.size());
    std::map<std::pair<int, int>, int> slot_index;
    for (int s = 0; s < m; ++s) slot_index[slots[static_cast<std::size_t>(s)]] = s;

    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    // slot permutation induced by each node permutation
    std::vector<std::vector<int>> slot_perm(perms.size(), std::vector<int>(static_cast<std::size_t>(m)));
    for (std::size_t pi = 0; pi < perms.size(); ++pi) {
        for (int s = 0; s < m; ++s) {
            auto [a, b] = slots[static_cast<std::size_t>(s)];
            int pa = perms[pi][static_cast<std::size_t>(a)], pb = perms[pi][static_cast<std::size_t>(b)];
            slot_perm[pi][static_cast<std::size_t>(s)] = slot_index[{std::min(pa, pb), std::max(pa, pb)}];
        }
    }

    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        bool minimal = true;
        for (const auto& sp : slot_perm) {
            std::uint32_t img = 0;
            for (int s = 0; s < m; ++s)
                if (mask & (1u << s)) img |= 1u << sp[static_cast<std::size_t>(s)];
            if (img < mask) {
                minimal = false;
                break;
            }
        }
        if (!minimal) continue;
        std::vector<std::pair<int, int>> edges;
        for (int s = 0; s < m; ++s)
            if (mask & (1u << s)) edges.push_back(slots[static_cast<std::size_t>(s)]);
        if (!is_connected(n, edges)) continue;
        out.push_back(Graph(n, edges));
    }
    return out;
}

}  // namespace

const std::vector<Graph>& connected_graph_catalog(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        if (n < 1 || n > 6) throw domain_error("graph catalog supports 1 <= n <= 6");
        it = cache.emplace(n, build_catalog(n)).first;
    }
    return it->second;
}

std::vector<Graph> tree_catalog(int n) {
    std::vector<Graph> trees;
    for (const Graph& g : connected_graph_catalog(n))
        if (static_cast<int>(g.edges().size()) == n - 1) trees.push_back(g);
    return trees;
}

}  // namespace locver::canon
