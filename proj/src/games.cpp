#include "locver/games.hpp"

#include <algorithm>

#include "locver/canon.hpp"
#include "locver/errors.hpp"

namespace locver::games {

QuantifierPrefix prefix_of(std::initializer_list<Quantifier> qs) { return QuantifierPrefix{qs}; }

CertificateSpace uniform_space(int n, std::vector<Bytes> options) {
    CertificateSpace s;
    s.per_node.assign(static_cast<std::size_t>(n), options);
    return s;
}

CertificateSpace raw_bitstring_space(int n, int max_len) {
    std::vector<Bytes> options;
    std::vector<Bytes> frontier{Bytes{}};
    options.push_back(Bytes{});
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Bytes> next;
        for (const Bytes& b : frontier)
            for (std::uint8_t bit : {0, 1}) {
                Bytes e = b;
                e.push_back(bit);
                options.push_back(e);
                next.push_back(std::move(e));
            }
        frontier = std::move(next);
    }
    options.push_back(Bytes{0xff, 0xff});
    return uniform_space(n, std::move(options));
}

namespace {

struct PreparedNode {
    BallView view;
    std::vector<int> locals;  // local index -> global node
};

// Shared evaluation engine. Views are built once per (id, node) and the
// certificate slots are re-stuffed as assignments change.
struct Engine {
    const LocalAlgorithm& alg;
    const Configuration& config;
    const std::vector<Quantifier>& quants;
    const std::vector<CertificateSpace>& spaces;
    const std::vector<IdentityAssignment>& ids;
    NodeQuantifier nq;
    Polarity pol;
    GameOptions opt;
    GameStats stats;

    std::vector<std::vector<PreparedNode>> prepared;  // [id][node]
    std::vector<int> trigger;                         // node u -> last assigned position completing u's ball
    std::vector<std::vector<int>> fires_at;           // position -> nodes whose ball completes there
    std::vector<CertificateAssignment> current;       // level -> assignment

    // leaf trace
    std::optional<std::size_t> leaf_id;
    std::optional<int> leaf_node;

    Engine(const LocalAlgorithm& a, const Configuration& c, const std::vector<Quantifier>& q,
           const std::vector<CertificateSpace>& s, const std::vector<IdentityAssignment>& pool,
           NodeQuantifier nodeq, Polarity p, const GameOptions& o)
        : alg(a), config(c), quants(q), spaces(s), ids(pool), nq(nodeq), pol(p), opt(o) {
        int n = config.n();
        prepared.resize(ids.size());
        for (std::size_t i = 0; i < ids.size(); ++i) {
            prepared[i].reserve(static_cast<std::size_t>(n));
            std::vector<CertificateAssignment> blank(static_cast<std::size_t>(quants.size()),
                                                     CertificateAssignment(static_cast<std::size_t>(n)));
            for (int u = 0; u < n; ++u) {
                auto [view, locals] = ball_with_map(config, ids[i], blank, u, alg.radius);
                prepared[i].push_back(PreparedNode{std::move(view), std::move(locals)});
            }
        }
        trigger.assign(static_cast<std::size_t>(n), 0);
        fires_at.assign(static_cast<std::size_t>(n), {});
        for (int u = 0; u < n; ++u) {
            int last = 0;
            for (int g : prepared[0][static_cast<std::size_t>(u)].locals) last = std::max(last, g);
            trigger[static_cast<std::size_t>(u)] = last;
            fires_at[static_cast<std::size_t>(last)].push_back(u);
        }
        current.assign(quants.size(), CertificateAssignment(static_cast<std::size_t>(n)));
    }

    // True when the verdict matches the polarity we are counting.
    bool good(std::size_t id_idx, int u) {
        if (stats.node_evaluations++ >= opt.budget)
            throw inconclusive_error("game enumeration budget exceeded", stats.node_evaluations);
        PreparedNode& pn = prepared[id_idx][static_cast<std::size_t>(u)];
        for (std::size_t level = 0; level < current.size(); ++level)
            for (std::size_t i = 0; i < pn.locals.size(); ++i)
                pn.view.certs[level][i] = current[level][static_cast<std::size_t>(pn.locals[i])];
        Verdict v = alg.verdict(pn.view);
        return (v == Verdict::accept) == (pol == Polarity::accept);
    }

    // Leaf value with the full assignment in `current`:
    //   AND over ids of (all/some node good).
    bool eval_leaf() {
        ++stats.assignments_visited;
        leaf_id.reset();
        leaf_node.reset();
        int n = config.n();
        for (std::size_t i = 0; i < ids.size(); ++i) {
            bool id_value;
            if (nq == NodeQuantifier::all) {
                id_value = true;
                for (int u = 0; u < n; ++u)
                    if (!good(i, u)) {
                        id_value = false;
                        leaf_node = u;
                        break;
                    }
            } else {
                id_value = false;
                for (int u = 0; u < n; ++u)
                    if (good(i, u)) {
                        id_value = true;
                        leaf_node = u;
                        break;
                    }
            }
            if (!id_value) {
                leaf_id = i;
                if (nq == NodeQuantifier::some) leaf_node.reset();
                return false;
            }
        }
        return true;
    }

    // Odometer over the product space of one level; node 0 most significant.
    // Returns false when finished.
    static bool advance(std::vector<std::size_t>& pick, const CertificateSpace& space) {
        std::size_t pos = pick.size();
        while (pos > 0) {
            --pos;
            if (++pick[pos] < space.per_node[pos].size()) return true;
            pick[pos] = 0;
        }
        return false;
    }

    void load(std::size_t level, const std::vector<std::size_t>& pick) {
        const CertificateSpace& space = spaces[level];
        for (std::size_t u = 0; u < pick.size(); ++u)
            current[level][u] = space.per_node[u][pick[u]];
    }

    bool eval_level(std::size_t level) {
        if (level == quants.size()) return eval_leaf();
        if (opt.short_circuit && level + 1 == quants.size() && nq == NodeQuantifier::all)
            return pruned_last_level(quants[level]);

        const CertificateSpace& space = spaces[level];
        std::vector<std::size_t> pick(static_cast<std::size_t>(config.n()), 0);
        bool is_exists = quants[level] == Quantifier::exists;
        bool value = !is_exists;  // identity of OR is false, of AND is true
        bool decided = false;
        do {
            load(level, pick);
            bool sub = eval_level(level + 1);
            if (is_exists && sub) {
                value = true;
                decided = true;
            }
            if (!is_exists && !sub) {
                value = false;
                decided = true;
            }
            if (decided && opt.short_circuit) return value;
        } while (advance(pick, space));
        if (!decided) {
            // Undecided means: exists-level with all children false, or
            // forall-level with all children true. Re-evaluate the first child
            // so the trace is the lexicographically first branch.
            std::fill(pick.begin(), pick.end(), 0);
            load(level, pick);
            eval_level(level + 1);
        }
        return value;
    }

    // Pruned search over the last level when the leaf is an AND over ids of
    // "all nodes good": a node whose ball is complete can veto early.
    //   exists-level: searching for an assignment with every node good.
    //   forall-level: searching for a counterexample (some node not good).
    bool pruned_last_level(Quantifier q) {
        std::size_t level = quants.size() - 1;
        const CertificateSpace& space = spaces[level];
        int n = config.n();
        for (const auto& options : space.per_node)
            if (options.empty()) throw usage_error("certificate space has an empty node slot");

        bool searching_true = (q == Quantifier::exists);
        std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
        bool found = false;

        // returns true when the search is done
        auto complete_rest_with_zero = [&](int from) {
            for (int u = from; u < n; ++u) current[level][static_cast<std::size_t>(u)] = space.per_node[static_cast<std::size_t>(u)][0];
        };

        std::function<bool(int)> dfs = [&](int pos) -> bool {
            if (pos == n) {
                ++stats.assignments_visited;
                if (searching_true) {
                    found = true;  // no veto fired along the way
                    leaf_id.reset();
                    leaf_node.reset();
                    return true;
                }
                return false;  // every node good: not a counterexample
            }
            const auto& options = space.per_node[static_cast<std::size_t>(pos)];
            for (std::size_t oi = 0; oi < options.size(); ++oi) {
                current[level][static_cast<std::size_t>(pos)] = options[oi];
                bool veto = false;
                for (int u : fires_at[static_cast<std::size_t>(pos)]) {
                    for (std::size_t i = 0; i < ids.size() && !veto; ++i)
                        if (!good(i, u)) {
                            veto = true;
                            leaf_id = i;
                            leaf_node = u;
                        }
                    if (veto) break;
                }
                if (veto) {
                    if (!searching_true) {
                        complete_rest_with_zero(pos + 1);
                        ++stats.assignments_visited;
                        found = true;
                        return true;
                    }
                    continue;  // this branch can never become all-good
                }
                if (dfs(pos + 1)) return true;
            }
            return false;
        };
        dfs(0);
        if (!found) {
            // trace: lexicographically first assignment
            complete_rest_with_zero(0);
            leaf_id.reset();
            leaf_node.reset();
        }
        return searching_true ? found : !found;
    }

    GameWitness witness() const {
        GameWitness w;
        w.certs = current;
        w.id_index = leaf_id;
        w.node = leaf_node;
        return w;
    }
};

void validate_inputs(const LocalAlgorithm& alg, const Configuration& config,
                     const QuantifierPrefix& prefix, const std::vector<CertificateSpace>& spaces,
                     const std::vector<IdentityAssignment>& id_pool) {
    if (prefix.size() != spaces.size())
        throw usage_error("one certificate space per quantifier is required");
    if (static_cast<int>(prefix.size()) != alg.arity)
        throw usage_error("prefix length must equal the algorithm's certificate arity");
    if (id_pool.empty()) throw usage_error("identity pool must be nonempty");
    for (const auto& ids : id_pool)
        if (ids.n() != config.n()) throw usage_error("identity assignment does not cover the graph");
    for (const auto& space : spaces) {
        if (static_cast<int>(space.per_node.size()) != config.n())
            throw usage_error("certificate space does not cover the graph");
        for (const auto& options : space.per_node)
            if (options.empty()) throw usage_error("certificate space has an empty node slot");
    }
}

}  // namespace

bool evaluate_game_rule(const LocalAlgorithm& alg, const Configuration& config,
                        const QuantifierPrefix& prefix, const std::vector<CertificateSpace>& spaces,
                        const std::vector<IdentityAssignment>& id_pool, NodeQuantifier nq,
                        Polarity pol, const GameOptions& options, GameStats* stats,
                        GameWitness* witness) {
    validate_inputs(alg, config, prefix, spaces, id_pool);
    Engine engine(alg, config, prefix.q, spaces, id_pool, nq, pol, options);
    bool value;
    try {
        value = engine.eval_level(0);
    } catch (inconclusive_error&) {
        if (stats) *stats = engine.stats;
        throw;
    }
    if (stats) *stats = engine.stats;
    if (witness) *witness = engine.witness();
    return value;
}

bool evaluate_game(const LocalAlgorithm& alg, const Configuration& config,
                   const QuantifierPrefix& prefix, const std::vector<CertificateSpace>& spaces,
                   const std::vector<IdentityAssignment>& id_pool, AcceptMode mode,
                   const GameOptions& options, GameStats* stats, GameWitness* witness) {
    NodeQuantifier nq = mode == AcceptMode::conjunctive ? NodeQuantifier::all : NodeQuantifier::some;
    return evaluate_game_rule(alg, config, prefix, spaces, id_pool, nq, Polarity::accept, options,
                              stats, witness);
}

namespace {

std::vector<Quantifier> base_prefix(ClassTag tag) {
    switch (tag) {
        case ClassTag::ld:
        case ClassTag::co_ld: return {};
        case ClassTag::pi1:
        case ClassTag::co_pi1: return {Quantifier::forall};
        case ClassTag::sigma1:
        case ClassTag::co_sigma1: return {Quantifier::exists};
        case ClassTag::sigma2:
        case ClassTag::co_sigma2: return {Quantifier::exists, Quantifier::forall};
        case ClassTag::pi2:
        case ClassTag::co_pi2: return {Quantifier::forall, Quantifier::exists};
    }
    return {};
}

bool is_co(ClassTag tag) {
    switch (tag) {
        case ClassTag::co_ld:
        case ClassTag::co_pi1:
        case ClassTag::co_sigma1:
        case ClassTag::co_sigma2:
        case ClassTag::co_pi2: return true;
        default: return false;
    }
}

std::vector<Quantifier> flipped(std::vector<Quantifier> qs) {
    for (auto& q : qs) q = q == Quantifier::exists ? Quantifier::forall : Quantifier::exists;
    return qs;
}

}  // namespace

std::optional<ClassTag> class_tag_from_string(const std::string& s) {
    if (s == "ld") return ClassTag::ld;
    if (s == "pi1") return ClassTag::pi1;
    if (s == "sigma1" || s == "nld") return ClassTag::sigma1;
    if (s == "sigma2") return ClassTag::sigma2;
    if (s == "pi2") return ClassTag::pi2;
    if (s == "co-ld") return ClassTag::co_ld;
    if (s == "co-pi1") return ClassTag::co_pi1;
    if (s == "co-sigma1" || s == "co-nld") return ClassTag::co_sigma1;
    if (s == "co-sigma2") return ClassTag::co_sigma2;
    if (s == "co-pi2") return ClassTag::co_pi2;
    return std::nullopt;
}

std::string to_string(ClassTag tag) {
    switch (tag) {
        case ClassTag::ld: return "ld";
        case ClassTag::pi1: return "pi1";
        case ClassTag::sigma1: return "sigma1";
        case ClassTag::sigma2: return "sigma2";
        case ClassTag::pi2: return "pi2";
        case ClassTag::co_ld: return "co-ld";
        case ClassTag::co_pi1: return "co-pi1";
        case ClassTag::co_sigma1: return "co-sigma1";
        case ClassTag::co_sigma2: return "co-sigma2";
        case ClassTag::co_pi2: return "co-pi2";
    }
    return "?";
}

MembershipCheck check_class_membership_on_instance(
    const LocalAlgorithm& alg, const Configuration& config, ClassTag tag,
    const std::vector<CertificateSpace>& spaces, const std::vector<IdentityAssignment>& id_pool,
    bool truth, const GameOptions& options) {
    std::vector<Quantifier> base = base_prefix(tag);
    QuantifierPrefix prefix;
    NodeQuantifier nq;
    Polarity pol;
    if (!is_co(tag)) {
        if (truth) {
            prefix.q = base;
            nq = NodeQuantifier::all;
            pol = Polarity::accept;
        } else {
            prefix.q = flipped(base);
            nq = NodeQuantifier::some;
            pol = Polarity::reject;
        }
    } else {
        if (truth) {
            prefix.q = flipped(base);
            nq = NodeQuantifier::some;
            pol = Polarity::accept;
        } else {
            prefix.q = base;
            nq = NodeQuantifier::all;
            pol = Polarity::reject;
        }
    }
    MembershipCheck out;
    GameWitness w;
    bool ok = evaluate_game_rule(alg, config, prefix, spaces, id_pool, nq, pol, options, &out.stats, &w);
    out.consistent = ok;
    if (!ok) out.witness = std::move(w);
    return out;
}

std::vector<IdentityAssignment> default_id_pool(const Graph& g, std::size_t cap) {
    int n = g.n();
    auto autos = canon::graph_automorphisms(g);
    std::vector<IdentityAssignment> pool;
    std::vector<std::uint64_t> tuple(static_cast<std::size_t>(n), 0);
    std::vector<char> used(static_cast<std::size_t>(n + 3), 0);

    std::function<bool(int)> rec = [&](int node) -> bool {
        if (pool.size() >= cap) return false;
        if (node == n) {
            for (const auto& sigma : autos) {
                std::vector<std::uint64_t> image(static_cast<std::size_t>(n));
                for (int v = 0; v < n; ++v)
                    image[static_cast<std::size_t>(v)] = tuple[static_cast<std::size_t>(sigma[static_cast<std::size_t>(v)])];
                if (image < tuple) return true;  // not the orbit representative
            }
            pool.push_back(IdentityAssignment(tuple));
            return true;
        }
        for (std::uint64_t v = 1; v <= static_cast<std::uint64_t>(n) + 2; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = 1;
            tuple[static_cast<std::size_t>(node)] = v;
            bool keep_going = rec(node + 1);
            used[static_cast<std::size_t>(v)] = 0;
            if (!keep_going) return false;
        }
        return true;
    };
    rec(0);
    return pool;
}

}  // namespace locver::games
