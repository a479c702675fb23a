#include "locver/schemes.hpp"

#include <algorithm>
#include <map>

#include "locver/errors.hpp"

namespace locver::schemes {

// --- tree ---------------------------------------------------------------------

int tree_canonical_root(const Configuration& config) {
    const Graph& g = config.graph;
    int n = g.n();
    if (static_cast<int>(g.edges().size()) != n - 1) throw domain_error("not a tree");
    if (n == 1) return 0;
    // strip leaves until one or two nodes remain
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) deg[static_cast<std::size_t>(u)] = g.degree(u);
    std::vector<int> frontier;
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        if (deg[static_cast<std::size_t>(u)] <= 1) frontier.push_back(u);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int u : frontier) {
            removed[static_cast<std::size_t>(u)] = 1;
            --remaining;
            for (int v : g.neighbors(u))
                if (!removed[static_cast<std::size_t>(v)] && --deg[static_cast<std::size_t>(v)] == 1)
                    next.push_back(v);
        }
        frontier = std::move(next);
    }
    std::vector<int> centers;
    for (int u = 0; u < n; ++u)
        if (!removed[static_cast<std::size_t>(u)]) centers.push_back(u);
    if (centers.size() == 1) return centers[0];
    Bytes code0 = canon::canonical_code_rooted(config, centers[0]);
    Bytes code1 = canon::canonical_code_rooted(config, centers[1]);
    return code1 < code0 ? centers[1] : centers[0];
}

CertificateAssignment tree_prover(const Configuration& config) {
    int root = tree_canonical_root(config);
    auto dist = config.graph.distances_from(root);
    CertificateAssignment certs;
    certs.reserve(static_cast<std::size_t>(config.n()));
    for (int d : dist) certs.push_back(varint(static_cast<std::uint64_t>(d)));
    return certs;
}

namespace {

std::optional<std::uint64_t> parse_counter(const Bytes& b) {
    BytesReader in(b);
    auto v = in.read_varint();
    if (!v || !in.at_end()) return std::nullopt;
    return v;
}

}  // namespace

LocalAlgorithm tree_verifier() {
    return LocalAlgorithm{"tree_verifier", 1, 1, [](const BallView& v) {
                              auto mine = parse_counter(v.cert(0, 0));
                              if (!mine) return Verdict::reject;
                              int smaller = 0;
                              for (int j : v.center_neighbors()) {
                                  auto theirs = parse_counter(v.cert(0, j));
                                  if (!theirs) return Verdict::reject;
                                  std::uint64_t diff = *mine > *theirs ? *mine - *theirs : *theirs - *mine;
                                  if (diff != 1) return Verdict::reject;
                                  if (*theirs < *mine) ++smaller;
                              }
                              if (*mine == 0) return smaller == 0 ? Verdict::accept : Verdict::reject;
                              return smaller == 1 ? Verdict::accept : Verdict::reject;
                          }};
}

Scheme tree_scheme() {
    return Scheme{"tree", tree_verifier(), [](const Configuration& c) { return tree_prover(c); }};
}

// --- alts ---------------------------------------------------------------------

namespace {

struct AltsCert {
    std::uint64_t d1 = 0, d2 = 0;
};

Bytes encode_alts(const AltsCert& c) {
    Bytes out;
    put_varint(out, c.d1);
    put_varint(out, c.d2);
    return out;
}

std::optional<AltsCert> parse_alts(const Bytes& b) {
    BytesReader in(b);
    auto d1 = in.read_varint();
    auto d2 = in.read_varint();
    if (!d1 || !d2 || !in.at_end()) return std::nullopt;
    return AltsCert{*d1, *d2};
}

}  // namespace

CertificateAssignment alts_prover(const Configuration& config) {
    if (!zoo::alts_lang().contains(config)) throw domain_error("fewer than two selected nodes");
    std::vector<int> selected;
    for (int u = 0; u < config.n(); ++u)
        if (*zoo::parse_bool(config.input[static_cast<std::size_t>(u)])) selected.push_back(u);
    // the two selected nodes with the smallest rooted canonical codes
    std::stable_sort(selected.begin(), selected.end(), [&](int a, int b) {
        return canon::canonical_code_rooted(config, a) < canon::canonical_code_rooted(config, b);
    });
    auto dist1 = config.graph.distances_from(selected[0]);
    auto dist2 = config.graph.distances_from(selected[1]);
    CertificateAssignment certs;
    for (int u = 0; u < config.n(); ++u)
        certs.push_back(encode_alts({static_cast<std::uint64_t>(dist1[static_cast<std::size_t>(u)]),
                                     static_cast<std::uint64_t>(dist2[static_cast<std::size_t>(u)])}));
    return certs;
}

LocalAlgorithm alts_verifier() {
    return LocalAlgorithm{"alts_verifier", 1, 1, [](const BallView& v) {
                              auto selected = zoo::parse_bool(v.input[0]);
                              if (!selected) return Verdict::reject;
                              auto mine = parse_alts(v.cert(0, 0));
                              if (!mine) return Verdict::reject;
                              if (mine->d1 == 0 && mine->d2 == 0) return Verdict::reject;
                              for (int field = 0; field < 2; ++field) {
                                  std::uint64_t d = field == 0 ? mine->d1 : mine->d2;
                                  if (d == 0) {
                                      if (!*selected) return Verdict::reject;
                                      continue;
                                  }
                                  bool decreasing = false;
                                  for (int j : v.center_neighbors()) {
                                      auto theirs = parse_alts(v.cert(0, j));
                                      if (!theirs) continue;
                                      std::uint64_t dj = field == 0 ? theirs->d1 : theirs->d2;
                                      if (dj == d - 1) decreasing = true;
                                  }
                                  if (!decreasing) return Verdict::reject;
                              }
                              return Verdict::accept;
                          }};
}

Scheme alts_scheme() { return Scheme{"alts", alts_verifier(), alts_prover}; }

// --- cover --------------------------------------------------------------------

Bytes encode_cover_cert(const CoverCert& c) {
    Bytes out;
    put_varint(out, c.d0);
    put_varint(out, c.entries.size());
    for (const auto& [d, e] : c.entries) {
        put_varint(out, d);
        put_length_prefixed(out, e);
    }
    return out;
}

std::optional<CoverCert> parse_cover_cert(const Bytes& b) {
    BytesReader in(b);
    auto d0 = in.read_varint();
    auto count = in.read_varint();
    if (!d0 || !count || *count == 0 || *count > 4096) return std::nullopt;
    CoverCert out;
    out.d0 = *d0;
    for (std::uint64_t i = 0; i < *count; ++i) {
        auto d = in.read_varint();
        if (!d) return std::nullopt;
        auto e = in.read_length_prefixed();
        if (!e) return std::nullopt;
        out.entries.push_back({*d, std::move(*e)});
    }
    if (!in.at_end()) return std::nullopt;
    return out;
}

namespace {

std::vector<Bytes> cover_target_values(const std::vector<zoo::CoverInput>& inputs,
                                       zoo::CoverSemantics semantics) {
    std::vector<Bytes> target;
    for (const auto& in : inputs) target.push_back(in.element);
    std::sort(target.begin(), target.end());
    if (semantics == zoo::CoverSemantics::value_set)
        target.erase(std::unique(target.begin(), target.end()), target.end());
    return target;
}

bool owns_covering_set(const zoo::CoverInput& in, const std::vector<Bytes>& target,
                       zoo::CoverSemantics semantics) {
    for (auto set : in.sets) {
        if (semantics == zoo::CoverSemantics::value_set)
            set.erase(std::unique(set.begin(), set.end()), set.end());
        if (set == target) return true;
    }
    return false;
}

}  // namespace

CertificateAssignment cover_prover(const Configuration& config, zoo::CoverSemantics semantics) {
    std::vector<zoo::CoverInput> inputs;
    for (const Bytes& b : config.input) {
        auto parsed = zoo::parse_cover_input(b);
        if (!parsed) throw domain_error("input does not parse as (sets, element)");
        inputs.push_back(std::move(*parsed));
    }
    auto target = cover_target_values(inputs, semantics);
    // the covering node with the smallest rooted canonical code
    int covering = -1;
    Bytes covering_code;
    for (int u = 0; u < config.n(); ++u) {
        if (!owns_covering_set(inputs[static_cast<std::size_t>(u)], target, semantics)) continue;
        Bytes code = canon::canonical_code_rooted(config, u);
        if (covering < 0 || code < covering_code) {
            covering = u;
            covering_code = code;
        }
    }
    if (covering < 0) throw domain_error("no node owns a covering set");

    auto order = canon::canonical_order(config);
    auto d0 = config.graph.distances_from(covering);
    std::vector<std::vector<int>> dist;
    for (int i = 0; i < config.n(); ++i) dist.push_back(config.graph.distances_from(order[static_cast<std::size_t>(i)]));

    CertificateAssignment certs;
    for (int u = 0; u < config.n(); ++u) {
        CoverCert c;
        c.d0 = static_cast<std::uint64_t>(d0[static_cast<std::size_t>(u)]);
        for (int i = 0; i < config.n(); ++i)
            c.entries.push_back({static_cast<std::uint64_t>(dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)]),
                                 inputs[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])].element});
        certs.push_back(encode_cover_cert(c));
    }
    return certs;
}

LocalAlgorithm cover_verifier(zoo::CoverSemantics semantics) {
    return LocalAlgorithm{
        "cover_verifier", 1, 1, [semantics](const BallView& v) {
            auto input = zoo::parse_cover_input(v.input[0]);
            if (!input) return Verdict::reject;
            auto mine = parse_cover_cert(v.cert(0, 0));
            if (!mine) return Verdict::reject;
            std::vector<CoverCert> neighbor_certs;
            for (int j : v.center_neighbors()) {
                auto theirs = parse_cover_cert(v.cert(0, j));
                if (!theirs) return Verdict::reject;
                // equal list lengths, matching element values position by position
                if (theirs->entries.size() != mine->entries.size()) return Verdict::reject;
                for (std::size_t i = 0; i < mine->entries.size(); ++i)
                    if (theirs->entries[i].second != mine->entries[i].second) return Verdict::reject;
                neighbor_certs.push_back(std::move(*theirs));
            }
            // exactly one zero distance, and it names my element
            int zeros = 0;
            for (const auto& [d, e] : mine->entries)
                if (d == 0) {
                    ++zeros;
                    if (e != input->element) return Verdict::reject;
                }
            if (zeros != 1) return Verdict::reject;
            // the claimed covering node owns a set equal to the advertised values
            if (mine->d0 == 0) {
                std::vector<Bytes> advertised;
                for (const auto& [d, e] : mine->entries) advertised.push_back(e);
                std::sort(advertised.begin(), advertised.end());
                if (semantics == zoo::CoverSemantics::value_set)
                    advertised.erase(std::unique(advertised.begin(), advertised.end()), advertised.end());
                if (!owns_covering_set(*input, advertised, semantics)) return Verdict::reject;
            }
            // every nonzero distance strictly decreases toward its target
            auto decreases = [&](std::uint64_t d, auto&& value_of) {
                if (d == 0) return true;
                for (const CoverCert& nc : neighbor_certs)
                    if (value_of(nc) < d) return true;
                return false;
            };
            if (!decreases(mine->d0, [](const CoverCert& c) { return c.d0; })) return Verdict::reject;
            for (std::size_t i = 0; i < mine->entries.size(); ++i)
                if (!decreases(mine->entries[i].first,
                               [i](const CoverCert& c) { return c.entries[i].first; }))
                    return Verdict::reject;
            return Verdict::accept;
        }};
}

Scheme cover_scheme(zoo::CoverSemantics semantics) {
    return Scheme{"cover", cover_verifier(semantics),
                  [semantics](const Configuration& c) { return cover_prover(c, semantics); }};
}

// --- certificate spaces ---------------------------------------------------------

games::CertificateSpace tree_counter_space(const Configuration& config, int max_counter) {
    std::vector<Bytes> options;
    for (int c = 0; c <= max_counter; ++c) options.push_back(varint(static_cast<std::uint64_t>(c)));
    return games::uniform_space(config.n(), std::move(options));
}

games::CertificateSpace alts_field_space(const Configuration& config, int max_distance) {
    std::vector<Bytes> options;
    for (int d1 = 0; d1 <= max_distance; ++d1)
        for (int d2 = 0; d2 <= max_distance; ++d2)
            options.push_back(encode_alts({static_cast<std::uint64_t>(d1), static_cast<std::uint64_t>(d2)}));
    return games::uniform_space(config.n(), std::move(options));
}

games::CertificateSpace cover_cert_space(const Configuration& config, int max_distance,
                                         const std::vector<Bytes>& universe) {
    // all certificates with exactly n entries, distances <= max_distance,
    // elements drawn from the universe
    std::vector<std::vector<std::pair<std::uint64_t, Bytes>>> entry_lists{{}};
    for (int i = 0; i < config.n(); ++i) {
        std::vector<std::vector<std::pair<std::uint64_t, Bytes>>> next;
        for (const auto& partial : entry_lists)
            for (int d = 0; d <= max_distance; ++d)
                for (const Bytes& e : universe) {
                    auto extended = partial;
                    extended.push_back({static_cast<std::uint64_t>(d), e});
                    next.push_back(std::move(extended));
                }
        entry_lists = std::move(next);
    }
    std::vector<Bytes> options;
    for (const auto& entries : entry_lists)
        for (int d0 = 0; d0 <= max_distance; ++d0)
            options.push_back(encode_cover_cert({static_cast<std::uint64_t>(d0), entries}));
    return games::uniform_space(config.n(), std::move(options));
}

}  // namespace locver::schemes
