#include "locver/zoo.hpp"

#include <algorithm>
#include <map>

#include "locver/canon.hpp"
#include "locver/errors.hpp"
#include "locver/iter.hpp"

namespace locver {

std::vector<int> GraphDescription::row_neighbors(int i) const {
    std::vector<int> out;
    for (int j = 0; j < m; ++j)
        if (edge(i, j)) out.push_back(j);
    return out;
}

void put_description(Bytes& out, const GraphDescription& d) {
    put_varint(out, static_cast<std::uint64_t>(d.m));
    std::uint8_t acc = 0;
    int nbits = 0;
    for (int i = 0; i < d.m; ++i)
        for (int j = 0; j < d.m; ++j) {
            acc = static_cast<std::uint8_t>(acc << 1 | (d.edge(i, j) ? 1 : 0));
            if (++nbits == 8) {
                out.push_back(acc);
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
    for (const Bytes& entry : d.data) put_length_prefixed(out, entry);
}

Bytes encode_description(const GraphDescription& d) {
    Bytes out;
    put_description(out, d);
    return out;
}

std::optional<GraphDescription> read_description(BytesReader& in, int max_m) {
    auto m = in.read_varint();
    if (!m || *m == 0 || *m > static_cast<std::uint64_t>(max_m)) return std::nullopt;
    GraphDescription d;
    d.m = static_cast<int>(*m);
    std::size_t nbytes = (static_cast<std::size_t>(d.m) * static_cast<std::size_t>(d.m) + 7) / 8;
    auto matrix_bytes = in.read_bytes(nbytes);
    if (!matrix_bytes) return std::nullopt;
    d.matrix.assign(static_cast<std::size_t>(d.m), std::vector<char>(static_cast<std::size_t>(d.m), 0));
    for (int i = 0; i < d.m; ++i)
        for (int j = 0; j < d.m; ++j) {
            std::size_t bitpos = static_cast<std::size_t>(i) * static_cast<std::size_t>(d.m) + static_cast<std::size_t>(j);
            std::uint8_t byte = (*matrix_bytes)[bitpos / 8];
            d.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (byte >> (7 - bitpos % 8)) & 1;
        }
    for (int i = 0; i < d.m; ++i) {
        if (d.edge(i, i)) return std::nullopt;
        for (int j = 0; j < d.m; ++j)
            if (d.edge(i, j) != d.edge(j, i)) return std::nullopt;
    }
    d.data.reserve(static_cast<std::size_t>(d.m));
    for (int i = 0; i < d.m; ++i) {
        auto entry = in.read_length_prefixed();
        if (!entry) return std::nullopt;
        d.data.push_back(std::move(*entry));
    }
    return d;
}

GraphDescription describe(const Configuration& config, const std::vector<int>& order) {
    GraphDescription d;
    d.m = config.n();
    d.matrix.assign(static_cast<std::size_t>(d.m), std::vector<char>(static_cast<std::size_t>(d.m), 0));
    for (int i = 0; i < d.m; ++i)
        for (int j = 0; j < d.m; ++j)
            d.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                config.graph.has_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]) ? 1 : 0;
    for (int i = 0; i < d.m; ++i) d.data.push_back(config.input[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
    return d;
}

std::optional<Configuration> description_to_config(const GraphDescription& d) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < d.m; ++i)
        for (int j = i + 1; j < d.m; ++j)
            if (d.edge(i, j)) edges.push_back({i, j});
    if (!is_connected(d.m, edges)) return std::nullopt;
    return Configuration(Graph(d.m, edges), d.data);
}

}  // namespace locver

namespace locver::zoo {

Bytes encode_bool(bool b) { return Bytes{static_cast<std::uint8_t>(b ? 1 : 0)}; }

std::optional<bool> parse_bool(const Bytes& b) {
    if (b.size() != 1) return std::nullopt;
    if (b[0] == 0) return false;
    if (b[0] == 1) return true;
    return std::nullopt;
}

Configuration bool_config(Graph g, const std::vector<int>& bits) {
    if (static_cast<int>(bits.size()) != g.n()) throw domain_error("one bit per node required");
    std::vector<Bytes> input;
    input.reserve(bits.size());
    for (int b : bits) input.push_back(encode_bool(b != 0));
    return Configuration(std::move(g), std::move(input));
}

namespace {

// Counts selected nodes; nullopt when some input is not a boolean.
std::optional<int> selected_count(const Configuration& c) {
    int count = 0;
    for (const Bytes& b : c.input) {
        auto v = parse_bool(b);
        if (!v) return std::nullopt;
        if (*v) ++count;
    }
    return count;
}

bool all_bool_inputs(const Configuration& c) { return selected_count(c).has_value(); }

}  // namespace

Bytes encode_cover_input(const CoverInput& in) {
    Bytes out;
    put_varint(out, in.sets.size());
    for (const auto& set : in.sets) {
        put_varint(out, set.size());
        for (const Bytes& e : set) put_length_prefixed(out, e);
    }
    put_length_prefixed(out, in.element);
    return out;
}

std::optional<CoverInput> parse_cover_input(const Bytes& b) {
    BytesReader in(b);
    auto count = in.read_varint();
    if (!count || *count == 0 || *count > 64) return std::nullopt;
    CoverInput out;
    for (std::uint64_t s = 0; s < *count; ++s) {
        auto size = in.read_varint();
        if (!size || *size > 256) return std::nullopt;
        std::vector<Bytes> set;
        for (std::uint64_t i = 0; i < *size; ++i) {
            auto e = in.read_length_prefixed();
            if (!e) return std::nullopt;
            set.push_back(std::move(*e));
        }
        std::sort(set.begin(), set.end());
        out.sets.push_back(std::move(set));
    }
    auto e = in.read_length_prefixed();
    if (!e || !in.at_end()) return std::nullopt;
    out.element = std::move(*e);
    return out;
}

Bytes encode_miss_input(const MissInput& in) {
    Bytes out;
    if (!in.family.lazy) {
        put_byte(out, 0);
        put_varint(out, in.family.members.size());
        for (const auto& d : in.family.members) put_description(out, d);
    } else {
        put_byte(out, 1);
        Bytes name(in.family.lang_name.begin(), in.family.lang_name.end());
        put_length_prefixed(out, name);
        put_varint(out, in.family.width);
    }
    put_length_prefixed(out, in.xprime);
    return out;
}

std::optional<MissInput> parse_miss_input(const Bytes& b) {
    BytesReader in(b);
    auto tag = in.read_byte();
    if (!tag || *tag > 1) return std::nullopt;
    MissInput out;
    if (*tag == 0) {
        out.family.lazy = false;
        auto count = in.read_varint();
        if (!count || *count > 64) return std::nullopt;
        for (std::uint64_t i = 0; i < *count; ++i) {
            auto d = read_description(in);
            if (!d) return std::nullopt;
            out.family.members.push_back(std::move(*d));
        }
    } else {
        out.family.lazy = true;
        auto name = in.read_length_prefixed();
        if (!name || name->empty() || name->size() > 64) return std::nullopt;
        out.family.lang_name.assign(name->begin(), name->end());
        auto width = in.read_varint();
        if (!width) return std::nullopt;
        out.family.width = *width;
    }
    auto xp = in.read_length_prefixed();
    if (!xp || !in.at_end()) return std::nullopt;
    out.xprime = std::move(*xp);
    return out;
}

bool FamilyDescriptor::contains(const Configuration& c) const {
    if (!lazy) {
        for (const auto& d : members) {
            auto member = description_to_config(d);
            if (member && canon::isomorphic(*member, c)) return true;
        }
        return false;
    }
    if (static_cast<std::uint64_t>(c.n()) > width) return false;
    for (const Bytes& x : c.input)
        if (byte_string_value(x) > width) return false;
    return !find_language(lang_name).contains(c);
}

lifts::Tristate FamilyDescriptor::closure_contains(const Configuration& c, std::uint64_t budget) const {
    if (!lazy) {
        std::vector<Configuration> configs;
        for (const auto& d : members)
            if (auto member = description_to_config(d)) configs.push_back(std::move(*member));
        return lifts::lift_closure_membership(c, configs, budget);
    }
    // c is in the closure of a lazy family iff c itself or one of its proper
    // quotients belongs to the family.
    if (contains(c)) return lifts::Tristate::yes;
    for (const Configuration& q : lifts::proper_quotients(c))
        if (contains(q)) return lifts::Tristate::yes;
    return lifts::Tristate::no;
}

std::vector<Configuration> FamilyDescriptor::materialize() const {
    std::vector<Configuration> out;
    if (!lazy) {
        for (const auto& d : members)
            if (auto c = description_to_config(d)) out.push_back(std::move(*c));
        return out;
    }
    if (width > 4) throw domain_error("lazy families materialize only for width <= 4");
    const Language lang = find_language(lang_name);
    int max_n = static_cast<int>(width);
    // all inputs whose integer value is <= width, encoded minimally
    std::vector<Bytes> values;
    values.push_back({});
    for (std::uint64_t v = 1; v <= width; ++v) {
        Bytes b;
        std::uint64_t x = v;
        while (x > 0) {
            b.insert(b.begin(), static_cast<std::uint8_t>(x & 0xff));
            x >>= 8;
        }
        values.push_back(std::move(b));
    }
    for (int n = 1; n <= max_n; ++n) {
        for (const Graph& g : canon::connected_graph_catalog(n)) {
            std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
            for (;;) {
                std::vector<Bytes> input;
                for (std::size_t u = 0; u < pick.size(); ++u) input.push_back(values[pick[u]]);
                Configuration cand(g, input);
                if (!lang.contains(cand)) out.push_back(cand);
                std::size_t pos = pick.size();
                bool advanced = false;
                while (pos > 0) {
                    --pos;
                    if (++pick[pos] < values.size()) {
                        advanced = true;
                        break;
                    }
                    pick[pos] = 0;
                }
                if (!advanced) break;
            }
        }
    }
    return out;
}

std::optional<Configuration> miss_xprime_config(const Configuration& config) {
    std::vector<Bytes> xprime;
    for (const Bytes& b : config.input) {
        auto parsed = parse_miss_input(b);
        if (!parsed) return std::nullopt;
        xprime.push_back(parsed->xprime);
    }
    return Configuration(config.graph, std::move(xprime));
}

// --- languages ---------------------------------------------------------------

Language and_lang() {
    return Language{"and",
                    [](const Configuration& c) {
                        auto count = selected_count(c);
                        return count.has_value() && *count == c.n();
                    },
                    all_bool_inputs};
}

Language or_lang() {
    return Language{"or",
                    [](const Configuration& c) {
                        auto count = selected_count(c);
                        return count.has_value() && *count >= 1;
                    },
                    all_bool_inputs};
}

Language diam_k_lang(int k) {
    if (k < 0) throw domain_error("diameter bound must be non-negative");
    return Language{"diam_" + std::to_string(k),
                    [k](const Configuration& c) { return c.graph.diameter() <= k; }, nullptr};
}

Language prop_col_lang() {
    return Language{"prop_col",
                    [](const Configuration& c) {
                        for (auto [u, v] : c.graph.edges())
                            if (c.input[static_cast<std::size_t>(u)] == c.input[static_cast<std::size_t>(v)]) return false;
                        return true;
                    },
                    nullptr};
}

Language tree_lang() {
    return Language{"tree",
                    [](const Configuration& c) {
                        return static_cast<int>(c.graph.edges().size()) == c.n() - 1;
                    },
                    nullptr};
}

Language amos_lang() {
    return Language{"amos",
                    [](const Configuration& c) {
                        auto count = selected_count(c);
                        return count.has_value() && *count <= 1;
                    },
                    all_bool_inputs};
}

Language alts_lang() {
    return Language{"alts",
                    [](const Configuration& c) {
                        auto count = selected_count(c);
                        return count.has_value() && *count >= 2;
                    },
                    all_bool_inputs};
}

Language exts_lang() {
    return Language{"exts",
                    [](const Configuration& c) {
                        auto count = selected_count(c);
                        return count.has_value() && *count == 2;
                    },
                    all_bool_inputs};
}

namespace {

std::vector<Bytes> cover_target(const Configuration& c, const std::vector<CoverInput>& inputs,
                                CoverSemantics semantics) {
    std::vector<Bytes> target;
    for (int u = 0; u < c.n(); ++u) target.push_back(inputs[static_cast<std::size_t>(u)].element);
    std::sort(target.begin(), target.end());
    if (semantics == CoverSemantics::value_set)
        target.erase(std::unique(target.begin(), target.end()), target.end());
    return target;
}

bool set_matches(std::vector<Bytes> set, const std::vector<Bytes>& target, CoverSemantics semantics) {
    if (semantics == CoverSemantics::value_set)
        set.erase(std::unique(set.begin(), set.end()), set.end());
    return set == target;
}

}  // namespace

Language cover_lang(CoverSemantics semantics) {
    return Language{"cover",
                    [semantics](const Configuration& c) {
                        std::vector<CoverInput> inputs;
                        for (const Bytes& b : c.input) {
                            auto parsed = parse_cover_input(b);
                            if (!parsed) return false;
                            inputs.push_back(std::move(*parsed));
                        }
                        auto target = cover_target(c, inputs, semantics);
                        for (const auto& in : inputs)
                            for (const auto& set : in.sets)
                                if (set_matches(set, target, semantics)) return true;
                        return false;
                    },
                    [](const Configuration& c) {
                        for (const Bytes& b : c.input)
                            if (!parse_cover_input(b)) return false;
                        return true;
                    }};
}

Language miss_lang() {
    return Language{"miss",
                    [](const Configuration& c) {
                        auto xprime = miss_xprime_config(c);
                        if (!xprime) return false;
                        for (const Bytes& b : c.input)
                            if (parse_miss_input(b)->family.contains(*xprime)) return false;
                        return true;
                    },
                    [](const Configuration& c) { return miss_xprime_config(c).has_value(); }};
}

Language miss_lift_lang(std::uint64_t closure_budget) {
    return Language{"miss_lift",
                    [closure_budget](const Configuration& c) {
                        auto xprime = miss_xprime_config(c);
                        if (!xprime) return false;
                        for (const Bytes& b : c.input) {
                            auto parsed = parse_miss_input(b);
                            auto in_closure = parsed->family.closure_contains(*xprime, closure_budget);
                            if (in_closure == lifts::Tristate::unknown)
                                throw inconclusive_error("lift-closure query exceeded its budget", 0);
                            if (in_closure == lifts::Tristate::yes) return false;
                        }
                        return true;
                    },
                    [](const Configuration& c) { return miss_xprime_config(c).has_value(); }};
}

Language find_language(const std::string& name) {
    if (name == "and") return and_lang();
    if (name == "or") return or_lang();
    if (name == "prop_col") return prop_col_lang();
    if (name == "tree") return tree_lang();
    if (name == "amos") return amos_lang();
    if (name == "alts") return alts_lang();
    if (name == "exts") return exts_lang();
    if (name == "cover") return cover_lang();
    if (name == "cover_multiset") return cover_lang(CoverSemantics::value_multiset);
    if (name == "miss") return miss_lang();
    if (name == "miss_lift") return miss_lift_lang();
    if (name == "iter") return iter::iter_language();
    if (name == "iter_minus") return iter::iter_minus_language();
    if (name.rfind("diam_", 0) == 0) {
        try {
            return diam_k_lang(std::stoi(name.substr(5)));
        } catch (...) {
            throw domain_error("bad diameter bound in '" + name + "'");
        }
    }
    throw domain_error("unknown language '" + name + "'");
}

std::vector<std::string> language_names() {
    return {"and",  "or",   "diam_<k>", "prop_col", "tree",      "amos",
            "alts", "exts", "cover",    "miss",     "miss_lift", "iter",
            "iter_minus"};
}

// --- local checkers -----------------------------------------------------------

LocalAlgorithm and_checker() {
    return LocalAlgorithm{"and_checker", 0, 0, [](const BallView& v) {
                              auto b = parse_bool(v.input[0]);
                              return b && *b ? Verdict::accept : Verdict::reject;
                          }};
}

LocalAlgorithm or_co_checker() {
    return LocalAlgorithm{"or_co_checker", 0, 0, [](const BallView& v) {
                              auto b = parse_bool(v.input[0]);
                              return b && *b ? Verdict::accept : Verdict::reject;
                          }};
}

LocalAlgorithm prop_col_checker() {
    return LocalAlgorithm{"prop_col_checker", 1, 0, [](const BallView& v) {
                              for (int j : v.center_neighbors())
                                  if (v.input[static_cast<std::size_t>(j)] == v.input[0]) return Verdict::reject;
                              return Verdict::accept;
                          }};
}

LocalAlgorithm diam_k_checker(int k) {
    if (k < 0) throw domain_error("diameter bound must be non-negative");
    return LocalAlgorithm{"diam_" + std::to_string(k) + "_checker", k + 1, 0,
                          [k](const BallView& v) {
                              for (int d : v.dist)
                                  if (d == k + 1) return Verdict::reject;
                              return Verdict::accept;
                          }};
}

}  // namespace locver::zoo
