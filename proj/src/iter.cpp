#include "locver/iter.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "locver/errors.hpp"

namespace locver::iter {

const TuringMachine::Rule* TuringMachine::rule_for(int state, int read) const {
    for (const Rule& r : rules)
        if (r.state == state && r.read == read) return &r;
    return nullptr;
}

Bytes TuringMachine::encode() const {
    Bytes out;
    put_varint(out, static_cast<std::uint64_t>(num_states));
    put_varint(out, static_cast<std::uint64_t>(num_symbols));
    put_varint(out, static_cast<std::uint64_t>(tape_len));
    put_varint(out, rules.size());
    for (const Rule& r : rules) {
        put_varint(out, static_cast<std::uint64_t>(r.state));
        put_varint(out, static_cast<std::uint64_t>(r.read));
        put_varint(out, static_cast<std::uint64_t>(r.next_state));
        put_varint(out, static_cast<std::uint64_t>(r.write));
        put_byte(out, r.move < 0 ? 0 : 1);
    }
    return out;
}

std::optional<TuringMachine> TuringMachine::decode(BytesReader& in) {
    auto states = in.read_varint();
    auto symbols = in.read_varint();
    auto tape = in.read_varint();
    auto count = in.read_varint();
    if (!states || !symbols || !tape || !count) return std::nullopt;
    if (*states == 0 || *states > 16 || *symbols < 2 || *symbols > 16 || *tape == 0 || *tape > 16 ||
        *count > 256)
        return std::nullopt;
    TuringMachine m;
    m.num_states = static_cast<int>(*states);
    m.num_symbols = static_cast<int>(*symbols);
    m.tape_len = static_cast<int>(*tape);
    std::set<std::pair<int, int>> seen;
    for (std::uint64_t i = 0; i < *count; ++i) {
        auto q = in.read_varint();
        auto s = in.read_varint();
        auto q2 = in.read_varint();
        auto s2 = in.read_varint();
        auto dir = in.read_byte();
        if (!q || !s || !q2 || !s2 || !dir) return std::nullopt;
        if (*q >= static_cast<std::uint64_t>(m.num_states) || *q2 >= static_cast<std::uint64_t>(m.num_states))
            return std::nullopt;
        if (*s >= static_cast<std::uint64_t>(m.num_symbols) || *s2 >= static_cast<std::uint64_t>(m.num_symbols))
            return std::nullopt;
        if (*dir > 1) return std::nullopt;
        TuringMachine::Rule r{static_cast<int>(*q), static_cast<int>(*s), static_cast<int>(*q2),
                              static_cast<int>(*s2), *dir == 0 ? -1 : 1};
        if (!seen.insert({r.state, r.read}).second) return std::nullopt;
        m.rules.push_back(r);
    }
    std::vector<TuringMachine::Rule> sorted = m.rules;
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
        return std::pair{x.state, x.read} < std::pair{y.state, y.read};
    });
    if (sorted != m.rules) return std::nullopt;  // canonical order required
    return m;
}

TuringMachine parse_machine_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    TuringMachine m;
    m.rules.clear();
    bool have_states = false, have_alphabet = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string no_comment = line.substr(0, line.find('#'));
        std::istringstream toks(no_comment);
        std::string kind;
        if (!(toks >> kind)) continue;
        auto read_int = [&](int lo, int hi) {
            long long v;
            if (!(toks >> v) || v < lo || v > hi) throw parse_error(line_no, "bad field in '" + kind + "' record");
            return static_cast<int>(v);
        };
        if (kind == "states") {
            m.num_states = read_int(1, 16);
            have_states = true;
        } else if (kind == "alphabet") {
            m.num_symbols = read_int(2, 16);
            have_alphabet = true;
        } else if (kind == "tape") {
            m.tape_len = read_int(1, 16);
        } else if (kind == "trans") {
            TuringMachine::Rule r;
            r.state = read_int(0, 15);
            r.read = read_int(0, 15);
            r.next_state = read_int(0, 15);
            r.write = read_int(0, 15);
            std::string dir;
            if (!(toks >> dir) || (dir != "L" && dir != "R")) throw parse_error(line_no, "direction must be L or R");
            r.move = dir == "L" ? -1 : 1;
            m.rules.push_back(r);
        } else {
            throw parse_error(line_no, "unknown record '" + kind + "'");
        }
        std::string extra;
        if (toks >> extra) throw parse_error(line_no, "trailing tokens");
    }
    if (!have_states || !have_alphabet) throw parse_error(line_no == 0 ? 1 : line_no, "missing states/alphabet");
    std::set<std::pair<int, int>> seen;
    for (const auto& r : m.rules) {
        if (r.state >= m.num_states || r.next_state >= m.num_states || r.read >= m.num_symbols ||
            r.write >= m.num_symbols)
            throw parse_error(line_no, "transition out of declared ranges");
        if (!seen.insert({r.state, r.read}).second) throw parse_error(line_no, "duplicate transition");
    }
    std::sort(m.rules.begin(), m.rules.end(), [](const auto& x, const auto& y) {
        return std::pair{x.state, x.read} < std::pair{y.state, y.read};
    });
    return m;
}

std::string serialize_machine(const TuringMachine& m) {
    std::ostringstream out;
    out << "states " << m.num_states << "\n";
    out << "alphabet " << m.num_symbols << "\n";
    out << "tape " << m.tape_len << "\n";
    for (const auto& r : m.rules)
        out << "trans " << r.state << " " << r.read << " " << r.next_state << " " << r.write << " "
            << (r.move < 0 ? "L" : "R") << "\n";
    return out.str();
}

SystemStateCodec::SystemStateCodec(TuringMachine m) : machine_(std::move(m)) {
    std::uint64_t tape_combos = 1;
    for (int i = 0; i < machine_.tape_len; ++i) {
        tape_combos *= static_cast<std::uint64_t>(machine_.num_symbols);
        if (tape_combos > (1ull << 40)) throw domain_error("codec state space too large");
    }
    bound_ = 1 + tape_combos * static_cast<std::uint64_t>(machine_.tape_len) *
                     static_cast<std::uint64_t>(machine_.num_states);
}

std::uint64_t SystemStateCodec::encode(const SystemState& s) const {
    if (static_cast<int>(s.tape.size()) != machine_.tape_len || s.head < 0 ||
        s.head >= machine_.tape_len || s.state < 0 || s.state >= machine_.num_states)
        throw domain_error("system state outside codec shape");
    std::uint64_t tape_rank = 0;
    for (int sym : s.tape) {
        if (sym < 0 || sym >= machine_.num_symbols) throw domain_error("symbol outside alphabet");
        tape_rank = tape_rank * static_cast<std::uint64_t>(machine_.num_symbols) + static_cast<std::uint64_t>(sym);
    }
    std::uint64_t rank = (tape_rank * static_cast<std::uint64_t>(machine_.tape_len) +
                          static_cast<std::uint64_t>(s.head)) *
                             static_cast<std::uint64_t>(machine_.num_states) +
                         static_cast<std::uint64_t>(s.state);
    return rank + 2;
}

SystemState SystemStateCodec::decode(std::uint64_t index) const {
    if (index < 2 || index > bound_) throw domain_error("index outside codec range");
    std::uint64_t rank = index - 2;
    SystemState s;
    s.state = static_cast<int>(rank % static_cast<std::uint64_t>(machine_.num_states));
    rank /= static_cast<std::uint64_t>(machine_.num_states);
    s.head = static_cast<int>(rank % static_cast<std::uint64_t>(machine_.tape_len));
    rank /= static_cast<std::uint64_t>(machine_.tape_len);
    s.tape.assign(static_cast<std::size_t>(machine_.tape_len), 0);
    for (int i = machine_.tape_len - 1; i >= 0; --i) {
        s.tape[static_cast<std::size_t>(i)] = static_cast<int>(rank % static_cast<std::uint64_t>(machine_.num_symbols));
        rank /= static_cast<std::uint64_t>(machine_.num_symbols);
    }
    return s;
}

std::uint64_t fm(const SystemStateCodec& codec, std::uint64_t i) {
    if (i == 0) return 0;
    if (i == 1) return 1;
    SystemState s = codec.decode(i);  // throws on range violation
    const TuringMachine& m = codec.machine();
    const auto* rule = m.rule_for(s.state, s.tape[static_cast<std::size_t>(s.head)]);
    if (rule == nullptr) return 1;  // halted: collapses to the fixed point 1
    s.tape[static_cast<std::size_t>(s.head)] = rule->write;
    s.state = rule->next_state;
    s.head += rule->move;
    if (s.head < 0 || s.head >= m.tape_len)
        throw domain_error("head moved off the bounded tape (codec range exceeded)");
    return codec.encode(s);
}

std::uint64_t iterate_fm(const SystemStateCodec& codec, std::uint64_t start, std::uint64_t k) {
    std::uint64_t val = start;
    std::uint64_t cap = std::min<std::uint64_t>(k, codec.bound() + 2);
    for (std::uint64_t j = 0; j < cap; ++j) {
        if (val <= 1) return val;  // fixed point reached
        val = fm(codec, val);
    }
    return val;
}

// --- node input encoding --------------------------------------------------------

Bytes encode_node_input(const NodeInput& in) {
    Bytes out;
    put_byte(out, static_cast<std::uint8_t>(in.role));
    put_byte(out, static_cast<std::uint8_t>(in.l1));
    put_byte(out, static_cast<std::uint8_t>(in.l2));
    if (in.role == Role::pivot) {
        Bytes m = in.machine->encode();
        out.insert(out.end(), m.begin(), m.end());
        put_varint(out, in.a);
        put_varint(out, in.b);
    } else if (in.role == Role::path_left || in.role == Role::path_right) {
        Bytes m = in.machine->encode();
        out.insert(out.end(), m.begin(), m.end());
        put_varint(out, in.f);
    }
    return out;
}

std::optional<NodeInput> parse_node_input(const Bytes& b) {
    BytesReader in(b);
    auto role = in.read_byte();
    auto l1 = in.read_byte();
    auto l2 = in.read_byte();
    if (!role || !l1 || !l2) return std::nullopt;
    if (*role > 4 || *l1 > 2 || *l2 > 2) return std::nullopt;
    NodeInput out;
    out.role = static_cast<Role>(*role);
    out.l1 = *l1;
    out.l2 = *l2;
    if (out.role == Role::pivot) {
        auto m = TuringMachine::decode(in);
        auto a = in.read_varint();
        auto bb = in.read_varint();
        if (!m || !a || !bb) return std::nullopt;
        out.machine = std::move(*m);
        out.a = *a;
        out.b = *bb;
    } else if (out.role == Role::path_left || out.role == Role::path_right) {
        auto m = TuringMachine::decode(in);
        auto f = in.read_varint();
        if (!m || !f) return std::nullopt;
        out.machine = std::move(*m);
        out.f = *f;
    }
    if (!in.at_end()) return std::nullopt;
    return out;
}

// --- gadget construction -----------------------------------------------------------

namespace {

bool power_of_two(int x) { return x >= 1 && (x & (x - 1)) == 0; }

struct SideLayout {
    std::vector<int> leaves;                 // j = 0 nearest the pivot
    std::vector<std::vector<int>> levels;    // levels[h-1] = nodes at height h, j = 0 nearest pivot side
};

}  // namespace

Configuration iter_instance(const TuringMachine& m, std::uint64_t a, std::uint64_t b, int len_l,
                            int len_r) {
    if (!power_of_two(len_l) || !power_of_two(len_r))
        throw domain_error("path lengths must be powers of two");
    SystemStateCodec codec(m);

    std::vector<std::pair<int, int>> edges;
    std::vector<NodeInput> inputs;
    auto new_node = [&](NodeInput in) {
        inputs.push_back(std::move(in));
        return static_cast<int>(inputs.size()) - 1;
    };

    int pivot = new_node(NodeInput{Role::pivot, 0, 0, m, a, b, 0});

    auto build_side = [&](Role path_role, Role internal_role, int len, std::uint64_t seed) {
        SideLayout side;
        std::uint64_t val = seed;
        int prev = pivot;
        for (int j = 0; j < len; ++j) {
            val = fm(codec, val);  // instance generation fails fast on range errors
            int node = new_node(NodeInput{path_role, (j + 1) % 3, 0, m, 0, 0, val});
            edges.push_back({prev, node});
            side.leaves.push_back(node);
            prev = node;
        }
        std::vector<int> below = side.leaves;
        int h = 1;
        while (static_cast<int>(below.size()) > 1) {
            std::vector<int> level;
            for (std::size_t j = 0; j * 2 < below.size(); ++j) {
                int node = new_node(NodeInput{internal_role, static_cast<int>(j) % 3, h % 3,
                                              std::nullopt, 0, 0, 0});
                edges.push_back({node, below[j * 2]});
                edges.push_back({node, below[j * 2 + 1]});
                if (j > 0) edges.push_back({level.back(), node});  // horizontal path
                level.push_back(node);
            }
            side.levels.push_back(level);
            below = level;
            ++h;
        }
        return side;
    };

    build_side(Role::path_left, Role::internal_left, len_l, a);
    build_side(Role::path_right, Role::internal_right, len_r, b);

    std::vector<Bytes> encoded;
    encoded.reserve(inputs.size());
    for (const auto& in : inputs) encoded.push_back(encode_node_input(in));
    return Configuration(Graph(static_cast<int>(inputs.size()), edges), std::move(encoded));
}

// --- global structural checks ---------------------------------------------------

namespace {

struct ParsedGadget {
    std::vector<NodeInput> inputs;
    int pivot = -1;
    std::vector<int> left_path, right_path;  // ordered from the pivot outwards
    std::uint64_t ext_left = 0, ext_right = 0;
};

// Reconstructs the gadget layout and verifies shape, labels, machine equality,
// the f-chains, and exact edge accounting. Returns nullopt when anything is off.
std::optional<ParsedGadget> reconstruct(const Configuration& config) {
    int n = config.n();
    ParsedGadget g;
    g.inputs.reserve(static_cast<std::size_t>(n));
    for (const Bytes& b : config.input) {
        auto in = parse_node_input(b);
        if (!in) return std::nullopt;
        g.inputs.push_back(std::move(*in));
    }
    for (int u = 0; u < n; ++u)
        if (g.inputs[static_cast<std::size_t>(u)].role == Role::pivot) {
            if (g.pivot >= 0) return std::nullopt;
            g.pivot = u;
        }
    if (g.pivot < 0) return std::nullopt;
    const NodeInput& pin = g.inputs[static_cast<std::size_t>(g.pivot)];
    if (pin.l1 != 0 || pin.l2 != 0) return std::nullopt;
    const Bytes machine_code = pin.machine->encode();

    std::vector<std::pair<int, int>> expected_edges;
    auto add_edge = [&](int x, int y) { expected_edges.push_back({std::min(x, y), std::max(x, y)}); };

    SystemStateCodec codec(*pin.machine);

    auto walk_path = [&](Role role) -> std::optional<std::vector<int>> {
        std::vector<int> path;
        int prev = g.pivot;
        for (;;) {
            int next = -1;
            int want = (static_cast<int>(path.size()) + 1) % 3;  // distance label of the successor
            for (int v : config.graph.neighbors(prev)) {
                if (g.inputs[static_cast<std::size_t>(v)].role != role) continue;
                if (g.inputs[static_cast<std::size_t>(v)].l1 != want) continue;
                if (std::find(path.begin(), path.end(), v) != path.end()) continue;
                if (next >= 0) return std::nullopt;  // branching path
                next = v;
            }
            if (next < 0) break;
            add_edge(prev, next);
            path.push_back(next);
            prev = next;
        }
        if (path.empty()) return std::nullopt;
        return path;
    };

    auto check_side = [&](Role path_role, Role internal_role, std::uint64_t seed,
                          std::uint64_t* extremity) -> bool {
        auto path = walk_path(path_role);
        if (!path) return false;
        int len = static_cast<int>(path->size());
        if (!power_of_two(len)) return false;
        std::uint64_t val = seed;
        for (int j = 0; j < len; ++j) {
            const NodeInput& in = g.inputs[static_cast<std::size_t>((*path)[static_cast<std::size_t>(j)])];
            if (in.l2 != 0) return false;
            if (in.machine->encode() != machine_code) return false;
            try {
                val = fm(codec, val);
            } catch (const domain_error&) {
                return false;
            }
            if (in.f != val) return false;
        }
        *extremity = val;
        if (val > 1) return false;
        if (path_role == Role::path_left) g.left_path = *path;
        else g.right_path = *path;

        // climb the tree: level 0 = leaves
        std::vector<int> below = *path;
        int h = 1;
        while (static_cast<int>(below.size()) > 1) {
            if (below.size() % 2 != 0) return false;
            std::vector<int> level;
            for (std::size_t j = 0; j * 2 < below.size(); ++j) {
                int c0 = below[j * 2], c1 = below[j * 2 + 1];
                // the unique common internal neighbor of the sibling pair
                int parent = -1;
                for (int v : config.graph.neighbors(c0)) {
                    if (g.inputs[static_cast<std::size_t>(v)].role != internal_role) continue;
                    if (!config.graph.has_edge(v, c1)) continue;
                    if (parent >= 0) return false;
                    parent = v;
                }
                if (parent < 0) return false;
                const NodeInput& in = g.inputs[static_cast<std::size_t>(parent)];
                if (in.l1 != static_cast<int>(j) % 3 || in.l2 != h % 3) return false;
                add_edge(parent, c0);
                add_edge(parent, c1);
                if (j > 0) add_edge(level.back(), parent);
                level.push_back(parent);
            }
            below = level;
            ++h;
        }
        return true;
    };

    if (!check_side(Role::path_left, Role::internal_left, pin.a, &g.ext_left)) return std::nullopt;
    if (!check_side(Role::path_right, Role::internal_right, pin.b, &g.ext_right)) return std::nullopt;

    std::sort(expected_edges.begin(), expected_edges.end());
    expected_edges.erase(std::unique(expected_edges.begin(), expected_edges.end()), expected_edges.end());
    if (expected_edges != config.graph.edges()) return std::nullopt;

    // every node must have been placed: pivot + paths + internals
    std::set<int> placed{g.pivot};
    for (int v : g.left_path) placed.insert(v);
    for (int v : g.right_path) placed.insert(v);
    for (auto [x, y] : expected_edges) {
        placed.insert(x);
        placed.insert(y);
    }
    if (static_cast<int>(placed.size()) != n) return std::nullopt;
    return g;
}

}  // namespace

bool iter_minus_check(const Configuration& config) { return reconstruct(config).has_value(); }

bool iter_check(const Configuration& config) {
    auto g = reconstruct(config);
    if (!g) return false;
    return g->ext_left == 0 || g->ext_right == 0;
}

Language iter_language() {
    return Language{"iter", [](const Configuration& c) { return iter_check(c); }, nullptr};
}

Language iter_minus_language() {
    return Language{"iter_minus", [](const Configuration& c) { return iter_minus_check(c); }, nullptr};
}

// --- radius-1 local checks ----------------------------------------------------------

namespace {

struct LocalContext {
    NodeInput center;
    std::vector<NodeInput> nb;      // parsed neighbor inputs
    std::vector<int> nb_local;      // local indices matching nb
};

std::optional<LocalContext> parse_context(const BallView& v) {
    LocalContext ctx;
    auto center = parse_node_input(v.input[0]);
    if (!center) return std::nullopt;
    ctx.center = std::move(*center);
    for (int j : v.center_neighbors()) {
        auto in = parse_node_input(v.input[static_cast<std::size_t>(j)]);
        if (!in) return std::nullopt;
        ctx.nb.push_back(std::move(*in));
        ctx.nb_local.push_back(j);
    }
    return ctx;
}

int mod3(int x) { return ((x % 3) + 3) % 3; }

bool check_pivot(const LocalContext& ctx) {
    const NodeInput& c = ctx.center;
    if (c.l1 != 0 || c.l2 != 0) return false;
    SystemStateCodec codec(*c.machine);
    Bytes mc = c.machine->encode();
    int left = 0, right = 0;
    for (const NodeInput& nb : ctx.nb) {
        if (nb.role == Role::path_left || nb.role == Role::path_right) {
            if (nb.l1 != 1 || nb.l2 != 0) return false;
            if (nb.machine->encode() != mc) return false;
            std::uint64_t seed = nb.role == Role::path_left ? c.a : c.b;
            std::uint64_t expect;
            try {
                expect = fm(codec, seed);
            } catch (const domain_error&) {
                return false;
            }
            if (nb.f != expect) return false;
            (nb.role == Role::path_left ? left : right)++;
        } else {
            return false;  // pivot touches only the two first path nodes
        }
    }
    return left == 1 && right == 1;
}

bool check_path_node(const LocalContext& ctx, bool left_side) {
    const NodeInput& c = ctx.center;
    Role path_role = left_side ? Role::path_left : Role::path_right;
    Role internal_role = left_side ? Role::internal_left : Role::internal_right;
    if (c.l2 != 0) return false;
    Bytes mc = c.machine->encode();
    SystemStateCodec codec(*c.machine);

    int preds = 0, succs = 0, parents = 0;
    bool pred_is_pivot = false;
    std::optional<std::uint64_t> pred_value;  // f-value, or the seed when the pivot precedes
    for (const NodeInput& nb : ctx.nb) {
        if (nb.role == Role::pivot) {
            if (c.l1 != 1) return false;
            if (nb.machine->encode() != mc) return false;
            ++preds;
            pred_is_pivot = true;
            pred_value = left_side ? nb.a : nb.b;
        } else if (nb.role == path_role) {
            if (nb.l2 != 0) return false;
            if (nb.machine->encode() != mc) return false;
            if (nb.l1 == mod3(c.l1 - 1)) {
                ++preds;
                pred_value = nb.f;
            } else if (nb.l1 == mod3(c.l1 + 1)) {
                ++succs;
            } else {
                return false;
            }
        } else if (nb.role == internal_role) {
            if (nb.l2 != 1) return false;  // a leaf's parent sits at height 1
            ++parents;
        } else {
            return false;
        }
    }
    if (preds != 1 || succs > 1) return false;
    bool lone_leaf = pred_is_pivot && succs == 0;
    if (parents != (lone_leaf ? 0 : 1)) return false;
    std::uint64_t expect;
    try {
        expect = fm(codec, *pred_value);
    } catch (const domain_error&) {
        return false;
    }
    if (c.f != expect) return false;
    if (succs == 0 && c.f > 1) return false;  // extremity values live in {0,1}
    return true;
}

bool check_internal_node(const LocalContext& ctx, bool left_side) {
    const NodeInput& c = ctx.center;
    Role path_role = left_side ? Role::path_left : Role::path_right;
    Role internal_role = left_side ? Role::internal_left : Role::internal_right;

    int leaf_children = 0, internal_children = 0, parents = 0;
    int horiz_prev = 0, horiz_next = 0;  // toward j-1 (l1-1) and j+1 (l1+1)
    std::set<int> child_labels_seen;
    for (const NodeInput& nb : ctx.nb) {
        if (nb.role == path_role) {
            if (c.l2 != 1 || nb.l2 != 0) return false;
            // children of (1, j) are the leaves at path positions 2j+1 and 2j+2
            if (nb.l1 != mod3(2 * c.l1 + 1) && nb.l1 != mod3(2 * c.l1 + 2)) return false;
            if (!child_labels_seen.insert(nb.l1).second) return false;
            ++leaf_children;
        } else if (nb.role == internal_role) {
            if (nb.l2 == mod3(c.l2 - 1)) {
                if (c.l2 == 1) return false;  // height-1 nodes have leaf children only
                if (nb.l1 != mod3(2 * c.l1) && nb.l1 != mod3(2 * c.l1 + 1)) return false;
                if (!child_labels_seen.insert(nb.l1).second) return false;
                ++internal_children;
            } else if (nb.l2 == mod3(c.l2 + 1)) {
                ++parents;
            } else if (nb.l2 == c.l2) {
                if (nb.l1 == mod3(c.l1 - 1)) ++horiz_prev;
                else if (nb.l1 == mod3(c.l1 + 1)) ++horiz_next;
                else return false;
            } else {
                return false;
            }
        } else {
            return false;
        }
    }
    if (leaf_children + internal_children != 2) return false;
    if (leaf_children > 0 && internal_children > 0) return false;
    if (parents > 1 || horiz_prev > 1 || horiz_next > 1) return false;
    if (parents == 0) {
        // the root: single node on its level
        if (c.l1 != 0 || horiz_prev > 0 || horiz_next > 0) return false;
    } else if (horiz_prev == 0 && c.l1 != 0) {
        return false;  // nothing toward the path end means position 0
    }
    return true;
}

Verdict local_checks_verdict(const BallView& v) {
    auto ctx = parse_context(v);
    if (!ctx) return Verdict::reject;
    switch (ctx->center.role) {
        case Role::pivot: return check_pivot(*ctx) ? Verdict::accept : Verdict::reject;
        case Role::path_left: return check_path_node(*ctx, true) ? Verdict::accept : Verdict::reject;
        case Role::path_right: return check_path_node(*ctx, false) ? Verdict::accept : Verdict::reject;
        case Role::internal_left: return check_internal_node(*ctx, true) ? Verdict::accept : Verdict::reject;
        case Role::internal_right: return check_internal_node(*ctx, false) ? Verdict::accept : Verdict::reject;
    }
    return Verdict::reject;
}

}  // namespace

LocalAlgorithm iter_minus_local_checks() {
    return LocalAlgorithm{"iter_minus_local", 1, 0, local_checks_verdict};
}

LocalAlgorithm iter_pi1_algorithm(const SystemStateCodec& codec) {
    TuringMachine expected = codec.machine();
    return LocalAlgorithm{"iter_pi1", 1, 1, [expected](const BallView& v) {
                              if (local_checks_verdict(v) == Verdict::reject) return Verdict::reject;
                              auto center = parse_node_input(v.input[0]);
                              if (center->role != Role::pivot) return Verdict::accept;
                              if (!(*center->machine == expected)) return Verdict::reject;
                              SystemStateCodec local_codec(*center->machine);
                              std::uint64_t k = byte_string_value(v.cert(0, 0));
                              try {
                                  bool both_one = iterate_fm(local_codec, center->a, k) == 1 &&
                                                  iterate_fm(local_codec, center->b, k) == 1;
                                  return both_one ? Verdict::reject : Verdict::accept;
                              } catch (const domain_error&) {
                                  return Verdict::reject;
                              }
                          }};
}

}  // namespace locver::iter
