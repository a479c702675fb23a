#include "locver/format.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "locver/errors.hpp"

namespace locver {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::string tok;
    for (char c : line) {
        if (c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r') {
            if (!tok.empty()) {
                tokens.push_back(tok);
                tok.clear();
            }
        } else {
            tok.push_back(c);
        }
    }
    if (!tok.empty()) tokens.push_back(tok);
    return tokens;
}

long long parse_int(const std::string& s, int line_no) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw parse_error(line_no, "bad integer '" + s + "'");
        return v;
    } catch (const parse_error&) {
        throw;
    } catch (...) {
        throw parse_error(line_no, "bad integer '" + s + "'");
    }
}

Bytes parse_hex_field(const std::string& s, int line_no) {
    if (s == "-") return {};
    auto bytes = from_hex(s);
    if (!bytes) throw parse_error(line_no, "bad hex string '" + s + "'");
    return *bytes;
}

std::string hex_field(const Bytes& b) { return b.empty() ? "-" : to_hex(b); }

}  // namespace

ParsedInstance parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::map<int, Bytes> inputs;
    std::map<int, std::uint64_t> ids;
    std::map<std::pair<int, int>, Bytes> certs;  // (level, node) -> bytes
    int max_level = -1;
    std::vector<VoltageLine> voltages;

    auto need_node = [&](long long u, int ln) {
        if (n < 0) throw parse_error(ln, "record before the 'n' line");
        if (u < 0 || u >= n) throw parse_error(ln, "node " + std::to_string(u) + " out of range");
        return static_cast<int>(u);
    };

    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string& kind = tokens[0];
        if (kind == "n") {
            if (tokens.size() != 2) throw parse_error(line_no, "expected: n <count>");
            if (n >= 0) throw parse_error(line_no, "duplicate 'n' line");
            long long v = parse_int(tokens[1], line_no);
            if (v <= 0 || v > 1'000'000) throw parse_error(line_no, "node count out of range");
            n = static_cast<int>(v);
        } else if (kind == "e") {
            if (tokens.size() != 3) throw parse_error(line_no, "expected: e <u> <v>");
            int u = need_node(parse_int(tokens[1], line_no), line_no);
            int v = need_node(parse_int(tokens[2], line_no), line_no);
            edges.push_back({u, v});
        } else if (kind == "x") {
            if (tokens.size() != 3) throw parse_error(line_no, "expected: x <u> <hex>");
            int u = need_node(parse_int(tokens[1], line_no), line_no);
            inputs[u] = parse_hex_field(tokens[2], line_no);
        } else if (kind == "id") {
            if (tokens.size() != 3) throw parse_error(line_no, "expected: id <u> <int>");
            int u = need_node(parse_int(tokens[1], line_no), line_no);
            long long v = parse_int(tokens[2], line_no);
            if (v < 0) throw parse_error(line_no, "identities are non-negative");
            ids[u] = static_cast<std::uint64_t>(v);
        } else if (kind == "c") {
            if (tokens.size() != 4) throw parse_error(line_no, "expected: c <level> <u> <hex>");
            long long level = parse_int(tokens[1], line_no);
            if (level < 0 || level > 15) throw parse_error(line_no, "certificate level out of range");
            int u = need_node(parse_int(tokens[2], line_no), line_no);
            certs[{static_cast<int>(level), u}] = parse_hex_field(tokens[3], line_no);
            max_level = std::max(max_level, static_cast<int>(level));
        } else if (kind == "v") {
            if (tokens.size() != 4) throw parse_error(line_no, "expected: v <u> <v> <perm>");
            VoltageLine vl;
            vl.u = need_node(parse_int(tokens[1], line_no), line_no);
            vl.v = need_node(parse_int(tokens[2], line_no), line_no);
            for (char c : tokens[3]) {
                if (c < '0' || c > '9') throw parse_error(line_no, "voltage permutation must be digits");
                vl.perm.push_back(c - '0');
            }
            voltages.push_back(vl);
        } else {
            throw parse_error(line_no, "unknown record '" + kind + "'");
        }
    }
    if (n < 0) throw parse_error(line_no == 0 ? 1 : line_no, "missing 'n' line");

    std::vector<Bytes> input(static_cast<std::size_t>(n));
    for (auto& [u, b] : inputs) input[static_cast<std::size_t>(u)] = b;

    ParsedInstance out{Configuration(Graph(n, edges), std::move(input)), std::nullopt, {}, std::move(voltages)};
    if (!ids.empty()) {
        if (static_cast<int>(ids.size()) != n) throw parse_error(line_no, "partial identity assignment");
        std::vector<std::uint64_t> values(static_cast<std::size_t>(n));
        for (auto& [u, v] : ids) values[static_cast<std::size_t>(u)] = v;
        out.ids = IdentityAssignment(std::move(values));
    }
    if (max_level >= 0) {
        out.certs.assign(static_cast<std::size_t>(max_level + 1),
                         CertificateAssignment(static_cast<std::size_t>(n)));
        for (auto& [key, b] : certs) out.certs[static_cast<std::size_t>(key.first)][static_cast<std::size_t>(key.second)] = b;
    }
    return out;
}

ParsedInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_instance(buf.str());
    } catch (parse_error& e) {
        throw parse_error(e.line, std::string(e.what()) + " (" + path + ")");
    }
}

std::string serialize_instance(const ParsedInstance& inst) {
    std::ostringstream out;
    const Configuration& c = inst.config;
    out << "n " << c.n() << "\n";
    for (auto [u, v] : c.graph.edges()) out << "e " << u << " " << v << "\n";
    for (int u = 0; u < c.n(); ++u) out << "x " << u << " " << hex_field(c.input[static_cast<std::size_t>(u)]) << "\n";
    if (inst.ids)
        for (int u = 0; u < c.n(); ++u) out << "id " << u << " " << inst.ids->of(u) << "\n";
    for (std::size_t level = 0; level < inst.certs.size(); ++level)
        for (int u = 0; u < c.n(); ++u)
            out << "c " << level << " " << u << " " << hex_field(inst.certs[level][static_cast<std::size_t>(u)]) << "\n";
    for (const auto& vl : inst.voltages) {
        out << "v " << vl.u << " " << vl.v << " ";
        for (int p : vl.perm) out << p;
        out << "\n";
    }
    return out.str();
}

std::string serialize_config(const Configuration& config) {
    return serialize_instance(ParsedInstance{config, std::nullopt, {}, {}});
}

}  // namespace locver
