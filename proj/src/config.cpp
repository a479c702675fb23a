#include "locver/config.hpp"

#include <set>

#include "locver/errors.hpp"

namespace locver {

Configuration::Configuration(Graph g, std::vector<Bytes> inputs)
    : graph(std::move(g)), input(std::move(inputs)) {
    if (static_cast<int>(input.size()) != graph.n())
        throw domain_error("configuration needs one input entry per node");
}

Configuration blank_config(Graph g) {
    int n = g.n();
    return Configuration(std::move(g), std::vector<Bytes>(static_cast<std::size_t>(n)));
}

IdentityAssignment::IdentityAssignment(std::vector<std::uint64_t> values) : id(std::move(values)) {
    std::set<std::uint64_t> seen(id.begin(), id.end());
    if (seen.size() != id.size()) throw domain_error("identities must be pairwise distinct");
}

IdentityAssignment consecutive_ids(int n) {
    std::vector<std::uint64_t> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) v.push_back(static_cast<std::uint64_t>(i));
    return IdentityAssignment(std::move(v));
}

}  // namespace locver
