#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locver/config.hpp"

namespace locver {

// One voltage line: a permutation of {0..k-1} attached to an edge.
struct VoltageLine {
    int u = 0;
    int v = 0;
    std::vector<int> perm;
};

// Contents of an instance file. Records, one per line, whitespace-separated,
// '#' starts a comment:
//   n <count>
//   e <u> <v>
//   x <u> <hex>        node input; '-' is the empty string
//   id <u> <int>       optional identities
//   c <level> <u> <hex> certificate entries per level
//   v <u> <v> <perm>   voltage permutation as digits, e.g. "10" maps 0->1, 1->0
struct ParsedInstance {
    Configuration config;
    std::optional<IdentityAssignment> ids;
    std::vector<CertificateAssignment> certs;
    std::vector<VoltageLine> voltages;
};

ParsedInstance parse_instance(const std::string& text);
ParsedInstance load_instance(const std::string& path);

std::string serialize_instance(const ParsedInstance& inst);
std::string serialize_config(const Configuration& config);

}  // namespace locver
