#pragma once

#include <functional>
#include <string>
#include <vector>

#include "locver/view.hpp"

namespace locver {

enum class Verdict : std::uint8_t { accept, reject };

enum class AcceptMode : std::uint8_t {
    conjunctive,  // accepted iff every node accepts
    disjunctive   // accepted iff at least one node accepts (co-class semantics)
};

// A t-round algorithm: a deterministic total verdict on t-ball views.
struct LocalAlgorithm {
    std::string name;
    int radius = 0;
    int arity = 0;  // number of certificate levels consumed
    std::function<Verdict(const BallView&)> verdict;
};

// Runs the algorithm at every node. Node evaluations are independent and the
// result only depends on the views.
std::vector<Verdict> run(const LocalAlgorithm& alg, const Configuration& config,
                         const IdentityAssignment& ids,
                         const std::vector<CertificateAssignment>& certs);

bool global_accept(const std::vector<Verdict>& verdicts, AcceptMode mode);

}  // namespace locver
