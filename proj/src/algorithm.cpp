#include "locver/algorithm.hpp"

#include <string>

#include "locver/errors.hpp"

namespace locver {

std::vector<Verdict> run(const LocalAlgorithm& alg, const Configuration& config,
                         const IdentityAssignment& ids,
                         const std::vector<CertificateAssignment>& certs) {
    if (static_cast<int>(certs.size()) != alg.arity)
        throw usage_error("algorithm '" + alg.name + "' expects " + std::to_string(alg.arity) +
                          " certificate level(s), got " + std::to_string(certs.size()));
    std::vector<Verdict> out;
    out.reserve(static_cast<std::size_t>(config.n()));
    for (int u = 0; u < config.n(); ++u)
        out.push_back(alg.verdict(ball(config, ids, certs, u, alg.radius)));
    return out;
}

bool global_accept(const std::vector<Verdict>& verdicts, AcceptMode mode) {
    if (verdicts.empty()) throw usage_error("global_accept needs at least one verdict");
    if (mode == AcceptMode::conjunctive) {
        for (Verdict v : verdicts)
            if (v != Verdict::accept) return false;
        return true;
    }
    for (Verdict v : verdicts)
        if (v == Verdict::accept) return true;
    return false;
}

}  // namespace locver
