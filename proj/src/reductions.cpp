#include "locver/reductions.hpp"

#include <algorithm>

#include "locver/canon.hpp"
#include "locver/errors.hpp"

namespace locver::reductions {

Configuration apply_reduction(const LocalReduction& r, const Configuration& config,
                              const IdentityAssignment& ids) {
    std::vector<Bytes> y;
    y.reserve(static_cast<std::size_t>(config.n()));
    for (int u = 0; u < config.n(); ++u) y.push_back(r.output(ball(config, ids, {}, u, r.radius)));
    return Configuration(config.graph, std::move(y));
}

LocalReduction identity_reduction() {
    return LocalReduction{"identity", 0, [](const BallView& v) { return v.input[0]; }};
}

LocalReduction id_leaking_reduction() {
    return LocalReduction{"id_leaking", 0, [](const BallView& v) { return varint(v.id[0]); }};
}

std::uint64_t miss_width(std::uint64_t id_value, const Bytes& input) {
    int exponent = bit_length(id_value) + bit_length(byte_string_value(input));
    if (exponent >= 63) return 1ull << 63;
    return 1ull << exponent;
}

LocalReduction miss_reduction(const std::string& base_lang_name) {
    zoo::find_language(base_lang_name);  // validate the reference up front
    return LocalReduction{"miss_reduction:" + base_lang_name, 0, [base_lang_name](const BallView& v) {
                              zoo::MissInput out;
                              out.family.lazy = true;
                              out.family.lang_name = base_lang_name;
                              out.family.width = miss_width(v.id[0], v.input[0]);
                              out.xprime = v.input[0];
                              return zoo::encode_miss_input(out);
                          }};
}

bool check_label_preserving(const LocalReduction& r,
                            const std::function<CertificateAssignment(const Configuration&)>& prover,
                            const Configuration& config,
                            const std::vector<IdentityAssignment>& id_pool) {
    if (id_pool.empty()) throw usage_error("identity pool must be nonempty");
    std::optional<CertificateAssignment> reference;
    for (const IdentityAssignment& ids : id_pool) {
        CertificateAssignment certs = prover(apply_reduction(r, config, ids));
        if (!reference) reference = std::move(certs);
        else if (certs != *reference) return false;
    }
    return true;
}

CertificateAssignment miss_description_prover(const Configuration& miss_config) {
    auto xprime = zoo::miss_xprime_config(miss_config);
    if (!xprime) throw domain_error("inputs do not parse as (family, x') pairs");
    return pi2::honest_description(*xprime);
}

LocalAlgorithm compose(const LocalAlgorithm& alg, const LocalReduction& r) {
    int total_radius = alg.radius + r.radius;
    int inner_radius = r.radius;
    int alg_radius = alg.radius;
    auto verdict = alg.verdict;
    auto output = r.output;
    return LocalAlgorithm{
        alg.name + "_after_" + r.name, total_radius, alg.arity,
        [verdict, output, inner_radius, alg_radius](const BallView& big) {
            // reduced inputs for every view node close enough to the center
            BallView reduced = subview(big, 0, alg_radius);
            // match reduced-view nodes back to big-view locals by identity
            for (int i = 0; i < reduced.size(); ++i) {
                int big_local = -1;
                for (int j = 0; j < big.size(); ++j)
                    if (big.id[static_cast<std::size_t>(j)] == reduced.id[static_cast<std::size_t>(i)]) big_local = j;
                reduced.input[static_cast<std::size_t>(i)] = output(subview(big, big_local, inner_radius));
            }
            return verdict(reduced);
        }};
}

// --- the miss-lift scheme --------------------------------------------------------

CertificateAssignment miss_lift_prover(const Configuration& config) {
    if (!zoo::miss_lift_lang().contains(config))
        throw domain_error("prover is defined on members only");
    return miss_description_prover(config);
}

LocalAlgorithm miss_lift_verifier(std::uint64_t closure_budget) {
    return LocalAlgorithm{
        "miss_lift_verifier", 1, 1, [closure_budget](const BallView& v) {
            auto input = zoo::parse_miss_input(v.input[0]);
            if (!input) return Verdict::reject;
            auto mine = pi2::parse_description_cert(v.cert(0, 0));
            if (!mine) return Verdict::reject;
            auto decoded = description_to_config(mine->description);
            if (!decoded) return Verdict::reject;
            // the picture must agree with the neighbors' and fit here
            std::vector<int> indices;
            for (int j : v.center_neighbors()) {
                auto theirs = pi2::parse_description_cert(v.cert(0, j));
                if (!theirs || !(theirs->description == mine->description)) return Verdict::reject;
                indices.push_back(theirs->index - 1);
            }
            int row = mine->index - 1;
            if (mine->description.data[static_cast<std::size_t>(row)] != input->xprime) return Verdict::reject;
            std::sort(indices.begin(), indices.end());
            if (indices != mine->description.row_neighbors(row)) return Verdict::reject;
            try {
                auto in_closure = input->family.closure_contains(*decoded, closure_budget);
                if (in_closure != lifts::Tristate::no) return Verdict::reject;  // conservative
            } catch (const std::exception&) {
                return Verdict::reject;
            }
            return Verdict::accept;
        }};
}

}  // namespace locver::reductions
