#pragma once

#include <functional>
#include <string>

#include "locver/algorithm.hpp"
#include "locver/pi2.hpp"
#include "locver/zoo.hpp"

namespace locver::reductions {

// A deterministic local map producing the reduced input y(u) from u's t-view
// (identities included: reductions may use them, unlike provers).
struct LocalReduction {
    std::string name;
    int radius = 0;
    std::function<Bytes(const BallView&)> output;
};

Configuration apply_reduction(const LocalReduction& r, const Configuration& config,
                              const IdentityAssignment& ids);

LocalReduction identity_reduction();

// y(u) = the node's identity: deliberately not label-preserving, the
// counterexample showing why unconstrained reductions are too strong.
LocalReduction id_leaking_reduction();

// The reduction onto miss: each node computes its width 2^(|id|+|x|) and
// ships the lazy family "everything outside `base` within that width", with
// x'(u) = x(u). Radius 0.
LocalReduction miss_reduction(const std::string& base_lang_name);

// Width 2^(|id|+|x|), where |.| is the bit-length of the canonical binary
// encoding (|0| = 1). Saturates at 2^63.
std::uint64_t miss_width(std::uint64_t id_value, const Bytes& input);

// True iff the prover's certificates on the reduced configuration are
// bit-identical across every identity assignment in the pool.
bool check_label_preserving(const LocalReduction& r,
                            const std::function<CertificateAssignment(const Configuration&)>& prover,
                            const Configuration& config,
                            const std::vector<IdentityAssignment>& id_pool);

// Honest first-level certificates of the generic protocol adapted to miss:
// a description of (G, x') only, so families (which carry the widths) never
// leak into the certificates.
CertificateAssignment miss_description_prover(const Configuration& miss_config);

// B = A after R: applies the reduction inside the view, then the algorithm on
// the reduced values. Radius is the sum; certificates pass through.
LocalAlgorithm compose(const LocalAlgorithm& alg, const LocalReduction& r);

// --- the miss-lift scheme --------------------------------------------------------

// Certificate: a description of (G, x') with the node's canonical position.
CertificateAssignment miss_lift_prover(const Configuration& config);

// Radius-1 verifier: the description must agree across neighbors and match
// the local neighborhood at this node's index; then the node accepts iff the
// described configuration is outside the lift closure of its family.
// Inconclusive closure queries reject (conservative).
LocalAlgorithm miss_lift_verifier(std::uint64_t closure_budget = 5'000'000);

}  // namespace locver::reductions
