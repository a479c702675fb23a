#pragma once

#include <functional>
#include <string>

#include "locver/algorithm.hpp"
#include "locver/canon.hpp"
#include "locver/games.hpp"
#include "locver/zoo.hpp"

namespace locver::schemes {

// A certificate scheme: an honest prover (defined on members only; throws
// domain_error elsewhere) paired with a radius-1 verifier. Provers never see
// identities, so their output is independent of the identity assignment by
// construction.
struct Scheme {
    std::string name;
    LocalAlgorithm verifier;  // arity 1
    std::function<CertificateAssignment(const Configuration&)> prover;
};

// --- tree ---------------------------------------------------------------------
// Certificate: hop distance to a canonical root, as a varint counter.
// Verifier at u: counter parses; every neighbor differs by exactly one;
// counter > 0 needs exactly one smaller neighbor; counter 0 needs all
// neighbors at 1.
CertificateAssignment tree_prover(const Configuration& config);
LocalAlgorithm tree_verifier();
Scheme tree_scheme();

// Root selection: the tree center; for a two-node center, the endpoint whose
// rooted canonical code is smaller.
int tree_canonical_root(const Configuration& config);

// --- alts ---------------------------------------------------------------------
// Certificate: a pair of varint distance fields pointing at two distinct
// selected nodes. Verifier: each field either is 0 (then the node itself is
// selected) or some neighbor carries field value minus one; both fields zero
// at one node rejects.
CertificateAssignment alts_prover(const Configuration& config);
LocalAlgorithm alts_verifier();
Scheme alts_scheme();

// --- cover --------------------------------------------------------------------
// Certificate: d0 plus one (d_i, e_i) entry per node in canonical order;
// distances as varints, elements length-prefixed.
struct CoverCert {
    std::uint64_t d0 = 0;
    std::vector<std::pair<std::uint64_t, Bytes>> entries;
};
Bytes encode_cover_cert(const CoverCert& c);
std::optional<CoverCert> parse_cover_cert(const Bytes& b);

CertificateAssignment cover_prover(const Configuration& config,
                                   zoo::CoverSemantics semantics = zoo::CoverSemantics::value_set);
LocalAlgorithm cover_verifier(zoo::CoverSemantics semantics = zoo::CoverSemantics::value_set);
Scheme cover_scheme(zoo::CoverSemantics semantics = zoo::CoverSemantics::value_set);

// --- structured certificate spaces for game searches ----------------------------

games::CertificateSpace tree_counter_space(const Configuration& config, int max_counter);
games::CertificateSpace alts_field_space(const Configuration& config, int max_distance);
games::CertificateSpace cover_cert_space(const Configuration& config, int max_distance,
                                         const std::vector<Bytes>& universe);

}  // namespace locver::schemes
