#pragma once

#include <optional>

#include "locver/algorithm.hpp"
#include "locver/canon.hpp"
#include "locver/description.hpp"
#include "locver/games.hpp"
#include "locver/language.hpp"

namespace locver::pi2 {

// First-level certificate: a claimed picture of the whole configuration plus
// this node's position in it. Encoding: description bytes, then the 1-based
// index as a varint.
struct DescriptionCert {
    GraphDescription description;
    int index = 1;  // 1..m
};

Bytes encode_description_cert(const DescriptionCert& c);
std::optional<DescriptionCert> parse_description_cert(const Bytes& b);

// Second-level certificate: a flag in {0..4} with a case-dependent payload.
//   0: distance to a witness of an unreadable/inconsistent first certificate
//   1: no payload (the picture is accurate and legal)
//   2: (i, distance to w, distance to w') for two nodes sharing index i
//   3: (i) for an index hit by no node
//   4: distance to a witness whose neighborhood contradicts the picture
struct RefutationCert {
    int flag = 0;
    std::uint64_t i = 0;   // flags 2, 3
    std::uint64_t d1 = 0;  // flags 0, 2, 4
    std::uint64_t d2 = 0;  // flag 2
};

Bytes encode_refutation_cert(const RefutationCert& c);
std::optional<RefutationCert> parse_refutation_cert(const Bytes& b);

// The honest picture: the canonical-order description of the configuration
// with each node's canonical position. Identity-independent by construction.
// The vertex-ordering policy is pluggable; the default is the exact
// exhaustive canonicalizer.
CertificateAssignment honest_description(
    const Configuration& config,
    const canon::Canonicalizer& canonicalizer = canon::default_canonicalizer());

// Given any first-level certificate assignment on a legal configuration,
// produces the second-level assignment that verify_pi2 accepts everywhere,
// choosing the case exactly as documented on RefutationCert and breaking
// witness ties by canonical position.
CertificateAssignment refute(const Configuration& config, const Language& lang,
                             const CertificateAssignment& c1);

// The radius-1, arity-2 verifier.
LocalAlgorithm verify_pi2(const Language& lang);

// Certificate spaces for bounded adversarial searches (flags 0..4 with
// distances up to max_distance and indices up to max_index).
games::CertificateSpace refutation_space(const Configuration& config, int max_distance,
                                         int max_index);

}  // namespace locver::pi2
