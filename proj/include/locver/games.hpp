#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "locver/algorithm.hpp"

namespace locver::games {

enum class Quantifier : std::uint8_t { exists, forall };

// Alternation is the usual case but not required; the caller chooses.
struct QuantifierPrefix {
    std::vector<Quantifier> q;
    std::size_t size() const { return q.size(); }
};

QuantifierPrefix prefix_of(std::initializer_list<Quantifier> qs);

// Finite, per-node candidate payloads with a deterministic enumeration order.
// An assignment drawn from the space picks one payload per node.
struct CertificateSpace {
    std::vector<std::vector<Bytes>> per_node;
};

// The same candidate list at every node.
CertificateSpace uniform_space(int n, std::vector<Bytes> options);

// All byte strings over {0x00, 0x01} up to max_len, plus one unparseable blob.
// The raw adversarial space.
CertificateSpace raw_bitstring_space(int n, int max_len);

struct GameStats {
    std::uint64_t node_evaluations = 0;
    std::uint64_t assignments_visited = 0;
};

struct GameOptions {
    std::uint64_t budget = 500'000'000;  // node evaluations
    bool short_circuit = true;
};

// A concrete reproduction point: one assignment per level, plus the id/node
// where the decisive verdict happened (when one exists). On a violated
// universal level this is the first falsifying branch in enumeration order.
struct GameWitness {
    std::vector<CertificateAssignment> certs;
    std::optional<std::size_t> id_index;
    std::optional<int> node;
};

// Inner verdict aggregation, generalizing global_accept: class formulas need
// "all accept" / "some reject" and co-classes the mirrored pair.
enum class NodeQuantifier : std::uint8_t { all, some };
enum class Polarity : std::uint8_t { accept, reject };

// Evaluates  Q1 c1 ... Qk ck, forall id in pool:  <node-quantified polarity>
// over run(alg, config, id, (c1..ck)) by exhaustive enumeration with
// short-circuiting. Throws inconclusive_error when the budget runs out.
bool evaluate_game_rule(const LocalAlgorithm& alg, const Configuration& config,
                        const QuantifierPrefix& prefix, const std::vector<CertificateSpace>& spaces,
                        const std::vector<IdentityAssignment>& id_pool, NodeQuantifier nq,
                        Polarity pol, const GameOptions& options = {}, GameStats* stats = nullptr,
                        GameWitness* witness = nullptr);

// The public surface: conjunctive = all nodes accept, disjunctive = at least
// one node accepts.
bool evaluate_game(const LocalAlgorithm& alg, const Configuration& config,
                   const QuantifierPrefix& prefix, const std::vector<CertificateSpace>& spaces,
                   const std::vector<IdentityAssignment>& id_pool, AcceptMode mode,
                   const GameOptions& options = {}, GameStats* stats = nullptr,
                   GameWitness* witness = nullptr);

enum class ClassTag : std::uint8_t {
    ld, pi1, sigma1, sigma2, pi2,
    co_ld, co_pi1, co_sigma1, co_sigma2, co_pi2
};

std::optional<ClassTag> class_tag_from_string(const std::string& s);
std::string to_string(ClassTag tag);

struct MembershipCheck {
    bool consistent = false;
    GameWitness witness;  // filled when violated
    GameStats stats;
};

// Checks one instance against the class formula matching `tag`, given the
// reference membership `truth` of the instance: legal instances must satisfy
// the acceptance branch, illegal ones the rejection branch (with flipped
// certificate quantifiers; co-classes flip node quantifier and polarity).
MembershipCheck check_class_membership_on_instance(
    const LocalAlgorithm& alg, const Configuration& config, ClassTag tag,
    const std::vector<CertificateSpace>& spaces, const std::vector<IdentityAssignment>& id_pool,
    bool truth, const GameOptions& options = {});

// Injective identity assignments V -> {1..n+2}, lexicographically enumerated,
// one representative per orbit of the graph automorphism group, capped.
std::vector<IdentityAssignment> default_id_pool(const Graph& g, std::size_t cap = 12);

}  // namespace locver::games
