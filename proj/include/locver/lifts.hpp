#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "locver/config.hpp"
#include "locver/language.hpp"

namespace locver::lifts {

// phi maps source nodes onto target nodes so that radius-t views around u and
// phi(u) are isomorphic, inputs preserved.
struct LiftMap {
    Configuration source;
    Configuration target;
    std::vector<int> phi;  // source node -> target node
    int radius = 1;
};

bool is_t_lift(const Configuration& source, const Configuration& target,
               const std::vector<int>& phi, int t);

// One permutation of {0..k-1} per edge (keyed by the normalized edge).
using VoltageAssignment = std::map<std::pair<int, int>, std::vector<int>>;

// Voltage-graph k-fold cover with inputs pulled back along phi. Throws if the
// cover comes out disconnected (choose different voltages).
std::pair<Configuration, LiftMap> k_fold_cover(const Configuration& config, int k,
                                               const VoltageAssignment& voltages);

// As above but reports disconnection instead of throwing.
std::optional<std::pair<Configuration, LiftMap>> try_k_fold_cover(const Configuration& config, int k,
                                                                  const VoltageAssignment& voltages);

enum class SearchStatus { found, none_found, inconclusive };

struct LiftSearchResult {
    SearchStatus status = SearchStatus::none_found;
    std::optional<std::pair<Configuration, LiftMap>> witness;
};

// Searches k-fold covers (2 <= k <= k_max) of a member configuration for one
// that leaves the language. Voltages are normalized to the identity on a
// spanning tree, which still generates every connected cover up to
// isomorphism. The first witness in enumeration order is returned. The budget
// counts candidate covers; exhausting it yields an explicit inconclusive.
LiftSearchResult search_lift_counterexample(const Language& lang, const Configuration& config,
                                            int t, int k_max, std::uint64_t budget);

enum class Tristate { yes, no, unknown };

// Membership of config in the lift closure of the family: equal (up to
// input-preserving isomorphism) to a member, or admitting a covering map onto
// one (t = 1). Monotone in budget: growing the budget never flips yes to no.
Tristate lift_closure_membership(const Configuration& config,
                                 const std::vector<Configuration>& family, std::uint64_t budget);

// All covering maps config -> target (t = 1), inputs preserved; empty when none.
std::vector<std::vector<int>> covering_maps(const Configuration& config, const Configuration& target,
                                            std::uint64_t budget, bool* exhausted_budget);

// Proper quotients of config: configurations (H, y) with strictly fewer nodes
// such that config covers (H, y). Used for lazy lift-closure queries.
std::vector<Configuration> proper_quotients(const Configuration& config);

// Enumerates all voltage assignments for the given k with identity voltages on
// a spanning tree, invoking fn on each resulting connected cover. fn returns
// false to stop early. Returns false if the budget ran out.
bool for_each_normalized_cover(const Configuration& config, int k, std::uint64_t budget,
                               const std::function<bool(const Configuration&, const LiftMap&)>& fn);

}  // namespace locver::lifts
