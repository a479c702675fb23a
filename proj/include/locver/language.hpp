#pragma once

#include <functional>
#include <string>

#include "locver/config.hpp"

namespace locver {

// A named decidable membership predicate over configurations. Membership is
// identity-independent by construction: predicates never see identities.
// Malformed inputs are uniformly "not in the language".
struct Language {
    std::string name;
    std::function<bool(const Configuration&)> member;
    std::function<bool(const Configuration&)> well_formed;  // may be null (always well-formed)

    bool contains(const Configuration& c) const { return member(c); }
    bool input_well_formed(const Configuration& c) const { return well_formed ? well_formed(c) : true; }
};

}  // namespace locver
