#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locver/algorithm.hpp"
#include "locver/description.hpp"
#include "locver/language.hpp"
#include "locver/lifts.hpp"

namespace locver::zoo {

// Boolean inputs are single bytes: 0x00 (bottom) and 0x01 (top).
Bytes encode_bool(bool b);
std::optional<bool> parse_bool(const Bytes& b);
Configuration bool_config(Graph g, const std::vector<int>& bits);

// --- structured inputs ------------------------------------------------------

// cover input x(u) = (S(u), e(u)): a nonempty collection of element sets and
// one element. Encoding: varint set count, per set varint size + that many
// length-prefixed elements, then the length-prefixed element e(u).
struct CoverInput {
    std::vector<std::vector<Bytes>> sets;  // each sorted; duplicates preserved
    Bytes element;
};
Bytes encode_cover_input(const CoverInput& in);
std::optional<CoverInput> parse_cover_input(const Bytes& b);

enum class CoverSemantics : std::uint8_t {
    value_set,      // a covering set must equal the set of distinct e-values
    value_multiset  // ... the multiset of e-values
};

// miss input x(u) = (F(u), x'(u)): a family of configurations plus a plain
// bit-string. Families are stored either as an explicit description list or as
// a lazy rule: every configuration outside a named language with at most
// `width` nodes and per-node input values at most `width`.
// Encoding: tag byte (0 explicit, 1 lazy); explicit: varint count +
// descriptions; lazy: length-prefixed language name + varint width; then the
// length-prefixed x'(u).
struct FamilyDescriptor {
    bool lazy = false;
    std::vector<GraphDescription> members;  // explicit mode
    std::string lang_name;                  // lazy mode
    std::uint64_t width = 0;

    bool contains(const Configuration& c) const;
    lifts::Tristate closure_contains(const Configuration& c, std::uint64_t budget) const;
    std::vector<Configuration> materialize() const;  // explicit list; lazy only when width <= 4
};

struct MissInput {
    FamilyDescriptor family;
    Bytes xprime;
};
Bytes encode_miss_input(const MissInput& in);
std::optional<MissInput> parse_miss_input(const Bytes& b);

// The (G, x') configuration packed inside a miss instance; nullopt when any
// node's input fails to parse.
std::optional<Configuration> miss_xprime_config(const Configuration& config);

// --- languages ---------------------------------------------------------------

Language and_lang();
Language or_lang();
Language diam_k_lang(int k);
Language prop_col_lang();
Language tree_lang();
Language amos_lang();
Language alts_lang();
Language exts_lang();
Language cover_lang(CoverSemantics semantics = CoverSemantics::value_set);
Language miss_lang();
Language miss_lift_lang(std::uint64_t closure_budget = 5'000'000);

// Lookup by CLI-addressable name ("and", "diam_2", "miss_lift", ...).
Language find_language(const std::string& name);
std::vector<std::string> language_names();

// --- local checkers -----------------------------------------------------------

// Deciders: accepted at all nodes iff the configuration is in the language.
LocalAlgorithm and_checker();          // radius 0
LocalAlgorithm prop_col_checker();     // radius 1
LocalAlgorithm diam_k_checker(int k);  // radius k+1

// Accepts iff the node's own input is true; decides `or` with disjunctive
// acceptance on the rejection side (co-class semantics).
LocalAlgorithm or_co_checker();

}  // namespace locver::zoo
