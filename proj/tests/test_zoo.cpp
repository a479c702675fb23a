#include "doctest.h"
#include "locver/canon.hpp"
#include "locver/errors.hpp"
#include "locver/zoo.hpp"

using namespace locver;

namespace {

std::vector<Configuration> binary_configs(const Graph& g) {
    std::vector<Configuration> out;
    for (int mask = 0; mask < (1 << g.n()); ++mask) {
        std::vector<int> bits;
        for (int u = 0; u < g.n(); ++u) bits.push_back((mask >> u) & 1);
        out.push_back(zoo::bool_config(g, bits));
    }
    return out;
}

Bytes element(std::uint8_t b) { return Bytes{b}; }

}  // namespace

TEST_SUITE_BEGIN("zoo");

TEST_CASE("selected-count languages") {
    Configuration two = zoo::bool_config(cycle_graph(4), {1, 0, 1, 0});
    Configuration three = zoo::bool_config(cycle_graph(4), {1, 1, 1, 0});
    Configuration zero = zoo::bool_config(cycle_graph(4), {0, 0, 0, 0});
    CHECK(zoo::exts_lang().contains(two));
    CHECK_FALSE(zoo::exts_lang().contains(three));
    CHECK(zoo::alts_lang().contains(two));
    CHECK(zoo::alts_lang().contains(three));
    CHECK_FALSE(zoo::alts_lang().contains(zero));
    CHECK(zoo::amos_lang().contains(zero));
    CHECK_FALSE(zoo::amos_lang().contains(two));
}

TEST_CASE("malformed inputs are uniformly outside") {
    Configuration bad(path_graph(2), {Bytes{0x07}, Bytes{0x01}});
    CHECK_FALSE(zoo::and_lang().contains(bad));
    CHECK_FALSE(zoo::or_lang().contains(bad));
    CHECK_FALSE(zoo::exts_lang().contains(bad));
    CHECK_FALSE(zoo::amos_lang().contains(bad));
    CHECK_FALSE(zoo::and_lang().input_well_formed(bad));
}

TEST_CASE("alts complements amos on well-formed inputs") {
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : canon::connected_graph_catalog(n))
            for (const Configuration& c : binary_configs(g))
                CHECK(zoo::alts_lang().contains(c) != zoo::amos_lang().contains(c));
}

TEST_CASE("tree and diameter languages") {
    CHECK(zoo::tree_lang().contains(blank_config(path_graph(5))));
    CHECK_FALSE(zoo::tree_lang().contains(blank_config(cycle_graph(3))));
    CHECK(zoo::diam_k_lang(2).contains(blank_config(star_graph(4))));
    CHECK_FALSE(zoo::diam_k_lang(2).contains(blank_config(path_graph(4))));
}

TEST_CASE("membership is invariant under input-preserving relabeling") {
    Configuration a = zoo::bool_config(path_graph(4), {1, 0, 0, 1});
    Configuration b = zoo::bool_config(path_graph(4), {1, 0, 0, 1});
    // reverse the path
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : a.graph.edges()) edges.push_back({3 - u, 3 - v});
    std::vector<Bytes> input(4);
    for (int u = 0; u < 4; ++u) input[3 - u] = a.input[u];
    Configuration reversed(Graph(4, edges), input);
    for (const char* name : {"and", "or", "alts", "amos", "exts", "tree", "prop_col"}) {
        Language lang = zoo::find_language(name);
        CHECK(lang.contains(a) == lang.contains(reversed));
    }
}

TEST_CASE("cover: single node owning the full value set") {
    zoo::CoverInput in;
    in.sets = {{element(0xAA)}};
    in.element = element(0xAA);
    Configuration c(path_graph(1), {zoo::encode_cover_input(in)});
    CHECK(zoo::cover_lang().contains(c));
}

TEST_CASE("cover: membership needs one set equal to the whole value set") {
    zoo::CoverInput holder;
    holder.sets = {{element(1), element(2)}};
    holder.element = element(1);
    zoo::CoverInput plain;
    plain.sets = {{element(9)}};
    plain.element = element(2);
    Configuration member(path_graph(2), {zoo::encode_cover_input(holder), zoo::encode_cover_input(plain)});
    CHECK(zoo::cover_lang().contains(member));

    zoo::CoverInput short_holder;
    short_holder.sets = {{element(1)}};
    short_holder.element = element(1);
    Configuration nonmember(path_graph(2),
                            {zoo::encode_cover_input(short_holder), zoo::encode_cover_input(plain)});
    CHECK_FALSE(zoo::cover_lang().contains(nonmember));
}

TEST_CASE("cover: set vs multiset semantics flip together on repeated values") {
    // two nodes share the value; a singleton set covers under set semantics only
    zoo::CoverInput holder;
    holder.sets = {{element(5)}};
    holder.element = element(5);
    zoo::CoverInput other;
    other.sets = {{element(9)}};
    other.element = element(5);
    Configuration c(path_graph(2), {zoo::encode_cover_input(holder), zoo::encode_cover_input(other)});
    CHECK(zoo::cover_lang(zoo::CoverSemantics::value_set).contains(c));
    CHECK_FALSE(zoo::cover_lang(zoo::CoverSemantics::value_multiset).contains(c));
}

TEST_CASE("miss: explicit families") {
    Configuration target = zoo::bool_config(path_graph(2), {1, 0});
    auto order = canon::canonical_order(target);
    GraphDescription desc = describe(target, order);

    zoo::MissInput with_family;
    with_family.family.members = {desc};
    with_family.xprime = zoo::encode_bool(true);
    zoo::MissInput empty_family;
    empty_family.xprime = zoo::encode_bool(false);

    // (G, x') = the P2 with inputs (1, 0): present in node 0's family
    Configuration instance(path_graph(2),
                           {zoo::encode_miss_input(with_family), zoo::encode_miss_input(empty_family)});
    CHECK_FALSE(zoo::miss_lang().contains(instance));

    // same families but x' = (1, 1): not the family member
    zoo::MissInput with_family2 = with_family;
    zoo::MissInput empty_family2 = empty_family;
    empty_family2.xprime = zoo::encode_bool(true);
    Configuration instance2(path_graph(2),
                            {zoo::encode_miss_input(with_family2), zoo::encode_miss_input(empty_family2)});
    CHECK(zoo::miss_lang().contains(instance2));
}

TEST_CASE("miss: lazy families agree with their materialization") {
    zoo::FamilyDescriptor lazy;
    lazy.lazy = true;
    lazy.lang_name = "and";
    lazy.width = 2;
    auto materialized = lazy.materialize();
    CHECK_FALSE(materialized.empty());
    for (const Configuration& c : materialized) CHECK(lazy.contains(c));
    // spot-check agreement on configurations inside and outside the bound
    Configuration inside = zoo::bool_config(path_graph(2), {0, 1});
    CHECK(lazy.contains(inside));  // not in `and`, n=2 <= 2, values <= 2
    Configuration big = zoo::bool_config(path_graph(3), {0, 0, 0});
    CHECK_FALSE(lazy.contains(big));  // three nodes exceed the width bound
    Configuration member_of_and = zoo::bool_config(path_graph(2), {1, 1});
    CHECK_FALSE(lazy.contains(member_of_and));
}

TEST_CASE("miss_lift: closure picks up quotients of the described configuration") {
    // family holds C3 (blank); the C6 x'-configuration is a lift of it
    Configuration c3 = blank_config(cycle_graph(3));
    GraphDescription c3_desc = describe(c3, canon::canonical_order(c3));
    zoo::MissInput in;
    in.family.members = {c3_desc};
    in.xprime = {};
    std::vector<Bytes> inputs(6, zoo::encode_miss_input(in));
    Configuration instance(cycle_graph(6), inputs);
    CHECK_FALSE(zoo::miss_lift_lang().contains(instance));
    CHECK(zoo::miss_lang().contains(instance));  // plain miss does not chase lifts
}

TEST_CASE("local checkers decide their languages on all small binary instances") {
    struct Pair {
        Language lang;
        LocalAlgorithm checker;
    };
    std::vector<Pair> pairs;
    pairs.push_back({zoo::and_lang(), zoo::and_checker()});
    pairs.push_back({zoo::prop_col_lang(), zoo::prop_col_checker()});
    pairs.push_back({zoo::diam_k_lang(1), zoo::diam_k_checker(1)});
    pairs.push_back({zoo::diam_k_lang(2), zoo::diam_k_checker(2)});
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : canon::connected_graph_catalog(n)) {
            auto ids = consecutive_ids(n);
            for (const Configuration& c : binary_configs(g)) {
                for (const auto& [lang, checker] : pairs) {
                    bool accepted = global_accept(run(checker, c, ids, {}), AcceptMode::conjunctive);
                    CHECK(accepted == lang.contains(c));
                }
            }
        }
    }
}

TEST_CASE("diam_2 checker on P4: endpoints reject") {
    Configuration c = blank_config(path_graph(4));
    auto verdicts = run(zoo::diam_k_checker(2), c, consecutive_ids(4), {});
    CHECK(verdicts[0] == Verdict::reject);
    CHECK(verdicts[1] == Verdict::accept);
    CHECK(verdicts[2] == Verdict::accept);
    CHECK(verdicts[3] == Verdict::reject);
}

TEST_CASE("prop_col checker examples") {
    Configuration good(path_graph(3), {Bytes{1}, Bytes{2}, Bytes{1}});
    CHECK(global_accept(run(zoo::prop_col_checker(), good, consecutive_ids(3), {}), AcceptMode::conjunctive));
    Configuration bad(cycle_graph(3), {Bytes{1}, Bytes{1}, Bytes{2}});
    auto verdicts = run(zoo::prop_col_checker(), bad, consecutive_ids(3), {});
    CHECK(verdicts[0] == Verdict::reject);
    CHECK(verdicts[1] == Verdict::reject);
    CHECK(verdicts[2] == Verdict::accept);
}

TEST_CASE("language registry maps names") {
    CHECK(zoo::find_language("diam_3").name == "diam_3");
    CHECK(zoo::find_language("miss_lift").name == "miss_lift");
    CHECK_THROWS_AS(zoo::find_language("nope"), domain_error);
}

TEST_SUITE_END();
