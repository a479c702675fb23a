#include <random>

#include "doctest.h"
#include "locver/canon.hpp"
#include "locver/errors.hpp"
#include "locver/games.hpp"
#include "locver/pi2.hpp"
#include "locver/schemes.hpp"
#include "locver/zoo.hpp"

using namespace locver;
using games::Quantifier;

TEST_SUITE_BEGIN("games");

TEST_CASE("empty prefix reduces to a plain run") {
    Configuration legal = zoo::bool_config(path_graph(3), {1, 1, 1});
    Configuration illegal = zoo::bool_config(path_graph(3), {1, 0, 1});
    auto pool = games::default_id_pool(legal.graph, 2);
    auto checker = zoo::and_checker();
    CHECK(games::evaluate_game(checker, legal, {}, {}, pool, AcceptMode::conjunctive));
    CHECK_FALSE(games::evaluate_game(checker, illegal, {}, {}, pool, AcceptMode::conjunctive));
    CHECK(games::evaluate_game(checker, illegal, {}, {}, pool, AcceptMode::disjunctive));
}

TEST_CASE("forall over a singleton space equals a plain run with that certificate") {
    Configuration c = zoo::bool_config(path_graph(4), {1, 0, 0, 1});
    auto scheme = schemes::alts_scheme();
    auto honest = scheme.prover(c);
    games::CertificateSpace singleton;
    singleton.per_node.resize(4);
    for (int u = 0; u < 4; ++u) singleton.per_node[u] = {honest[u]};
    auto pool = games::default_id_pool(c.graph, 2);
    bool game = games::evaluate_game(scheme.verifier, c, games::prefix_of({Quantifier::forall}),
                                     {singleton}, pool, AcceptMode::conjunctive);
    bool direct = global_accept(run(scheme.verifier, c, pool[0], {honest}), AcceptMode::conjunctive);
    CHECK(game == direct);
    CHECK(game);
}

TEST_CASE("exists finds honest alts certificates on a two-selected path") {
    Configuration c = zoo::bool_config(path_graph(4), {1, 0, 0, 1});
    auto pool = games::default_id_pool(c.graph, 2);
    auto space = schemes::alts_field_space(c, 4);
    games::GameWitness witness;
    bool found = games::evaluate_game(schemes::alts_verifier(), c, games::prefix_of({Quantifier::exists}),
                                      {space}, pool, AcceptMode::conjunctive, {}, nullptr, &witness);
    CHECK(found);
    // the witness replays to an all-accept run
    for (const auto& ids : pool)
        CHECK(global_accept(run(schemes::alts_verifier(), c, ids, {witness.certs[0]}),
                            AcceptMode::conjunctive));
}

TEST_CASE("exists fails exhaustively with a single selected node") {
    Configuration c = zoo::bool_config(path_graph(4), {0, 0, 1, 0});
    auto pool = games::default_id_pool(c.graph, 2);
    auto space = schemes::alts_field_space(c, 4);
    CHECK_FALSE(games::evaluate_game(schemes::alts_verifier(), c, games::prefix_of({Quantifier::exists}),
                                     {space}, pool, AcceptMode::conjunctive));
}

TEST_CASE("short-circuiting never changes the value") {
    games::GameOptions fast, slow;
    fast.short_circuit = true;
    slow.short_circuit = false;
    for (auto bits : {std::vector<int>{1, 0, 0, 1}, std::vector<int>{0, 0, 1, 0}, std::vector<int>{1, 1, 1, 1}}) {
        Configuration c = zoo::bool_config(path_graph(4), bits);
        auto pool = games::default_id_pool(c.graph, 2);
        auto space = schemes::alts_field_space(c, 3);
        for (auto q : {Quantifier::exists, Quantifier::forall}) {
            bool a = games::evaluate_game(schemes::alts_verifier(), c, games::prefix_of({q}), {space},
                                          pool, AcceptMode::conjunctive, fast);
            bool b = games::evaluate_game(schemes::alts_verifier(), c, games::prefix_of({q}), {space},
                                          pool, AcceptMode::conjunctive, slow);
            CHECK(a == b);
        }
    }
}

TEST_CASE("monotonicity: growing an exists-space never flips true to false") {
    Configuration c = zoo::bool_config(path_graph(3), {1, 0, 1});
    auto pool = games::default_id_pool(c.graph, 2);
    bool last = false;
    for (int dmax = 0; dmax <= 3; ++dmax) {
        auto space = schemes::alts_field_space(c, dmax);
        bool now = games::evaluate_game(schemes::alts_verifier(), c, games::prefix_of({Quantifier::exists}),
                                        {space}, pool, AcceptMode::conjunctive);
        if (last) CHECK(now);
        last = now;
    }
    CHECK(last);
}

TEST_CASE("monotonicity: growing a forall-space never flips false to true") {
    Configuration c = zoo::bool_config(path_graph(3), {1, 0, 1});
    auto pool = games::default_id_pool(c.graph, 2);
    bool failed_once = false;
    for (int dmax = 0; dmax <= 3; ++dmax) {
        auto space = schemes::alts_field_space(c, dmax);
        bool now = games::evaluate_game(schemes::alts_verifier(), c, games::prefix_of({Quantifier::forall}),
                                        {space}, pool, AcceptMode::conjunctive);
        if (failed_once) CHECK_FALSE(now);
        if (!now) failed_once = true;
    }
    CHECK(failed_once);
}

TEST_CASE("budget exhaustion raises an inconclusive error with statistics") {
    Configuration c = zoo::bool_config(cycle_graph(4), {1, 1, 0, 0});
    auto pool = games::default_id_pool(c.graph, 1);
    auto space = schemes::alts_field_space(c, 4);
    games::GameOptions options;
    options.budget = 3;
    CHECK_THROWS_AS(games::evaluate_game(schemes::alts_verifier(), c, games::prefix_of({Quantifier::exists}),
                                         {space}, pool, AcceptMode::conjunctive, options),
                    inconclusive_error);
}

TEST_CASE("class membership: ld claims for the conjunction checker") {
    auto checker = zoo::and_checker();
    Configuration legal = zoo::bool_config(path_graph(3), {1, 1, 1});
    Configuration illegal = zoo::bool_config(path_graph(3), {1, 0, 1});
    auto pool = games::default_id_pool(legal.graph, 3);
    CHECK(games::check_class_membership_on_instance(checker, legal, games::ClassTag::ld, {}, pool, true)
              .consistent);
    CHECK(games::check_class_membership_on_instance(checker, illegal, games::ClassTag::ld, {}, pool, false)
              .consistent);
}

TEST_CASE("class membership: a broken always-reject verifier is violated with an empty witness") {
    LocalAlgorithm broken{"always_reject", 0, 0, [](const BallView&) { return Verdict::reject; }};
    Configuration legal = zoo::bool_config(path_graph(2), {1, 1});
    auto pool = games::default_id_pool(legal.graph, 2);
    auto result = games::check_class_membership_on_instance(broken, legal, games::ClassTag::ld, {}, pool, true);
    CHECK_FALSE(result.consistent);
    CHECK(result.witness.certs.empty());
    CHECK(result.witness.node.has_value());
}

TEST_CASE("class membership: co-ld rejection is unanimous on all-false instances") {
    auto checker = zoo::or_co_checker();
    Configuration all_false = zoo::bool_config(path_graph(3), {0, 0, 0});
    Configuration one_true = zoo::bool_config(path_graph(3), {0, 1, 0});
    auto pool = games::default_id_pool(all_false.graph, 3);
    CHECK(games::check_class_membership_on_instance(checker, all_false, games::ClassTag::co_ld, {}, pool, false)
              .consistent);
    CHECK(games::check_class_membership_on_instance(checker, one_true, games::ClassTag::co_ld, {}, pool, true)
              .consistent);
}

TEST_CASE("class membership: alts scheme behaves as a one-certificate scheme on both branches") {
    auto verifier = schemes::alts_verifier();
    Configuration legal = zoo::bool_config(path_graph(4), {1, 0, 0, 1});
    Configuration illegal = zoo::bool_config(path_graph(4), {0, 1, 0, 0});
    auto pool = games::default_id_pool(legal.graph, 2);
    auto space = schemes::alts_field_space(legal, 4);
    CHECK(games::check_class_membership_on_instance(verifier, legal, games::ClassTag::sigma1, {space}, pool, true)
              .consistent);
    CHECK(games::check_class_membership_on_instance(verifier, illegal, games::ClassTag::sigma1, {space}, pool, false)
              .consistent);
}

TEST_CASE("raw bit-string adversaries: honest counters live inside the raw space") {
    // tree counters on small trees are short byte strings, so the raw space
    // finds an accepting assignment on trees and nothing on cycles
    Configuration p3 = blank_config(path_graph(3));
    auto pool = games::default_id_pool(p3.graph, 1);
    auto raw = games::raw_bitstring_space(3, 2);
    CHECK(games::evaluate_game(schemes::tree_verifier(), p3, games::prefix_of({Quantifier::exists}),
                               {raw}, pool, AcceptMode::conjunctive));
    Configuration c3 = blank_config(cycle_graph(3));
    CHECK_FALSE(games::evaluate_game(schemes::tree_verifier(), c3, games::prefix_of({Quantifier::exists}),
                                     {games::raw_bitstring_space(3, 2)},
                                     games::default_id_pool(c3.graph, 1), AcceptMode::conjunctive));
}

TEST_CASE("differential: pruned search agrees with plain enumeration on random games") {
    // a deterministic but structureless verdict: hash everything visible
    LocalAlgorithm probe{"hash_probe", 1, 1, [](const BallView& v) {
                             std::uint64_t h = 1469598103934665603ull;
                             auto mix = [&](const Bytes& b) {
                                 for (std::uint8_t c : b) h = (h ^ c) * 1099511628211ull;
                                 h = (h ^ 0x9e) * 1099511628211ull;
                             };
                             mix(v.input[0]);
                             mix(v.cert(0, 0));
                             for (int j : v.center_neighbors()) mix(v.cert(0, j));
                             return h % 3 == 0 ? Verdict::reject : Verdict::accept;
                         }};
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        const auto& catalog = canon::connected_graph_catalog(n);
        const Graph& g = catalog[rng() % catalog.size()];
        std::vector<int> bits;
        for (int u = 0; u < n; ++u) bits.push_back(static_cast<int>(rng() % 2));
        Configuration c = zoo::bool_config(g, bits);
        games::CertificateSpace space;
        space.per_node.resize(n);
        for (int u = 0; u < n; ++u) {
            int options = 1 + static_cast<int>(rng() % 4);
            for (int o = 0; o < options; ++o) {
                Bytes payload;
                int len = static_cast<int>(rng() % 3);
                for (int i = 0; i < len; ++i) payload.push_back(static_cast<std::uint8_t>(rng() % 4));
                space.per_node[u].push_back(payload);
            }
        }
        auto pool = games::default_id_pool(g, 1 + rng() % 2);
        for (auto q : {Quantifier::exists, Quantifier::forall}) {
            for (auto mode : {AcceptMode::conjunctive, AcceptMode::disjunctive}) {
                games::GameOptions fast, slow;
                fast.short_circuit = true;
                slow.short_circuit = false;
                bool a = games::evaluate_game(probe, c, games::prefix_of({q}), {space}, pool, mode, fast);
                bool b = games::evaluate_game(probe, c, games::prefix_of({q}), {space}, pool, mode, slow);
                CHECK(a == b);
            }
        }
    }
}

TEST_CASE("witness replay: exists-witnesses reproduce their accepting run") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + static_cast<int>(rng() % 2);
        Configuration c = zoo::bool_config(path_graph(n), [&] {
            std::vector<int> bits;
            for (int u = 0; u < n; ++u) bits.push_back(static_cast<int>(rng() % 2));
            return bits;
        }());
        auto space = schemes::alts_field_space(c, n);
        auto pool = games::default_id_pool(c.graph, 2);
        games::GameWitness witness;
        bool found = games::evaluate_game(schemes::alts_verifier(), c, games::prefix_of({Quantifier::exists}),
                                          {space}, pool, AcceptMode::conjunctive, {}, nullptr, &witness);
        if (found) {
            for (const auto& ids : pool)
                CHECK(global_accept(run(schemes::alts_verifier(), c, ids, {witness.certs[0]}),
                                    AcceptMode::conjunctive));
        } else {
            // the language agrees there is nothing to find
            CHECK_FALSE(zoo::alts_lang().contains(c));
        }
    }
}

TEST_CASE("class membership: the two-level protocol passes both pi2 branches") {
    Language exts = zoo::exts_lang();
    auto verifier = pi2::verify_pi2(exts);

    auto spaces_for = [&](const Configuration& c) {
        // bounded adversarial pictures: the honest one, a foreign one, a blob
        auto honest = pi2::honest_description(c);
        Configuration claimed = zoo::bool_config(path_graph(2), {1, 1});
        Bytes foreign = pi2::encode_description_cert(
            {describe(claimed, canon::canonical_order(claimed)), 1});
        games::CertificateSpace c1_space;
        c1_space.per_node.resize(c.n());
        for (int u = 0; u < c.n(); ++u)
            c1_space.per_node[u] = {honest[u], foreign, Bytes{0xff}};
        return std::vector<games::CertificateSpace>{
            c1_space, pi2::refutation_space(c, c.graph.diameter(), c.n())};
    };

    Configuration legal = zoo::bool_config(cycle_graph(3), {1, 1, 0});
    auto pool = games::default_id_pool(legal.graph, 2);
    auto legal_result = games::check_class_membership_on_instance(
        verifier, legal, games::ClassTag::pi2, spaces_for(legal), pool, true);
    CHECK(legal_result.consistent);

    Configuration illegal = zoo::bool_config(cycle_graph(3), {1, 1, 1});
    auto illegal_result = games::check_class_membership_on_instance(
        verifier, illegal, games::ClassTag::pi2, spaces_for(illegal), pool, false);
    CHECK(illegal_result.consistent);
}

TEST_CASE("default id pool: injective, canonical, capped") {
    auto pool = games::default_id_pool(cycle_graph(4), 5);
    CHECK(pool.size() == 5);
    for (const auto& ids : pool) {
        CHECK(ids.n() == 4);
        for (auto v : ids.id) {
            CHECK(v >= 1);
            CHECK(v <= 6);
        }
    }
    // orbit representatives are unique as sets of labeled assignments
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j) CHECK_FALSE(pool[i] == pool[j]);
}

TEST_SUITE_END();
