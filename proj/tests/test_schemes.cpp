#include "doctest.h"
#include "locver/canon.hpp"
#include "locver/errors.hpp"
#include "locver/games.hpp"
#include "locver/lifts.hpp"
#include "locver/schemes.hpp"

using namespace locver;

namespace {

Bytes element(std::uint8_t b) { return Bytes{b}; }

Configuration cover_p2_distinct() {
    zoo::CoverInput holder;
    holder.sets = {{element(0xA1), element(0xB2)}};
    holder.element = element(0xA1);
    zoo::CoverInput other;
    other.sets = {{element(0xB2)}};
    other.element = element(0xB2);
    return Configuration(path_graph(2),
                         {zoo::encode_cover_input(holder), zoo::encode_cover_input(other)});
}

}  // namespace

TEST_SUITE_BEGIN("schemes");

TEST_CASE("tree prover: canonical roots and counters") {
    CHECK(schemes::tree_prover(blank_config(path_graph(1))) == CertificateAssignment{varint(0)});

    auto p3 = schemes::tree_prover(blank_config(path_graph(3)));
    CHECK(p3 == CertificateAssignment{varint(1), varint(0), varint(1)});

    auto star = schemes::tree_prover(blank_config(star_graph(3)));
    CHECK(star == CertificateAssignment{varint(0), varint(1), varint(1), varint(1)});

    CHECK_THROWS_AS(schemes::tree_prover(blank_config(cycle_graph(4))), domain_error);
}

TEST_CASE("tree verifier accepts honest certificates on every small tree") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : canon::tree_catalog(n)) {
            Configuration c = blank_config(g);
            auto certs = schemes::tree_prover(c);
            for (const auto& ids : games::default_id_pool(g, 3))
                CHECK(global_accept(run(schemes::tree_verifier(), c, ids, {certs}),
                                    AcceptMode::conjunctive));
        }
}

TEST_CASE("tree verifier: uniqueness of the smaller neighbor is enforced") {
    Configuration p3 = blank_config(path_graph(3));
    CertificateAssignment two_zeros{varint(0), varint(1), varint(0)};
    auto verdicts = run(schemes::tree_verifier(), p3, consecutive_ids(3), {two_zeros});
    CHECK(verdicts[1] == Verdict::reject);  // middle node sees two smaller neighbors
}

TEST_CASE("tree verifier: C4 rejects every counter assignment up to 4") {
    Configuration c4 = blank_config(cycle_graph(4));
    auto pool = games::default_id_pool(c4.graph, 1);
    auto space = schemes::tree_counter_space(c4, 4);
    CHECK_FALSE(games::evaluate_game(schemes::tree_verifier(), c4,
                                     games::prefix_of({games::Quantifier::exists}), {space}, pool,
                                     AcceptMode::conjunctive));
}

TEST_CASE("tree verifier rejects unparseable certificates") {
    Configuration p2 = blank_config(path_graph(2));
    CertificateAssignment certs{Bytes{0xff}, varint(1)};
    auto verdicts = run(schemes::tree_verifier(), p2, consecutive_ids(2), {certs});
    CHECK(verdicts[0] == Verdict::reject);
}

TEST_CASE("alts scheme: completeness, soundness, and the zero-zero rule") {
    Configuration c = zoo::bool_config(path_graph(4), {1, 0, 0, 1});
    auto certs = schemes::alts_prover(c);
    // exact distances to the two selected endpoints
    CHECK(certs[0] == Bytes{0, 3});
    CHECK(certs[1] == Bytes{1, 2});
    CHECK(certs[2] == Bytes{2, 1});
    CHECK(certs[3] == Bytes{3, 0});
    for (const auto& ids : games::default_id_pool(c.graph, 3))
        CHECK(global_accept(run(schemes::alts_verifier(), c, ids, {certs}), AcceptMode::conjunctive));

    // soundness: one selected node only, exhaustive certificate search fails
    Configuration single = zoo::bool_config(path_graph(4), {0, 1, 0, 0});
    auto pool = games::default_id_pool(single.graph, 1);
    CHECK_FALSE(games::evaluate_game(schemes::alts_verifier(), single,
                                     games::prefix_of({games::Quantifier::exists}),
                                     {schemes::alts_field_space(single, 4)}, pool,
                                     AcceptMode::conjunctive));

    // a (0,0) certificate rejects at its node
    CertificateAssignment zz = certs;
    zz[1] = Bytes{0, 0};
    auto verdicts = run(schemes::alts_verifier(), c, consecutive_ids(4), {zz});
    CHECK(verdicts[1] == Verdict::reject);
}

TEST_CASE("cover prover: single node and P2 examples") {
    zoo::CoverInput solo;
    solo.sets = {{element(0xA1)}};
    solo.element = element(0xA1);
    Configuration single(path_graph(1), {zoo::encode_cover_input(solo)});
    auto certs = schemes::cover_prover(single);
    auto parsed = schemes::parse_cover_cert(certs[0]);
    REQUIRE(parsed.has_value());
    CHECK(parsed->d0 == 0);
    REQUIRE(parsed->entries.size() == 1);
    CHECK(parsed->entries[0].first == 0);
    CHECK(parsed->entries[0].second == element(0xA1));

    Configuration p2 = cover_p2_distinct();
    auto p2_certs = schemes::cover_prover(p2);
    auto c0 = schemes::parse_cover_cert(p2_certs[0]);
    auto c1 = schemes::parse_cover_cert(p2_certs[1]);
    REQUIRE(c0.has_value());
    REQUIRE(c1.has_value());
    CHECK(c0->d0 == 0);  // node 0 owns the covering set
    CHECK(c1->d0 == 1);
    REQUIRE(c0->entries.size() == 2);
    // same element order at both nodes, distances differ by the edge
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(c0->entries[i].second == c1->entries[i].second);
        CHECK(c0->entries[i].first + c1->entries[i].first == 1);
    }
}

TEST_CASE("cover verifier: honest certificates accepted, tampered d0 rejected") {
    Configuration p2 = cover_p2_distinct();
    auto certs = schemes::cover_prover(p2);
    for (const auto& ids : games::default_id_pool(p2.graph, 3))
        CHECK(global_accept(run(schemes::cover_verifier(), p2, ids, {certs}), AcceptMode::conjunctive));

    // claim the covering set sits at node 1 too: node 1 owns no such set
    auto parsed = schemes::parse_cover_cert(certs[1]);
    parsed->d0 = 0;
    CertificateAssignment bad = certs;
    bad[1] = schemes::encode_cover_cert(*parsed);
    auto verdicts = run(schemes::cover_verifier(), p2, consecutive_ids(2), {bad});
    CHECK(verdicts[1] == Verdict::reject);
}

TEST_CASE("cover scheme: bounded soundness on a non-member P3") {
    zoo::CoverInput a;
    a.sets = {{element(1)}};
    a.element = element(1);
    zoo::CoverInput b;
    b.sets = {{element(2)}};
    b.element = element(2);
    zoo::CoverInput c;
    c.sets = {{element(2)}};
    c.element = element(1);
    Configuration nonmember(path_graph(3),
                            {zoo::encode_cover_input(a), zoo::encode_cover_input(b), zoo::encode_cover_input(c)});
    REQUIRE_FALSE(zoo::cover_lang().contains(nonmember));
    auto pool = games::default_id_pool(nonmember.graph, 1);
    auto space = schemes::cover_cert_space(nonmember, 3, {element(1), element(2)});
    CHECK_FALSE(games::evaluate_game(schemes::cover_verifier(), nonmember,
                                     games::prefix_of({games::Quantifier::exists}), {space}, pool,
                                     AcceptMode::conjunctive));
}

TEST_CASE("provers ignore identities entirely") {
    // certificates are a function of the configuration alone; replaying the
    // verifier under different pools replays the same bit-identical outcome
    Configuration tree = blank_config(star_graph(3));
    auto certs_a = schemes::tree_prover(tree);
    auto certs_b = schemes::tree_prover(tree);
    CHECK(certs_a == certs_b);

    Configuration alts = zoo::bool_config(cycle_graph(5), {1, 0, 1, 0, 0});
    CHECK(schemes::alts_prover(alts) == schemes::alts_prover(alts));
}

TEST_CASE("honest scheme certificates survive pullback along covers") {
    // alts on C4 lifted to C8; tree has no cyclic members, cover checked on C3
    Configuration c4 = zoo::bool_config(cycle_graph(4), {1, 1, 0, 0});
    auto alts = schemes::alts_scheme();
    auto certs = alts.prover(c4);
    lifts::VoltageAssignment va;
    va[{0, 3}] = {1, 0};
    auto [cover, map] = lifts::k_fold_cover(c4, 2, va);
    CertificateAssignment pulled;
    for (int u = 0; u < cover.n(); ++u) pulled.push_back(certs[map.phi[u]]);
    CHECK(global_accept(run(alts.verifier, cover, consecutive_ids(cover.n()), {pulled}),
                        AcceptMode::conjunctive));
}

TEST_SUITE_END();
