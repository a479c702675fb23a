#include "doctest.h"
#include "locver/canon.hpp"
#include "locver/errors.hpp"
#include "locver/games.hpp"
#include "locver/pi2.hpp"
#include "locver/zoo.hpp"

using namespace locver;

namespace {

int parsed_flag(const Bytes& b) { return pi2::parse_refutation_cert(b)->flag; }

// the honest description of another configuration, stamped onto every node
CertificateAssignment foreign_description(const Configuration& target, int n, int index) {
    auto order = canon::canonical_order(target);
    GraphDescription d = describe(target, order);
    return CertificateAssignment(static_cast<std::size_t>(n),
                                 pi2::encode_description_cert({d, index}));
}

}  // namespace

TEST_SUITE_BEGIN("pi2");

TEST_CASE("honest description: single node and P2") {
    Configuration single(path_graph(1), {Bytes{0x42}});
    auto certs = pi2::honest_description(single);
    auto parsed = pi2::parse_description_cert(certs[0]);
    REQUIRE(parsed.has_value());
    CHECK(parsed->description.m == 1);
    CHECK(parsed->description.data[0] == Bytes{0x42});
    CHECK(parsed->index == 1);

    Configuration p2(path_graph(2), {Bytes{0xAA}, Bytes{0xBB}});
    auto p2_certs = pi2::honest_description(p2);
    auto a = pi2::parse_description_cert(p2_certs[0]);
    auto b = pi2::parse_description_cert(p2_certs[1]);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->description == b->description);
    CHECK(a->description.edge(0, 1));
    CHECK_FALSE(a->description.edge(0, 0));
    CHECK(a->index != b->index);
}

TEST_CASE("honest description encoding round-trips") {
    Configuration c = zoo::bool_config(cycle_graph(4), {1, 1, 0, 0});
    for (const Bytes& cert : pi2::honest_description(c)) {
        auto parsed = pi2::parse_description_cert(cert);
        REQUIRE(parsed.has_value());
        CHECK(pi2::encode_description_cert(*parsed) == cert);
    }
}

TEST_CASE("refute case 1: honest pictures of legal instances") {
    Configuration c = zoo::bool_config(cycle_graph(4), {1, 1, 0, 0});
    Language exts = zoo::exts_lang();
    auto c2 = pi2::refute(c, exts, pi2::honest_description(c));
    for (const Bytes& b : c2) CHECK(parsed_flag(b) == 1);
    for (const auto& ids : games::default_id_pool(c.graph, 3))
        CHECK(global_accept(run(pi2::verify_pi2(exts), c, ids, {pi2::honest_description(c), c2}),
                            AcceptMode::conjunctive));
}

TEST_CASE("refute case 0: an unreadable certificate is witnessed") {
    Configuration c = zoo::bool_config(path_graph(3), {1, 1, 0});
    Language exts = zoo::exts_lang();
    auto c1 = pi2::honest_description(c);
    c1[1] = Bytes{0xff, 0xff};
    auto c2 = pi2::refute(c, exts, c1);
    for (const Bytes& b : c2) CHECK(parsed_flag(b) == 0);
    // the witness is the corrupted node: its distance field is zero
    CHECK(pi2::parse_refutation_cert(c2[1])->d1 == 0);
    CHECK(pi2::parse_refutation_cert(c2[0])->d1 == 1);
    for (const auto& ids : games::default_id_pool(c.graph, 2))
        CHECK(global_accept(run(pi2::verify_pi2(exts), c, ids, {c1, c2}), AcceptMode::conjunctive));
}

TEST_CASE("refute case 2: pigeonholed indices produce two witnesses") {
    Configuration c = zoo::bool_config(cycle_graph(3), {1, 1, 0});
    Language exts = zoo::exts_lang();
    // a 2-node picture cannot index 3 nodes injectively
    Configuration claimed = zoo::bool_config(path_graph(2), {1, 1});
    auto c1 = foreign_description(claimed, 3, 1);
    auto c2 = pi2::refute(c, exts, c1);
    for (const Bytes& b : c2) {
        auto parsed = pi2::parse_refutation_cert(b);
        CHECK(parsed->flag == 2);
        CHECK(parsed->i == 1);
    }
    for (const auto& ids : games::default_id_pool(c.graph, 2))
        CHECK(global_accept(run(pi2::verify_pi2(exts), c, ids, {c1, c2}), AcceptMode::conjunctive));
}

TEST_CASE("refute case 3: an index nobody claims") {
    Configuration c = zoo::bool_config(path_graph(2), {1, 1});
    Language exts = zoo::exts_lang();
    // a 4-node picture over a 2-node instance, indices 1 and 2 used
    Configuration claimed = zoo::bool_config(path_graph(4), {1, 1, 0, 0});
    auto order = canon::canonical_order(claimed);
    GraphDescription d = describe(claimed, order);
    CertificateAssignment c1{pi2::encode_description_cert({d, 1}), pi2::encode_description_cert({d, 2})};
    auto c2 = pi2::refute(c, exts, c1);
    auto parsed = pi2::parse_refutation_cert(c2[0]);
    CHECK(parsed->flag == 3);
    CHECK(parsed->i == 3);  // the smallest free index
    for (const auto& ids : games::default_id_pool(c.graph, 2))
        CHECK(global_accept(run(pi2::verify_pi2(exts), c, ids, {c1, c2}), AcceptMode::conjunctive));
}

TEST_CASE("refute case 4: a right-sized wrong picture is locally contradicted") {
    Configuration c = zoo::bool_config(cycle_graph(4), {1, 1, 0, 0});
    Language exts = zoo::exts_lang();
    // P4 with the same inputs: same size, wrong edges
    Configuration claimed = zoo::bool_config(path_graph(4), {1, 1, 0, 0});
    auto order = canon::canonical_order(claimed);
    GraphDescription d = describe(claimed, order);
    CertificateAssignment c1;
    for (int u = 0; u < 4; ++u) c1.push_back(pi2::encode_description_cert({d, u + 1}));
    auto c2 = pi2::refute(c, exts, c1);
    for (const Bytes& b : c2) CHECK(parsed_flag(b) == 4);
    for (const auto& ids : games::default_id_pool(c.graph, 2))
        CHECK(global_accept(run(pi2::verify_pi2(exts), c, ids, {c1, c2}), AcceptMode::conjunctive));
}

TEST_CASE("refute rejects illegal configurations") {
    Configuration c = zoo::bool_config(path_graph(3), {1, 1, 1});
    CHECK_THROWS_AS(pi2::refute(c, zoo::exts_lang(), pi2::honest_description(c)), domain_error);
}

TEST_CASE("verifier: mixed flags reject on both sides of the edge") {
    Configuration c = zoo::bool_config(path_graph(2), {1, 1});
    auto c1 = pi2::honest_description(c);
    CertificateAssignment c2{pi2::encode_refutation_cert({1, 0, 0, 0}),
                             pi2::encode_refutation_cert({3, 1, 0, 0})};
    auto verdicts = run(pi2::verify_pi2(zoo::exts_lang()), c, consecutive_ids(2), {c1, c2});
    CHECK(verdicts[0] == Verdict::reject);
    CHECK(verdicts[1] == Verdict::reject);
}

TEST_CASE("illegal branch: the honest picture defeats every bounded refutation") {
    Language exts = zoo::exts_lang();
    auto verifier = pi2::verify_pi2(exts);
    // C4 with three selected: illegal
    Configuration c = zoo::bool_config(cycle_graph(4), {1, 1, 1, 0});
    auto honest = pi2::honest_description(c);
    games::CertificateSpace pinned;
    pinned.per_node.resize(4);
    for (int u = 0; u < 4; ++u) pinned.per_node[u] = {honest[u]};
    auto space = pi2::refutation_space(c, c.graph.diameter(), 4);
    auto pool = games::default_id_pool(c.graph, 2);
    bool some_refutation_survives = games::evaluate_game(
        verifier, c, games::prefix_of({games::Quantifier::forall, games::Quantifier::exists}),
        {pinned, space}, pool, AcceptMode::conjunctive);
    CHECK_FALSE(some_refutation_survives);
}

TEST_CASE("refutation payload shapes match their flags") {
    CHECK_FALSE(pi2::parse_refutation_cert(Bytes{5}).has_value());
    CHECK_FALSE(pi2::parse_refutation_cert(Bytes{1, 0}).has_value());  // trailing payload
    CHECK_FALSE(pi2::parse_refutation_cert(Bytes{2, 1}).has_value());  // missing distances
    CHECK(pi2::parse_refutation_cert(Bytes{1}).has_value());
    auto c2 = pi2::parse_refutation_cert(Bytes{2, 1, 3, 0});
    REQUIRE(c2.has_value());
    CHECK(c2->i == 1);
    CHECK(c2->d1 == 3);
    CHECK(c2->d2 == 0);
}

TEST_CASE("certificates are identity-independent by replay") {
    Configuration c = zoo::bool_config(cycle_graph(4), {1, 0, 1, 0});
    auto first = pi2::honest_description(c);
    auto second = pi2::honest_description(c);
    CHECK(first == second);
    auto r1 = pi2::refute(c, zoo::exts_lang(), first);
    auto r2 = pi2::refute(c, zoo::exts_lang(), second);
    CHECK(r1 == r2);
}

TEST_SUITE_END();
