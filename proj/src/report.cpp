#include "locver/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "json.hpp"
#include "locver/canon.hpp"
#include "locver/format.hpp"
#include "locver/games.hpp"
#include "locver/iter.hpp"
#include "locver/lifts.hpp"
#include "locver/pi2.hpp"
#include "locver/schemes.hpp"
#include "locver/zoo.hpp"

namespace locver::report {

std::string to_string(Evidence e) {
    switch (e) {
        case Evidence::exhaustive: return "exhaustive";
        case Evidence::witness: return "witness";
        case Evidence::counterexample: return "counterexample";
        case Evidence::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string digest_of(const std::string& payload) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
};

// all binary input patterns for a graph
std::vector<Configuration> binary_configs(const Graph& g) {
    std::vector<Configuration> out;
    int n = g.n();
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> bits;
        for (int u = 0; u < n; ++u) bits.push_back((mask >> u) & 1);
        out.push_back(zoo::bool_config(g, bits));
    }
    return out;
}

Record checker_agreement(const std::string& lang_name, const Language& lang,
                         const LocalAlgorithm& checker, int max_n, const std::string& claim) {
    Timer timer;
    Record rec{lang_name, claim, Evidence::exhaustive, "", 0, 0.0, true};
    std::string blob;
    for (int n = 1; n <= max_n; ++n)
        for (const Graph& g : canon::connected_graph_catalog(n))
            for (const Configuration& c : binary_configs(g)) {
                auto ids = consecutive_ids(n);
                bool accepted = global_accept(run(checker, c, ids, {}), AcceptMode::conjunctive);
                if (accepted != lang.contains(c)) rec.ok = false;
                blob += serialize_config(c);
            }
    rec.digest = digest_of(blob);
    rec.runtime_ms = timer.ms();
    return rec;
}

Record co_checker_agreement(const std::string& lang_name, const Language& lang,
                            const LocalAlgorithm& checker, int max_n, const std::string& claim) {
    Timer timer;
    Record rec{lang_name, claim, Evidence::exhaustive, "", 0, 0.0, true};
    std::string blob;
    for (int n = 1; n <= max_n; ++n)
        for (const Graph& g : canon::connected_graph_catalog(n))
            for (const Configuration& c : binary_configs(g)) {
                auto ids = consecutive_ids(n);
                bool accepted = global_accept(run(checker, c, ids, {}), AcceptMode::disjunctive);
                if (accepted != lang.contains(c)) rec.ok = false;
                blob += serialize_config(c);
            }
    rec.digest = digest_of(blob);
    rec.runtime_ms = timer.ms();
    return rec;
}

Record lift_counterexample_record(const std::string& lang_name, const Language& lang,
                                  const Configuration& member, const std::string& claim) {
    Timer timer;
    Record rec{lang_name, claim, Evidence::counterexample, digest_of(serialize_config(member)), 0, 0.0,
               false};
    auto result = lifts::search_lift_counterexample(lang, member, 1, 3, 1'000'000);
    rec.ok = result.status == lifts::SearchStatus::found;
    if (result.status == lifts::SearchStatus::inconclusive) rec.evidence = Evidence::inconclusive;
    rec.runtime_ms = timer.ms();
    return rec;
}

Record closure_evidence_record(const std::string& lang_name, const Language& lang, int max_n,
                               const std::string& claim) {
    Timer timer;
    Record rec{lang_name, claim, Evidence::exhaustive, "", 0, 0.0, true};
    std::string blob;
    for (int n = 1; n <= max_n; ++n)
        for (const Graph& g : canon::connected_graph_catalog(n))
            for (const Configuration& c : binary_configs(g)) {
                if (!lang.contains(c)) continue;
                blob += serialize_config(c);
                auto result = lifts::search_lift_counterexample(lang, c, 1, 3, 200'000);
                if (result.status == lifts::SearchStatus::found) rec.ok = false;
                if (result.status == lifts::SearchStatus::inconclusive) rec.evidence = Evidence::inconclusive;
            }
    rec.digest = digest_of(blob);
    rec.runtime_ms = timer.ms();
    return rec;
}

Record tree_scheme_record(int max_n) {
    Timer timer;
    Record rec{"tree", "scheme: complete on trees, sound on small non-trees", Evidence::exhaustive,
               "", 0, 0.0, true};
    auto scheme = schemes::tree_scheme();
    std::string blob;
    for (int n = 1; n <= max_n; ++n) {
        for (const Graph& g : canon::connected_graph_catalog(n)) {
            Configuration c = blank_config(g);
            blob += serialize_config(c);
            bool is_tree = static_cast<int>(g.edges().size()) == n - 1;
            if (is_tree) {
                auto certs = scheme.prover(c);
                for (const auto& ids : games::default_id_pool(g, 3))
                    if (!global_accept(run(scheme.verifier, c, ids, {certs}), AcceptMode::conjunctive))
                        rec.ok = false;
            } else {
                auto space = schemes::tree_counter_space(c, n);
                auto pool = games::default_id_pool(g, 1);
                bool some_cert_accepted = games::evaluate_game(
                    scheme.verifier, c, games::prefix_of({games::Quantifier::exists}), {space}, pool,
                    AcceptMode::conjunctive);
                if (some_cert_accepted) rec.ok = false;
            }
        }
    }
    rec.digest = digest_of(blob);
    rec.runtime_ms = timer.ms();
    return rec;
}

Record pi2_record(int max_n) {
    Timer timer;
    Record rec{"exts", "two-level protocol: both branches on small instances", Evidence::exhaustive,
               "", 0, 0.0, true};
    Language exts = zoo::exts_lang();
    auto verifier = pi2::verify_pi2(exts);
    std::string blob;
    for (int n = 2; n <= std::min(max_n, 4); ++n) {
        for (const Graph& g : canon::connected_graph_catalog(n)) {
            for (const Configuration& c : binary_configs(g)) {
                blob += serialize_config(c);
                auto ids = games::default_id_pool(g, 2);
                auto honest = pi2::honest_description(c);
                if (exts.contains(c)) {
                    auto c2 = pi2::refute(c, exts, honest);
                    for (const auto& id : ids)
                        if (!global_accept(run(verifier, c, id, {honest, c2}), AcceptMode::conjunctive))
                            rec.ok = false;
                } else {
                    // with the honest picture pinned at every node, no
                    // refutation may survive
                    auto space = pi2::refutation_space(c, g.diameter(), n);
                    games::CertificateSpace pinned;
                    pinned.per_node.resize(static_cast<std::size_t>(n));
                    for (int u = 0; u < n; ++u)
                        pinned.per_node[static_cast<std::size_t>(u)] = {honest[static_cast<std::size_t>(u)]};
                    bool some_refutation = games::evaluate_game(
                        verifier, c, games::prefix_of({games::Quantifier::forall, games::Quantifier::exists}),
                        {pinned, space}, ids, AcceptMode::conjunctive);
                    if (some_refutation) rec.ok = false;
                }
            }
        }
    }
    rec.digest = digest_of(blob);
    rec.runtime_ms = timer.ms();
    return rec;
}

Record iter_record(std::uint64_t seed) {
    Timer timer;
    Record rec{"iter", "pivot algorithm: accepts legal, rejects at the designated certificate",
               Evidence::witness, "", seed, 0.0, true};
    iter::TuringMachine halt;  // no rules: halts immediately
    iter::SystemStateCodec codec(halt);
    Configuration legal = iter::iter_instance(halt, 0, 1, 2, 2);
    Configuration illegal = iter::iter_instance(halt, 1, 1, 2, 2);
    rec.digest = digest_of(serialize_config(legal) + serialize_config(illegal));
    auto alg = iter::iter_pi1_algorithm(codec);
    auto ids = consecutive_ids(legal.n());
    for (std::uint64_t k = 0; k <= 4; ++k) {
        CertificateAssignment certs(static_cast<std::size_t>(legal.n()), varint(k));
        if (!global_accept(run(alg, legal, ids, {certs}), AcceptMode::conjunctive)) rec.ok = false;
    }
    CertificateAssignment reject_cert(static_cast<std::size_t>(illegal.n()), varint(2));
    if (global_accept(run(alg, illegal, consecutive_ids(illegal.n()), {reject_cert}),
                      AcceptMode::conjunctive))
        rec.ok = false;
    rec.runtime_ms = timer.ms();
    return rec;
}

}  // namespace

Report hierarchy_report(int max_n, std::uint64_t budget, std::uint64_t seed) {
    (void)budget;
    Report r;
    r.caveats = {
        "bounded evidence: certificate spaces are structured and finite, not all bit-strings",
        "identity pools are capped orbit representatives of injective assignments from {1..n+2}",
        "soundness claims are exhaustive only at the stated desk-scale bounds",
    };
    Configuration amos_member = zoo::bool_config(cycle_graph(3), {1, 0, 0});
    Configuration exts_member = zoo::bool_config(cycle_graph(3), {1, 1, 0});

    r.records.push_back(checker_agreement("and", zoo::and_lang(), zoo::and_checker(),
                                          std::min(max_n, 4), "in LD: local checker agrees with the predicate"));
    r.records.push_back(co_checker_agreement("or", zoo::or_lang(), zoo::or_co_checker(),
                                             std::min(max_n, 4),
                                             "in co-LD: disjunctive checker agrees with the predicate"));
    r.records.push_back(checker_agreement("diam_1", zoo::diam_k_lang(1), zoo::diam_k_checker(1),
                                          std::min(max_n, 4), "in LD: local checker agrees with the predicate"));
    r.records.push_back(checker_agreement("prop_col", zoo::prop_col_lang(), zoo::prop_col_checker(),
                                          std::min(max_n, 4), "in LD: local checker agrees with the predicate"));
    r.records.push_back(lift_counterexample_record("amos", zoo::amos_lang(), amos_member,
                                                   "outside NLD: a lift leaves the language"));
    r.records.push_back(lift_counterexample_record("exts", zoo::exts_lang(), exts_member,
                                                   "outside NLD: a lift leaves the language"));
    r.records.push_back(closure_evidence_record("alts", zoo::alts_lang(), std::min(max_n, 4),
                                                "in NLD: no small lift leaves the language"));
    r.records.push_back(closure_evidence_record("tree", zoo::tree_lang(), std::min(max_n, 4),
                                                "in NLD: no small lift leaves the language"));
    r.records.push_back(tree_scheme_record(std::min(max_n, 5)));
    r.records.push_back(pi2_record(std::min(max_n, 3)));
    r.records.push_back(iter_record(seed));

    std::sort(r.records.begin(), r.records.end(), [](const Record& a, const Record& b) {
        return std::tie(a.language, a.claim) < std::tie(b.language, b.claim);
    });
    return r;
}

std::string render_table(const Report& r) {
    std::ostringstream out;
    for (const std::string& caveat : r.caveats) out << "# caveat: " << caveat << "\n";
    out << "\n";
    auto pad = [](std::string s, std::size_t w) {
        if (s.size() < w) s += std::string(w - s.size(), ' ');
        return s;
    };
    out << pad("language", 10) << pad("ok", 5) << pad("evidence", 16) << pad("runtime", 12)
        << pad("digest", 18) << "claim\n";
    for (const Record& rec : r.records) {
        std::ostringstream ms;
        ms.precision(1);
        ms << std::fixed << rec.runtime_ms << "ms";
        out << pad(rec.language, 10) << pad(rec.ok ? "ok" : "FAIL", 5)
            << pad(to_string(rec.evidence), 16) << pad(ms.str(), 12) << pad(rec.digest, 18)
            << rec.claim << "\n";
    }
    return out.str();
}

std::string render_json_lines(const Report& r) {
    std::ostringstream out;
    for (const std::string& caveat : r.caveats) {
        nlohmann::json j{{"caveat", caveat}};
        out << j.dump() << "\n";
    }
    for (const Record& rec : r.records) {
        nlohmann::json j{{"language", rec.language}, {"claim", rec.claim},
                         {"evidence", to_string(rec.evidence)}, {"digest", rec.digest},
                         {"seed", rec.seed}, {"runtime_ms", rec.runtime_ms}, {"ok", rec.ok}};
        out << j.dump() << "\n";
    }
    return out.str();
}

}  // namespace locver::report
