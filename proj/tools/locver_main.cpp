#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "locver/errors.hpp"
#include "locver/format.hpp"
#include "locver/games.hpp"
#include "locver/iter.hpp"
#include "locver/lifts.hpp"
#include "locver/pi2.hpp"
#include "locver/reductions.hpp"
#include "locver/report.hpp"
#include "locver/schemes.hpp"
#include "locver/zoo.hpp"

using namespace locver;

namespace {

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitInconclusive = 2;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("LOCVER_BUDGET")) {
        char* end = nullptr;
        std::uint64_t v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 50'000'000;
}

IdentityAssignment ids_or_default(const ParsedInstance& inst) {
    if (inst.ids) return *inst.ids;
    return consecutive_ids(inst.config.n());
}

struct SchemeHandle {
    LocalAlgorithm verifier;
    std::function<CertificateAssignment(const Configuration&)> prover;
};

SchemeHandle scheme_by_name(const std::string& name) {
    if (name == "tree") {
        auto s = schemes::tree_scheme();
        return {s.verifier, s.prover};
    }
    if (name == "alts") {
        auto s = schemes::alts_scheme();
        return {s.verifier, s.prover};
    }
    if (name == "cover") {
        auto s = schemes::cover_scheme();
        return {s.verifier, s.prover};
    }
    if (name == "miss_lift")
        return {reductions::miss_lift_verifier(), [](const Configuration& c) { return reductions::miss_lift_prover(c); }};
    if (name.rfind("pi2:", 0) == 0) {
        Language lang = zoo::find_language(name.substr(4));
        return {pi2::verify_pi2(lang), nullptr};  // arity 2: certificates come from the file
    }
    throw domain_error("unknown scheme '" + name + "' (tree, alts, cover, miss_lift, pi2:<lang>)");
}

int cmd_decide(const std::string& lang_name, const std::string& path) {
    Language lang = zoo::find_language(lang_name);
    ParsedInstance inst = load_instance(path);
    return lang.contains(inst.config) ? kExitAccept : kExitReject;
}

int cmd_verify(const std::string& scheme_name, const std::string& path, bool prove,
               const std::string& certs_path) {
    SchemeHandle scheme = scheme_by_name(scheme_name);
    ParsedInstance inst = load_instance(path);
    std::vector<CertificateAssignment> certs = inst.certs;
    if (!certs_path.empty()) certs = load_instance(certs_path).certs;
    if (prove) {
        if (!scheme.prover) throw usage_error("scheme '" + scheme_name + "' has no single prover");
        certs = {scheme.prover(inst.config)};
    }
    if (static_cast<int>(certs.size()) != scheme.verifier.arity)
        throw usage_error("expected " + std::to_string(scheme.verifier.arity) +
                          " certificate level(s); provide them as c-lines or use --prove");
    auto verdicts = run(scheme.verifier, inst.config, ids_or_default(inst), certs);
    bool ok = global_accept(verdicts, AcceptMode::conjunctive);
    for (int u = 0; u < inst.config.n(); ++u)
        std::cout << "node " << u << ": " << (verdicts[static_cast<std::size_t>(u)] == Verdict::accept ? "accept" : "reject")
                  << "\n";
    return ok ? kExitAccept : kExitReject;
}

int cmd_game(const std::string& path, const std::string& class_name, const std::string& scheme_name,
             std::uint64_t budget, std::size_t pool_cap, int max_distance) {
    ParsedInstance inst = load_instance(path);
    const Configuration& config = inst.config;
    auto tag = games::class_tag_from_string(class_name);
    if (!tag) throw usage_error("unknown class tag '" + class_name + "'");

    LocalAlgorithm alg;
    std::vector<games::CertificateSpace> spaces;
    bool truth;
    int dmax = max_distance > 0 ? max_distance : config.graph.diameter();
    if (scheme_name == "tree") {
        alg = schemes::tree_verifier();
        spaces = {schemes::tree_counter_space(config, config.n())};
        truth = zoo::tree_lang().contains(config);
    } else if (scheme_name == "alts") {
        alg = schemes::alts_verifier();
        spaces = {schemes::alts_field_space(config, dmax)};
        truth = zoo::alts_lang().contains(config);
    } else if (scheme_name.rfind("pi2:", 0) == 0) {
        Language lang = zoo::find_language(scheme_name.substr(4));
        alg = pi2::verify_pi2(lang);
        auto honest = pi2::honest_description(config);
        games::CertificateSpace pinned;
        pinned.per_node.resize(static_cast<std::size_t>(config.n()));
        for (int u = 0; u < config.n(); ++u)
            pinned.per_node[static_cast<std::size_t>(u)] = {honest[static_cast<std::size_t>(u)]};
        spaces = {pinned, pi2::refutation_space(config, dmax, config.n())};
        truth = lang.contains(config);
    } else {
        throw usage_error("game supports schemes: tree, alts, pi2:<lang>");
    }
    games::GameOptions options;
    options.budget = budget;
    auto pool = games::default_id_pool(config.graph, pool_cap);
    try {
        auto result = games::check_class_membership_on_instance(alg, config, *tag, spaces, pool, truth, options);
        if (result.consistent) {
            std::cout << "consistent (" << result.stats.node_evaluations << " node evaluations)\n";
            return kExitAccept;
        }
        std::cout << "violated";
        if (result.witness.id_index) std::cout << " at id-pool index " << *result.witness.id_index;
        if (result.witness.node) std::cout << ", node " << *result.witness.node;
        std::cout << "\n";
        return kExitReject;
    } catch (const inconclusive_error& e) {
        std::cout << "inconclusive: " << e.what() << " (" << e.evaluations << " node evaluations)\n";
        return kExitInconclusive;
    }
}

lifts::VoltageAssignment voltages_from(const ParsedInstance& inst) {
    lifts::VoltageAssignment va;
    for (const auto& line : inst.voltages) {
        std::pair<int, int> key{std::min(line.u, line.v), std::max(line.u, line.v)};
        va[key] = line.perm;
    }
    return va;
}

int cmd_lift(const std::string& action, const std::string& path, const std::string& target_path,
             int k, int t, int k_max, std::uint64_t budget, const std::string& lang_name,
             const std::string& out_path) {
    ParsedInstance inst = load_instance(path);
    if (action == "cover") {
        auto [cover, map] = lifts::k_fold_cover(inst.config, k, voltages_from(inst));
        std::string text = serialize_config(cover);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            out << text;
        }
        return kExitAccept;
    }
    if (action == "check") {
        ParsedInstance target = load_instance(target_path);
        // phi is read from the source file's id lines: id <u> <phi(u)>
        if (!inst.ids) throw usage_error("provide phi as id lines in the source file");
        std::vector<int> phi;
        for (int u = 0; u < inst.config.n(); ++u) phi.push_back(static_cast<int>(inst.ids->of(u)));
        return lifts::is_t_lift(inst.config, target.config, phi, t) ? kExitAccept : kExitReject;
    }
    if (action == "search") {
        Language lang = zoo::find_language(lang_name);
        auto result = lifts::search_lift_counterexample(lang, inst.config, t, k_max, budget);
        if (result.status == lifts::SearchStatus::found) {
            std::cout << serialize_config(result.witness->first);
            return kExitAccept;
        }
        if (result.status == lifts::SearchStatus::none_found) {
            std::cout << "none found\n";
            return kExitReject;
        }
        std::cout << "inconclusive (budget exhausted)\n";
        return kExitInconclusive;
    }
    if (action == "closure") {
        ParsedInstance member = load_instance(target_path);
        auto verdict = lifts::lift_closure_membership(inst.config, {member.config}, budget);
        if (verdict == lifts::Tristate::yes) return kExitAccept;
        if (verdict == lifts::Tristate::no) return kExitReject;
        return kExitInconclusive;
    }
    throw usage_error("lift actions: cover, check, search, closure");
}

int cmd_reduce(const std::string& path, const std::string& lang_name, bool check_label_preserving,
               std::size_t pool_cap, const std::string& out_path) {
    ParsedInstance inst = load_instance(path);
    auto reduction = reductions::miss_reduction(lang_name);
    if (check_label_preserving) {
        auto pool = games::default_id_pool(inst.config.graph, pool_cap);
        bool preserved = reductions::check_label_preserving(
            reduction, reductions::miss_description_prover, inst.config, pool);
        for (std::size_t i = 0; i < pool.size(); ++i) {
            auto certs = reductions::miss_description_prover(
                reductions::apply_reduction(reduction, inst.config, pool[i]));
            std::string blob;
            for (const auto& c : certs) blob += to_hex(c) + ";";
            std::cout << "id-pool[" << i << "] certificate digest " << report::digest_of(blob) << "\n";
        }
        std::cout << (preserved ? "label-preserving" : "NOT label-preserving") << "\n";
        return preserved ? kExitAccept : kExitReject;
    }
    Configuration reduced = reductions::apply_reduction(reduction, inst.config, ids_or_default(inst));
    std::string text = serialize_config(reduced);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        out << text;
    }
    return kExitAccept;
}

int cmd_gen(const std::string& kind, int n, const std::string& bits, const std::string& machine_path,
            std::uint64_t a, std::uint64_t b, int len_l, int len_r, const std::string& out_path) {
    Configuration config = blank_config(path_graph(1));
    if (kind == "path" || kind == "cycle" || kind == "complete" || kind == "star") {
        Graph g = kind == "path"     ? path_graph(n)
                  : kind == "cycle"  ? cycle_graph(n)
                  : kind == "star"   ? star_graph(n - 1)
                                     : complete_graph(n);
        if (bits.empty()) {
            config = blank_config(g);
        } else {
            if (static_cast<int>(bits.size()) != g.n()) throw usage_error("--bits needs one 0/1 per node");
            std::vector<int> values;
            for (char c : bits) {
                if (c != '0' && c != '1') throw usage_error("--bits needs one 0/1 per node");
                values.push_back(c - '0');
            }
            config = zoo::bool_config(g, values);
        }
    } else if (kind == "iter") {
        std::ifstream in(machine_path);
        if (!in) throw domain_error("cannot open '" + machine_path + "'");
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        auto machine = iter::parse_machine_file(text);
        config = iter::iter_instance(machine, a, b, len_l, len_r);
    } else {
        throw usage_error("gen kinds: path, cycle, complete, star, iter");
    }
    std::string text = serialize_config(config);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        out << text;
    }
    return kExitAccept;
}

int cmd_report(const std::string& suite, int max_n, std::uint64_t budget, std::uint64_t seed,
               const std::string& format) {
    if (suite != "hierarchy") throw usage_error("report suites: hierarchy");
    auto rep = report::hierarchy_report(max_n, budget, seed);
    std::cout << (format == "json" ? report::render_json_lines(rep) : report::render_table(rep));
    for (const auto& rec : rep.records)
        if (!rec.ok) return kExitReject;
    return kExitAccept;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for local distributed verification: checkers, certificate schemes, "
                 "lifts, quantifier games, and reductions on small instances"};
    app.require_subcommand(1);

    std::string lang_name, scheme_name, path, target_path, certs_path, class_name, out_path;
    std::string action, kind, bits, machine_path, format = "table", suite = "hierarchy";
    bool prove = false, check_lp = false;
    int n = 4, k = 2, t = 1, k_max = 3, max_n = 4, max_distance = 0, len_l = 1, len_r = 1;
    std::uint64_t budget = default_budget(), seed = 1, a = 0, b = 0;
    std::size_t pool_cap = 4;

    auto* decide = app.add_subcommand("decide", "membership of an instance in a language");
    decide->add_option("lang", lang_name)->required();
    decide->add_option("file", path)->required();

    auto* verify = app.add_subcommand("verify", "run a scheme verifier on an instance");
    verify->add_option("scheme", scheme_name)->required();
    verify->add_option("file", path)->required();
    verify->add_flag("--prove", prove, "generate honest certificates with the scheme prover");
    verify->add_option("--certs", certs_path, "read certificates from this instance file");

    auto* game = app.add_subcommand("game", "check a class-membership claim on one instance");
    game->add_option("file", path)->required();
    game->add_option("--class", class_name)->required();
    game->add_option("--scheme", scheme_name)->required();
    game->add_option("--budget", budget);
    game->add_option("--id-pool", pool_cap);
    game->add_option("--space", max_distance, "max distance in structured certificate spaces");

    auto* lift = app.add_subcommand("lift", "voltage covers, lift checks and searches");
    lift->add_option("action", action)->required();
    lift->add_option("file", path)->required();
    lift->add_option("--target", target_path);
    lift->add_option("-k", k);
    lift->add_option("-t", t);
    lift->add_option("--k-max", k_max);
    lift->add_option("--budget", budget);
    lift->add_option("--lang", lang_name);
    lift->add_option("--out", out_path);

    auto* reduce = app.add_subcommand("reduce", "apply the reduction onto miss");
    reduce->add_option("file", path)->required();
    reduce->add_option("--lang", lang_name)->required();
    reduce->add_flag("--check-label-preserving", check_lp);
    reduce->add_option("--id-pool", pool_cap);
    reduce->add_option("--out", out_path);

    auto* gen = app.add_subcommand("gen", "generate instance files");
    gen->add_option("kind", kind)->required();
    gen->add_option("--n", n);
    gen->add_option("--bits", bits);
    gen->add_option("--machine", machine_path);
    gen->add_option("--a", a);
    gen->add_option("--b", b);
    gen->add_option("--len-l", len_l);
    gen->add_option("--len-r", len_r);
    gen->add_option("--out", out_path);

    auto* rep = app.add_subcommand("report", "run an evidence suite and print records");
    rep->add_option("suite", suite);
    rep->add_option("--max-n", max_n);
    rep->add_option("--budget", budget);
    rep->add_option("--seed", seed);
    rep->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (decide->parsed()) return cmd_decide(lang_name, path);
        if (verify->parsed()) return cmd_verify(scheme_name, path, prove, certs_path);
        if (game->parsed()) return cmd_game(path, class_name, scheme_name, budget, pool_cap, max_distance);
        if (lift->parsed()) return cmd_lift(action, path, target_path, k, t, k_max, budget, lang_name, out_path);
        if (reduce->parsed()) return cmd_reduce(path, lang_name, check_lp, pool_cap, out_path);
        if (gen->parsed()) return cmd_gen(kind, n, bits, machine_path, a, b, len_l, len_r, out_path);
        if (rep->parsed()) return cmd_report(suite, max_n, budget, seed, format);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const inconclusive_error& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconclusive;
    }
    return kExitInconclusive;
}
