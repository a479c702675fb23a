#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace locver::report {

enum class Evidence : std::uint8_t { exhaustive, witness, counterexample, inconclusive };

std::string to_string(Evidence e);

// One replayable record: the suite that produced it, the claim it supports,
// the kind of evidence, a digest of the instance/parameters, and the runtime.
struct Record {
    std::string language;
    std::string claim;
    Evidence evidence = Evidence::inconclusive;
    std::string digest;
    std::uint64_t seed = 0;
    double runtime_ms = 0.0;
    bool ok = false;
};

struct Report {
    std::vector<std::string> caveats;
    std::vector<Record> records;  // canonical (sorted) order
};

// FNV-1a digest of a serialized instance or parameter string.
std::string digest_of(const std::string& payload);

// Desk-scale evidence for the class landscape: checker/predicate agreement,
// scheme completeness and bounded soundness, lift counterexamples, and the
// two-level protocol branches, on instances up to max_n nodes.
Report hierarchy_report(int max_n, std::uint64_t budget, std::uint64_t seed);

std::string render_table(const Report& r);
std::string render_json_lines(const Report& r);

}  // namespace locver::report
