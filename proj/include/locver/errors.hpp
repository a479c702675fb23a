#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace locver {

// Invalid domain object or precondition violation (bad node, non-member input, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Caller misuse (arity mismatch, inconsistent argument shapes).
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// Text format errors, with 1-based line information.
struct parse_error : std::runtime_error {
    parse_error(int line_number, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + what), line(line_number) {}
    int line;
};

// A bounded search ran out of budget: the outcome is neither "yes" nor "no".
struct inconclusive_error : std::runtime_error {
    inconclusive_error(const std::string& what, std::uint64_t evaluations_done)
        : std::runtime_error(what), evaluations(evaluations_done) {}
    std::uint64_t evaluations;
};

}  // namespace locver
