#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locver/algorithm.hpp"
#include "locver/language.hpp"

namespace locver::iter {

// Deterministic single-tape machine over a bounded tape. States and symbols
// are 0-based, symbol 0 is the blank, state 0 is initial. A (state, symbol)
// pair without a rule halts the machine.
struct TuringMachine {
    struct Rule {
        int state = 0, read = 0, next_state = 0, write = 0;
        int move = 1;  // -1 left, +1 right
        bool operator==(const Rule&) const = default;
    };

    int num_states = 1;
    int num_symbols = 2;
    int tape_len = 3;
    std::vector<Rule> rules;  // sorted by (state, read), at most one per pair

    const Rule* rule_for(int state, int read) const;
    Bytes encode() const;
    static std::optional<TuringMachine> decode(BytesReader& in);
    bool operator==(const TuringMachine&) const = default;
};

// Machine spec file: `states <s>`, `alphabet <a>`, `tape <t>`,
// `trans <q> <sym> <q'> <sym'> <L|R>` lines; '#' comments.
TuringMachine parse_machine_file(const std::string& text);
std::string serialize_machine(const TuringMachine& m);

struct SystemState {
    std::vector<int> tape;
    int head = 0;
    int state = 0;
    bool operator==(const SystemState&) const = default;
};

// Lexicographic bijection between {2..bound()} and bounded system states,
// ordered by (tape content, head position, control state). Indices 0 and 1
// are reserved fixed points and encode no system state.
class SystemStateCodec {
  public:
    explicit SystemStateCodec(TuringMachine m);

    const TuringMachine& machine() const { return machine_; }
    std::uint64_t bound() const { return bound_; }

    std::uint64_t encode(const SystemState& s) const;
    SystemState decode(std::uint64_t index) const;

  private:
    TuringMachine machine_;
    std::uint64_t bound_;
};

// The iteration function: fixed points at 0 and 1; otherwise one machine step
// applied to decode(i). Halted states map to 1. A head move off the bounded
// tape is a range error (domain_error): desk-scale limitation, reported.
std::uint64_t fm(const SystemStateCodec& codec, std::uint64_t i);

// f^(k) with fixed-point short-circuit. Iteration is capped at bound()+2
// steps: past that the orbit has cycled without ever reaching 1, so the
// returned value agrees with the true iterate on the only question the pivot
// asks (whether it equals 0 or 1).
std::uint64_t iterate_fm(const SystemStateCodec& codec, std::uint64_t start, std::uint64_t k);

// --- gadget instances ---------------------------------------------------------

enum class Role : std::uint8_t { pivot, path_left, path_right, internal_left, internal_right };

struct NodeInput {
    Role role = Role::pivot;
    int l1 = 0, l2 = 0;  // labels in {0,1,2}
    std::optional<TuringMachine> machine;  // pivot and path nodes
    std::uint64_t a = 0, b = 0;            // pivot only
    std::uint64_t f = 0;                   // path nodes only
};

Bytes encode_node_input(const NodeInput& in);
std::optional<NodeInput> parse_node_input(const Bytes& b);

// Builds the full gadget: pivot with inputs (M, a, b), left/right paths of
// power-of-two lengths carrying the f-iterates, complete binary trees over
// both paths with horizontal same-level paths, and the mod-3 labels.
Configuration iter_instance(const TuringMachine& m, std::uint64_t a, std::uint64_t b, int len_l,
                            int len_r);

// Structural validity: gadget shape, labels, f-iteration consistency, and
// extremity values in {0,1}.
bool iter_minus_check(const Configuration& config);
// iter_minus_check plus: at least one extremity value is 0.
bool iter_check(const Configuration& config);

Language iter_language();
Language iter_minus_language();

// Radius-1 per-node validation of the gadget structure (best-effort local
// rule set; its soundness is established empirically by mutation testing).
LocalAlgorithm iter_minus_local_checks();

// The certificate-consuming algorithm: local checks everywhere; the pivot
// additionally reads its certificate as an integer k and rejects iff both
// k-step iterates from a and b equal 1.
LocalAlgorithm iter_pi1_algorithm(const SystemStateCodec& codec);

}  // namespace locver::iter
