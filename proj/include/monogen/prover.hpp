#pragma once

// Saturation prover for the constraint system f(alpha) >= p over canonical
// generators (one input per maximal simplex, input alphabet = L), with
// replayable derivation traces.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monogen/core.hpp"
#include "monogen/genfunc.hpp"
#include "monogen/language.hpp"

namespace monogen {

constexpr int kMaxProverInputs = 32;
constexpr int kMaxProverWords = 255;

/// Partial map from maximal simplices (by index in K.maximal()) to word indices of L.
struct InputAssignment {
    std::uint32_t mask = 0;
    std::array<std::uint8_t, kMaxProverInputs> vals{};

    static InputAssignment constant(int inputs, int word);
    bool defined(int s) const { return (mask >> s) & 1U; }
    int size() const;
    bool compatible(const InputAssignment& o) const;
    InputAssignment unite(const InputAssignment& o) const;
    InputAssignment restrict_to(std::uint32_t keep) const;
    InputAssignment with(int s, int word) const;
    /// True iff every entry of `o` is also in *this.
    bool extends(const InputAssignment& o) const;
    bool operator==(const InputAssignment& o) const;
    std::size_t hash() const;
};

enum class RuleTag { Axiom, Restrict, Join, Close };
std::string_view rule_name(RuleTag r);

struct TraceNode {
    int id = 0;
    RuleTag rule = RuleTag::Axiom;
    std::vector<int> parents;
    InputAssignment in;
    PartialSeq out;
};

struct Trace {
    enum class End { Conflict, Saturated };
    std::vector<TraceNode> nodes;
    End end = End::Saturated;
    int conflict_a = -1;
    int conflict_b = -1;
    int conflict_cell = -1;
    std::size_t count = 0;
};

/// Bit-exact text form; simplices and words are written through K and L.
std::string to_text(const Trace& t, const Complex& k, const Language& l);
Trace parse_trace(std::string_view text, const Complex& k, const Language& l);

struct CheckResult {
    bool ok = false;
    std::optional<int> failing_id;
    std::string message;
};

/// Replays every node and the terminal conflict independently of the prover.
CheckResult check_trace(const Trace& t, const Complex& k, const Language& l);
CheckResult check_trace(std::string_view text, const Complex& k, const Language& l);

/// Maximal simplices of K containing i, as a bit set over K.maximal() indices.
std::uint32_t prover_window_mask(const Complex& k, int i);
std::vector<Simplex> prover_window(const Complex& k, int i);

struct Budget {
    std::size_t max_constraints = 1'000'000;
    /// Largest |dom alpha| retained; negative means unbounded.
    int max_input_domain = -1;
};

struct ProverOptions {
    Budget budget;
    bool subsumption = true;
    /// Also keeps joined multi-position constraints and joins them further.
    bool full_join = false;
    /// Retain every node so callers can inspect derived constraints.
    bool keep_all = false;
};

struct Verdict {
    enum class Kind { Conflict, Saturated, BudgetExhausted };
    Kind kind = Kind::Saturated;
    /// Conflict: pruned to ancestors of the conflicting pair. Saturated with
    /// keep_all: every node created.
    Trace trace;
    std::size_t count = 0;
    std::string limits;
};

std::string_view verdict_name(Verdict::Kind k);

Verdict saturate(const Complex& k, const Language& l, const ProverOptions& options = {});

/// Builds derivations rule by rule, enforcing each rule's side conditions.
class DerivationBuilder {
public:
    DerivationBuilder(Complex k, Language l);

    int axiom(Word w);
    int restrict_to(int node, int cell);
    int join(int a, int b);
    int close(int node);
    /// Records the terminal conflict; throws if the pair does not conflict.
    void conflict(int a, int b, int cell);

    const TraceNode& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
    std::optional<int> value(int id, int cell) const { return node(id).out.at(cell); }
    const Complex& complex() const { return k_; }
    const Language& language() const { return l_; }
    std::size_t size() const { return nodes_.size(); }

    /// Ancestors of the conflicting pair, renumbered in creation order.
    Trace trace() const;

private:
    int push(RuleTag r, std::vector<int> parents, InputAssignment in, PartialSeq out);

    Complex k_;
    Language l_;
    std::vector<std::uint32_t> star_;
    std::vector<TraceNode> nodes_;
    int ca_ = -1, cb_ = -1, cell_ = -1;
};

/// Maps prover inputs (words at maximal simplices) onto the inputs of a concrete function.
struct InputAdapter {
    /// source[j]: index of the maximal simplex feeding input j of f.
    std::vector<int> source;
    /// projection[j][w]: value of input j when its source carries word index w.
    std::vector<std::vector<int>> projection;
};

struct Witness {
    GenFunction f;
    Complex k;
    Language l;
    InputAdapter adapter;
};

/// Input j reads the bits of the source word at positions[j], first most significant.
Witness positional_witness(const GenFunction& f, const Complex& k, const Language& l,
                           const std::vector<std::vector<int>>& positions);
/// Every input of f is word-valued over exactly L and reads the word unchanged.
Witness canonical_witness(const GenFunction& f, const Complex& k, const Language& l);
/// Input j of f reads, from its source word w, its value in the first preimage of w
/// (mixed-radix order). Requires L to be contained in the image of f.
Witness preimage_witness(const GenFunction& f, const Complex& k, const Language& l);
/// Witness for lift_insert(w.f, i) over ins_i(w.k) and Mon_{n+1}; requires w.l = Mon_n.
Witness lift_witness(const Witness& w, int i);

/// Input values of f for a total prover assignment.
InputValues adapt(const Witness& w, const InputAssignment& x);

struct AuditReport {
    bool ok = false;
    Verdict verdict;
    std::size_t checked = 0;
    std::string failure;
};

/// Saturates K, L and checks the diagonal property and every derived
/// constraint against the concrete function, exhaustively.
AuditReport soundness_audit(const Witness& w, const ProverOptions& options = {});

}  // namespace monogen
