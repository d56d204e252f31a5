#pragma once

// Generating functions stored as per-output-cell local tables, their
// visibility diagrams and communication complexes, and concrete generators.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monogen/core.hpp"
#include "monogen/language.hpp"

namespace monogen {

constexpr std::size_t kDefaultInputBound = std::size_t{1} << 20;

/// Value alphabet of an input cell. Values are indices: a bit, a pair x0x1
/// encoded as 2*x0 + x1, or the position of a word in language().words().
class Alphabet {
public:
    enum class Kind { Bit, Pair, Words };

    static Alphabet bit() { return Alphabet(Kind::Bit, std::nullopt); }
    static Alphabet pair() { return Alphabet(Kind::Pair, std::nullopt); }
    static Alphabet words(Language l) { return Alphabet(Kind::Words, std::move(l)); }

    Kind kind() const { return kind_; }
    int size() const;
    const Language& language() const;
    /// `bit`, `pair`, `mon:<n>`, `u:<n>` or `words:<w>/<w>/...`.
    std::string name() const;
    static Alphabet parse(std::string_view text);

    bool operator==(const Alphabet&) const = default;

private:
    Alphabet(Kind k, std::optional<Language> l) : kind_(k), lang_(std::move(l)) {}
    Kind kind_;
    std::optional<Language> lang_;
};

struct InputCell {
    std::string name;
    Alphabet alphabet;
    bool operator==(const InputCell&) const = default;
};

/// Local rule of one output cell. table[idx] is the output bit for the window
/// assignment whose mixed-radix index is idx, first window cell most significant.
struct OutputCell {
    std::vector<int> window;
    std::vector<std::uint8_t> table;
    bool operator==(const OutputCell&) const = default;
};

/// Full input assignment: one value index per input cell.
using InputValues = std::vector<int>;

class GenFunction {
public:
    GenFunction(int out_n, std::vector<InputCell> inputs, std::vector<OutputCell> cells);

    /// Builds the tables by evaluating `rule(i, x)` on every assignment of the
    /// declared window of cell i, with the remaining inputs set to 0.
    static GenFunction compile(int out_n, std::vector<InputCell> inputs, std::vector<std::vector<int>> windows,
                               const std::function<int(int, const InputValues&)>& rule);

    int out_n() const { return out_n_; }
    const std::vector<InputCell>& inputs() const { return inputs_; }
    const std::vector<OutputCell>& cells() const { return cells_; }
    int input_index(std::string_view name) const;

    int evaluate_cell(int i, std::span<const int> x) const;
    Word evaluate(std::span<const int> x) const;

    /// Number of total input assignments, or absent on overflow past `bound`.
    std::optional<std::size_t> input_space_size(std::size_t bound = kDefaultInputBound) const;
    /// Calls `visit` on every total input assignment in mixed-radix order.
    void for_each_input(const std::function<void(const InputValues&)>& visit,
                        std::size_t bound = kDefaultInputBound) const;

    bool operator==(const GenFunction&) const = default;

private:
    int out_n_;
    std::vector<InputCell> inputs_;
    std::vector<OutputCell> cells_;
};

/// rows[i] has bit j set iff input j is essential for output cell i.
struct VisibilityDiagram {
    int out_n = 0;
    int in_n = 0;
    std::vector<std::uint64_t> rows;

    bool at(int i, int j) const { return (rows[i] >> j) & 1U; }
    /// W_f(i) as input indices.
    std::vector<int> window(int i) const;
    /// W^f(j) as a set of output cells.
    VertexMask readers(int j) const;
    bool operator==(const VisibilityDiagram&) const = default;
};

VisibilityDiagram essential_windows(const GenFunction& f, std::size_t bound = kDefaultInputBound);
Complex comm_complex(const GenFunction& f, std::size_t bound = kDefaultInputBound);
std::vector<Word> image_words(const GenFunction& f, std::size_t bound = kDefaultInputBound);
Language image(const GenFunction& f, std::size_t bound = kDefaultInputBound);
bool generates(const GenFunction& f, const Language& l, const Complex& k, std::size_t bound = kDefaultInputBound);

/// `k5`, `k7` or `k8`; k8 has four pair-valued inputs ab, cd, ef, gh.
GenFunction builtin(std::string_view name);
/// Replaces every pair-valued input xy by two bit inputs x and y.
GenFunction split_pairs(const GenFunction& f);
GenFunction identity(int n);
GenFunction k2_generator(int n, int a, int b);
/// Generator of Mon_{n+1} obtained by inserting a cell at position i in [0, n].
GenFunction lift_insert(const GenFunction& f, int i);
/// x -> g . f(x); generates g . image(f) within g . K_f.
GenFunction transport(const Symmetry& g, const GenFunction& f);

/// Bounded check of lift_insert's precondition; returns a word of image(f)
/// outside Mon_n, or absent when image(f) = Mon_n.
std::optional<Word> mon_precondition_witness(const GenFunction& f);

std::string to_text(const GenFunction& f);
GenFunction parse_function(std::string_view text);
/// `builtin:<name>`, `identity:<n>`, `k2:<n>,<a>,<b>` or `file:<path>`.
GenFunction function_from_selector(std::string_view selector);

}  // namespace monogen
