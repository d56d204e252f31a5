#pragma once

// Binary languages given as explicit word sets, partial sequences and rules.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monogen/core.hpp"

namespace monogen {

std::string word_to_string(Word w, int n);
Word word_from_string(std::string_view s);

/// Partial assignment of bits to positions in [0, n-1].
class PartialSeq {
public:
    PartialSeq() = default;
    explicit PartialSeq(int n, Word mask = 0, Word bits = 0);
    static PartialSeq total(int n, Word w) { return PartialSeq(n, full_word_mask(n), w); }
    static PartialSeq single(int n, int pos, int bit);
    static Word full_word_mask(int n) { return n >= 32 ? ~Word{0} : ((Word{1} << n) - 1); }

    int n() const { return n_; }
    Word mask() const { return mask_; }
    Word bits() const { return bits_; }
    bool defined(int pos) const { return (mask_ >> pos) & 1U; }
    std::optional<int> at(int pos) const;
    PartialSeq with(int pos, int bit) const;
    PartialSeq restrict_to(Word positions) const { return PartialSeq(n_, mask_ & positions, bits_ & positions); }
    int size() const;

    bool compatible(const PartialSeq& o) const { return ((bits_ ^ o.bits_) & mask_ & o.mask_) == 0; }
    /// Least common extension; requires compatible().
    PartialSeq unite(const PartialSeq& o) const;
    bool extends(const PartialSeq& o) const { return (o.mask_ & ~mask_) == 0 && ((bits_ ^ o.bits_) & o.mask_) == 0; }
    bool matches(Word w) const { return ((w ^ bits_) & mask_) == 0; }

    bool operator==(const PartialSeq&) const = default;
    auto operator<=>(const PartialSeq&) const = default;

private:
    int n_ = 0;
    Word mask_ = 0;
    Word bits_ = 0;
};

/// `{pos:bit,...}` in ascending position order.
std::string to_string(const PartialSeq& p);

class Language {
public:
    /// Words are deduplicated and kept in lexicographic order of their strings.
    Language(int n, std::vector<Word> words);

    int n() const { return n_; }
    const std::vector<Word>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    bool contains(Word w) const;
    /// Position of w in words(), or -1.
    int index_of(Word w) const;

    bool operator==(const Language&) const = default;

private:
    int n_;
    std::vector<Word> words_;
};

Language mon(int n);
Language u(int n);

std::vector<Word> extensions(const PartialSeq& p, const Language& l);
bool has_extension(const PartialSeq& p, const Language& l);
/// Positions on which every extension agrees; absent when there is none.
std::optional<PartialSeq> close(const PartialSeq& p, const Language& l);

struct Rule {
    PartialSeq premise;
    PartialSeq conclusion;
    bool operator==(const Rule&) const = default;
    auto operator<=>(const Rule&) const = default;
};

bool respects(const PartialSeq& r, const Rule& rule);
/// Domain-minimal rules with single-position conclusions; a partial sequence
/// respects all of them iff it has an extension in `l`.
std::vector<Rule> rules_of(const Language& l);

/// Brute force over all 2^n words. Requires X u Y = [0, n-1].
bool decomposes(VertexMask x, VertexMask y, const Language& l);

/// `n=<int>` followed by one binary word per line.
Language parse_language(std::string_view text);
std::string to_text(const Language& l);
/// `mon:<n>`, `u:<n>` or `file:<path>`.
Language language_from_selector(std::string_view selector);

}  // namespace monogen
