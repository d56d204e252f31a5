#include "monogen/language.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

namespace monogen {

std::string word_to_string(Word w, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((w >> i) & 1U) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

Word word_from_string(std::string_view s) {
    if (s.empty() || s.size() > static_cast<std::size_t>(kMaxWordLength)) throw Error("word length must lie in [1, 32]");
    Word w = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') {
            w |= Word{1} << i;
        } else if (s[i] != '0') {
            throw ParseError("binary word expected", i);
        }
    }
    return w;
}

// ---------------------------------------------------------------- PartialSeq

PartialSeq::PartialSeq(int n, Word mask, Word bits) : n_(n), mask_(mask), bits_(bits & mask) {
    if (n < 0 || n > kMaxWordLength) throw Error("partial sequence length must lie in [0, 32]");
    if (mask & ~full_word_mask(n)) throw Error("partial sequence position out of range");
}

PartialSeq PartialSeq::single(int n, int pos, int bit) {
    if (pos < 0 || pos >= n) throw Error("position out of range");
    return PartialSeq(n, Word{1} << pos, bit ? (Word{1} << pos) : 0);
}

std::optional<int> PartialSeq::at(int pos) const {
    if (!defined(pos)) return std::nullopt;
    return static_cast<int>((bits_ >> pos) & 1U);
}

PartialSeq PartialSeq::with(int pos, int bit) const {
    if (pos < 0 || pos >= n_) throw Error("position out of range");
    const Word b = Word{1} << pos;
    return PartialSeq(n_, mask_ | b, bit ? (bits_ | b) : (bits_ & ~b));
}

int PartialSeq::size() const { return std::popcount(mask_); }

PartialSeq PartialSeq::unite(const PartialSeq& o) const {
    if (n_ != o.n_) throw Error("partial sequences of different lengths");
    if (!compatible(o)) throw Error("union of incompatible partial sequences");
    return PartialSeq(n_, mask_ | o.mask_, bits_ | o.bits_);
}

std::string to_string(const PartialSeq& p) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i = 0; i < p.n(); ++i) {
        if (!p.defined(i)) continue;
        if (!first) os << ',';
        os << i << ':' << *p.at(i);
        first = false;
    }
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------- Language

Language::Language(int n, std::vector<Word> words) : n_(n) {
    if (n < 1 || n > kMaxWordLength) throw Error("language length must lie in [1, 32]");
    if (words.empty()) throw Error("language must be nonempty");
    const Word range = PartialSeq::full_word_mask(n);
    for (Word w : words)
        if (w & ~range) throw Error("word longer than the language length");
    std::sort(words.begin(), words.end(),
              [n](Word a, Word b) { return word_to_string(a, n) < word_to_string(b, n); });
    words.erase(std::unique(words.begin(), words.end()), words.end());
    words_ = std::move(words);
}

bool Language::contains(Word w) const { return index_of(w) >= 0; }

int Language::index_of(Word w) const {
    auto it = std::find(words_.begin(), words_.end(), w);
    return it == words_.end() ? -1 : static_cast<int>(it - words_.begin());
}

Language mon(int n) {
    if (n < 1) throw Error("mon: n must be at least 1");
    std::vector<Word> words;
    for (int k = 0; k < n; ++k) {
        Word ones = 0;
        for (int t = n - k; t < n; ++t) ones |= Word{1} << t;  // 0^{n-k} 1^k
        words.push_back(ones);
        words.push_back(~ones & PartialSeq::full_word_mask(n));  // 1^{n-k} 0^k
    }
    return Language(n, std::move(words));
}

Language u(int n) {
    if (n < 1) throw Error("u: n must be at least 1");
    std::vector<Word> words;
    for (int i = 0; i < n; ++i) words.push_back(Word{1} << i);
    return Language(n, std::move(words));
}

std::vector<Word> extensions(const PartialSeq& p, const Language& l) {
    if (p.n() != l.n()) throw Error("extensions: length mismatch");
    std::vector<Word> out;
    for (Word w : l.words())
        if (p.matches(w)) out.push_back(w);
    return out;
}

bool has_extension(const PartialSeq& p, const Language& l) {
    if (p.n() != l.n()) throw Error("has_extension: length mismatch");
    return std::any_of(l.words().begin(), l.words().end(), [&](Word w) { return p.matches(w); });
}

std::optional<PartialSeq> close(const PartialSeq& p, const Language& l) {
    if (p.n() != l.n()) throw Error("close: length mismatch");
    Word all_and = ~Word{0}, all_or = 0;
    bool any = false;
    for (Word w : l.words()) {
        if (!p.matches(w)) continue;
        any = true;
        all_and &= w;
        all_or |= w;
    }
    if (!any) return std::nullopt;
    const Word range = PartialSeq::full_word_mask(l.n());
    const Word agree = ~(all_and ^ all_or) & range;
    return PartialSeq(l.n(), agree, all_and);
}

bool respects(const PartialSeq& r, const Rule& rule) {
    return !r.extends(rule.premise) || r.extends(rule.conclusion);
}

std::vector<Rule> rules_of(const Language& l) {
    const int n = l.n();
    if (n > 16) throw ResourceError("rules_of: enumeration limited to n <= 16");
    // A premise p forcing (i, v) is kept only if no premise with one position
    // fewer forces the same conclusion; forcing is monotone under extension,
    // so this yields exactly the domain-minimal premises.
    auto forces = [&](const PartialSeq& p, int i, int v) {
        auto c = close(p, l);
        return c && c->defined(i) && *c->at(i) == v;
    };
    std::vector<Rule> out;
    const Word range = PartialSeq::full_word_mask(n);
    for (Word mask = 0; mask <= range; ++mask) {
        // enumerate all bit assignments on mask
        for (Word bits = mask;; bits = (bits - 1) & mask) {
            PartialSeq p(n, mask, bits);
            auto c = close(p, l);
            if (c) {
                for (int i = 0; i < n; ++i) {
                    if (p.defined(i) || !c->defined(i)) continue;
                    const int v = *c->at(i);
                    bool minimal = true;
                    for (int j : mask_vertices(mask)) {
                        if (forces(p.restrict_to(range & ~(Word{1} << j)), i, v)) {
                            minimal = false;
                            break;
                        }
                    }
                    if (minimal) out.push_back({p, PartialSeq::single(n, i, v)});
                }
            }
            if (bits == 0) break;
        }
        if (mask == range) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool decomposes(VertexMask x, VertexMask y, const Language& l) {
    const int n = l.n();
    const VertexMask range = full_mask(n);
    if ((x | y) != range || (x & ~range) || (y & ~range)) throw Error("decomposes: X and Y must cover [0, n-1]");
    if (n > 24) throw ResourceError("decomposes: brute force limited to n <= 24");
    const Word wx = static_cast<Word>(x), wy = static_cast<Word>(y);
    const Word total = PartialSeq::full_word_mask(n);
    for (Word w = 0;; ++w) {
        if (!l.contains(w) && has_extension(PartialSeq(n, wx, w & wx), l) &&
            has_extension(PartialSeq(n, wy, w & wy), l))
            return false;
        if (w == total) break;
    }
    return true;
}

Language parse_language(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    std::vector<Word> words;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        const std::size_t line_start = offset;
        offset += line.size() + 1;
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        std::string t = line.substr(b, e - b + 1);
        if (n < 0) {
            if (t.rfind("n=", 0) != 0) throw ParseError("expected 'n=<int>' header", line_start + b);
            try {
                n = std::stoi(t.substr(2));
            } catch (const std::exception&) {
                throw ParseError("invalid length in header", line_start + b);
            }
            continue;
        }
        if (static_cast<int>(t.size()) != n) throw ParseError("word length differs from header", line_start + b);
        words.push_back(word_from_string(t));
    }
    if (n < 0) throw ParseError("missing 'n=<int>' header", 0);
    return Language(n, std::move(words));
}

std::string to_text(const Language& l) {
    std::ostringstream os;
    os << "n=" << l.n() << '\n';
    for (Word w : l.words()) os << word_to_string(w, l.n()) << '\n';
    return os.str();
}

Language language_from_selector(std::string_view selector) {
    auto arg = [&](std::size_t skip) {
        try {
            return std::stoi(std::string(selector.substr(skip)));
        } catch (const std::exception&) {
            throw ParseError("invalid language selector '" + std::string(selector) + "'", skip);
        }
    };
    if (selector.rfind("mon:", 0) == 0) return mon(arg(4));
    if (selector.rfind("u:", 0) == 0) return u(arg(2));
    if (selector.rfind("file:", 0) == 0) {
        std::ifstream in{std::string(selector.substr(5))};
        if (!in) throw Error("cannot open language file '" + std::string(selector.substr(5)) + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_language(ss.str());
    }
    throw ParseError("unknown language selector '" + std::string(selector) + "'", 0);
}

}  // namespace monogen
