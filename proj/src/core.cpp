#include "monogen/core.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace monogen {

namespace {

long long mod(long long a, long long n) {
    long long r = a % n;
    return r < 0 ? r + n : r;
}

void check_modulus(int n) {
    if (n < 1 || n > kMaxVertices) throw Error("modulus must lie in [1, 64], got " + std::to_string(n));
}

}  // namespace

std::vector<int> mask_vertices(VertexMask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

// ---------------------------------------------------------------- Interval

Interval::Interval(int n, int start, int len) : n_(n), start_(start), len_(len) {
    check_modulus(n);
    if (len < 1 || len > n) throw Error("interval length out of range");
    if (start < 0 || start >= n) throw Error("interval start out of range");
    if (len == n) start_ = 0;
}

Interval Interval::from_endpoints(long long a, long long b, int n) {
    if (n < 1) throw Error("modulus must be positive");
    return Interval(n, static_cast<int>(mod(a, n)), static_cast<int>(1 + mod(b - a, n)));
}

bool Interval::contains(int v) const {
    if (v < 0 || v >= n_) return false;
    return mod(v - start_, n_) < len_;
}

VertexMask Interval::mask() const {
    VertexMask m = 0;
    for (int t = 0; t < len_; ++t) m |= VertexMask{1} << ((start_ + t) % n_);
    return m;
}

std::vector<int> Interval::vertices() const { return mask_vertices(mask()); }

std::optional<Interval> angle_union(const Interval& i, const Interval& j) {
    if (i.n() != j.n()) throw Error("angle_union: moduli differ");
    const int n = i.n();
    // A full interval has n admissible left endpoints.
    auto starts = [n](const Interval& x) {
        std::vector<int> s;
        if (x.is_full()) {
            for (int a = 0; a < n; ++a) s.push_back(a);
        } else {
            s.push_back(x.start());
        }
        return s;
    };
    for (int a : starts(i)) {
        const long long c = a + i.len() - 1;
        for (int bs : starts(j)) {
            const long long b = a + mod(bs - a, n);
            const long long d = b + j.len() - 1;
            if (b <= c && c <= d && d < a + n) return Interval::from_endpoints(a, d, n);
        }
    }
    return std::nullopt;
}

std::optional<Interval> as_interval(VertexMask m, int n) {
    check_modulus(n);
    m &= full_mask(n);
    if (m == 0) return std::nullopt;
    if (m == full_mask(n)) return Interval(n, 0, n);
    int start = -1;
    for (int v = 0; v < n; ++v) {
        const int prev = (v + n - 1) % n;
        if (((m >> v) & 1U) && !((m >> prev) & 1U)) {
            if (start >= 0) return std::nullopt;
            start = v;
        }
    }
    if (start < 0) return std::nullopt;
    return Interval(n, start, std::popcount(m));
}

// ---------------------------------------------------------------- Simplex

Simplex::Simplex(VertexMask mask) : mask_(mask) {
    if (mask == 0) throw Error("simplex must be nonempty");
}

Simplex Simplex::from_vertices(std::span<const int> vertices) {
    VertexMask m = 0;
    for (int v : vertices) {
        if (v < 0 || v >= kMaxVertices) throw Error("vertex out of range: " + std::to_string(v));
        m |= VertexMask{1} << v;
    }
    return Simplex(m);
}

int Simplex::size() const { return std::popcount(mask_); }

std::strong_ordering Simplex::operator<=>(const Simplex& o) const {
    VertexMask a = mask_, b = o.mask_;
    while (a && b) {
        const int x = std::countr_zero(a), y = std::countr_zero(b);
        if (x != y) return x <=> y;
        a &= a - 1;
        b &= b - 1;
    }
    if (a) return std::strong_ordering::greater;
    if (b) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- Complex

Complex::Complex(int n, std::vector<Simplex> simplices) : n_(n) {
    check_modulus(n);
    const VertexMask range = full_mask(n);
    for (const auto& s : simplices) {
        if (s.mask() & ~range) throw Error("simplex vertex outside [0, n-1]");
    }
    std::sort(simplices.begin(), simplices.end(),
              [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
    for (const auto& s : simplices) {
        bool covered = std::any_of(maximal_.begin(), maximal_.end(),
                                   [&](const Simplex& m) { return s.subset_of(m); });
        if (!covered) maximal_.push_back(s);
    }
    std::sort(maximal_.begin(), maximal_.end());
}

Complex Complex::from_masks(int n, std::span<const VertexMask> masks) {
    std::vector<Simplex> s;
    for (auto m : masks) {
        if (m) s.emplace_back(m);
    }
    return Complex(n, std::move(s));
}

Complex Complex::from_intervals(int n, std::span<const Interval> intervals) {
    std::vector<Simplex> s;
    for (const auto& i : intervals) {
        if (i.n() != n) throw Error("interval modulus differs from complex");
        s.push_back(Simplex::from_interval(i));
    }
    return Complex(n, std::move(s));
}

Complex Complex::full(int n) {
    check_modulus(n);
    return Complex(n, {Simplex(full_mask(n))});
}

bool Complex::member(const Simplex& s) const {
    if (s.mask() & ~full_mask(n_)) throw Error("vertex outside the complex's vertex set");
    return std::any_of(maximal_.begin(), maximal_.end(), [&](const Simplex& m) { return s.subset_of(m); });
}

bool Complex::subcomplex_of(const Complex& o) const {
    if (n_ != o.n_) return false;
    return std::all_of(maximal_.begin(), maximal_.end(), [&](const Simplex& s) { return o.member(s); });
}

std::vector<int> Complex::star(int i) const {
    std::vector<int> out;
    for (std::size_t k = 0; k < maximal_.size(); ++k) {
        if (maximal_[k].contains(i)) out.push_back(static_cast<int>(k));
    }
    return out;
}

VertexMask Complex::support() const {
    VertexMask m = 0;
    for (const auto& s : maximal_) m |= s.mask();
    return m;
}

bool complex_member(const Complex& k, const Simplex& s) { return k.member(s); }

// ---------------------------------------------------------------- text form

std::string to_string(const Simplex& s, int n) {
    std::ostringstream os;
    if (auto iv = as_interval(s.mask(), n)) {
        os << '[' << iv->start() << ',' << iv->end() << ']';
        return os.str();
    }
    os << '{';
    bool first = true;
    for (int v : s.vertices()) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

std::string to_string(const Complex& k) {
    std::ostringstream os;
    os << "n=" << k.n() << ';';
    for (const auto& s : k.maximal()) os << ' ' << to_string(s, k.n());
    return os.str();
}

namespace {

class Cursor {
public:
    Cursor(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    void expect(std::string_view word) {
        skip_ws();
        if (text_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
        pos_ += word.size();
    }
    long long integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_ || (pos_ == start + 1 && text_[start] == '-')) {
            pos_ = start;
            fail("expected integer");
        }
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, base_ + pos_); }
    std::size_t pos() const { return pos_; }

private:
    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

Simplex read_simplex(Cursor& c, int n) {
    const char open = c.peek();
    if (open == '[') {
        c.expect('[');
        long long a = c.integer();
        c.expect(',');
        long long b = c.integer();
        c.expect(']');
        if (a < 0 || a >= n || b < 0 || b >= n) c.fail("interval endpoint outside [0, n-1]");
        return Simplex::from_interval(Interval::from_endpoints(a, b, n));
    }
    if (open == '{') {
        c.expect('{');
        std::vector<int> vs;
        if (c.peek() != '}') {
            for (;;) {
                long long v = c.integer();
                if (v < 0 || v >= n) c.fail("vertex outside [0, n-1]");
                vs.push_back(static_cast<int>(v));
                if (c.peek() == ',') {
                    c.expect(',');
                    continue;
                }
                break;
            }
        }
        c.expect('}');
        if (vs.empty()) c.fail("empty simplex");
        return Simplex::from_vertices(vs);
    }
    c.fail("expected '[' or '{'");
}

}  // namespace

Simplex parse_simplex(std::string_view text, int n) {
    Cursor c(text);
    Simplex s = read_simplex(c, n);
    if (!c.done()) c.fail("trailing characters after simplex");
    return s;
}

Complex parse_complex(std::string_view text) {
    Cursor c(text);
    c.expect("n=");
    long long n = c.integer();
    if (n < 1 || n > kMaxVertices) c.fail("n must lie in [1, 64]");
    c.expect(';');
    std::vector<Simplex> simplices;
    while (!c.done()) simplices.push_back(read_simplex(c, static_cast<int>(n)));
    return Complex(static_cast<int>(n), std::move(simplices));
}

// ---------------------------------------------------------------- Symmetry

Symmetry::Symmetry(int n, int shift, bool reflect) : n_(n), shift_(0), reflect_(reflect) {
    check_modulus(n);
    shift_ = static_cast<int>(mod(shift, 2LL * n));
}

std::vector<Symmetry> Symmetry::all(int n) {
    std::vector<Symmetry> out;
    for (int r = 0; r < 2; ++r)
        for (int k = 0; k < 2 * n; ++k) out.emplace_back(n, k, r == 1);
    return out;
}

std::vector<Symmetry> Symmetry::vertex_group(int n) {
    std::vector<Symmetry> out;
    for (int r = 0; r < 2; ++r)
        for (int k = 0; k < n; ++k) out.emplace_back(n, k, r == 1);
    return out;
}

Symmetry Symmetry::compose(const Symmetry& inner) const {
    if (inner.n_ != n_) throw Error("symmetry moduli differ");
    // r^a s^e r^b s^f = r^(a +/- b) s^(e xor f)
    const int b = reflect_ ? -inner.shift_ : inner.shift_;
    return Symmetry(n_, shift_ + b, reflect_ != inner.reflect_);
}

Symmetry Symmetry::inverse() const {
    return reflect_ ? *this : Symmetry(n_, -shift_, false);
}

int Symmetry::apply(int vertex) const {
    if (vertex < 0 || vertex >= n_) throw Error("vertex outside [0, n-1]");
    const int base = reflect_ ? n_ - 1 - vertex : vertex;
    return static_cast<int>(mod(base + shift_, n_));
}

VertexMask Symmetry::apply(VertexMask m) const {
    VertexMask out = 0;
    for (int v : mask_vertices(m)) out |= VertexMask{1} << apply(v);
    return out;
}

Interval Symmetry::apply(const Interval& i) const {
    if (i.n() != n_) throw Error("symmetry and interval moduli differ");
    if (i.is_full()) return i;
    const int a = apply(i.start()), b = apply(i.end());
    return reflect_ ? Interval::from_endpoints(b, a, n_) : Interval::from_endpoints(a, b, n_);
}

Complex Symmetry::apply(const Complex& k) const {
    if (k.n() != n_) throw Error("symmetry and complex moduli differ");
    std::vector<Simplex> out;
    for (const auto& s : k.maximal()) out.push_back(apply(s));
    return Complex(n_, std::move(out));
}

Word Symmetry::apply_word(Word w) const {
    if (n_ > kMaxWordLength) throw Error("word length exceeds 32");
    Word x = w;
    if (reflect_) {
        x = 0;
        for (int i = 0; i < n_; ++i)
            if ((w >> i) & 1U) x |= Word{1} << (n_ - 1 - i);
    }
    // (r^k x)_i = y_{i-k} with y the anti-periodic extension y_{t+n} = ~y_t.
    Word out = 0;
    for (int i = 0; i < n_; ++i) {
        const long long t = i - shift_;
        const long long q = (t >= 0) ? t / n_ : -((-t + n_ - 1) / n_);
        const long long r = t - q * n_;
        unsigned bit = (x >> r) & 1U;
        if (q & 1) bit ^= 1U;
        if (bit) out |= Word{1} << i;
    }
    return out;
}

bool Symmetry::flips_at(int output_position) const { return (apply_word(0) >> output_position) & 1U; }

Complex dihedral_apply(const Symmetry& g, const Complex& k) { return g.apply(k); }

// ---------------------------------------------------------------- insertion / deletion

VertexMask insert_vertex(VertexMask s, int n, int i) {
    if (i < 0 || i > n) throw Error("insertion index outside [0, n]");
    if (n + 1 > kMaxVertices) throw Error("insertion exceeds 64 vertices");
    const VertexMask low = s & ((VertexMask{1} << i) - 1);
    const VertexMask high = (s & ~((VertexMask{1} << i) - 1)) << 1;
    VertexMask out = low | high;
    const int before = static_cast<int>(mod(i - 1, n)), at = i % n;
    if (((s >> before) & 1U) || ((s >> at) & 1U)) out |= VertexMask{1} << i;
    return out;
}

VertexMask delete_vertex(VertexMask s, int i) {
    const VertexMask low = s & ((VertexMask{1} << i) - 1);
    const VertexMask high = (i + 1 >= 64) ? 0 : (s >> (i + 1)) << i;
    return low | high;
}

Complex insert_vertex(const Complex& k, int i) {
    if (i < 0 || i > k.n()) throw Error("insertion index outside [0, n]");
    std::vector<VertexMask> masks;
    for (const auto& s : k.maximal()) masks.push_back(insert_vertex(s.mask(), k.n(), i));
    return Complex::from_masks(k.n() + 1, masks);
}

Complex delete_vertex(const Complex& k, int i) {
    if (k.n() < 2) throw Error("cannot delete a vertex from a complex over one vertex");
    if (i < 0 || i >= k.n()) throw Error("deletion index outside [0, n-1]");
    std::vector<VertexMask> masks;
    for (const auto& s : k.maximal()) masks.push_back(delete_vertex(s.mask(), i));
    return Complex::from_masks(k.n() - 1, masks);
}

bool is_interval_complex(const Complex& k) {
    return std::all_of(k.maximal().begin(), k.maximal().end(),
                       [&](const Simplex& s) { return as_interval(s.mask(), k.n()).has_value(); });
}

Complex pushforward(std::span<const VertexMask> readers, int target_n, const Complex& k) {
    if (static_cast<int>(readers.size()) != k.n()) throw Error("pushforward: reader sets must cover the source vertices");
    for (auto r : readers) {
        if (r & ~full_mask(target_n)) throw Error("pushforward: reader set references an output outside the target");
    }
    std::vector<VertexMask> out;
    for (const auto& s : k.maximal()) {
        VertexMask m = 0;
        for (int j : s.vertices()) m |= readers[j];
        out.push_back(m);
    }
    return Complex::from_masks(target_n, out);
}

}  // namespace monogen
