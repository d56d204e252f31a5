#pragma once

// Intervals on Z/nZ, simplicial complexes over I_n = {0, ..., n-1},
// the dihedral action, and vertex insertion/deletion.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace monogen {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Thrown when an exhaustive computation would exceed its configured bound.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Set of vertices in I_n, bit v set iff v is a member. Supports n <= 64.
using VertexMask = std::uint64_t;
/// Binary string of length n <= 32, bit i holds position i.
using Word = std::uint32_t;

constexpr int kMaxVertices = 64;
constexpr int kMaxWordLength = 32;

inline VertexMask full_mask(int n) {
    return n >= 64 ? ~VertexMask{0} : ((VertexMask{1} << n) - 1);
}

std::vector<int> mask_vertices(VertexMask m);

/// Arc of consecutive residues of Z/nZ, stored as (start, length).
/// The full set always has start 0.
class Interval {
public:
    Interval(int n, int start, int len);

    /// The arc from a to b: start a mod n, size 1 + ((b - a) mod n).
    static Interval from_endpoints(long long a, long long b, int n);

    int n() const { return n_; }
    int start() const { return start_; }
    int len() const { return len_; }
    int end() const { return (start_ + len_ - 1) % n_; }
    bool is_full() const { return len_ == n_; }
    bool contains(int v) const;
    VertexMask mask() const;
    std::vector<int> vertices() const;

    bool operator==(const Interval&) const = default;

private:
    int n_;
    int start_;
    int len_;
};

/// Returns the arc [a,d] when I = [a,c] and J = [b,d] with a <= b <= c <= d < a+n
/// for some choice of representatives; its vertex set is I u J.
std::optional<Interval> angle_union(const Interval& i, const Interval& j);

/// Returns the interval whose vertex set is `m`, if `m` is a nonempty arc of Z/nZ.
std::optional<Interval> as_interval(VertexMask m, int n);

class Simplex {
public:
    explicit Simplex(VertexMask mask);
    static Simplex from_vertices(std::span<const int> vertices);
    static Simplex from_interval(const Interval& i) { return Simplex(i.mask()); }

    VertexMask mask() const { return mask_; }
    std::vector<int> vertices() const { return mask_vertices(mask_); }
    int size() const;
    bool contains(int v) const { return v >= 0 && v < 64 && ((mask_ >> v) & 1U); }
    bool subset_of(const Simplex& o) const { return (mask_ & ~o.mask_) == 0; }

    bool operator==(const Simplex&) const = default;
    /// Lexicographic order on the ascending vertex lists.
    std::strong_ordering operator<=>(const Simplex& o) const;

private:
    VertexMask mask_;
};

/// Simplicial complex over I_n presented by its maximal simplices. Always
/// normalized: deduplicated, no member contained in another, sorted.
class Complex {
public:
    Complex() = default;
    Complex(int n, std::vector<Simplex> simplices);
    static Complex from_masks(int n, std::span<const VertexMask> masks);
    static Complex from_intervals(int n, std::span<const Interval> intervals);
    /// The complex <I_n>.
    static Complex full(int n);

    int n() const { return n_; }
    const std::vector<Simplex>& maximal() const { return maximal_; }
    std::size_t size() const { return maximal_.size(); }

    /// True iff `s` is contained in some maximal simplex.
    bool member(const Simplex& s) const;
    bool member(VertexMask m) const { return member(Simplex(m)); }
    /// True iff every maximal simplex of *this belongs to `o`.
    bool subcomplex_of(const Complex& o) const;
    /// Indices of the maximal simplices containing vertex i.
    std::vector<int> star(int i) const;
    /// Vertices lying in at least one simplex.
    VertexMask support() const;

    bool operator==(const Complex&) const = default;
    auto operator<=>(const Complex& o) const {
        if (auto c = n_ <=> o.n_; c != 0) return c;
        return maximal_ <=> o.maximal_;
    }

private:
    int n_ = 0;
    std::vector<Simplex> maximal_;
};

bool complex_member(const Complex& k, const Simplex& s);

/// Text form `n=<int>; <simplex> ...` where a simplex is `[a,b]` or `{v1,v2,...}`.
Complex parse_complex(std::string_view text);
std::string to_string(const Complex& k);
std::string to_string(const Simplex& s, int n);
Simplex parse_simplex(std::string_view text, int n);

/// Element r^shift s^reflect of D_{2n}, shift taken modulo 2n.
///
/// On vertices: i -> (reflect ? n-1-i : i) + shift (mod n).
/// On words: s reverses, r maps x_0...x_{n-1} to ~x_{n-1} x_0 ... x_{n-2}.
class Symmetry {
public:
    Symmetry(int n, int shift = 0, bool reflect = false);
    static Symmetry rotation(int n) { return Symmetry(n, 1, false); }
    static Symmetry reflection(int n) { return Symmetry(n, 0, true); }
    /// All 4n elements (n >= 1).
    static std::vector<Symmetry> all(int n);
    /// The 2n elements acting distinctly on vertices (shift < n).
    static std::vector<Symmetry> vertex_group(int n);

    int n() const { return n_; }
    int shift() const { return shift_; }
    bool reflect() const { return reflect_; }

    Symmetry compose(const Symmetry& inner) const;  // (*this) after inner
    Symmetry inverse() const;

    int apply(int vertex) const;
    VertexMask apply(VertexMask m) const;
    Simplex apply(const Simplex& s) const { return Simplex(apply(s.mask())); }
    Interval apply(const Interval& i) const;
    Complex apply(const Complex& k) const;
    Word apply_word(Word w) const;
    /// Whether (g.x)_i is the complement of x_{g^{-1} i}.
    bool flips_at(int output_position) const;

    bool operator==(const Symmetry&) const = default;

private:
    int n_;
    int shift_;
    bool reflect_;
};

Complex dihedral_apply(const Symmetry& g, const Complex& k);

Complex insert_vertex(const Complex& k, int i);
Complex delete_vertex(const Complex& k, int i);
VertexMask insert_vertex(VertexMask s, int n, int i);
VertexMask delete_vertex(VertexMask s, int i);

bool is_interval_complex(const Complex& k);

/// Complex over target_n induced by the sets U_{j in S} readers[j], S maximal in k.
Complex pushforward(std::span<const VertexMask> readers, int target_n, const Complex& k);

}  // namespace monogen
