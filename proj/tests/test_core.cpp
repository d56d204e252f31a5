#include <doctest.h>

#include <set>

#include "monogen/core.hpp"
#include "monogen/language.hpp"

using namespace monogen;

namespace {

std::set<int> arc(long long a, long long b, int n) {
    std::set<int> out;
    long long len = 1 + (((b - a) % n) + n) % n;
    for (long long t = 0; t < len; ++t) out.insert(static_cast<int>((((a + t) % n) + n) % n));
    return out;
}

std::set<int> as_set(VertexMask m) {
    auto v = mask_vertices(m);
    return {v.begin(), v.end()};
}

Complex k5() { return parse_complex("n=5; [0,2] [1,3] [2,4] [3,1]"); }

}  // namespace

TEST_CASE("interval endpoints") {
    auto i = Interval::from_endpoints(5, 2, 7);
    CHECK(i.start() == 5);
    CHECK(i.len() == 5);
    CHECK(Interval::from_endpoints(0, 5, 6).is_full());
    CHECK(Interval::from_endpoints(0, 5, 6).start() == 0);
    auto s = Interval::from_endpoints(3, 3, 6);
    CHECK(s.len() == 1);
    CHECK(s.vertices() == std::vector<int>{3});
    CHECK_THROWS_AS(Interval::from_endpoints(0, 1, 0), Error);
    CHECK(Interval::from_endpoints(4, 8, 5) == Interval::from_endpoints(1, 0, 5));
}

TEST_CASE("interval vertex sets match brute force") {
    for (int n = 1; n <= 9; ++n)
        for (int a = -n; a < 2 * n; ++a)
            for (int b = -n; b < 2 * n; ++b) {
                auto iv = Interval::from_endpoints(a, b, n);
                CHECK(as_set(iv.mask()) == arc(a, b, n));
                CHECK(static_cast<long long>(iv.len()) == 1 + (((b - a) % n) + n) % n);
            }
}

TEST_CASE("angle union") {
    auto r = angle_union(Interval::from_endpoints(0, 2, 5), Interval::from_endpoints(1, 3, 5));
    REQUIRE(r);
    CHECK(*r == Interval::from_endpoints(0, 3, 5));
    auto full = angle_union(Interval::from_endpoints(0, 4, 7), Interval::from_endpoints(1, 6, 7));
    REQUIRE(full);
    CHECK(full->is_full());
    CHECK_FALSE(angle_union(Interval::from_endpoints(0, 0, 5), Interval::from_endpoints(2, 2, 5)));
    CHECK_THROWS_AS(angle_union(Interval(5, 0, 2), Interval(6, 0, 2)), Error);
}

TEST_CASE("angle union agrees with a representative search") {
    for (int n = 1; n <= 8; ++n)
        for (int s1 = 0; s1 < n; ++s1)
            for (int l1 = 1; l1 <= n; ++l1)
                for (int s2 = 0; s2 < n; ++s2)
                    for (int l2 = 1; l2 <= n; ++l2) {
                        Interval I(n, l1 == n ? 0 : s1, l1), J(n, l2 == n ? 0 : s2, l2);
                        // all representatives a <= b <= c <= d < a + n with I = [a,c], J = [b,d]
                        std::optional<std::set<int>> expect;
                        for (int a = 0; a < n && !expect; ++a) {
                            if (as_set(Interval::from_endpoints(a, a + I.len() - 1, n).mask()) != as_set(I.mask()))
                                continue;
                            const int c = a + I.len() - 1;
                            for (int b = a; b <= c && !expect; ++b) {
                                if (as_set(Interval::from_endpoints(b, b + J.len() - 1, n).mask()) != as_set(J.mask()))
                                    continue;
                                const int d = b + J.len() - 1;
                                if (c <= d && d < a + n) expect = arc(a, d, n);
                            }
                        }
                        auto got = angle_union(I, J);
                        CHECK(got.has_value() == expect.has_value());
                        if (got && expect) {
                            CHECK(as_set(got->mask()) == *expect);
                            CHECK(as_set(got->mask()) == as_set(I.mask() | J.mask()));
                        }
                    }
}

TEST_CASE("complex parsing, normalization and membership") {
    auto k = k5();
    CHECK(k.size() == 4);
    CHECK(complex_member(k, Simplex::from_vertices(std::vector<int>{0, 1})));
    CHECK(complex_member(k, Simplex::from_vertices(std::vector<int>{1, 4})));
    CHECK_FALSE(complex_member(k, Simplex::from_vertices(std::vector<int>{0, 2, 4})));
    for (int v = 0; v < 5; ++v) CHECK(k.member(VertexMask{1} << v));
    CHECK(to_string(k) == "n=5; [0,2] [3,1] [1,3] [2,4]");
    auto messy = parse_complex("n=5; {0,1} [3,1] {2,3,4} [1,3] {2} [0,2]");
    CHECK(messy == k);
    CHECK(parse_complex(to_string(messy)) == messy);
    CHECK(to_string(Complex::full(4)) == "n=4; [0,3]");
    CHECK(to_string(parse_complex("n=5; {0,2,3} {0,2,4}")) == "n=5; {0,2,3} {0,2,4}");
    CHECK_THROWS_AS(parse_complex("n=5; [0,7]"), Error);
    CHECK_THROWS_AS(parse_complex("n=5; [0,2"), ParseError);
    CHECK_THROWS_AS(parse_complex("m=5;"), ParseError);
}

TEST_CASE("normalization is a fixpoint over random-like inputs") {
    for (int n = 2; n <= 7; ++n) {
        std::vector<VertexMask> masks;
        VertexMask x = 0x9e3779b97f4a7c15ULL;
        for (int t = 0; t < 6; ++t) {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            masks.push_back((x & full_mask(n)) | 1U);
        }
        auto k = Complex::from_masks(n, masks);
        CHECK(parse_complex(to_string(k)) == k);
        for (std::size_t a = 0; a < k.size(); ++a)
            for (std::size_t b = 0; b < k.size(); ++b)
                if (a != b) CHECK_FALSE(k.maximal()[a].subset_of(k.maximal()[b]));
    }
}

TEST_CASE("dihedral action") {
    Symmetry r = Symmetry::rotation(5);
    CHECK(word_to_string(r.apply_word(word_from_string("00011")), 5) == "00001");
    // r acts on 0^n through all of Mon_n
    auto m = mon(5);
    std::set<Word> orbit;
    Word w = 0;
    for (int t = 0; t < 10; ++t) {
        orbit.insert(w);
        w = r.apply_word(w);
    }
    CHECK(w == 0);
    CHECK(orbit == std::set<Word>(m.words().begin(), m.words().end()));
    CHECK(dihedral_apply(Symmetry(5, 3), k5()) == parse_complex("n=5; [1,4] [0,2] [4,1] [3,0]"));
}

TEST_CASE("dihedral group law") {
    for (int n = 1; n <= 6; ++n) {
        auto all = Symmetry::all(n);
        CHECK(all.size() == static_cast<std::size_t>(4 * n));
        const Word range = PartialSeq::full_word_mask(n);
        for (const auto& g : all)
            for (const auto& h : all) {
                auto gh = g.compose(h);
                for (Word w = 0; w <= range; ++w) CHECK(gh.apply_word(w) == g.apply_word(h.apply_word(w)));
                for (int v = 0; v < n; ++v) CHECK(gh.apply(v) == g.apply(h.apply(v)));
            }
        for (const auto& g : all) {
            CHECK(g.compose(g.inverse()) == Symmetry(n));
            for (Word w = 0; w <= range; ++w) {
                // output i is the input at g^{-1} i, possibly complemented
                Word y = g.apply_word(w);
                for (int i = 0; i < n; ++i) {
                    unsigned src = (w >> g.inverse().apply(i)) & 1U;
                    CHECK(((y >> i) & 1U) == (src ^ (g.flips_at(i) ? 1U : 0U)));
                }
            }
        }
    }
}

TEST_CASE("vertex insertion and deletion") {
    CHECK(insert_vertex(k5(), 4) == parse_complex("n=6; [0,2] [1,4] [2,5] [3,1]"));
    CHECK(delete_vertex(k5(), 1) == parse_complex("n=4; {0,1} {1,2,3} {0,2,3}"));
    CHECK(delete_vertex(Complex::full(5), 2) == Complex::full(4));
    CHECK_THROWS_AS(delete_vertex(Complex::full(1), 0), Error);
    CHECK_THROWS_AS(insert_vertex(k5(), 6), Error);
    auto k2 = parse_complex("n=5; {0,2,3,4} {0,1,2,3}");
    auto ins = insert_vertex(k2, 2);
    CHECK(ins.size() == 2);
    for (const auto& s : ins.maximal()) CHECK(s.size() == 5);
}

TEST_CASE("deletion inverts insertion on all complexes with up to three simplices") {
    for (int n = 1; n <= 5; ++n) {
        const VertexMask top = full_mask(n);
        for (VertexMask a = 1; a <= top; ++a)
            for (VertexMask b = a; b <= top; b += 3) {
                std::vector<VertexMask> masks{a, b, (a ^ b) | (VertexMask{1} << (n - 1))};
                auto k = Complex::from_masks(n, masks);
                for (int i = 0; i <= n; ++i) CHECK(delete_vertex(insert_vertex(k, i), i) == k);
            }
    }
}

TEST_CASE("interval structure is preserved") {
    auto k = k5();
    CHECK(is_interval_complex(k));
    CHECK(is_interval_complex(Complex::full(6)));
    CHECK_FALSE(is_interval_complex(parse_complex("n=5; [1,4] [0,2] [4,1] {0,2,3} {0,2,4}")));
    for (int i = 0; i <= 5; ++i) CHECK(is_interval_complex(insert_vertex(k, i)));
    for (const auto& g : Symmetry::all(5)) CHECK(is_interval_complex(g.apply(k)));
}

TEST_CASE("pushforward") {
    auto k = k5();
    std::vector<VertexMask> id{1, 2, 4, 8, 16};
    CHECK(pushforward(id, 5, k) == k);
    // bit deletion at the last position
    auto big = insert_vertex(k, 5);
    std::vector<VertexMask> drop{1, 2, 4, 8, 16, 0};
    CHECK(pushforward(drop, 5, big) == delete_vertex(big, 5));
    Symmetry g(5, 2, true);
    std::vector<VertexMask> sym;
    for (int j = 0; j < 5; ++j) sym.push_back(VertexMask{1} << g.apply(j));
    CHECK(pushforward(sym, 5, k) == g.apply(k));
    std::vector<VertexMask> bad{1, 2, 4, 8, 64};
    CHECK_THROWS_AS(pushforward(bad, 5, k), Error);
}
