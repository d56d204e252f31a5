#include <doctest.h>

#include <algorithm>
#include <set>

#include "monogen/analysis.hpp"
#include "monogen/render.hpp"

using namespace monogen;

namespace {

Complex k5c() { return parse_complex("n=5; [0,2] [1,3] [2,4] [3,1]"); }

VertexMask arc(int a, int b, int n) {
    VertexMask m = 0;
    for (int t = a;; ++t) {
        m |= VertexMask{1} << (((t % n) + n) % n);
        if (((t - b) % n + n) % n == 0) break;
    }
    return m;
}

// vertex map x -> (reflect ? -x : x) + shift, done by hand
VertexMask move(VertexMask m, int n, int shift, bool reflect) {
    VertexMask out = 0;
    for (int v = 0; v < n; ++v)
        if ((m >> v) & 1U) {
            const int w = ((reflect ? n - 1 - v : v) + shift) % n;
            out |= VertexMask{1} << w;
        }
    return out;
}

std::vector<VertexMask> sorted_masks(const Complex& k) {
    std::vector<VertexMask> v;
    for (const auto& s : k.maximal()) v.push_back(s.mask());
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<VertexMask> orbit_key(const std::vector<VertexMask>& ms, int n) {
    std::vector<VertexMask> best;
    for (int r = 0; r < 2; ++r)
        for (int s = 0; s < n; ++s) {
            std::vector<VertexMask> v;
            for (auto m : ms) v.push_back(move(m, n, s, r == 1));
            std::sort(v.begin(), v.end());
            if (best.empty() || v < best) best = v;
        }
    return best;
}

}  // namespace

TEST_CASE("family constructors") {
    CHECK(family_complex(k5_id(7, 3, 5)) == parse_complex("n=7; [1,6] [0,4] [6,2] [4,0]"));
    const auto k8 = family_complex(k8_id(9, {2, 4, 6, 8}));
    CHECK(k8 == parse_complex("n=9; [8,5] [6,3] [4,1] [2,7]"));
    std::multiset<int> sizes;
    for (const auto& s : k8.maximal()) sizes.insert(s.size());
    CHECK(sizes == std::multiset<int>{6, 7, 7, 7});
    const VertexMask full = full_mask(5);
    const VertexMask k2[2] = {full & ~VertexMask{2}, full & ~VertexMask{16}};
    CHECK(family_complex(k2_id(5, 1, 4)) == Complex::from_masks(5, k2));
    CHECK_THROWS_AS(family_complex(k5_id(7, 1, 5)), Error);
    CHECK_THROWS_AS(family_complex(k8_id(9, {0, 1, 4, 6})), Error);
    CHECK_THROWS_AS(family_complex(k8_id(9, {0, 2, 4, 8})), Error);
    CHECK(family_complex(k6_id()).size() == 6);
    CHECK(family_complex(k7_id()) == parse_complex("n=7; [0,4] [1,5] [2,6] [4,1] [5,2]"));
}

TEST_CASE("family definitions agree with the insertion schedules") {
    for (int n = 5; n <= 10; ++n)
        for (int i = 2; i < n - 1; ++i)
            for (int j = i + 1; j < n - 1; ++j) CHECK(family_complex(k5_id(n, i, j)) == k5_family_by_insertions(n, i, j));
    for (int n = 8; n <= 10; ++n)
        for (int a0 = 0; a0 < n; ++a0)
            for (int a1 = a0 + 2; a1 <= a0 + n - 6; ++a1)
                for (int a2 = a1 + 2; a2 <= a0 + n - 4; ++a2)
                    for (int a3 = a2 + 2; a3 <= a0 + n - 2; ++a3)
                        CHECK(family_complex(k8_id(n, {a0, a1, a2, a3})) ==
                              k8_family_by_insertions(n, {a0, a1, a2, a3}));
}

TEST_CASE("K5 family members are pairwise incomparable") {
    for (int n = 5; n <= 9; ++n) {
        std::vector<Complex> ms;
        for (int i = 2; i < n - 1; ++i)
            for (int j = i + 1; j < n - 1; ++j) ms.push_back(family_complex(k5_id(n, i, j)));
        for (std::size_t x = 0; x < ms.size(); ++x)
            for (std::size_t y = 0; y < ms.size(); ++y)
                if (x != y) CHECK_FALSE(ms[x].subcomplex_of(ms[y]));
    }
}

TEST_CASE("family generators generate within their complexes") {
    for (const auto& id : {k2_id(5, 1, 4), k5_id(5, 2, 3), k5_id(7, 3, 5, 2, true), k7_id(), k7_id(3, true, {2}),
                           k8_id(8, {0, 2, 4, 6}), k8_id(9, {1, 3, 5, 8})}) {
        auto f = family_generator(id);
        REQUIRE(f.has_value());
        CHECK_MESSAGE(generates(*f, mon(id.n), family_complex(id)), to_string(id));
    }
    CHECK_FALSE(family_generator(k6_id()).has_value());
}

TEST_CASE("classification") {
    auto c = classify(k5c());
    REQUIRE(c.has_value());
    CHECK(c->id == k5_id(5, 2, 3));
    CHECK(c->symmetry == Symmetry(5, 3));
    CHECK(c->symmetry.apply(k5c()) == family_complex(c->id));

    auto c6 = classify(insert_vertex(k5c(), 4));
    REQUIRE(c6.has_value());
    CHECK(c6->id.kind == FamilyId::Kind::K5);
    CHECK(c6->id.n == 6);
    CHECK_FALSE(classify(Complex::full(5)).has_value());

    auto k6 = classify(family_complex(k6_id({6})));
    REQUIRE(k6.has_value());
    CHECK(k6->id.kind == FamilyId::Kind::K6);
    for (const auto& g : Symmetry::vertex_group(8)) {
        const auto k = g.apply(family_complex(k8_id(8, {0, 2, 4, 6})));
        auto r = classify(k);
        REQUIRE(r.has_value());
        CHECK(r->symmetry.apply(k) == family_complex(r->id));
    }
}

TEST_CASE("lower-bound derivations replay") {
    for (int n = 3; n <= 12; ++n) {
        const auto k = short_intervals_complex(n);
        for (const auto& s : k.maximal()) CHECK(s.size() == (3 * n + 1) / 4 - 1);
        const auto t = refute_short_intervals(n);
        CHECK(t.end == Trace::End::Conflict);
        auto c = check_trace(to_text(t, k, mon(n)), k, mon(n));
        CHECK_MESSAGE(c.ok, "n=" << n << ": " << c.message);
    }
}

TEST_CASE("missing-five complexes") {
    // brute-force oracle: S is a simplex iff it contains none of the five intervals
    for (int n = 5; n <= 8; ++n)
        for (int i = 2; i < n - 1; ++i)
            for (int j = i + 1; j < n - 1; ++j) {
                const auto k = missing_five_complex(n, i, j);
                const VertexMask five[5] = {arc(0, j, n), arc(j + 1, i, n), arc(i + 1, 1, n), arc(i, 0, n),
                                            arc(1, n - 1, n)};
                for (VertexMask s = 1; s <= full_mask(n); ++s) {
                    bool allowed = true;
                    for (auto f : five) allowed = allowed && (f & ~s) != 0;
                    CHECK(k.member(s) == allowed);
                }
                const auto t = refute_missing_five(n, i, j);
                auto c = check_trace(t, k, mon(n));
                CHECK_MESSAGE(c.ok, n << " " << i << " " << j << ": " << c.message);
            }
    // for n = 5 the five intervals are the 4-intervals
    std::vector<Interval> three;
    for (int s = 0; s < 5; ++s) three.emplace_back(5, s, 3);
    const auto k = missing_five_complex(5, 2, 3);
    for (VertexMask s = 1; s < 32; ++s) {
        bool has_four = false;
        for (int a = 0; a < 5; ++a) has_four = has_four || (arc(a, a + 3, 5) & ~s) == 0;
        CHECK(k.member(s) == !has_four);
    }
    CHECK_THROWS_AS(refute_missing_five(6, 1, 3), Error);
}

TEST_CASE("mu table") {
    // n, lower, exact (0 = unknown), upper
    const int table[8][4] = {{1, 1, 1, 1}, {2, 1, 1, 2}, {3, 2, 2, 3}, {4, 3, 3, 3},
                             {5, 4, 4, 4}, {6, 4, 0, 5}, {7, 5, 5, 6}, {8, 6, 6, 6}};
    for (const auto& row : table) {
        const auto r = mu_bounds(row[0]);
        CHECK(r.lower == row[1]);
        CHECK(r.upper == row[3]);
        if (row[2] == 0)
            CHECK_FALSE(r.exact.has_value());
        else
            CHECK(r.exact == row[2]);
        for (const auto& s : r.witness.maximal()) CHECK(s.size() <= r.upper);
    }
    const auto r12 = mu_bounds(12);
    CHECK(r12.lower == 9);
    CHECK(r12.upper == 9);
    for (const auto& s : r12.witness.maximal()) CHECK(s.size() == 9);
    for (int n : {5, 7, 8}) {
        const auto r = mu_bounds(n, true);
        REQUIRE(r.certificate.has_value());
        CHECK(check_trace(*r.certificate, short_intervals_complex(n), mon(n)).ok);
    }
    // witnesses generate
    for (int n = 2; n <= 9; ++n) {
        const auto r = mu_bounds(n);
        REQUIRE(r.witness_family.has_value());
        auto f = family_generator(*r.witness_family);
        REQUIRE(f.has_value());
        CHECK(generates(*f, mon(n), r.witness));
    }
}

TEST_CASE("minimality") {
    auto m = minimality_check(k5c(), mon(5));
    CHECK(m.kind == MinimalityResult::Kind::Minimal);
    CHECK(m.certificates.size() == 4);
    const auto subs = immediate_subcomplexes(k5c());
    for (std::size_t t = 0; t < subs.size(); ++t) CHECK(check_trace(m.certificates[t], subs[t], mon(5)).ok);

    CHECK(insertion_preserves_minimality(k5c(), 4));
    CHECK(minimality_check(insert_vertex(k5c(), 4), mon(6)).kind == MinimalityResult::Kind::Minimal);

    auto d = minimality_check(delete_vertex(k5c(), 1), mon(4));
    CHECK(d.kind == MinimalityResult::Kind::NotMinimal);
    REQUIRE(d.witness.has_value());
    CHECK(*d.witness == family_complex(k2_id(4, 0, 1)));

    CHECK(insertion_preserves_minimality(family_complex(k8_id(8, {0, 2, 4, 6})), 1));
    // the hypothesis fails for singletons, but the inserted complex is still minimal
    const auto k2 = parse_complex("n=2; {0} {1}");
    for (int i = 0; i <= 2; ++i) {
        CHECK_FALSE(insertion_preserves_minimality(k2, i));
        CHECK(minimality_check(insert_vertex(k2, i), mon(3)).kind == MinimalityResult::Kind::Minimal);
    }
    CHECK_THROWS_AS(insertion_preserves_minimality(parse_complex("n=5; {0,2}"), 1), Error);
}

TEST_CASE("interval complex enumeration") {
    const auto three = enumerate_interval_complexes(3, 2);
    CHECK(std::find(three.begin(), three.end(), parse_complex("n=3; {0} {1} {2}")) != three.end());
    CHECK(std::find(three.begin(), three.end(), parse_complex("n=3; [0,1] [1,2] [2,0]")) != three.end());
    for (int n = 2; n <= 5; ++n) {
        const auto all = enumerate_interval_complexes(n, n - 1);
        std::set<std::vector<VertexMask>> keys;
        for (const auto& k : all) {
            CHECK(is_interval_complex(k));
            keys.insert(orbit_key(sorted_masks(k), n));
        }
        CHECK(keys.size() == all.size());
        // independent count of orbits of antichains of proper arcs
        std::vector<VertexMask> arcs;
        for (int a = 0; a < n; ++a)
            for (int len = 1; len < n; ++len) arcs.push_back(arc(a, a + len - 1, n));
        std::set<std::vector<VertexMask>> oracle;
        for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << arcs.size()); ++pick) {
            std::vector<VertexMask> ms;
            bool ok = true;
            for (std::size_t t = 0; t < arcs.size() && ok; ++t) {
                if (!((pick >> t) & 1U)) continue;
                for (auto m : ms) ok = ok && (m & ~arcs[t]) != 0 && (arcs[t] & ~m) != 0;
                ms.push_back(arcs[t]);
            }
            if (ok) oracle.insert(orbit_key(ms, n));
        }
        CHECK(oracle == keys);
    }
    CHECK_THROWS_AS(enumerate_interval_complexes(9, 3), ResourceError);
}

TEST_CASE("minimal complexes for small n") {
    for (int n = 2; n <= 5; ++n) {
        std::set<std::vector<VertexMask>> expected;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                expected.insert(orbit_key({full_mask(n) & ~(VertexMask{1} << a), full_mask(n) & ~(VertexMask{1} << b)}, n));
        if (n == 5) expected.insert(orbit_key({arc(0, 2, 5), arc(1, 3, 5), arc(2, 4, 5), arc(3, 1, 5)}, 5));
        std::set<std::vector<VertexMask>> got;
        for (const auto& e : enumerate_minimal(n)) {
            CHECK(e.status == Status::Gen);
            CHECK(e.minimal == Status::Gen);
            REQUIRE(e.family.has_value());
            CHECK((e.family->kind == FamilyId::Kind::K2 || e.family->kind == FamilyId::Kind::K5));
            got.insert(orbit_key(sorted_masks(e.complex), n));
        }
        CHECK(got == expected);
    }
}

TEST_CASE("structural properties of generating complexes at n = 5") {
    std::vector<Complex> gen;
    enumerate_report(5, [&](const EnumerationEntry& e) {
        CHECK(e.status != Status::Unknown);
        if (e.status == Status::Gen)
            for (const auto& g : Symmetry::vertex_group(5)) gen.push_back(g.apply(e.complex));
    });
    REQUIRE_FALSE(gen.empty());
    const int n = 5;
    for (const auto& k : gen) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const bool ok = k.member(arc(0, j, n)) || k.member(arc(i, 0, n)) ||
                                k.member(arc(j + 1, 0, n) | arc(0, i - 1, n));
                CHECK(ok);
            }
        bool four_through_zero = false;
        for (int a = 0; a < n; ++a) {
            const VertexMask m = arc(a, a + 3, n);
            four_through_zero = four_through_zero || (k.member(m) && (m & 1U));
        }
        if (!four_through_zero)
            CHECK((k.member(arc(0, 2, n)) && k.member(arc(3, 0, n)) && k.member(arc(4, 1, n))));
    }
}

TEST_CASE("five-interval starts at n = 7") {
    const int n = 7;
    enumerate_report(n, [&](const EnumerationEntry& e) {
        if (e.status != Status::Gen) return;
        for (const auto& g : Symmetry::vertex_group(n)) {
            const auto k = g.apply(e.complex);
            bool six = false;
            for (int a = 0; a < n; ++a) six = six || k.member(arc(a, a + 5, n));
            if (six) continue;
            std::set<int> starts;
            for (int a = 0; a < n; ++a)
                if (k.member(arc(a, a + 4, n))) starts.insert(a);
            for (int a = 0; a < n; ++a) {
                CHECK((starts.count(a) || starts.count((a + 2) % n)));
                CHECK((starts.count(a) || starts.count((a + 1) % n) || starts.count((a + 4) % n)));
            }
        }
    });
}

TEST_CASE("rendering") {
    const auto text = render_ascii(k5c());
    CHECK(std::count(text.begin(), text.end(), '\n') == 5);
    CHECK(std::count(text.begin(), text.end(), '#') == 3 + 3 + 3 + 4);
    // column [3,1] is the second one in canonical order and wraps rows 3, 4, 0, 1
    CHECK(text.find("0 | # # . .") != std::string::npos);
    CHECK(text.find("2 | # . # #") != std::string::npos);
    const auto full = render_ascii(Complex::full(4));
    CHECK(std::count(full.begin(), full.end(), '#') == 4);
    const auto k8 = render_ascii(family_complex(k8_id(8, {0, 2, 4, 6})));
    CHECK(std::count(k8.begin(), k8.end(), '#') == 24);
    CHECK(render_svg(k5c()) == render_svg(parse_complex("n=5; [3,1] [2,4] [1,3] [0,2]")));
    CHECK(render_svg(k5c()).find("<svg") == 0);
}
