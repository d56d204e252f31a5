#include <doctest.h>

#include <set>

#include "monogen/genfunc.hpp"

using namespace monogen;

namespace {

int maj(int x, int y, int z) { return (x & y) | (y & z) | (x & z); }

bool monotone(Word w, int n) {
    int changes = 0;
    for (int i = 0; i + 1 < n; ++i) changes += ((w >> i) & 1U) != ((w >> (i + 1)) & 1U);
    return changes <= 1;
}

std::set<Word> mon_set(int n) {
    std::set<Word> out;
    for (Word w = 0; w < (Word{1} << n); ++w)
        if (monotone(w, n)) out.insert(w);
    return out;
}

std::set<Word> image_set(const GenFunction& f) {
    std::set<Word> out;
    f.for_each_input([&](const InputValues& x) { out.insert(f.evaluate(x)); });
    return out;
}

// essential inputs found by perturbing one input over the whole input space
std::vector<std::set<int>> brute_windows(const GenFunction& f) {
    std::vector<std::set<int>> out(static_cast<std::size_t>(f.out_n()));
    f.for_each_input([&](const InputValues& x) {
        const Word y = f.evaluate(x);
        for (std::size_t j = 0; j < x.size(); ++j)
            for (int v = 0; v < f.inputs()[j].alphabet.size(); ++v) {
                auto x2 = x;
                x2[j] = v;
                const Word y2 = f.evaluate(x2);
                for (int i = 0; i < f.out_n(); ++i)
                    if (((y ^ y2) >> i) & 1U) out[static_cast<std::size_t>(i)].insert(static_cast<int>(j));
            }
    });
    return out;
}

std::vector<std::set<int>> diagram_rows(const VisibilityDiagram& d) {
    std::vector<std::set<int>> out;
    for (int i = 0; i < d.out_n; ++i) {
        auto w = d.window(i);
        out.emplace_back(w.begin(), w.end());
    }
    return out;
}

Word bits(const char* s) { return word_from_string(s); }

Complex k5c() { return parse_complex("n=5; [0,2] [1,3] [2,4] [3,1]"); }
Complex k7c() { return parse_complex("n=7; [0,4] [1,5] [2,6] [4,1] [5,2]"); }
Complex k8c() { return parse_complex("n=8; [0,5] [2,7] [4,1] [6,3]"); }

}  // namespace

TEST_CASE("k5 matches its majority rules and generates Mon_5") {
    auto f = builtin("k5");
    for (int code = 0; code < 32; ++code) {
        InputValues x(5);
        for (int t = 0; t < 5; ++t) x[t] = (code >> t) & 1;
        const int a = x[0], b = x[1], c = x[2], d = x[3], e = x[4];
        const int A = maj(1 - e, a, b), E = maj(d, e, 1 - a);
        const int want[5] = {A, maj(A, b, c), maj(b, c, d), maj(c, d, E), E};
        for (int i = 0; i < 5; ++i) CHECK(f.evaluate_cell(i, x) == want[i]);
        // negation equivariance
        InputValues nx(5);
        for (int t = 0; t < 5; ++t) nx[t] = 1 - x[t];
        CHECK(f.evaluate(nx) == (~f.evaluate(x) & 31U));
        if (monotone(static_cast<Word>(code), 5)) CHECK(f.evaluate(x) == static_cast<Word>(code));
        // partial evaluation at a = 0, e = 0
        if (a == 0 && e == 0) {
            CHECK(f.evaluate_cell(0, x) == b);
            CHECK(f.evaluate_cell(1, x) == b);
            CHECK(f.evaluate_cell(3, x) == d);
            CHECK(f.evaluate_cell(4, x) == d);
        }
    }
    CHECK(image_set(f) == mon_set(5));
    CHECK(comm_complex(f) == k5c());
    CHECK(generates(f, mon(5), k5c()));
    CHECK_FALSE(generates(f, mon(5), parse_complex("n=5; [0,2] [1,3] [2,4]")));
}

TEST_CASE("k7 generates Mon_7 and reaches the listed outputs") {
    auto f = builtin("k7");
    CHECK(image_set(f) == mon_set(7));
    CHECK(comm_complex(f).subcomplex_of(k7c()));
    CHECK(generates(f, mon(7), k7c()));
    const std::pair<const char*, const char*> rows[] = {{"00000", "0000000"}, {"00001", "0000001"},
                                                        {"00010", "0000011"}, {"00011", "0000111"},
                                                        {"00110", "0001111"}, {"01011", "0011111"},
                                                        {"01111", "0111111"}};
    for (auto [in, out] : rows) {
        InputValues x(5);
        for (int t = 0; t < 5; ++t) x[t] = in[t] - '0';
        CHECK(word_to_string(f.evaluate(x), 7) == out);
    }
    for (int code = 0; code < 32; ++code) {
        InputValues x(5), nx(5);
        for (int t = 0; t < 5; ++t) {
            x[t] = (code >> t) & 1;
            nx[t] = 1 - x[t];
        }
        CHECK(f.evaluate(nx) == (~f.evaluate(x) & 127U));
        // g = 1, a = 0: F = d or f, G = 1
        if (x[4] == 1 && x[0] == 0) {
            CHECK(f.evaluate_cell(5, x) == (x[2] | x[3]));
            CHECK(f.evaluate_cell(6, x) == 1);
        }
    }
}

TEST_CASE("k8 generates Mon_8 over bit inputs") {
    auto blocks = builtin("k8");
    CHECK(image_set(blocks) == mon_set(8));
    CHECK(generates(blocks, mon(8), k8c()));
    auto f = split_pairs(blocks);
    REQUIRE(f.inputs().size() == 8);
    CHECK(f.inputs()[0].name == "a");
    CHECK(f.inputs()[7].name == "h");
    CHECK(image_set(f) == mon_set(8));
    CHECK(comm_complex(f).subcomplex_of(k8c()));
    for (Word w : mon_set(8)) {
        InputValues x(8);
        for (int t = 0; t < 8; ++t) x[t] = (w >> t) & 1U;
        CHECK(f.evaluate(x) == w);
    }
    InputValues x{0, 0, 1, 1, 0, 0, 0, 0};
    CHECK(monotone(f.evaluate(x), 8));
}

TEST_CASE("phi0 core fixes monotone 4-words") {
    // rho on constant blocks reduces to the 4-bit majority map
    auto f = builtin("k8");
    for (int code = 0; code < 16; ++code) {
        InputValues x(4);
        for (int t = 0; t < 4; ++t) x[t] = ((code >> t) & 1) ? 3 : 0;
        const int xs = code & 1, ys = (code >> 1) & 1, zs = (code >> 2) & 1, ts = (code >> 3) & 1;
        const int phi0[4] = {maj(1 - ts, xs, ys), maj(xs, ys, zs), maj(ys, zs, ts), maj(zs, ts, 1 - xs)};
        const Word y = f.evaluate(x);
        for (int b = 0; b < 4; ++b) {
            CHECK(static_cast<int>((y >> (2 * b)) & 1U) == phi0[b]);
            CHECK(static_cast<int>((y >> (2 * b + 1)) & 1U) == phi0[b]);
        }
        if (monotone(static_cast<Word>(code), 4)) {
            for (int b = 0; b < 4; ++b) CHECK(phi0[b] == ((code >> b) & 1));
        }
    }
}

TEST_CASE("visibility diagrams of the builtins") {
    using S = std::set<int>;
    auto k5 = essential_windows(builtin("k5"));
    // a b c d e
    CHECK(diagram_rows(k5) == std::vector<S>{{0, 1, 4}, {0, 1, 2, 4}, {1, 2, 3}, {0, 2, 3, 4}, {0, 3, 4}});
    auto k7 = essential_windows(builtin("k7"));
    // a b d f g
    CHECK(diagram_rows(k7) ==
          std::vector<S>{{0, 1, 4}, {0, 1, 2, 4}, {0, 1, 2, 3}, {1, 2, 3}, {1, 2, 3, 4}, {0, 2, 3, 4}, {0, 3, 4}});
    auto k8 = essential_windows(builtin("k8"));
    // ab cd ef gh
    CHECK(diagram_rows(k8) == std::vector<S>{{0, 1, 3}, {0, 1, 3}, {0, 1, 2}, {0, 1, 2}, {1, 2, 3}, {1, 2, 3}, {0, 2, 3},
                                             {0, 2, 3}});
    for (const char* name : {"k5", "k7", "k8"}) {
        auto f = builtin(name);
        CHECK(diagram_rows(essential_windows(f)) == brute_windows(f));
    }
    CHECK(diagram_rows(essential_windows(identity(4))) == std::vector<S>{{0}, {1}, {2}, {3}});
    CHECK(comm_complex(identity(3)) == parse_complex("n=3; {0} {1} {2}"));
    auto constant = GenFunction::compile(3, {{"x", Alphabet::bit()}}, {{0}, {0}, {0}},
                                         [](int, const InputValues&) { return 1; });
    CHECK(diagram_rows(essential_windows(constant)) == std::vector<S>{{}, {}, {}});
}

TEST_CASE("k2 generator") {
    auto f = k2_generator(5, 1, 4);
    auto m = mon(5);
    InputValues x{m.index_of(bits("00000")), m.index_of(bits("01111"))};
    CHECK(word_to_string(f.evaluate(x), 5) == "00001");
    for (int n = 2; n <= 5; ++n)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b) continue;
                auto g = k2_generator(n, a, b);
                auto l = mon(n);
                for (std::size_t t = 0; t < l.size(); ++t) {
                    InputValues d{static_cast<int>(t), static_cast<int>(t)};
                    CHECK(g.evaluate(d) == l.words()[t]);
                }
                CHECK(image_set(g) == mon_set(n));
                const VertexMask all = full_mask(n);
                VertexMask both[2] = {all & ~(VertexMask{1} << a), all & ~(VertexMask{1} << b)};
                auto k = Complex::from_masks(n, both);
                CHECK(comm_complex(g).subcomplex_of(k));
                CHECK(generates(g, l, k));
            }
    CHECK_THROWS_AS(k2_generator(4, 2, 2), Error);
}

TEST_CASE("lift_insert preserves generation") {
    auto id2 = identity(2);
    auto lifted = lift_insert(id2, 2);
    CHECK(generates(lifted, mon(3), insert_vertex(parse_complex("n=2; {0} {1}"), 2)));
    auto chain = identity(2);
    Complex k = comm_complex(chain);
    for (int step = 0; step < 3; ++step) {
        chain = lift_insert(chain, step % 2 == 0 ? 1 : chain.out_n());
        k = insert_vertex(k, step % 2 == 0 ? 1 : chain.out_n() - 1);
        CHECK(generates(chain, mon(chain.out_n()), k));
    }
    CHECK(chain.out_n() == 5);
    auto k5 = builtin("k5");
    CHECK(generates(lift_insert(k5, 4), mon(6), parse_complex("n=6; [0,2] [1,4] [2,5] [3,1]")));
    for (int i = 0; i <= 5; ++i) CHECK(generates(lift_insert(k5, i), mon(6), insert_vertex(k5c(), i)));
    for (int n = 2; n <= 4; ++n)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                auto g = k2_generator(n, a, b);
                auto kg = comm_complex(g);
                for (int i = 0; i <= n; ++i) CHECK(generates(lift_insert(g, i), mon(n + 1), insert_vertex(kg, i)));
            }
    auto bad = GenFunction::compile(3, {{"x", Alphabet::bit()}}, {{0}, {}, {0}},
                                    [](int c, const InputValues& x) { return c == 1 ? 0 : x[0]; });
    CHECK_THROWS_AS(lift_insert(bad, 1), Error);
}

TEST_CASE("dihedral transport") {
    for (const char* name : {"k5", "k7"}) {
        auto f = builtin(name);
        auto k = comm_complex(f);
        for (const auto& g : Symmetry::all(f.out_n())) {
            auto h = transport(g, f);
            CHECK(generates(h, mon(f.out_n()), g.apply(k)));
        }
    }
}

TEST_CASE("function text round trip") {
    for (auto f : {builtin("k5"), builtin("k8"), k2_generator(4, 0, 2), lift_insert(identity(2), 1),
                   split_pairs(builtin("k8"))}) {
        auto text = to_text(f);
        CHECK(parse_function(text) == f);
    }
    auto f = parse_function("out_n=2\ninputs=x:bit,y:bit\ncell 0: window=x table=01\ncell 1: window=x,y table=0001\n");
    CHECK(f.evaluate(InputValues{1, 1}) == 3);
    CHECK(f.evaluate(InputValues{1, 0}) == 1);
    CHECK_THROWS_AS(parse_function("out_n=1\ninputs=x:bit\ncell 0: window=z table=01\n"), ParseError);
    CHECK_THROWS_AS(parse_function("out_n=1\ninputs=x:bit\ncell 0: window=x table=011\n"), Error);
    CHECK(function_from_selector("k2:4,1,3") == k2_generator(4, 1, 3));
    CHECK(function_from_selector("builtin:k7") == builtin("k7"));
}

TEST_CASE("input space bound") {
    std::vector<InputCell> inputs;
    std::vector<std::vector<int>> windows;
    for (int j = 0; j < 21; ++j) inputs.push_back({"x" + std::to_string(j), Alphabet::bit()});
    for (int i = 0; i < 3; ++i) windows.push_back({i});
    auto f = GenFunction::compile(3, inputs, windows, [](int c, const InputValues& x) { return x[c]; });
    CHECK_THROWS_AS(image(f), ResourceError);
    CHECK(image(f, std::size_t{1} << 22).size() == 8);
}
