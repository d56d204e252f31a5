// Exhaustive search for negation-commuting generators of Mon_n within a complex.
//
// Search space: each maximal simplex S of K carries m_S bit inputs (default 1).
// Output cell i reads exactly the inputs attached to simplices containing i, so
// K_f is a subcomplex of K by construction. Every local rule g satisfies
// g(not y) = not g(y). A solution is an f whose image over all bit inputs is Mon_n.
//
// Cells are assigned left to right; for each input x the partial output must
// change value at most once, which is tracked as disjoint 64-bit change masks.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <set>

#include "monogen/analysis.hpp"

using namespace monogen;

namespace {

struct Cell {
    std::vector<int> window;
    // column[o] bit x = output of option o on input assignment x
    std::vector<std::uint64_t> columns;
};

struct Search {
    int n = 0;
    int inputs = 0;
    std::vector<Cell> cells;
    std::vector<std::size_t> choice;
    std::uint64_t all = 0;
    std::size_t nodes = 0;
    std::size_t solutions = 0;
    std::vector<std::vector<std::size_t>> found;

    void run(int i, std::uint64_t prev, std::uint64_t changed) {
        ++nodes;
        if (i == n) {
            if (surjective()) {
                ++solutions;
                if (found.size() < 5) found.push_back(choice);
            }
            return;
        }
        for (std::size_t o = 0; o < cells[i].columns.size(); ++o) {
            const std::uint64_t col = cells[i].columns[o];
            const std::uint64_t change = i == 0 ? 0 : (col ^ prev) & all;
            if (change & changed) continue;
            choice[i] = o;
            run(i + 1, col, changed | change);
        }
    }

    bool surjective() const {
        std::set<Word> image;
        for (int x = 0; x < (1 << inputs); ++x) {
            Word w = 0;
            for (int i = 0; i < n; ++i)
                if ((cells[i].columns[choice[i]] >> x) & 1U) w |= Word{1} << i;
            image.insert(w);
        }
        const auto target = mon(n);
        return image == std::set<Word>(target.words().begin(), target.words().end());
    }
};

Search build(const Complex& k, const std::vector<int>& multiplicity) {
    Search s;
    s.n = k.n();
    std::vector<int> owner;
    for (std::size_t t = 0; t < k.size(); ++t)
        for (int c = 0; c < multiplicity[t]; ++c) owner.push_back(static_cast<int>(t));
    s.inputs = static_cast<int>(owner.size());
    if (s.inputs > 6) throw Error("at most 6 bit inputs are supported");
    s.all = s.inputs == 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1 << s.inputs)) - 1;
    for (int i = 0; i < s.n; ++i) {
        Cell cell;
        for (int j = 0; j < s.inputs; ++j)
            if (k.maximal()[owner[j]].contains(i)) cell.window.push_back(j);
        const int w = static_cast<int>(cell.window.size());
        if (w > 5) throw Error("window too large for exhaustive local rules");
        const int half = w == 0 ? 0 : 1 << (w - 1);
        if (w == 0) {
            // a constant cannot commute with negation
            s.cells.push_back(cell);
            continue;
        }
        const int full = (1 << w) - 1;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << half); ++code) {
            // local table over y in [0, 2^w): bit for y < half is free, y >= half is the negated mirror
            auto local = [&](int y) {
                if (y < half) return static_cast<int>((code >> y) & 1U);
                return 1 - static_cast<int>((code >> (full - y)) & 1U);
            };
            std::uint64_t col = 0;
            for (int x = 0; x < (1 << s.inputs); ++x) {
                int y = 0;
                for (int b = 0; b < w; ++b) y = (y << 1) | ((x >> cell.window[b]) & 1);
                if (local(y)) col |= std::uint64_t{1} << x;
            }
            cell.columns.push_back(col);
        }
        s.cells.push_back(std::move(cell));
    }
    s.choice.assign(static_cast<std::size_t>(s.n), 0);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Search for negation-commuting generators of Mon_n within a complex"};
    std::string complex_text;
    std::vector<int> multiplicity;
    app.add_option("--complex", complex_text, "Complex to search (default: all 4-intervals over I_6)");
    app.add_option("--bits", multiplicity, "Bit inputs per maximal simplex in canonical order (default: 1 each)");
    CLI11_PARSE(app, argc, argv);

    try {
        const Complex k = complex_text.empty() ? family_complex(k6_id()) : parse_complex(complex_text);
        if (multiplicity.empty()) multiplicity.assign(k.size(), 1);
        if (multiplicity.size() != k.size()) throw Error("--bits needs one count per maximal simplex");

        std::cout << "complex: " << to_string(k) << "\n";
        std::cout << "assumptions: bit inputs only; ";
        for (std::size_t t = 0; t < k.size(); ++t)
            std::cout << multiplicity[t] << " on " << to_string(k.maximal()[t], k.n()) << (t + 1 < k.size() ? ", " : "");
        std::cout << "; cell i reads every input of every simplex containing i; local rules commute with negation\n";

        Search s = build(k, multiplicity);
        std::size_t space = 1;
        for (const auto& c : s.cells) std::cout << "cell window size " << c.window.size() << ", " << c.columns.size() << " rules\n";
        for (const auto& c : s.cells) space *= std::max<std::size_t>(c.columns.size(), 1);

        const auto t0 = std::chrono::steady_clock::now();
        if (std::all_of(s.cells.begin(), s.cells.end(), [](const Cell& c) { return !c.columns.empty(); })) s.run(0, 0, 0);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        std::cout << "search space " << space << " functions, " << s.nodes << " nodes visited in " << secs << " s\n";
        std::cout << "solutions=" << s.solutions << "\n";
        for (const auto& sol : s.found) {
            std::cout << "  rules:";
            for (auto o : sol) std::cout << " " << o;
            std::cout << "\n";
        }
        return s.solutions == 0 ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
