#include <bit>
#include <optional>

#include "monogen/prover.hpp"

namespace monogen {

namespace {

int source_simplex(const Complex& k, VertexMask readers) {
    for (std::size_t s = 0; s < k.size(); ++s)
        if ((readers & ~k.maximal()[s].mask()) == 0) return static_cast<int>(s);
    throw Error("an input is read by a set of cells outside every maximal simplex");
}

}  // namespace

Witness positional_witness(const GenFunction& f, const Complex& k, const Language& l,
                           const std::vector<std::vector<int>>& positions) {
    if (positions.size() != f.inputs().size()) throw Error("one position list per input required");
    auto d = essential_windows(f);
    InputAdapter ad;
    for (std::size_t j = 0; j < f.inputs().size(); ++j) {
        ad.source.push_back(source_simplex(k, d.readers(static_cast<int>(j))));
        std::vector<int> proj;
        for (Word w : l.words()) {
            int v = 0;
            for (int p : positions[j]) v = 2 * v + static_cast<int>((w >> p) & 1U);
            proj.push_back(v);
        }
        ad.projection.push_back(std::move(proj));
    }
    return {f, k, l, std::move(ad)};
}

Witness canonical_witness(const GenFunction& f, const Complex& k, const Language& l) {
    auto d = essential_windows(f);
    InputAdapter ad;
    for (std::size_t j = 0; j < f.inputs().size(); ++j) {
        const auto& a = f.inputs()[j].alphabet;
        if (a.kind() != Alphabet::Kind::Words || !(a.language() == l))
            throw Error("canonical witness needs inputs valued in the language");
        ad.source.push_back(source_simplex(k, d.readers(static_cast<int>(j))));
        std::vector<int> proj;
        for (std::size_t w = 0; w < l.size(); ++w) proj.push_back(static_cast<int>(w));
        ad.projection.push_back(std::move(proj));
    }
    return {f, k, l, std::move(ad)};
}

Witness preimage_witness(const GenFunction& f, const Complex& k, const Language& l) {
    std::vector<std::optional<InputValues>> pre(l.size());
    f.for_each_input([&](const InputValues& x) {
        const int t = l.index_of(f.evaluate(x));
        if (t >= 0 && !pre[static_cast<std::size_t>(t)]) pre[static_cast<std::size_t>(t)] = x;
    });
    for (std::size_t t = 0; t < pre.size(); ++t)
        if (!pre[t]) throw Error("word " + word_to_string(l.words()[t], l.n()) + " is not in the image");
    auto d = essential_windows(f);
    InputAdapter ad;
    for (std::size_t j = 0; j < f.inputs().size(); ++j) {
        ad.source.push_back(source_simplex(k, d.readers(static_cast<int>(j))));
        std::vector<int> proj;
        for (const auto& x : pre) proj.push_back((*x)[j]);
        ad.projection.push_back(std::move(proj));
    }
    return {f, k, l, std::move(ad)};
}

Witness lift_witness(const Witness& w, int i) {
    const int n = w.l.n();
    if (!(w.l == mon(n))) throw Error("lift_witness requires the language Mon_n");
    GenFunction f2 = lift_insert(w.f, i);
    Complex k2 = insert_vertex(w.k, i);
    Language l2 = mon(n + 1);
    InputAdapter ad;
    for (std::size_t j = 0; j < w.f.inputs().size(); ++j) {
        const VertexMask old = w.k.maximal()[static_cast<std::size_t>(w.adapter.source[j])].mask();
        ad.source.push_back(source_simplex(k2, insert_vertex(old, n, i)));
        std::vector<int> proj;
        for (Word x : l2.words()) {
            const Word low = x & ((Word{1} << i) - 1);
            const Word high = (x >> (i + 1)) << i;
            const int old_index = w.l.index_of(low | high);
            proj.push_back(w.adapter.projection[j][static_cast<std::size_t>(old_index)]);
        }
        ad.projection.push_back(std::move(proj));
    }
    ad.source.push_back(source_simplex(k2, VertexMask{1} << i));
    std::vector<int> fresh;
    for (Word x : l2.words()) fresh.push_back(static_cast<int>((x >> i) & 1U));
    ad.projection.push_back(std::move(fresh));
    return {std::move(f2), std::move(k2), std::move(l2), std::move(ad)};
}

InputValues adapt(const Witness& w, const InputAssignment& x) {
    InputValues v(w.f.inputs().size(), 0);
    for (std::size_t j = 0; j < v.size(); ++j) {
        const int s = w.adapter.source[j];
        if (x.defined(s)) v[j] = w.adapter.projection[j][x.vals[static_cast<std::size_t>(s)]];
    }
    return v;
}

AuditReport soundness_audit(const Witness& w, const ProverOptions& options) {
    AuditReport r;
    const int m = static_cast<int>(w.k.size());
    const int n = w.l.n();
    if (w.f.out_n() != n || w.k.n() != n) {
        r.failure = "function, complex and language lengths differ";
        return r;
    }
    for (std::size_t t = 0; t < w.l.size(); ++t) {
        const auto x = InputAssignment::constant(m, static_cast<int>(t));
        if (w.f.evaluate(adapt(w, x)) != w.l.words()[t]) {
            r.failure = "diagonal input " + word_to_string(w.l.words()[t], n) + " is not fixed";
            return r;
        }
    }
    ProverOptions opt = options;
    opt.keep_all = true;
    r.verdict = saturate(w.k, w.l, opt);
    if (r.verdict.kind == Verdict::Kind::Conflict) {
        r.failure = "prover derived a conflict for a generating complex";
        return r;
    }
    for (const auto& nd : r.verdict.trace.nodes) {
        // simplices feeding the cells constrained by this node
        std::uint32_t relevant = 0;
        for (int i : mask_vertices(nd.out.mask()))
            for (int j : w.f.cells()[static_cast<std::size_t>(i)].window)
                relevant |= std::uint32_t{1} << w.adapter.source[static_cast<std::size_t>(j)];
        const std::uint32_t free = relevant & ~nd.in.mask;
        const std::vector<int> slots = mask_vertices(free);
        std::vector<int> digit(slots.size(), 0);
        InputAssignment x = nd.in;
        const int base = static_cast<int>(w.l.size());
        while (true) {
            for (std::size_t t = 0; t < slots.size(); ++t) x = x.with(slots[t], digit[t]);
            const Word y = w.f.evaluate(adapt(w, x));
            ++r.checked;
            if (!nd.out.matches(y)) {
                r.failure = "node #" + std::to_string(nd.id) + " [" + std::string(rule_name(nd.rule)) +
                            "] out=" + to_string(nd.out) + " violated by output " + word_to_string(y, n);
                return r;
            }
            std::size_t t = 0;
            while (t < slots.size() && ++digit[t] == base) digit[t++] = 0;
            if (t == slots.size()) break;
        }
    }
    r.ok = true;
    return r;
}

}  // namespace monogen
