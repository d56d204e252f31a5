#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "monogen/analysis.hpp"

namespace monogen {

namespace {

long long floor_div(long long a, long long n) { return a >= 0 ? a / n : -((-a + n - 1) / n); }
int mod(long long a, int n) { return static_cast<int>(((a % n) + n) % n); }

// Derivations written in frame coordinates: the frame value at t in Z is the
// value of cell t mod n, complemented when floor(t / n) is odd. Every window
// of n consecutive frame positions reads a monotonic word.
class Script {
public:
    Script(const Complex& k) : n_(k.n()), b_(k, mon(k.n())) {}

    DerivationBuilder& builder() { return b_; }

    int actual(long long t, int v) const { return v ^ static_cast<int>(floor_div(t, n_) & 1); }
    int cell(long long t) const { return mod(t, n_); }

    void expect(int node, long long t, int v, const std::string& what) const {
        auto got = b_.value(node, cell(t));
        if (!got || *got != actual(t, v))
            throw Error(what + ": expected frame value " + std::to_string(v) + " at " + std::to_string(t));
    }

    // frame values v on [from, from + n)
    int axiom_constant(long long from, int v) {
        Word w = 0;
        for (long long t = from; t < from + n_; ++t)
            if (actual(t, v)) w |= Word{1} << cell(t);
        return b_.axiom(w);
    }

    int restrict_at(int node, long long t) { return b_.restrict_to(node, cell(t)); }

    // a at i and b at k both carry v; result carries v at j, i <= j <= k
    int claim(int a, int b, long long i, long long j, int v) {
        int mu = restrict_at(a, i);
        for (long long t = i; t < j; ++t) {
            mu = restrict_at(b_.join(mu, b), t + 1);
            expect(mu, t + 1, v, "left sweep");
        }
        return mu;
    }

    int mono(int a, int b, long long i, long long j, long long k, int v) {
        if (!(i <= j && j <= k && k < i + n_)) throw Error("mono: positions out of order");
        expect(a, i, v, "mono premise");
        expect(b, k, v, "mono premise");
        int gamma = restrict_at(b, k);
        for (long long t = k; t > j; --t) {
            gamma = claim(a, gamma, i, t - 1, v);
            expect(gamma, t - 1, v, "right sweep");
        }
        return gamma;
    }

    // value v at j, inputs within up[i+1, j] u up[j, i]
    int main_tool(long long i, long long j, int v) {
        const long long lo = i + 1;
        const long long jj = lo + mod(j - lo, n_);
        const int vv = v ^ static_cast<int>(((jj - j) / n_) & 1);
        const int ax = axiom_constant(lo, vv);
        return mono(ax, ax, lo, jj, lo + n_ - 1, vv);
    }

    int n() const { return n_; }

private:
    int n_;
    DerivationBuilder b_;
};

class ShortIntervals {
public:
    explicit ShortIntervals(int n) : s_(short_intervals_complex(n)), n_(n), k_((3 * n + 1) / 4), b_(2 * (n - k_)) {}

    Trace run() {
        const int gamma = widen(k_ - 1, 0, 0);
        const int alpha = s_.main_tool(2 * k_ - n_ - 1, 0, 1);
        s_.builder().conflict(alpha, gamma, 0);
        return s_.builder().trace();
    }

private:
    // frame value v at a, inputs within up[a, a+j] u up[a+j+1, a+b+j+1]
    int widen(int j, long long a, int v) {
        const auto key = std::make_tuple(j, mod(a, n_), s_.actual(a, v));
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        int out;
        try {
            if (j == 2 * k_ - n_ - 1) {
                out = s_.main_tool(a + j, a, v);
            } else {
                const int beta = widen(j - 1, a + 1 - k_, v);
                const int alpha = widen(j - 1, a + 1, v);
                out = s_.mono(beta, alpha, a + 1 - k_, a, a + 1, v);
            }
        } catch (const Error& e) {
            if (std::string(e.what()).rfind("step j=", 0) == 0) throw;
            throw Error("step j=" + std::to_string(j) + ": " + e.what());
        }
        memo_.emplace(key, out);
        return out;
    }

    Script s_;
    int n_, k_, b_;
    std::map<std::tuple<int, int, int>, int> memo_;
};

Trace saturate_or_throw(const Complex& k, const std::string& what) {
    auto v = saturate(k, mon(k.n()));
    if (v.kind != Verdict::Kind::Conflict) throw Error(what + ": saturation found no conflict");
    return v.trace;
}

}  // namespace

Complex short_intervals_complex(int n) {
    if (n < 3) throw Error("short-interval refutation needs n >= 3");
    const int len = (3 * n + 1) / 4 - 1;
    std::vector<Interval> v;
    for (int s = 0; s < n; ++s) v.emplace_back(n, s, len);
    return Complex::from_intervals(n, v);
}

Trace refute_short_intervals(int n) {
    const Complex k = short_intervals_complex(n);
    Trace t;
    try {
        t = ShortIntervals(n).run();
    } catch (const Error& e) {
        if (n > 6) throw Error(std::string("lower-bound derivation failed at ") + e.what());
        t = saturate_or_throw(k, "lower-bound refutation");
    }
    auto c = check_trace(t, k, mon(n));
    if (!c.ok) throw Error("lower-bound trace rejected: " + c.message);
    return t;
}

Complex missing_five_complex(int n, int i, int j) {
    if (!(1 < i && i < j && j < n - 1)) throw Error("missing-five needs 1 < i < j < n-1");
    if (n > 24) throw ResourceError("missing-five complex limited to n <= 24");
    const VertexMask five[5] = {Interval::from_endpoints(0, j, n).mask(), Interval::from_endpoints(j + 1, i, n).mask(),
                                Interval::from_endpoints(i + 1, 1, n).mask(), Interval::from_endpoints(i, 0, n).mask(),
                                Interval::from_endpoints(1, n - 1, n).mask()};
    auto allowed = [&](VertexMask m) {
        return std::none_of(std::begin(five), std::end(five), [&](VertexMask f) { return (f & ~m) == 0; });
    };
    std::vector<VertexMask> out;
    const VertexMask full = full_mask(n);
    for (VertexMask m = 1; m <= full; ++m) {
        if (!allowed(m)) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!((m >> v) & 1U) && allowed(m | (VertexMask{1} << v))) maximal = false;
        if (maximal) out.push_back(m);
    }
    if (out.size() > static_cast<std::size_t>(kMaxProverInputs))
        throw ResourceError("missing-five complex has more than 32 maximal simplices");
    return Complex::from_masks(n, out);
}

Trace refute_missing_five(int n, int i, int j) {
    const Complex k = missing_five_complex(n, i, j);
    Script s(k);
    const int alpha = s.main_tool(i, 0, 1);
    const int beta = s.main_tool(j, 1, 0);
    const int gamma = s.mono(beta, alpha, 1, i, n, 0);
    const int delta = s.main_tool(n - 1, i, 1);
    s.builder().conflict(gamma, delta, i);
    Trace t = s.builder().trace();
    auto c = check_trace(t, k, mon(n));
    if (!c.ok) throw Error("missing-five trace rejected: " + c.message);
    return t;
}

std::string_view status_name(Status s) {
    switch (s) {
        case Status::Gen: return "GEN";
        case Status::NoGen: return "NOGEN";
        case Status::Unknown: return "UNKNOWN";
    }
    return "?";
}

Decision decide(const Complex& k, const Budget& budget) {
    Decision d;
    if (auto w = find_generator(k)) {
        d.status = Status::Gen;
        d.witness = std::move(w);
        return d;
    }
    ProverOptions o;
    o.budget = budget;
    auto v = saturate(k, mon(k.n()), o);
    if (v.kind == Verdict::Kind::Conflict) {
        d.status = Status::NoGen;
        d.refutation = std::move(v.trace);
    } else {
        d.budget_hit = v.kind == Verdict::Kind::BudgetExhausted;
    }
    return d;
}

std::vector<Complex> immediate_subcomplexes(const Complex& k) {
    std::vector<Complex> out;
    for (std::size_t s = 0; s < k.size(); ++s) {
        std::vector<VertexMask> masks;
        for (std::size_t t = 0; t < k.size(); ++t)
            if (t != s) masks.push_back(k.maximal()[t].mask());
        const VertexMask m = k.maximal()[s].mask();
        for (int v : mask_vertices(m)) masks.push_back(m & ~(VertexMask{1} << v));
        out.push_back(Complex::from_masks(k.n(), masks));
    }
    return out;
}

MinimalityResult minimality_check(const Complex& k, const Language& l, const Budget& budget) {
    if (!(l == mon(k.n()))) throw Error("minimality_check supports Mon_n only");
    MinimalityResult r;
    const auto self = decide(k, budget);
    if (self.status == Status::NoGen) {
        r.kind = MinimalityResult::Kind::NotMinimal;
        r.reason = "the complex does not generate";
        return r;
    }
    if (self.status == Status::Unknown) {
        r.reason = "generation of the complex is not confirmed";
        return r;
    }
    bool unknown = false;
    for (const auto& sub : immediate_subcomplexes(k)) {
        auto d = decide(sub, budget);
        if (d.status == Status::Gen) {
            r.kind = MinimalityResult::Kind::NotMinimal;
            r.witness = d.witness->member;
            r.reason = "generating subcomplex " + to_string(d.witness->member);
            r.certificates.clear();
            return r;
        }
        if (d.status == Status::NoGen) {
            r.certificates.push_back(std::move(*d.refutation));
        } else {
            unknown = true;
            r.reason = "undecided subcomplex " + to_string(sub);
        }
    }
    if (unknown) {
        r.certificates.clear();
        return r;
    }
    r.kind = MinimalityResult::Kind::Minimal;
    return r;
}

bool insertion_preserves_minimality(const Complex& k, int i) {
    if (!is_interval_complex(k)) throw Error("insertion_preserves_minimality needs an interval complex");
    const int n = k.n();
    if (i < 0 || i > n) throw Error("insertion index outside [0, n]");
    const int p = mod(i, n), q = mod(i - 1, n);
    bool forward = true, backward = true;
    for (const auto& s : k.maximal()) {
        if (s.contains(p) && !s.contains(q)) forward = false;
        if (s.contains(q) && !s.contains(p)) backward = false;
    }
    return forward || backward;
}

Complex canonical_representative(const Complex& k) {
    Complex best = k;
    std::string best_text = to_string(k);
    for (const auto& g : Symmetry::vertex_group(k.n())) {
        Complex c = g.apply(k);
        std::string t = to_string(c);
        if (t < best_text) {
            best_text = std::move(t);
            best = std::move(c);
        }
    }
    return best;
}

void enumerate_interval_complexes(int n, int max_len, const std::function<void(const Complex&)>& visit, int bound) {
    if (n < 1) throw Error("enumeration needs n >= 1");
    if (n > bound) throw ResourceError("enumeration limited to n <= " + std::to_string(bound));
    std::vector<VertexMask> arcs;
    for (int len = 1; len <= std::min(max_len, n - 1); ++len)
        for (int s = 0; s < n; ++s) arcs.push_back(Interval(n, s, len).mask());
    std::vector<VertexMask> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (!chosen.empty()) {
            Complex k = Complex::from_masks(n, chosen);
            if (to_string(canonical_representative(k)) == to_string(k)) visit(k);
        }
        for (std::size_t t = from; t < arcs.size(); ++t) {
            const VertexMask m = arcs[t];
            if (std::any_of(chosen.begin(), chosen.end(),
                            [&](VertexMask c) { return (c & ~m) == 0 || (m & ~c) == 0; }))
                continue;
            chosen.push_back(m);
            rec(t + 1);
            chosen.pop_back();
        }
    };
    rec(0);
}

std::vector<Complex> enumerate_interval_complexes(int n, int max_len, int bound) {
    std::vector<Complex> out;
    enumerate_interval_complexes(n, max_len, [&](const Complex& k) { out.push_back(k); }, bound);
    return out;
}

std::string to_string(const EnumerationEntry& e) {
    std::ostringstream os;
    auto yes_no = [](Status s) { return s == Status::Gen ? "YES" : s == Status::NoGen ? "NO" : "UNKNOWN"; };
    os << to_string(e.complex) << " | status=" << status_name(e.status) << " | minimal=" << yes_no(e.minimal)
       << " | family=" << (e.family ? to_string(*e.family) : "-");
    return os.str();
}

void enumerate_report(int n, const std::function<void(const EnumerationEntry&)>& visit, const Budget& budget,
                      int bound) {
    enumerate_interval_complexes(
        n, n - 1,
        [&](const Complex& k) {
            if (k.support() != full_mask(n)) return;
            EnumerationEntry e;
            e.complex = k;
            const auto d = decide(k, budget);
            e.status = d.status;
            if (d.status == Status::NoGen) {
                e.minimal = Status::NoGen;
            } else if (d.status == Status::Gen) {
                const auto m = minimality_check(k, mon(n), budget);
                e.minimal = m.kind == MinimalityResult::Kind::Minimal      ? Status::Gen
                            : m.kind == MinimalityResult::Kind::NotMinimal ? Status::NoGen
                                                                           : Status::Unknown;
            }
            if (e.minimal != Status::NoGen)
                if (auto c = classify(k)) e.family = c->id;
            visit(e);
        },
        bound);
}

std::vector<EnumerationEntry> enumerate_minimal(int n, const Budget& budget, int bound) {
    std::vector<EnumerationEntry> out;
    enumerate_report(
        n,
        [&](const EnumerationEntry& e) {
            if (e.minimal != Status::NoGen) out.push_back(e);
        },
        budget, bound);
    return out;
}

}  // namespace monogen
