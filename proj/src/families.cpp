#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "monogen/analysis.hpp"

namespace monogen {

namespace {

int mod(long long a, int n) { return static_cast<int>(((a % n) + n) % n); }

Complex base_k5() { return parse_complex("n=5; [0,2] [1,3] [2,4] [3,1]"); }
Complex base_k7() { return parse_complex("n=7; [0,4] [1,5] [2,6] [4,1] [5,2]"); }
Complex base_k8() { return parse_complex("n=8; [0,5] [2,7] [4,1] [6,3]"); }

Complex base_k6() {
    std::vector<Interval> v;
    for (int s = 0; s < 6; ++s) v.emplace_back(6, s, 4);
    return Complex::from_intervals(6, v);
}

Complex k5_defining(int n, int i, int j) {
    const std::vector<Interval> v{Interval::from_endpoints(1, n - 1, n), Interval::from_endpoints(0, j - 1, n),
                                  Interval::from_endpoints(j + 1, i - 1, n), Interval::from_endpoints(i + 1, 0, n)};
    return Complex::from_intervals(n, v);
}

Complex insert_all(Complex k, const std::vector<int>& positions) {
    for (int p : positions) k = insert_vertex(k, p);
    return k;
}

GenFunction lift_all(GenFunction f, const std::vector<int>& positions) {
    for (int p : positions) f = lift_insert(f, p);
    return f;
}

std::vector<int> k5_schedule(int n, int i, int j) {
    std::vector<int> out;
    for (int t = 0; t < i - 2; ++t) out.push_back(2);
    for (int t = 0; t < j - i - 1; ++t) out.push_back(i + 1);
    for (int t = 0; t < n - j - 2; ++t) out.push_back(j + 1);
    return out;
}

// insertions turning K_8 into the member with a_3 = n, and the rotation back
struct K8Schedule {
    std::vector<int> positions;
    int rotation = 0;
};

K8Schedule k8_schedule(int n, std::array<int, 4> a) {
    const int s = n - a[3];
    for (auto& x : a) x += s;
    const int gaps[4] = {a[0] - 2, a[1] - a[0] - 2, a[2] - a[1] - 2, n - a[2] - 2};
    K8Schedule out;
    int inserted = 0;
    for (int t = 0; t < 4; ++t) {
        for (int c = 0; c < gaps[t]; ++c) out.positions.push_back(2 * t + 1 + inserted);
        inserted += gaps[t];
    }
    out.rotation = mod(-s, n);
    return out;
}

void append_insertions(std::ostringstream& os, const std::vector<int>& v) {
    os << "ins=";
    for (std::size_t t = 0; t < v.size(); ++t) os << (t ? "," : "") << v[t];
}

}  // namespace

std::string to_string(const FamilyId& id) {
    std::ostringstream os;
    switch (id.kind) {
        case FamilyId::Kind::K2:
            os << "K2(n=" << id.n << ",a=" << id.a << ",b=" << id.b << ")";
            break;
        case FamilyId::Kind::K5:
            os << "K5(n=" << id.n << ",i=" << id.i << ",j=" << id.j << ",shift=" << id.shift
               << ",reflect=" << id.reflect << ")";
            break;
        case FamilyId::Kind::K6:
            os << "K6(";
            append_insertions(os, id.insertions);
            os << ")";
            break;
        case FamilyId::Kind::K7:
            os << "K7(shift=" << id.shift << ",reflect=" << id.reflect << ",";
            append_insertions(os, id.insertions);
            os << ")";
            break;
        case FamilyId::Kind::K8:
            os << "K8(n=" << id.n << ",a=" << id.ax[0] << "," << id.ax[1] << "," << id.ax[2] << "," << id.ax[3] << ")";
            break;
    }
    return os.str();
}

void validate(const FamilyId& id) {
    const int n = id.n;
    auto check_insertions = [&](int base) {
        if (n != base + static_cast<int>(id.insertions.size())) throw Error("family length does not match insertions");
        int m = base;
        for (int p : id.insertions) {
            if (p < 0 || p > m) throw Error("insertion position out of range");
            ++m;
        }
    };
    switch (id.kind) {
        case FamilyId::Kind::K2:
            if (n < 2 || id.a < 0 || id.b < 0 || id.a >= n || id.b >= n || id.a == id.b)
                throw Error("K2 needs n >= 2 and distinct a, b in [0, n-1]");
            break;
        case FamilyId::Kind::K5:
            if (n < 5 || !(1 < id.i && id.i < id.j && id.j < n - 1)) throw Error("K5 needs 1 < i < j < n-1");
            if (id.shift < 0 || id.shift >= n) throw Error("K5 shift outside [0, n-1]");
            break;
        case FamilyId::Kind::K6:
            check_insertions(6);
            break;
        case FamilyId::Kind::K7:
            if (id.shift < 0 || id.shift >= 7) throw Error("K7 shift outside [0, 6]");
            check_insertions(7);
            break;
        case FamilyId::Kind::K8:
            if (n < 8) throw Error("K8 needs n >= 8");
            for (int t = 0; t < 3; ++t)
                if (id.ax[t + 1] - id.ax[t] < 2) throw Error("K8 needs a_{t+1} - a_t >= 2");
            if (id.ax[3] - id.ax[0] > n - 2) throw Error("K8 needs a_3 - a_0 <= n - 2");
            break;
    }
}

FamilyId parse_family_id(std::string_view text) {
    const auto open = text.find('(');
    if (open == std::string_view::npos || text.empty() || text.back() != ')')
        throw ParseError("family tag must look like K5(n=7,i=3,j=5)", 0);
    const std::string kind(text.substr(0, open));
    std::map<std::string, std::vector<int>> fields;
    std::string key;
    std::stringstream ss(std::string(text.substr(open + 1, text.size() - open - 2)));
    std::string item;
    std::size_t pos = open + 1;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        std::string value = item;
        if (eq != std::string::npos) {
            key = item.substr(0, eq);
            value = item.substr(eq + 1);
            fields[key];
        }
        if (key.empty()) throw ParseError("value without a field name", pos);
        if (!value.empty()) {
            try {
                std::size_t used = 0;
                fields[key].push_back(std::stoi(value, &used));
                if (used != value.size()) throw ParseError("bad integer '" + value + "'", pos);
            } catch (const std::logic_error&) {
                throw ParseError("bad integer '" + value + "'", pos);
            }
        }
        pos += item.size() + 1;
    }
    auto one = [&](const std::string& k, std::optional<int> fallback = std::nullopt) {
        auto it = fields.find(k);
        if (it == fields.end() || it->second.empty()) {
            if (fallback) return *fallback;
            throw ParseError("missing field '" + k + "'", open);
        }
        if (it->second.size() != 1) throw ParseError("field '" + k + "' takes one value", open);
        return it->second[0];
    };
    auto list = [&](const std::string& k) {
        auto it = fields.find(k);
        return it == fields.end() ? std::vector<int>{} : it->second;
    };
    FamilyId id;
    if (kind == "K2") {
        id = k2_id(one("n"), one("a"), one("b"));
    } else if (kind == "K5") {
        id = k5_id(one("n"), one("i"), one("j"), one("shift", 0), one("reflect", 0) != 0);
    } else if (kind == "K6") {
        id = k6_id(list("ins"));
    } else if (kind == "K7") {
        id = k7_id(one("shift", 0), one("reflect", 0) != 0, list("ins"));
    } else if (kind == "K8") {
        const auto a = list("a");
        if (a.size() != 4) throw ParseError("K8 needs a=a0,a1,a2,a3", open);
        id = k8_id(one("n"), {a[0], a[1], a[2], a[3]});
    } else {
        throw ParseError("unknown family '" + kind + "'", 0);
    }
    validate(id);
    return id;
}

FamilyId k2_id(int n, int a, int b) {
    FamilyId id;
    id.kind = FamilyId::Kind::K2;
    id.n = n;
    id.a = a;
    id.b = b;
    return id;
}

FamilyId k5_id(int n, int i, int j, int shift, bool reflect) {
    FamilyId id;
    id.kind = FamilyId::Kind::K5;
    id.n = n;
    id.i = i;
    id.j = j;
    id.shift = shift;
    id.reflect = reflect;
    return id;
}

FamilyId k6_id(std::vector<int> insertions) {
    FamilyId id;
    id.kind = FamilyId::Kind::K6;
    id.n = 6 + static_cast<int>(insertions.size());
    id.insertions = std::move(insertions);
    return id;
}

FamilyId k7_id(int shift, bool reflect, std::vector<int> insertions) {
    FamilyId id;
    id.kind = FamilyId::Kind::K7;
    id.n = 7 + static_cast<int>(insertions.size());
    id.shift = shift;
    id.reflect = reflect;
    id.insertions = std::move(insertions);
    return id;
}

FamilyId k8_id(int n, std::array<int, 4> a) {
    FamilyId id;
    id.kind = FamilyId::Kind::K8;
    id.n = n;
    id.ax = a;
    return id;
}

Complex family_complex(const FamilyId& id) {
    validate(id);
    const int n = id.n;
    switch (id.kind) {
        case FamilyId::Kind::K2: {
            const VertexMask m[2] = {full_mask(n) & ~(VertexMask{1} << id.a), full_mask(n) & ~(VertexMask{1} << id.b)};
            return Complex::from_masks(n, m);
        }
        case FamilyId::Kind::K5:
            return Symmetry(n, id.shift, id.reflect).apply(k5_defining(n, id.i, id.j));
        case FamilyId::Kind::K6:
            return insert_all(base_k6(), id.insertions);
        case FamilyId::Kind::K7:
            return insert_all(Symmetry(7, id.shift, id.reflect).apply(base_k7()), id.insertions);
        case FamilyId::Kind::K8: {
            const auto& a = id.ax;
            const std::vector<Interval> v{
                Interval::from_endpoints(a[3], a[2] - 1, n), Interval::from_endpoints(a[2], a[1] - 1, n),
                Interval::from_endpoints(a[1], a[0] - 1, n), Interval::from_endpoints(a[0], a[3] - 1, n)};
            return Complex::from_intervals(n, v);
        }
    }
    throw Error("unknown family");
}

Complex k5_family_by_insertions(int n, int i, int j) {
    validate(k5_id(n, i, j));
    return insert_all(Symmetry(5, 3).apply(base_k5()), k5_schedule(n, i, j));
}

Complex k8_family_by_insertions(int n, std::array<int, 4> a) {
    validate(k8_id(n, a));
    const auto s = k8_schedule(n, a);
    return Symmetry(n, s.rotation).apply(insert_all(base_k8(), s.positions));
}

std::optional<GenFunction> family_generator(const FamilyId& id) {
    validate(id);
    const int n = id.n;
    switch (id.kind) {
        case FamilyId::Kind::K2:
            return k2_generator(n, id.a, id.b);
        case FamilyId::Kind::K5: {
            auto f = lift_all(transport(Symmetry(5, 3), builtin("k5")), k5_schedule(n, id.i, id.j));
            return transport(Symmetry(n, id.shift, id.reflect), f);
        }
        case FamilyId::Kind::K6:
            return std::nullopt;
        case FamilyId::Kind::K7:
            return lift_all(transport(Symmetry(7, id.shift, id.reflect), builtin("k7")), id.insertions);
        case FamilyId::Kind::K8: {
            const auto s = k8_schedule(n, id.ax);
            return transport(Symmetry(n, s.rotation), lift_all(builtin("k8"), s.positions));
        }
    }
    return std::nullopt;
}

namespace {

struct Member {
    FamilyId id;
    Complex complex;
};

void insertion_schedules(int base, int depth, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == depth) {
        out.push_back(cur);
        return;
    }
    const int m = base + static_cast<int>(cur.size());
    for (int p = 0; p <= m; ++p) {
        cur.push_back(p);
        insertion_schedules(base, depth, cur, out);
        cur.pop_back();
    }
}

// every member of every family over I_n, including symmetric variants
std::vector<Member> build_members(int n, bool with_symmetries) {
    std::vector<Member> out;
    auto add = [&](FamilyId id) { out.push_back({id, family_complex(id)}); };
    if (n >= 2)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) add(k2_id(n, a, b));
    if (n >= 5)
        for (int i = 2; i < n - 1; ++i)
            for (int j = i + 1; j < n - 1; ++j) {
                if (!with_symmetries) {
                    add(k5_id(n, i, j));
                    continue;
                }
                for (int r = 0; r < 2; ++r)
                    for (int s = 0; s < n; ++s) add(k5_id(n, i, j, s, r == 1));
            }
    const int extra6 = n - 6, extra7 = n - 7;
    if (extra6 >= 0 && extra6 <= kClassifyMaxInsertions) {
        std::vector<std::vector<int>> sched;
        std::vector<int> cur;
        insertion_schedules(6, extra6, cur, sched);
        for (auto& s : sched) add(k6_id(s));
    }
    if (extra7 >= 0 && extra7 <= kClassifyMaxInsertions) {
        std::vector<std::vector<int>> sched;
        std::vector<int> cur;
        insertion_schedules(7, extra7, cur, sched);
        for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 7; ++s) {
                if (!with_symmetries && (r != 0 || s != 0) && extra7 == 0) continue;
                for (auto& ins : sched) add(k7_id(s, r == 1, ins));
            }
    }
    if (n >= 8) {
        const int first_max = with_symmetries ? n - 1 : 0;
        for (int a0 = 0; a0 <= first_max; ++a0)
            for (int a1 = a0 + 2; a1 <= a0 + n - 6; ++a1)
                for (int a2 = a1 + 2; a2 <= a0 + n - 4; ++a2)
                    for (int a3 = a2 + 2; a3 <= a0 + n - 2; ++a3) add(k8_id(n, {a0, a1, a2, a3}));
    }
    return out;
}

const std::vector<Member>& members(int n, bool with_symmetries) {
    static std::mutex mu;
    static std::map<std::pair<int, bool>, std::vector<Member>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(n, with_symmetries);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_members(n, with_symmetries)).first;
    return it->second;
}

}  // namespace

std::vector<FamilyId> family_members(int n, bool with_symmetries) {
    std::vector<FamilyId> out;
    for (const auto& m : members(n, with_symmetries)) out.push_back(m.id);
    return out;
}

std::optional<Classification> classify(const Complex& k) {
    const int n = k.n();
    if (n < 2) return std::nullopt;
    const auto& ms = members(n, false);
    std::map<Complex, std::size_t> index;
    for (std::size_t t = 0; t < ms.size(); ++t) index.emplace(ms[t].complex, t);
    // family order first, then symmetry order
    std::optional<Classification> best;
    std::size_t best_t = ms.size();
    for (const auto& g : Symmetry::vertex_group(n)) {
        auto it = index.find(g.apply(k));
        if (it != index.end() && it->second < best_t) {
            best_t = it->second;
            best = Classification{ms[it->second].id, g};
        }
    }
    return best;
}

std::optional<GenerationWitness> find_generator(const Complex& k) {
    const int n = k.n();
    if (n < 2) return std::nullopt;
    const auto l = mon(n);
    for (const auto& m : members(n, true)) {
        if (!m.complex.subcomplex_of(k)) continue;
        auto f = family_generator(m.id);
        if (!f || !generates(*f, l, k)) continue;
        return GenerationWitness{m.id, m.complex, std::move(*f)};
    }
    return std::nullopt;
}

MuResult mu_bounds(int n, bool certify) {
    if (n < 1) throw Error("mu_bounds needs n >= 1");
    MuResult r;
    r.n = n;
    r.lower = (3 * n + 1) / 4;
    r.upper = (3 * n + 3) / 4;
    auto largest = [](const Complex& k) {
        int m = 0;
        for (const auto& s : k.maximal()) m = std::max(m, s.size());
        return m;
    };
    if (n == 1) {
        r.witness = parse_complex("n=1; {0}");
    } else if (n <= 4) {
        r.witness_family = k2_id(n, 0, 1);
    } else if (n <= 6) {
        r.witness_family = k5_id(n, 2, 3);
    } else if (n == 7) {
        r.witness_family = k7_id();
    } else {
        const int k = r.upper, d = n - k;
        r.witness_family = k8_id(n, {d, 2 * d, 3 * d, 4 * d});
    }
    if (r.witness_family) r.witness = family_complex(*r.witness_family);
    r.witness_size = largest(r.witness);
    if (r.witness_size == r.lower) r.exact = r.lower;
    if (certify && r.lower >= 2) r.certificate = refute_short_intervals(n);
    return r;
}

}  // namespace monogen
