#include <algorithm>
#include <bit>
#include <sstream>

#include "monogen/prover.hpp"

namespace monogen {

// ---------------------------------------------------------------- InputAssignment

InputAssignment InputAssignment::constant(int inputs, int word) {
    InputAssignment a;
    for (int s = 0; s < inputs; ++s) a = a.with(s, word);
    return a;
}

int InputAssignment::size() const { return std::popcount(mask); }

bool InputAssignment::compatible(const InputAssignment& o) const {
    for (std::uint32_t common = mask & o.mask; common; common &= common - 1) {
        const int s = std::countr_zero(common);
        if (vals[s] != o.vals[s]) return false;
    }
    return true;
}

InputAssignment InputAssignment::unite(const InputAssignment& o) const {
    InputAssignment r = *this;
    for (std::uint32_t m = o.mask & ~mask; m; m &= m - 1) {
        const int s = std::countr_zero(m);
        r.vals[s] = o.vals[s];
    }
    r.mask |= o.mask;
    return r;
}

InputAssignment InputAssignment::restrict_to(std::uint32_t keep) const {
    InputAssignment r;
    r.mask = mask & keep;
    for (std::uint32_t m = r.mask; m; m &= m - 1) {
        const int s = std::countr_zero(m);
        r.vals[s] = vals[s];
    }
    return r;
}

InputAssignment InputAssignment::with(int s, int word) const {
    if (s < 0 || s >= kMaxProverInputs) throw Error("input index out of range");
    InputAssignment r = *this;
    r.mask |= std::uint32_t{1} << s;
    r.vals[s] = static_cast<std::uint8_t>(word);
    return r;
}

bool InputAssignment::extends(const InputAssignment& o) const {
    if (o.mask & ~mask) return false;
    return compatible(o);
}

bool InputAssignment::operator==(const InputAssignment& o) const {
    return mask == o.mask && compatible(o);
}

std::size_t InputAssignment::hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ mask;
    for (std::uint32_t m = mask; m; m &= m - 1) {
        const int s = std::countr_zero(m);
        h = (h ^ (static_cast<std::uint64_t>(vals[s]) + 0x100U * static_cast<unsigned>(s))) * 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
}

std::string_view rule_name(RuleTag r) {
    switch (r) {
        case RuleTag::Axiom: return "AXIOM";
        case RuleTag::Restrict: return "RESTRICT";
        case RuleTag::Join: return "JOIN";
        case RuleTag::Close: return "CLOSE";
    }
    return "?";
}

std::string_view verdict_name(Verdict::Kind k) {
    switch (k) {
        case Verdict::Kind::Conflict: return "CONFLICT";
        case Verdict::Kind::Saturated: return "SATURATED";
        case Verdict::Kind::BudgetExhausted: return "BUDGET";
    }
    return "?";
}

std::uint32_t prover_window_mask(const Complex& k, int i) {
    if (k.size() > static_cast<std::size_t>(kMaxProverInputs)) throw Error("prover supports at most 32 maximal simplices");
    if (i < 0 || i >= k.n()) throw Error("cell outside [0, n-1]");
    std::uint32_t m = 0;
    for (int s : k.star(i)) m |= std::uint32_t{1} << s;
    return m;
}

std::vector<Simplex> prover_window(const Complex& k, int i) {
    std::vector<Simplex> out;
    for (int s : k.star(i)) out.push_back(k.maximal()[static_cast<std::size_t>(s)]);
    return out;
}

// ---------------------------------------------------------------- text form

std::string to_text(const Trace& t, const Complex& k, const Language& l) {
    std::ostringstream os;
    for (const auto& nd : t.nodes) {
        os << '#' << nd.id << " [" << rule_name(nd.rule) << "] parents=";
        for (std::size_t p = 0; p < nd.parents.size(); ++p) os << (p ? "," : "") << nd.parents[p];
        os << " in={";
        bool first = true;
        for (std::uint32_t m = nd.in.mask; m; m &= m - 1) {
            const int s = std::countr_zero(m);
            os << (first ? "" : ",") << to_string(k.maximal()[static_cast<std::size_t>(s)], k.n()) << ':'
               << word_to_string(l.words()[nd.in.vals[s]], l.n());
            first = false;
        }
        os << "} out=" << to_string(nd.out) << '\n';
    }
    if (t.end == Trace::End::Conflict)
        os << "CONFLICT #" << t.conflict_a << " #" << t.conflict_b << " cell=" << t.conflict_cell << '\n';
    else
        os << "SATURATED count=" << t.count << '\n';
    return os.str();
}

namespace {

[[noreturn]] void bad(const std::string& what, std::size_t at) { throw ParseError(what, at); }

int read_int(const std::string& s, std::size_t& pos, std::size_t base) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) bad("expected integer", base + start);
    return std::stoi(s.substr(start, pos - start));
}

void expect(const std::string& s, std::size_t& pos, std::string_view lit, std::size_t base) {
    if (s.compare(pos, lit.size(), lit) != 0) bad("expected '" + std::string(lit) + "'", base + pos);
    pos += lit.size();
}

int simplex_index(const Complex& k, const Simplex& sx) {
    for (std::size_t s = 0; s < k.size(); ++s)
        if (k.maximal()[s] == sx) return static_cast<int>(s);
    return -1;
}

TraceNode parse_node(const std::string& s, std::size_t base, const Complex& k, const Language& l) {
    TraceNode nd;
    std::size_t pos = 0;
    expect(s, pos, "#", base);
    nd.id = read_int(s, pos, base);
    expect(s, pos, " [", base);
    auto close = s.find(']', pos);
    if (close == std::string::npos) bad("unterminated rule tag", base + pos);
    const std::string tag = s.substr(pos, close - pos);
    if (tag == "AXIOM") nd.rule = RuleTag::Axiom;
    else if (tag == "RESTRICT") nd.rule = RuleTag::Restrict;
    else if (tag == "JOIN") nd.rule = RuleTag::Join;
    else if (tag == "CLOSE") nd.rule = RuleTag::Close;
    else bad("unknown rule tag '" + tag + "'", base + pos);
    pos = close + 1;
    expect(s, pos, " parents=", base);
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        nd.parents.push_back(read_int(s, pos, base));
        if (pos < s.size() && s[pos] == ',') ++pos;
    }
    expect(s, pos, " in={", base);
    while (pos < s.size() && s[pos] != '}') {
        const char open = s[pos];
        const char shut = open == '[' ? ']' : open == '{' ? '}' : '\0';
        if (!shut) bad("expected simplex", base + pos);
        auto end = s.find(shut, pos);
        if (end == std::string::npos) bad("unterminated simplex", base + pos);
        Simplex sx = parse_simplex(s.substr(pos, end - pos + 1), k.n());
        const int idx = simplex_index(k, sx);
        if (idx < 0) bad("simplex is not maximal in the complex", base + pos);
        pos = end + 1;
        expect(s, pos, ":", base);
        std::size_t w0 = pos;
        while (pos < s.size() && (s[pos] == '0' || s[pos] == '1')) ++pos;
        if (static_cast<int>(pos - w0) != l.n()) bad("word length differs from the language", base + w0);
        const int wi = l.index_of(word_from_string(s.substr(w0, pos - w0)));
        if (wi < 0) bad("word outside the language", base + w0);
        if (nd.in.defined(idx)) bad("input assigned twice", base + w0);
        nd.in = nd.in.with(idx, wi);
        if (pos < s.size() && s[pos] == ',') ++pos;
    }
    expect(s, pos, "}", base);
    expect(s, pos, " out={", base);
    nd.out = PartialSeq(l.n());
    while (pos < s.size() && s[pos] != '}') {
        const int p = read_int(s, pos, base);
        expect(s, pos, ":", base);
        if (pos >= s.size() || (s[pos] != '0' && s[pos] != '1')) bad("expected bit", base + pos);
        const int b = s[pos++] - '0';
        if (p >= l.n()) bad("output position out of range", base + pos);
        if (nd.out.defined(p)) bad("output position assigned twice", base + pos);
        nd.out = nd.out.with(p, b);
        if (pos < s.size() && s[pos] == ',') ++pos;
    }
    expect(s, pos, "}", base);
    if (pos != s.size()) bad("trailing characters", base + pos);
    return nd;
}

}  // namespace

Trace parse_trace(std::string_view text, const Complex& k, const Language& l) {
    Trace t;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t offset = 0;
    bool ended = false;
    while (std::getline(in, line)) {
        const std::size_t at = offset;
        offset += line.size() + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (ended) bad("content after the terminator", at);
        if (line[0] == '#') {
            t.nodes.push_back(parse_node(line, at, k, l));
        } else if (line.rfind("CONFLICT ", 0) == 0) {
            std::size_t pos = 9;
            expect(line, pos, "#", at);
            t.conflict_a = read_int(line, pos, at);
            expect(line, pos, " #", at);
            t.conflict_b = read_int(line, pos, at);
            expect(line, pos, " cell=", at);
            t.conflict_cell = read_int(line, pos, at);
            if (pos != line.size()) bad("trailing characters", at + pos);
            t.end = Trace::End::Conflict;
            ended = true;
        } else if (line.rfind("SATURATED count=", 0) == 0) {
            std::size_t pos = 16;
            t.count = static_cast<std::size_t>(read_int(line, pos, at));
            if (pos != line.size()) bad("trailing characters", at + pos);
            t.end = Trace::End::Saturated;
            ended = true;
        } else {
            bad("unrecognized line", at);
        }
    }
    if (!ended) bad("missing terminator line", offset);
    return t;
}

// ---------------------------------------------------------------- replay

CheckResult check_trace(const Trace& t, const Complex& k, const Language& l) {
    auto fail = [](std::optional<int> id, std::string msg) { return CheckResult{false, id, std::move(msg)}; };
    if (k.n() != l.n()) return fail(std::nullopt, "complex and language lengths differ");
    if (k.size() > static_cast<std::size_t>(kMaxProverInputs)) return fail(std::nullopt, "too many maximal simplices");
    const int inputs = static_cast<int>(k.size());
    const std::uint32_t all_inputs = inputs == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << inputs) - 1);
    std::vector<std::uint32_t> star;
    for (int i = 0; i < k.n(); ++i) star.push_back(prover_window_mask(k, i));

    std::vector<const TraceNode*> by_id;
    auto lookup = [&](int id) -> const TraceNode* {
        auto it = std::lower_bound(by_id.begin(), by_id.end(), id, [](const TraceNode* a, int v) { return a->id < v; });
        return (it != by_id.end() && (*it)->id == id) ? *it : nullptr;
    };
    for (const auto& nd : t.nodes) {
        const int id = nd.id;
        if (!by_id.empty() && by_id.back()->id >= id) return fail(id, "ids must be strictly increasing");
        if (nd.out.n() != l.n()) return fail(id, "output length differs from the language");
        if (nd.in.mask & ~all_inputs) return fail(id, "input outside the complex");
        for (std::uint32_t m = nd.in.mask; m; m &= m - 1)
            if (nd.in.vals[std::countr_zero(m)] >= l.size()) return fail(id, "input word outside the language");
        std::vector<const TraceNode*> ps;
        for (int p : nd.parents) {
            const TraceNode* q = lookup(p);
            if (!q) return fail(id, "parent #" + std::to_string(p) + " does not precede the node");
            ps.push_back(q);
        }
        switch (nd.rule) {
            case RuleTag::Axiom: {
                if (!ps.empty()) return fail(id, "axiom with parents");
                if (nd.in.mask != all_inputs || inputs == 0) return fail(id, "axiom must assign every input");
                const int w = nd.in.vals[0];
                for (int s = 1; s < inputs; ++s)
                    if (nd.in.vals[s] != w) return fail(id, "axiom inputs must carry one word");
                if (nd.out != PartialSeq::total(l.n(), l.words()[w])) return fail(id, "axiom output must be its word");
                break;
            }
            case RuleTag::Restrict: {
                if (ps.size() != 1) return fail(id, "restriction needs one parent");
                if (nd.out.size() != 1) return fail(id, "restriction output must be a single cell");
                const int cell = std::countr_zero(nd.out.mask());
                if (!ps[0]->out.defined(cell) || ps[0]->out.at(cell) != nd.out.at(cell))
                    return fail(id, "restricted value not present in the parent");
                if (!(nd.in == ps[0]->in.restrict_to(star[cell])))
                    return fail(id, "restricted inputs must be the parent inputs on the window of the cell");
                break;
            }
            case RuleTag::Join: {
                if (ps.size() != 2) return fail(id, "join needs two parents");
                if (!ps[0]->in.compatible(ps[1]->in)) return fail(id, "join of incompatible inputs");
                if (!ps[0]->out.compatible(ps[1]->out)) return fail(id, "join of incompatible outputs");
                if (!(nd.in == ps[0]->in.unite(ps[1]->in))) return fail(id, "join inputs must be the union");
                auto c = monogen::close(ps[0]->out.unite(ps[1]->out), l);
                if (!c) return fail(id, "joined outputs have no extension");
                if (nd.out != *c) return fail(id, "join output must be the closure of the union");
                break;
            }
            case RuleTag::Close: {
                if (ps.size() != 1) return fail(id, "closure needs one parent");
                if (!(nd.in == ps[0]->in)) return fail(id, "closure must keep the inputs");
                auto c = monogen::close(ps[0]->out, l);
                if (!c) return fail(id, "output has no extension");
                if (nd.out != *c) return fail(id, "closure output mismatch");
                break;
            }
        }
        by_id.push_back(&nd);
    }
    if (t.end == Trace::End::Saturated) return {true, std::nullopt, "saturated"};
    const TraceNode* a = lookup(t.conflict_a);
    const TraceNode* b = lookup(t.conflict_b);
    if (!a || !b) return fail(std::nullopt, "conflict references an unknown node");
    if (!a->in.compatible(b->in)) return fail(std::nullopt, "conflicting nodes have incompatible inputs");
    if (t.conflict_cell < 0 || t.conflict_cell >= l.n() ||
        !(a->out.defined(t.conflict_cell) || b->out.defined(t.conflict_cell)))
        return fail(std::nullopt, "conflict cell not in the output domains");
    if (a->out.compatible(b->out) && has_extension(a->out.unite(b->out), l))
        return fail(std::nullopt, "conflicting outputs have a common extension");
    return {true, std::nullopt, "conflict"};
}

CheckResult check_trace(std::string_view text, const Complex& k, const Language& l) {
    try {
        return check_trace(parse_trace(text, k, l), k, l);
    } catch (const ParseError& e) {
        return {false, std::nullopt, e.what()};
    } catch (const Error& e) {
        return {false, std::nullopt, e.what()};
    }
}

// ---------------------------------------------------------------- DerivationBuilder

DerivationBuilder::DerivationBuilder(Complex k, Language l) : k_(std::move(k)), l_(std::move(l)) {
    if (k_.n() != l_.n()) throw Error("complex and language lengths differ");
    for (int i = 0; i < k_.n(); ++i) star_.push_back(prover_window_mask(k_, i));
}

int DerivationBuilder::push(RuleTag r, std::vector<int> parents, InputAssignment in, PartialSeq out) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(TraceNode{id, r, std::move(parents), in, std::move(out)});
    return id;
}

int DerivationBuilder::axiom(Word w) {
    const int wi = l_.index_of(w);
    if (wi < 0) throw Error("axiom word outside the language");
    return push(RuleTag::Axiom, {}, InputAssignment::constant(static_cast<int>(k_.size()), wi),
                PartialSeq::total(l_.n(), w));
}

int DerivationBuilder::restrict_to(int id, int cell) {
    const auto& p = node(id);
    auto v = p.out.at(cell);
    if (!v) throw Error("restriction to a cell outside the output domain");
    return push(RuleTag::Restrict, {id}, p.in.restrict_to(star_[static_cast<std::size_t>(cell)]),
                PartialSeq::single(l_.n(), cell, *v));
}

int DerivationBuilder::join(int a, int b) {
    const auto& x = node(a);
    const auto& y = node(b);
    if (!x.in.compatible(y.in)) throw Error("join of incompatible inputs");
    if (!x.out.compatible(y.out)) throw Error("join of incompatible outputs");
    auto c = monogen::close(x.out.unite(y.out), l_);
    if (!c) throw Error("joined outputs have no extension");
    return push(RuleTag::Join, {a, b}, x.in.unite(y.in), *c);
}

int DerivationBuilder::close(int id) {
    const auto& x = node(id);
    auto c = monogen::close(x.out, l_);
    if (!c) throw Error("output has no extension");
    return push(RuleTag::Close, {id}, x.in, *c);
}

void DerivationBuilder::conflict(int a, int b, int cell) {
    const auto& x = node(a);
    const auto& y = node(b);
    if (!x.in.compatible(y.in)) throw Error("conflict between incompatible inputs");
    if (x.out.compatible(y.out) && has_extension(x.out.unite(y.out), l_))
        throw Error("outputs have a common extension");
    if (!x.out.defined(cell) && !y.out.defined(cell)) throw Error("conflict cell outside the output domains");
    ca_ = a;
    cb_ = b;
    cell_ = cell;
}

Trace DerivationBuilder::trace() const {
    if (ca_ < 0) throw Error("derivation has no conflict");
    std::vector<char> keep(nodes_.size(), 0);
    std::vector<int> stack{ca_, cb_};
    while (!stack.empty()) {
        const int id = stack.back();
        stack.pop_back();
        if (keep[static_cast<std::size_t>(id)]) continue;
        keep[static_cast<std::size_t>(id)] = 1;
        for (int p : nodes_[static_cast<std::size_t>(id)].parents) stack.push_back(p);
    }
    std::vector<int> renumber(nodes_.size(), -1);
    Trace t;
    for (const auto& nd : nodes_) {
        if (!keep[static_cast<std::size_t>(nd.id)]) continue;
        TraceNode c = nd;
        c.id = static_cast<int>(t.nodes.size());
        for (auto& p : c.parents) p = renumber[static_cast<std::size_t>(p)];
        renumber[static_cast<std::size_t>(nd.id)] = c.id;
        t.nodes.push_back(std::move(c));
    }
    t.end = Trace::End::Conflict;
    t.conflict_a = renumber[static_cast<std::size_t>(ca_)];
    t.conflict_b = renumber[static_cast<std::size_t>(cb_)];
    t.conflict_cell = cell_;
    t.count = t.nodes.size();
    return t;
}

}  // namespace monogen
