#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_set>

#include "monogen/prover.hpp"

namespace monogen {

namespace {

struct Node {
    RuleTag rule;
    int p0 = -1;
    int p1 = -1;
    InputAssignment in;
    Word omask = 0;
    Word obits = 0;
};

struct FactKey {
    int cell;
    int value;
    InputAssignment in;
    bool operator==(const FactKey& o) const { return cell == o.cell && value == o.value && in == o.in; }
};

struct FactKeyHash {
    std::size_t operator()(const FactKey& k) const {
        return k.in.hash() * 31U + static_cast<std::size_t>(k.cell * 2 + k.value);
    }
};

struct Fact {
    int node;
    int cell;
    int value;
    bool alive = true;
};

struct Multi {
    int node;
    InputAssignment in;
    Word omask;
    Word obits;
};

// Closure of a small partial word: absent, or the full closed output.
struct Closure {
    bool present = false;
    Word mask = 0;
    Word bits = 0;
};

class Engine {
public:
    Engine(const Complex& k, const Language& l, const ProverOptions& opt) : k_(k), l_(l), opt_(opt), n_(l.n()) {
        if (k.n() != l.n()) throw Error("complex and language lengths differ");
        if (k.size() > static_cast<std::size_t>(kMaxProverInputs))
            throw Error("prover supports at most 32 maximal simplices");
        if (l.size() > static_cast<std::size_t>(kMaxProverWords)) throw Error("prover supports at most 255 words");
        for (int i = 0; i < n_; ++i) star_.push_back(prover_window_mask(k, i));
        single_.resize(static_cast<std::size_t>(2 * n_));
        pair_.resize(static_cast<std::size_t>(4 * n_ * n_));
        for (int i = 0; i < n_; ++i)
            for (int v = 0; v < 2; ++v) {
                single_[idx1(i, v)] = closure(PartialSeq::single(n_, i, v));
                for (int j = 0; j < n_; ++j)
                    for (int w = 0; w < 2; ++w)
                        if (i != j) pair_[idx2(i, v, j, w)] = closure(PartialSeq::single(n_, i, v).with(j, w));
            }
        facts_by_.resize(static_cast<std::size_t>(2 * n_));
        processed_by_.resize(static_cast<std::size_t>(2 * n_));
    }

    Verdict run() {
        try {
            for (std::size_t w = 0; w < l_.size(); ++w) {
                const Word word = l_.words()[w];
                const int ax = push({RuleTag::Axiom, -1, -1,
                                     InputAssignment::constant(static_cast<int>(k_.size()), static_cast<int>(w)),
                                     PartialSeq::full_word_mask(n_), word});
                for (int i = 0; i < n_; ++i) add_fact(ax, i, static_cast<int>((word >> i) & 1U));
            }
            while (!queue_.empty()) {
                const auto [is_multi, idx] = queue_.front();
                queue_.pop_front();
                if (is_multi) process_multi(idx);
                else process_fact(idx);
            }
        } catch (const Stop&) {
        }
        return finish();
    }

private:
    struct Stop {};

    std::size_t idx1(int i, int v) const { return static_cast<std::size_t>(2 * i + v); }
    std::size_t idx2(int i, int v, int j, int w) const {
        return static_cast<std::size_t>(((2 * i + v) * n_ + j) * 2 + w);
    }

    Closure closure(const PartialSeq& p) const {
        auto c = monogen::close(p, l_);
        if (!c) return {};
        return {true, c->mask(), c->bits()};
    }

    int push(Node nd) {
        if (nodes_.size() >= opt_.budget.max_constraints) {
            exhausted_ = "max_constraints=" + std::to_string(opt_.budget.max_constraints);
            throw Stop{};
        }
        nodes_.push_back(nd);
        return static_cast<int>(nodes_.size()) - 1;
    }

    void conflict(int a, int b, int cell) {
        conflict_ = {a, b, cell};
        throw Stop{};
    }

    bool subsumed(int cell, int value, const InputAssignment& a) const {
        if (!opt_.subsumption) return seen_.count({cell, value, a}) > 0;
        for (std::uint32_t sub = a.mask;; sub = (sub - 1) & a.mask) {
            if (seen_.count({cell, value, a.restrict_to(sub)})) return true;
            if (sub == 0) break;
        }
        return false;
    }

    bool would_add(int cell, int value, const InputAssignment& a) const {
        if (opt_.budget.max_input_domain >= 0 && a.size() > opt_.budget.max_input_domain) return false;
        return !subsumed(cell, value, a);
    }

    void add_fact(int parent, int cell, int value) {
        const InputAssignment a = nodes_[static_cast<std::size_t>(parent)].in.restrict_to(star_[static_cast<std::size_t>(cell)]);
        if (opt_.budget.max_input_domain >= 0 && a.size() > opt_.budget.max_input_domain) {
            dropped_ = true;
            return;
        }
        if (subsumed(cell, value, a)) return;
        const Word bit = Word{1} << cell;
        const int node = push({RuleTag::Restrict, parent, -1, a, bit, value ? bit : 0});
        seen_.insert({cell, value, a});
        auto& same = facts_by_[idx1(cell, value)];
        if (opt_.subsumption) {
            for (int f : same) {
                auto& old = facts_[static_cast<std::size_t>(f)];
                if (old.alive && nodes_[static_cast<std::size_t>(old.node)].in.extends(a)) old.alive = false;
            }
        }
        for (int f : facts_by_[idx1(cell, 1 - value)]) {
            const auto& other = facts_[static_cast<std::size_t>(f)];
            if (other.alive && nodes_[static_cast<std::size_t>(other.node)].in.compatible(a)) conflict(other.node, node, cell);
        }
        const int id = static_cast<int>(facts_.size());
        facts_.push_back({node, cell, value, true});
        same.push_back(id);
        queue_.push_back({false, id});
    }

    // an existing multi with weaker inputs and stronger output subsumes
    bool multi_subsumed(const InputAssignment& in, Word omask, Word obits) const {
        for (const auto& m : multis_)
            if (in.extends(m.in) && (omask & ~m.omask) == 0 && ((obits ^ m.obits) & omask) == 0) return true;
        return false;
    }

    void add_multi(int node) {
        const auto& nd = nodes_[static_cast<std::size_t>(node)];
        if (std::popcount(nd.omask) < 2) return;
        if (multi_subsumed(nd.in, nd.omask, nd.obits)) return;
        const int id = static_cast<int>(multis_.size());
        multis_.push_back({node, nd.in, nd.omask, nd.obits});
        queue_.push_back({true, id});
    }

    void emit_forced(int join, Word newly, Word bits) {
        for (Word m = newly; m; m &= m - 1) {
            const int k = std::countr_zero(m);
            add_fact(join, k, static_cast<int>((bits >> k) & 1U));
        }
    }

    void process_fact(int fid) {
        const Fact x = facts_[static_cast<std::size_t>(fid)];
        if (!x.alive) return;
        const InputAssignment ax = nodes_[static_cast<std::size_t>(x.node)].in;
        const Word xbit = Word{1} << x.cell;

        const Closure& s = single_[idx1(x.cell, x.value)];
        if (!s.present) conflict(x.node, x.node, x.cell);
        if (s.mask & ~xbit) {
            Word newly = 0;
            for (Word m = s.mask & ~xbit; m; m &= m - 1) {
                const int k = std::countr_zero(m);
                if (would_add(k, static_cast<int>((s.bits >> k) & 1U), ax.restrict_to(star_[static_cast<std::size_t>(k)])))
                    newly |= Word{1} << k;
            }
            if (newly) {
                const int c = push({RuleTag::Close, x.node, -1, ax, s.mask, s.bits});
                emit_forced(c, newly, s.bits);
            }
        }

        for (int j = 0; j < n_; ++j) {
            if (j == x.cell) continue;
            for (int w = 0; w < 2; ++w) {
                const Closure& pc = pair_[idx2(x.cell, x.value, j, w)];
                const Word base = xbit | (Word{1} << j);
                const Word extra = pc.present ? (pc.mask & ~base) : 0;
                if (pc.present && extra == 0 && !opt_.full_join) continue;
                // facts may be added to the list while iterating
                const auto& list = processed_by_[idx1(j, w)];
                for (std::size_t t = 0; t < list.size(); ++t) {
                    const Fact& y = facts_[static_cast<std::size_t>(list[t])];
                    if (!y.alive) continue;
                    const InputAssignment& ay = nodes_[static_cast<std::size_t>(y.node)].in;
                    if (!ax.compatible(ay)) continue;
                    if (!pc.present) conflict(y.node, x.node, x.cell);
                    const InputAssignment u = ax.unite(ay);
                    Word newly = 0;
                    for (Word m = extra; m; m &= m - 1) {
                        const int k = std::countr_zero(m);
                        if (would_add(k, static_cast<int>((pc.bits >> k) & 1U), u.restrict_to(star_[static_cast<std::size_t>(k)])))
                            newly |= Word{1} << k;
                    }
                    if (!newly && (!opt_.full_join || multi_subsumed(u, pc.mask, pc.bits))) continue;
                    const int jn = push({RuleTag::Join, y.node, x.node, u, pc.mask, pc.bits});
                    emit_forced(jn, newly, pc.bits);
                    if (opt_.full_join) add_multi(jn);
                }
            }
        }
        if (opt_.full_join) {
            for (std::size_t t = 0; t < processed_multis_.size(); ++t) join_multi_fact(processed_multis_[t], fid);
        }
        processed_by_[idx1(x.cell, x.value)].push_back(fid);
    }

    void process_multi(int mid) {
        for (std::size_t c = 0; c < processed_by_.size(); ++c) {
            const auto& list = processed_by_[c];
            for (std::size_t t = 0; t < list.size(); ++t) join_multi_fact(mid, list[t]);
        }
        processed_multis_.push_back(mid);
    }

    void join_multi_fact(int mid, int fid) {
        const Multi m = multis_[static_cast<std::size_t>(mid)];
        const Fact& x = facts_[static_cast<std::size_t>(fid)];
        if (!x.alive) return;
        const InputAssignment& ax = nodes_[static_cast<std::size_t>(x.node)].in;
        if (!ax.compatible(m.in)) return;
        const Word xbit = Word{1} << x.cell;
        if (m.omask & xbit) {
            if (((m.obits >> x.cell) & 1U) != static_cast<unsigned>(x.value)) conflict(m.node, x.node, x.cell);
            return;
        }
        PartialSeq p(n_, m.omask, m.obits);
        auto c = closure(p.with(x.cell, x.value));
        if (!c.present) conflict(m.node, x.node, x.cell);
        const InputAssignment u = m.in.unite(ax);
        const Word extra = c.mask & ~(m.omask | xbit);
        Word newly = 0;
        for (Word e = extra; e; e &= e - 1) {
            const int k = std::countr_zero(e);
            if (would_add(k, static_cast<int>((c.bits >> k) & 1U), u.restrict_to(star_[static_cast<std::size_t>(k)])))
                newly |= Word{1} << k;
        }
        if (!newly && multi_subsumed(u, c.mask, c.bits)) return;
        const int jn = push({RuleTag::Join, m.node, x.node, u, c.mask, c.bits});
        emit_forced(jn, newly, c.bits);
        add_multi(jn);
    }

    TraceNode to_trace_node(int id) const {
        const Node& nd = nodes_[static_cast<std::size_t>(id)];
        TraceNode t;
        t.id = id;
        t.rule = nd.rule;
        if (nd.p0 >= 0) t.parents.push_back(nd.p0);
        if (nd.p1 >= 0) t.parents.push_back(nd.p1);
        t.in = nd.in;
        t.out = PartialSeq(n_, nd.omask, nd.obits);
        return t;
    }

    Verdict finish() {
        Verdict v;
        v.count = nodes_.size();
        if (conflict_) {
            auto [a, b, cell] = *conflict_;
            std::vector<char> keep(nodes_.size(), 0);
            std::vector<int> stack{a, b};
            while (!stack.empty()) {
                const int id = stack.back();
                stack.pop_back();
                if (keep[static_cast<std::size_t>(id)]) continue;
                keep[static_cast<std::size_t>(id)] = 1;
                const Node& nd = nodes_[static_cast<std::size_t>(id)];
                if (nd.p0 >= 0) stack.push_back(nd.p0);
                if (nd.p1 >= 0) stack.push_back(nd.p1);
            }
            std::vector<int> renumber(nodes_.size(), -1);
            for (std::size_t id = 0; id < nodes_.size(); ++id) {
                if (!keep[id]) continue;
                TraceNode t = to_trace_node(static_cast<int>(id));
                t.id = static_cast<int>(v.trace.nodes.size());
                for (auto& p : t.parents) p = renumber[static_cast<std::size_t>(p)];
                renumber[id] = t.id;
                v.trace.nodes.push_back(std::move(t));
            }
            v.kind = Verdict::Kind::Conflict;
            v.trace.end = Trace::End::Conflict;
            v.trace.conflict_a = renumber[static_cast<std::size_t>(a)];
            v.trace.conflict_b = renumber[static_cast<std::size_t>(b)];
            v.trace.conflict_cell = cell;
            v.trace.count = v.trace.nodes.size();
            return v;
        }
        if (!exhausted_.empty() || dropped_) {
            v.kind = Verdict::Kind::BudgetExhausted;
            v.limits = !exhausted_.empty() ? exhausted_
                                           : "max_input_domain=" + std::to_string(opt_.budget.max_input_domain);
        } else {
            v.kind = Verdict::Kind::Saturated;
        }
        v.trace.end = Trace::End::Saturated;
        v.trace.count = nodes_.size();
        if (opt_.keep_all)
            for (std::size_t id = 0; id < nodes_.size(); ++id) v.trace.nodes.push_back(to_trace_node(static_cast<int>(id)));
        return v;
    }

    const Complex& k_;
    const Language& l_;
    ProverOptions opt_;
    int n_;
    std::vector<std::uint32_t> star_;
    std::vector<Closure> single_;
    std::vector<Closure> pair_;

    std::vector<Node> nodes_;
    std::vector<Fact> facts_;
    std::vector<Multi> multis_;
    std::vector<std::vector<int>> facts_by_;
    std::vector<std::vector<int>> processed_by_;
    std::vector<int> processed_multis_;
    std::unordered_set<FactKey, FactKeyHash> seen_;
    std::deque<std::pair<bool, int>> queue_;

    std::optional<std::tuple<int, int, int>> conflict_;
    std::string exhausted_;
    bool dropped_ = false;
};

}  // namespace

Verdict saturate(const Complex& k, const Language& l, const ProverOptions& options) {
    Engine e(k, l, options);
    return e.run();
}

}  // namespace monogen
