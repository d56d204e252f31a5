#include "monogen/genfunc.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace monogen {

// ---------------------------------------------------------------- Alphabet

int Alphabet::size() const {
    switch (kind_) {
        case Kind::Bit: return 2;
        case Kind::Pair: return 4;
        case Kind::Words: return static_cast<int>(lang_->size());
    }
    return 0;
}

const Language& Alphabet::language() const {
    if (!lang_) throw Error("alphabet is not word-valued");
    return *lang_;
}

std::string Alphabet::name() const {
    switch (kind_) {
        case Kind::Bit: return "bit";
        case Kind::Pair: return "pair";
        case Kind::Words: break;
    }
    const int n = lang_->n();
    if (*lang_ == mon(n)) return "mon:" + std::to_string(n);
    if (*lang_ == u(n)) return "u:" + std::to_string(n);
    std::string s = "words:";
    for (std::size_t t = 0; t < lang_->words().size(); ++t) {
        if (t) s += '/';
        s += word_to_string(lang_->words()[t], n);
    }
    return s;
}

Alphabet Alphabet::parse(std::string_view text) {
    if (text == "bit") return bit();
    if (text == "pair") return pair();
    if (text.rfind("mon:", 0) == 0 || text.rfind("u:", 0) == 0) return words(language_from_selector(text));
    if (text.rfind("words:", 0) == 0) {
        std::vector<Word> ws;
        int n = -1;
        std::string rest(text.substr(6));
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, '/')) {
            if (n < 0) n = static_cast<int>(item.size());
            if (static_cast<int>(item.size()) != n) throw ParseError("words of different lengths in alphabet", 6);
            ws.push_back(word_from_string(item));
        }
        if (n < 0) throw ParseError("empty word alphabet", 6);
        return words(Language(n, std::move(ws)));
    }
    throw ParseError("unknown alphabet '" + std::string(text) + "'", 0);
}

// ---------------------------------------------------------------- GenFunction

namespace {

std::size_t table_size(const std::vector<InputCell>& inputs, const std::vector<int>& window) {
    std::size_t s = 1;
    for (int j : window) {
        s *= static_cast<std::size_t>(inputs[j].alphabet.size());
        if (s > (std::size_t{1} << 32)) throw ResourceError("local table too large");
    }
    return s;
}

std::size_t table_index(const std::vector<InputCell>& inputs, const std::vector<int>& window,
                        std::span<const int> x) {
    std::size_t idx = 0;
    for (int j : window) idx = idx * static_cast<std::size_t>(inputs[j].alphabet.size()) + static_cast<std::size_t>(x[j]);
    return idx;
}

}  // namespace

GenFunction::GenFunction(int out_n, std::vector<InputCell> inputs, std::vector<OutputCell> cells)
    : out_n_(out_n), inputs_(std::move(inputs)), cells_(std::move(cells)) {
    if (out_n < 1 || out_n > kMaxWordLength) throw Error("output length must lie in [1, 32]");
    if (static_cast<int>(cells_.size()) != out_n) throw Error("one output cell per output position required");
    if (inputs_.size() > 64) throw Error("at most 64 input cells supported");
    std::set<std::string> names;
    for (const auto& in : inputs_) {
        if (in.name.empty() || !names.insert(in.name).second) throw Error("input names must be nonempty and distinct");
    }
    for (auto& c : cells_) {
        for (int j : c.window)
            if (j < 0 || j >= static_cast<int>(inputs_.size())) throw Error("window references an unknown input");
        if (!std::is_sorted(c.window.begin(), c.window.end()) ||
            std::adjacent_find(c.window.begin(), c.window.end()) != c.window.end())
            throw Error("windows must be strictly increasing");
        if (c.table.size() != table_size(inputs_, c.window)) throw Error("local table is not total over its window");
        for (auto b : c.table)
            if (b > 1) throw Error("local table entries must be bits");
    }
}

GenFunction GenFunction::compile(int out_n, std::vector<InputCell> inputs, std::vector<std::vector<int>> windows,
                                 const std::function<int(int, const InputValues&)>& rule) {
    if (static_cast<int>(windows.size()) != out_n) throw Error("one window per output cell required");
    std::vector<OutputCell> cells;
    for (int i = 0; i < out_n; ++i) {
        auto& w = windows[static_cast<std::size_t>(i)];
        std::sort(w.begin(), w.end());
        w.erase(std::unique(w.begin(), w.end()), w.end());
        OutputCell c{w, {}};
        const std::size_t size = table_size(inputs, w);
        c.table.resize(size);
        InputValues x(inputs.size(), 0);
        for (std::size_t idx = 0; idx < size; ++idx) {
            std::size_t rest = idx;
            for (auto it = w.rbegin(); it != w.rend(); ++it) {
                const auto radix = static_cast<std::size_t>(inputs[*it].alphabet.size());
                x[*it] = static_cast<int>(rest % radix);
                rest /= radix;
            }
            c.table[idx] = static_cast<std::uint8_t>(rule(i, x) ? 1 : 0);
        }
        cells.push_back(std::move(c));
    }
    return GenFunction(out_n, std::move(inputs), std::move(cells));
}

int GenFunction::input_index(std::string_view name) const {
    for (std::size_t j = 0; j < inputs_.size(); ++j)
        if (inputs_[j].name == name) return static_cast<int>(j);
    return -1;
}

int GenFunction::evaluate_cell(int i, std::span<const int> x) const {
    const auto& c = cells_[static_cast<std::size_t>(i)];
    return c.table[table_index(inputs_, c.window, x)];
}

Word GenFunction::evaluate(std::span<const int> x) const {
    if (x.size() != inputs_.size()) throw Error("input assignment has the wrong arity");
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] < 0 || x[j] >= inputs_[j].alphabet.size()) throw Error("input value outside its alphabet");
    Word w = 0;
    for (int i = 0; i < out_n_; ++i)
        if (evaluate_cell(i, x)) w |= Word{1} << i;
    return w;
}

std::optional<std::size_t> GenFunction::input_space_size(std::size_t bound) const {
    std::size_t s = 1;
    for (const auto& in : inputs_) {
        s *= static_cast<std::size_t>(in.alphabet.size());
        if (s > bound) return std::nullopt;
    }
    return s;
}

void GenFunction::for_each_input(const std::function<void(const InputValues&)>& visit, std::size_t bound) const {
    if (!input_space_size(bound)) throw ResourceError("input space exceeds the configured bound");
    InputValues x(inputs_.size(), 0);
    while (true) {
        visit(x);
        std::size_t j = inputs_.size();
        while (j > 0) {
            --j;
            if (++x[j] < inputs_[j].alphabet.size()) break;
            x[j] = 0;
            if (j == 0) return;
        }
        if (inputs_.empty()) return;
    }
}

// ---------------------------------------------------------------- windows, complex, image

std::vector<int> VisibilityDiagram::window(int i) const { return mask_vertices(rows[static_cast<std::size_t>(i)]); }

VertexMask VisibilityDiagram::readers(int j) const {
    VertexMask m = 0;
    for (int i = 0; i < out_n; ++i)
        if (at(i, j)) m |= VertexMask{1} << i;
    return m;
}

VisibilityDiagram essential_windows(const GenFunction& f, std::size_t bound) {
    VisibilityDiagram d{f.out_n(), static_cast<int>(f.inputs().size()), {}};
    for (const auto& c : f.cells()) {
        if (c.table.size() > bound) throw ResourceError("local table exceeds the configured bound");
        std::uint64_t row = 0;
        // stride of window position t in the mixed-radix index
        std::vector<std::size_t> stride(c.window.size(), 1);
        for (std::size_t t = c.window.size(); t-- > 1;)
            stride[t - 1] = stride[t] * static_cast<std::size_t>(f.inputs()[c.window[t]].alphabet.size());
        for (std::size_t t = 0; t < c.window.size(); ++t) {
            const auto radix = static_cast<std::size_t>(f.inputs()[c.window[t]].alphabet.size());
            bool essential = false;
            for (std::size_t idx = 0; idx < c.table.size() && !essential; ++idx) {
                const std::size_t digit = (idx / stride[t]) % radix;
                if (digit == 0) continue;
                if (c.table[idx] != c.table[idx - digit * stride[t]]) essential = true;
            }
            if (essential) row |= std::uint64_t{1} << c.window[t];
        }
        d.rows.push_back(row);
    }
    return d;
}

Complex comm_complex(const GenFunction& f, std::size_t bound) {
    auto d = essential_windows(f, bound);
    std::vector<VertexMask> masks;
    for (int j = 0; j < d.in_n; ++j) masks.push_back(d.readers(j));
    return Complex::from_masks(f.out_n(), masks);
}

std::vector<Word> image_words(const GenFunction& f, std::size_t bound) {
    std::set<Word> seen;
    f.for_each_input([&](const InputValues& x) { seen.insert(f.evaluate(x)); }, bound);
    return {seen.begin(), seen.end()};
}

Language image(const GenFunction& f, std::size_t bound) { return Language(f.out_n(), image_words(f, bound)); }

bool generates(const GenFunction& f, const Language& l, const Complex& k, std::size_t bound) {
    if (f.out_n() != l.n() || l.n() != k.n()) return false;
    auto img = image_words(f, bound);
    std::vector<Word> want(l.words().begin(), l.words().end());
    std::sort(want.begin(), want.end());
    return img == want && comm_complex(f, bound).subcomplex_of(k);
}

// ---------------------------------------------------------------- builtins

namespace {

int maj(int x, int y, int z) { return x + y + z >= 2 ? 1 : 0; }

std::vector<InputCell> bit_inputs(std::initializer_list<const char*> names) {
    std::vector<InputCell> out;
    for (const char* n : names) out.push_back({n, Alphabet::bit()});
    return out;
}

GenFunction make_k5() {
    // a b c d e -> A B C D E
    auto rule = [](int cell, const InputValues& x) {
        const int a = x[0], b = x[1], c = x[2], d = x[3], e = x[4];
        const int A = maj(1 - e, a, b), E = maj(d, e, 1 - a);
        switch (cell) {
            case 0: return A;
            case 1: return maj(A, b, c);
            case 2: return maj(b, c, d);
            case 3: return maj(c, d, E);
            default: return E;
        }
    };
    return GenFunction::compile(5, bit_inputs({"a", "b", "c", "d", "e"}),
                                {{0, 1, 4}, {0, 1, 2, 4}, {1, 2, 3}, {0, 2, 3, 4}, {0, 3, 4}}, rule);
}

GenFunction make_k7() {
    // inputs a b d f g at positions 0 1 3 5 6
    auto rule = [](int cell, const InputValues& x) {
        const int a = x[0], b = x[1], d = x[2], f = x[3], g = x[4];
        const int A = maj(1 - g, a, b), D = maj(b, d, f), G = maj(f, g, 1 - a);
        switch (cell) {
            case 0: return A;
            case 1: return maj(A, b, d);
            case 2: return maj(a, b, D);
            case 3: return D;
            case 4: return maj(D, f, g);
            case 5: return maj(d, f, G);
            default: return G;
        }
    };
    return GenFunction::compile(7, bit_inputs({"a", "b", "d", "f", "g"}),
                                {{0, 1, 4}, {0, 1, 2, 4}, {0, 1, 2, 3}, {1, 2, 3}, {1, 2, 3, 4}, {0, 2, 3, 4}, {0, 3, 4}},
                                rule);
}

bool constant_block(int v) { return v == 0 || v == 3; }

int rho(int x, int y, int z) {
    const int k = constant_block(x) + constant_block(y) + constant_block(z);
    if (k == 0 || k == 3) {
        const int p = maj(x >> 1, y >> 1, z >> 1);
        return p ? 3 : 0;
    }
    if (k == 1) return constant_block(x) ? x : constant_block(y) ? y : z;
    if (constant_block(y)) return y;
    return ((x >> 1) << 1) | (z >> 1);
}

GenFunction make_k8() {
    std::vector<InputCell> inputs{{"ab", Alphabet::pair()}, {"cd", Alphabet::pair()}, {"ef", Alphabet::pair()},
                                  {"gh", Alphabet::pair()}};
    auto rule = [](int cell, const InputValues& x) {
        const int ab = x[0], cd = x[1], ef = x[2], gh = x[3];
        int block = 0;
        switch (cell / 2) {
            case 0: block = rho(3 - gh, ab, cd); break;
            case 1: block = rho(ab, cd, ef); break;
            case 2: block = rho(cd, ef, gh); break;
            default: block = rho(ef, gh, 3 - ab); break;
        }
        return cell % 2 == 0 ? (block >> 1) : (block & 1);
    };
    return GenFunction::compile(8, std::move(inputs),
                                {{0, 1, 3}, {0, 1, 3}, {0, 1, 2}, {0, 1, 2}, {1, 2, 3}, {1, 2, 3}, {0, 2, 3}, {0, 2, 3}},
                                rule);
}

std::string fresh_name(const GenFunction& f, const std::string& base) {
    std::string name = base;
    for (int t = 1; f.input_index(name) >= 0; ++t) name = base + std::to_string(t);
    return name;
}

}  // namespace

GenFunction builtin(std::string_view name) {
    if (name == "k5") return make_k5();
    if (name == "k7") return make_k7();
    if (name == "k8") return make_k8();
    throw Error("unknown builtin '" + std::string(name) + "'");
}

GenFunction split_pairs(const GenFunction& f) {
    std::vector<InputCell> inputs;
    std::vector<std::vector<int>> expand(f.inputs().size());
    for (std::size_t j = 0; j < f.inputs().size(); ++j) {
        const auto& in = f.inputs()[j];
        if (in.alphabet.kind() == Alphabet::Kind::Pair) {
            std::string n0 = in.name.size() == 2 ? in.name.substr(0, 1) : in.name + "0";
            std::string n1 = in.name.size() == 2 ? in.name.substr(1, 1) : in.name + "1";
            expand[j] = {static_cast<int>(inputs.size()), static_cast<int>(inputs.size()) + 1};
            inputs.push_back({n0, Alphabet::bit()});
            inputs.push_back({n1, Alphabet::bit()});
        } else {
            expand[j] = {static_cast<int>(inputs.size())};
            inputs.push_back(in);
        }
    }
    std::vector<std::vector<int>> windows;
    for (const auto& c : f.cells()) {
        std::vector<int> w;
        for (int j : c.window) w.insert(w.end(), expand[j].begin(), expand[j].end());
        windows.push_back(w);
    }
    auto rule = [&](int cell, const InputValues& x) {
        InputValues old(f.inputs().size());
        for (std::size_t j = 0; j < old.size(); ++j)
            old[j] = expand[j].size() == 2 ? 2 * x[expand[j][0]] + x[expand[j][1]] : x[expand[j][0]];
        return f.evaluate_cell(cell, old);
    };
    return GenFunction::compile(f.out_n(), std::move(inputs), std::move(windows), rule);
}

GenFunction identity(int n) {
    std::vector<InputCell> inputs;
    std::vector<std::vector<int>> windows;
    for (int i = 0; i < n; ++i) {
        inputs.push_back({"x" + std::to_string(i), Alphabet::bit()});
        windows.push_back({i});
    }
    return GenFunction::compile(n, std::move(inputs), std::move(windows),
                                [](int cell, const InputValues& x) { return x[cell]; });
}

GenFunction k2_generator(int n, int a, int b) {
    if (n < 2) throw Error("k2_generator: n must be at least 2");
    if (a < 0 || b < 0 || a >= n || b >= n) throw Error("k2_generator: positions out of range");
    if (a == b) throw Error("k2_generator: positions must differ");
    auto lang = mon(n);
    std::vector<InputCell> inputs{{"p", Alphabet::words(lang)}, {"q", Alphabet::words(lang)}};
    std::vector<std::vector<int>> windows;
    for (int i = 0; i < n; ++i) windows.push_back(i == a ? std::vector<int>{0} : i == b ? std::vector<int>{1} : std::vector<int>{0, 1});
    const int hi = std::max(a, b), lo = std::min(a, b);
    auto rule = [lang, a, b, hi, lo](int cell, const InputValues& x) {
        const Word p = lang.words()[static_cast<std::size_t>(x[0])];
        const Word q = lang.words()[static_cast<std::size_t>(x[1])];
        const int pa = (p >> a) & 1U, pb = (p >> b) & 1U, qb = (q >> b) & 1U;
        if (cell == a) return pa;
        if (cell == b) return qb;
        if (qb == pb) return static_cast<int>((p >> cell) & 1U);
        if (pa == qb) return pa;
        const int v_lo = lo == a ? pa : qb, v_hi = hi == a ? pa : qb;
        return cell < hi ? v_lo : v_hi;
    };
    return GenFunction::compile(n, std::move(inputs), std::move(windows), rule);
}

std::optional<Word> mon_precondition_witness(const GenFunction& f) {
    auto m = mon(f.out_n());
    auto img = image_words(f);
    for (Word w : img)
        if (!m.contains(w)) return w;
    for (Word w : m.words())
        if (!std::binary_search(img.begin(), img.end(), w)) return w;
    return std::nullopt;
}

GenFunction lift_insert(const GenFunction& f, int i) {
    const int n = f.out_n();
    if (i < 0 || i > n) throw Error("lift_insert: position outside [0, n]");
    if (n + 1 > kMaxWordLength) throw Error("lift_insert: output length would exceed 32");
    if (auto w = mon_precondition_witness(f))
        throw Error("lift_insert: function does not generate Mon_n (witness " + word_to_string(*w, n) + ")");
    std::vector<InputCell> inputs = f.inputs();
    const int fresh = static_cast<int>(inputs.size());
    inputs.push_back({fresh_name(f, "p"), Alphabet::bit()});
    const int left = ((i - 1) % n + n) % n, right = i % n;
    const bool edge = (i == 0 || i == n);
    std::vector<std::vector<int>> windows;
    for (int c = 0; c <= n; ++c) {
        if (c < i) {
            windows.push_back(f.cells()[static_cast<std::size_t>(c)].window);
        } else if (c > i) {
            windows.push_back(f.cells()[static_cast<std::size_t>(c - 1)].window);
        } else {
            std::vector<int> w = f.cells()[static_cast<std::size_t>(left)].window;
            const auto& r = f.cells()[static_cast<std::size_t>(right)].window;
            w.insert(w.end(), r.begin(), r.end());
            w.push_back(fresh);
            windows.push_back(w);
        }
    }
    auto rule = [&](int c, const InputValues& x) {
        if (c < i) return f.evaluate_cell(c, x);
        if (c > i) return f.evaluate_cell(c - 1, x);
        const int ul = f.evaluate_cell(left, x), ur = f.evaluate_cell(right, x);
        if (edge) {
            // neighbours are the two ends of the old word
            if (ul == ur) return x[fresh];
            return i == n ? ul : ur;
        }
        return ul == ur ? ul : x[fresh];
    };
    return GenFunction::compile(n + 1, std::move(inputs), std::move(windows), rule);
}

GenFunction transport(const Symmetry& g, const GenFunction& f) {
    if (g.n() != f.out_n()) throw Error("transport: symmetry and function lengths differ");
    const Symmetry inv = g.inverse();
    std::vector<OutputCell> cells;
    for (int i = 0; i < f.out_n(); ++i) {
        OutputCell c = f.cells()[static_cast<std::size_t>(inv.apply(i))];
        if (g.flips_at(i))
            for (auto& b : c.table) b ^= 1U;
        cells.push_back(std::move(c));
    }
    return GenFunction(f.out_n(), f.inputs(), std::move(cells));
}

// ---------------------------------------------------------------- text form

std::string to_text(const GenFunction& f) {
    std::ostringstream os;
    os << "out_n=" << f.out_n() << '\n' << "inputs=";
    for (std::size_t j = 0; j < f.inputs().size(); ++j) {
        if (j) os << ',';
        os << f.inputs()[j].name << ':' << f.inputs()[j].alphabet.name();
    }
    os << '\n';
    for (int i = 0; i < f.out_n(); ++i) {
        const auto& c = f.cells()[static_cast<std::size_t>(i)];
        os << "cell " << i << ": window=";
        for (std::size_t t = 0; t < c.window.size(); ++t) {
            if (t) os << ',';
            os << f.inputs()[static_cast<std::size_t>(c.window[t])].name;
        }
        os << " table=";
        for (auto b : c.table) os << static_cast<int>(b);
        os << '\n';
    }
    return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

GenFunction parse_function(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int out_n = -1;
    std::vector<InputCell> inputs;
    bool have_inputs = false;
    std::vector<std::optional<OutputCell>> cells;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        const std::size_t at = offset;
        offset += line.size() + 1;
        line = trim(line);
        if (line.empty()) continue;
        if (line.rfind("out_n=", 0) == 0) {
            try {
                out_n = std::stoi(line.substr(6));
            } catch (const std::exception&) {
                throw ParseError("invalid out_n", at);
            }
            if (out_n < 1 || out_n > kMaxWordLength) throw ParseError("out_n must lie in [1, 32]", at);
            cells.assign(static_cast<std::size_t>(out_n), std::nullopt);
        } else if (line.rfind("inputs=", 0) == 0) {
            for (const auto& item : split(line.substr(7), ',')) {
                auto colon = item.find(':');
                if (colon == std::string::npos) throw ParseError("input cell needs name:alphabet", at);
                inputs.push_back({trim(item.substr(0, colon)), Alphabet::parse(trim(item.substr(colon + 1)))});
            }
            have_inputs = true;
        } else if (line.rfind("cell ", 0) == 0) {
            if (out_n < 0 || !have_inputs) throw ParseError("cell line before out_n and inputs", at);
            auto colon = line.find(':');
            auto wpos = line.find("window=");
            auto tpos = line.find("table=");
            if (colon == std::string::npos || wpos == std::string::npos || tpos == std::string::npos || tpos < wpos)
                throw ParseError("expected 'cell <i>: window=<names> table=<bits>'", at);
            int idx = -1;
            try {
                idx = std::stoi(line.substr(5, colon - 5));
            } catch (const std::exception&) {
                throw ParseError("invalid cell index", at);
            }
            if (idx < 0 || idx >= out_n) throw ParseError("cell index out of range", at);
            OutputCell c;
            std::vector<std::pair<int, int>> order;
            for (const auto& name : split(trim(line.substr(wpos + 7, tpos - wpos - 7)), ',')) {
                int j = -1;
                for (std::size_t t = 0; t < inputs.size(); ++t)
                    if (inputs[t].name == trim(name)) j = static_cast<int>(t);
                if (j < 0) throw ParseError("unknown input '" + name + "'", at + wpos);
                c.window.push_back(j);
            }
            if (!std::is_sorted(c.window.begin(), c.window.end()))
                throw ParseError("window must list inputs in declaration order", at + wpos);
            for (char ch : trim(line.substr(tpos + 6))) {
                if (ch != '0' && ch != '1') throw ParseError("table must be a bit string", at + tpos);
                c.table.push_back(static_cast<std::uint8_t>(ch - '0'));
            }
            cells[static_cast<std::size_t>(idx)] = std::move(c);
        } else {
            throw ParseError("unrecognized line", at);
        }
    }
    if (out_n < 0) throw ParseError("missing out_n", 0);
    std::vector<OutputCell> out;
    for (auto& c : cells) {
        if (!c) throw ParseError("missing cell line", 0);
        out.push_back(std::move(*c));
    }
    return GenFunction(out_n, std::move(inputs), std::move(out));
}

GenFunction function_from_selector(std::string_view selector) {
    auto ints = [&](std::size_t skip) {
        std::vector<int> out;
        try {
            for (const auto& s : split(std::string(selector.substr(skip)), ',')) out.push_back(std::stoi(s));
        } catch (const std::exception&) {
            throw ParseError("invalid function selector '" + std::string(selector) + "'", skip);
        }
        return out;
    };
    if (selector.rfind("builtin:", 0) == 0) return builtin(selector.substr(8));
    if (selector.rfind("identity:", 0) == 0) {
        auto v = ints(9);
        if (v.size() != 1) throw ParseError("identity:<n> expected", 9);
        return identity(v[0]);
    }
    if (selector.rfind("k2:", 0) == 0) {
        auto v = ints(3);
        if (v.size() != 3) throw ParseError("k2:<n>,<a>,<b> expected", 3);
        return k2_generator(v[0], v[1], v[2]);
    }
    if (selector.rfind("file:", 0) == 0) {
        std::ifstream in{std::string(selector.substr(5))};
        if (!in) throw Error("cannot open function file '" + std::string(selector.substr(5)) + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_function(ss.str());
    }
    throw ParseError("unknown function selector '" + std::string(selector) + "'", 0);
}

}  // namespace monogen
