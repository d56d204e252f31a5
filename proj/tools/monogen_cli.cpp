// monogen: command-line front end for the monogen library.
//
// Exit codes: 0 success, 1 negative finding, 2 usage error, 3 budget exhausted or unknown.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "monogen/analysis.hpp"
#include "monogen/render.hpp"

using namespace monogen;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kUnknown = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::size_t budget_constraints = Budget{}.max_constraints;
    int budget_domain = -1;
    std::string format = "ascii";
    bool seedless = false;

    Budget budget() const { return Budget{budget_constraints, budget_domain}; }
    bool json() const { return format == "json"; }
    void text_only(std::string_view cmd) const {
        if (format == "svg") throw UsageError(std::string(cmd) + " has no svg output");
    }
};

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

// "@path" reads the complex from a file, "-" from stdin
std::string read_arg(const std::string& arg) {
    if (arg == "-") return slurp(std::cin);
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream f(arg.substr(1));
        if (!f) throw UsageError("cannot read " + arg.substr(1));
        return slurp(f);
    }
    return arg;
}

Complex complex_arg(const std::string& arg) { return parse_complex(read_arg(arg)); }

json complex_json(const Complex& k) {
    json simplices = json::array();
    for (const auto& s : k.maximal()) simplices.push_back(s.vertices());
    return {{"n", k.n()}, {"text", to_string(k)}, {"maximal", simplices}};
}

std::string symmetry_text(const Symmetry& g) {
    return "shift=" + std::to_string(g.shift()) + ",reflect=" + std::to_string(g.reflect() ? 1 : 0);
}

void check_dims(const Complex& k, const Language& l) {
    if (k.n() != l.n()) throw UsageError("complex and language lengths differ");
}

int cmd_render(const Globals& g, const std::string& arg) {
    const auto k = complex_arg(arg);
    if (g.format == "svg")
        std::cout << render_svg(k);
    else if (g.json())
        std::cout << complex_json(k).dump() << "\n";
    else
        std::cout << render_ascii(k);
    return kOk;
}

int cmd_verify(const Globals& g, const std::string& fsel, const std::string& lsel, const std::string& karg) {
    g.text_only("verify");
    const auto f = function_from_selector(fsel);
    const auto l = language_from_selector(lsel);
    const auto k = complex_arg(karg);
    check_dims(k, l);
    if (f.out_n() != l.n()) throw UsageError("function and language lengths differ");

    const auto img = image(f);
    std::vector<std::string> missing, extra;
    for (Word w : l.words())
        if (!img.contains(w)) missing.push_back(word_to_string(w, l.n()));
    for (Word w : img.words())
        if (!l.contains(w)) extra.push_back(word_to_string(w, l.n()));
    const auto d = essential_windows(f);
    const auto kf = comm_complex(f);
    const bool inside = kf.subcomplex_of(k);
    const bool pass = missing.empty() && extra.empty() && inside;

    std::vector<std::string> names;
    for (const auto& c : f.inputs()) names.push_back(c.name);
    if (g.json()) {
        json out{{"image_size", img.size()}, {"missing", missing},     {"extra", extra},
                 {"comm_complex", complex_json(kf)}, {"inside", inside}, {"pass", pass}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "image_size=" << img.size() << " language_size=" << l.size() << "\n";
        for (const auto& w : missing) std::cout << "missing " << w << "\n";
        for (const auto& w : extra) std::cout << "extra " << w << "\n";
        std::cout << render_ascii(d, names);
        std::cout << "K_f=" << to_string(kf) << "\n";
        std::cout << "K_f subcomplex of K: " << (inside ? "yes" : "no") << "\n";
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kOk : kNegative;
}

std::optional<Trace> scripted(const std::string& script, const Complex& k, const Language& l) {
    const int n = k.n();
    auto lower_bound = [&]() -> std::optional<Trace> {
        if (n < 3 || l != mon(n) || k != short_intervals_complex(n)) return std::nullopt;
        return refute_short_intervals(n);
    };
    auto missing_five = [&](int i, int j) -> std::optional<Trace> {
        if (l != mon(n) || !(1 < i && i < j && j < n - 1)) return std::nullopt;
        try {
            if (k != missing_five_complex(n, i, j)) return std::nullopt;
        } catch (const ResourceError&) {
            return std::nullopt;
        }
        return refute_missing_five(n, i, j);
    };
    if (script == "none") return std::nullopt;
    if (script == "lower-bound") {
        auto t = lower_bound();
        if (!t) throw UsageError("lower-bound script applies only to the short-interval complex with mon:<n>");
        return t;
    }
    if (script.rfind("missing-five", 0) == 0) {
        int i = 0, j = 0;
        char sep = 0;
        std::istringstream ss(script.substr(12));
        char open = 0;
        ss >> open >> i >> sep >> j;
        if (!ss || (open != '(' && open != ':') || sep != ',') throw UsageError("expected --script missing-five(i,j)");
        auto t = missing_five(i, j);
        if (!t) throw UsageError("missing-five script does not apply to this complex");
        return t;
    }
    if (script == "auto") {
        if (auto t = lower_bound()) return t;
        if (l == mon(n) && k.size() <= 32)
            for (int i = 2; i < n - 1; ++i)
                for (int j = i + 1; j < n - 1; ++j)
                    if (auto t = missing_five(i, j)) return t;
        return std::nullopt;
    }
    throw UsageError("unknown script '" + script + "'");
}

int cmd_refute(const Globals& g, const std::string& karg, const std::string& lsel, const std::string& script,
               bool full_join) {
    g.text_only("refute");
    const auto k = complex_arg(karg);
    const auto l = language_from_selector(lsel);
    check_dims(k, l);

    std::optional<Trace> trace = scripted(script, k, l);
    Verdict v;
    if (!trace) {
        ProverOptions o;
        o.budget = g.budget();
        o.full_join = full_join;
        v = saturate(k, l, o);
        if (v.kind == Verdict::Kind::Conflict) trace = v.trace;
    }
    if (trace) {
        const std::string text = to_text(*trace, k, l);
        const auto c = check_trace(text, k, l);
        if (!c.ok) {
            std::cerr << "internal error: trace failed validation: " << c.message << "\n";
            return kUnknown;
        }
        if (g.json())
            std::cout << json{{"verdict", "CONFLICT"}, {"trace", text}}.dump() << "\n";
        else
            std::cout << text;
        return kOk;
    }
    if (v.kind == Verdict::Kind::Saturated) {
        if (g.json())
            std::cout << json{{"verdict", "SATURATED"}, {"count", v.count}}.dump() << "\n";
        else
            std::cout << "SATURATED count=" << v.count << "\n";
        return kNegative;
    }
    if (g.json())
        std::cout << json{{"verdict", "BUDGET"}, {"limits", v.limits}}.dump() << "\n";
    else
        std::cout << "BUDGET " << v.limits << "\n";
    return kUnknown;
}

int cmd_check_trace(const Globals& g, const std::string& targ, const std::string& karg, const std::string& lsel) {
    g.text_only("check-trace");
    std::string text;
    if (targ == "-") {
        text = slurp(std::cin);
    } else {
        std::ifstream f(targ);
        if (!f) throw UsageError("cannot read " + targ);
        text = slurp(f);
    }
    const auto k = complex_arg(karg);
    const auto l = language_from_selector(lsel);
    check_dims(k, l);
    const auto c = check_trace(std::string_view(text), k, l);
    if (g.json()) {
        json out{{"ok", c.ok}, {"message", c.message}};
        if (c.failing_id) out["failing_id"] = *c.failing_id;
        std::cout << out.dump() << "\n";
    } else if (c.ok) {
        std::cout << "VALID\n";
    } else {
        std::cout << "INVALID" << (c.failing_id ? " at #" + std::to_string(*c.failing_id) : "") << ": " << c.message
                  << "\n";
    }
    return c.ok ? kOk : kNegative;
}

int cmd_mu(const Globals& g, int n, bool certify, bool show_trace) {
    g.text_only("mu");
    const auto r = mu_bounds(n, certify);
    std::optional<std::string> trace_text;
    if (r.certificate) {
        const auto k = short_intervals_complex(n);
        trace_text = to_text(*r.certificate, k, mon(n));
        if (!check_trace(*trace_text, k, mon(n)).ok) {
            std::cerr << "internal error: certificate failed validation\n";
            return kUnknown;
        }
    }
    const std::string family = r.witness_family ? to_string(*r.witness_family) : "-";
    if (g.json()) {
        json out{{"n", n}, {"lower", r.lower}, {"upper", r.upper}, {"witness", complex_json(r.witness)},
                 {"witness_size", r.witness_size}, {"family", family}};
        out["exact"] = r.exact ? json(*r.exact) : json("unknown");
        if (trace_text) out["certificate"] = *trace_text;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "n=" << n << " lower=" << r.lower << " upper=" << r.upper
                  << " exact=" << (r.exact ? std::to_string(*r.exact) : "unknown") << " witness=" << to_string(r.witness)
                  << " family=" << family;
        if (r.certificate) std::cout << " certificate=valid nodes=" << r.certificate->nodes.size();
        std::cout << "\n";
        if (trace_text && show_trace) std::cout << *trace_text;
    }
    return r.exact ? kOk : kUnknown;
}

int cmd_enumerate(const Globals& g, int n, bool all, int bound) {
    g.text_only("enumerate");
    bool unknown = false;
    enumerate_report(
        n,
        [&](const EnumerationEntry& e) {
            if (!all && e.minimal == Status::NoGen) return;
            unknown = unknown || e.status == Status::Unknown || e.minimal == Status::Unknown;
            if (g.json()) {
                json out{{"complex", to_string(e.complex)}, {"status", status_name(e.status)},
                         {"minimal", e.minimal == Status::Gen ? "YES" : e.minimal == Status::NoGen ? "NO" : "UNKNOWN"},
                         {"family", e.family ? to_string(*e.family) : "-"}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << to_string(e) << "\n";
            }
            std::cout.flush();
        },
        g.budget(), bound);
    return unknown ? kUnknown : kOk;
}

int cmd_classify(const Globals& g, const std::string& karg) {
    g.text_only("classify");
    const auto k = complex_arg(karg);
    const auto c = classify(k);
    if (g.json()) {
        json out{{"family", c ? to_string(c->id) : "-"}};
        if (c) out["symmetry"] = {{"shift", c->symmetry.shift()}, {"reflect", c->symmetry.reflect()}};
        std::cout << out.dump() << "\n";
    } else if (c) {
        std::cout << "family=" << to_string(c->id) << " symmetry=" << symmetry_text(c->symmetry) << "\n";
    } else {
        std::cout << "family=-\n";
    }
    return c ? kOk : kNegative;
}

int cmd_families_list(const Globals& g, int n, bool symmetries) {
    g.text_only("families list");
    for (const auto& id : family_members(n, symmetries)) {
        const auto k = family_complex(id);
        if (g.json())
            std::cout << json{{"family", to_string(id)}, {"complex", to_string(k)}}.dump() << "\n";
        else
            std::cout << to_string(id) << " | " << to_string(k) << "\n";
    }
    return kOk;
}

int cmd_families_construct(const Globals& g, const std::string& tag) {
    const auto k = family_complex(parse_family_id(tag));
    if (g.format == "svg")
        std::cout << render_svg(k);
    else if (g.json())
        std::cout << complex_json(k).dump() << "\n";
    else
        std::cout << to_string(k) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local generation of monotonic languages by simplicial complexes"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--budget-constraints", g.budget_constraints, "Prover constraint limit")->check(CLI::PositiveNumber);
    app.add_option("--budget-domain", g.budget_domain, "Largest input domain kept by the prover (-1: unbounded)")
        ->check(CLI::Range(-1, 64));
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"ascii", "svg", "json"}));
    app.add_flag("--seedless", g.seedless, "Assert deterministic operation (no randomness is ever used)");

    std::string complex_text, lang_sel, func_sel, trace_path, script = "auto", tag;
    int n = 0, bound = kDefaultEnumerationBound;
    bool certify = false, show_trace = false, all = false, symmetries = false, full_join = false;
    std::function<int()> run;

    auto* render = app.add_subcommand("render", "Draw a complex as columns of intervals");
    render->add_option("complex", complex_text, "Complex text, @file or -")->required();
    render->callback([&] { run = [&] { return cmd_render(g, complex_text); }; });

    auto* verify = app.add_subcommand("verify", "Check that a function generates a language within a complex");
    verify->add_option("function", func_sel, "builtin:<name>, file:<path>, ...")->required();
    verify->add_option("language", lang_sel, "mon:<n>, u:<n> or file:<path>")->required();
    verify->add_option("complex", complex_text)->required();
    verify->callback([&] { run = [&] { return cmd_verify(g, func_sel, lang_sel, complex_text); }; });

    auto* refute = app.add_subcommand("refute", "Search for a conflict derivation");
    refute->add_option("complex", complex_text)->required();
    refute->add_option("language", lang_sel)->required();
    refute->add_option("--script", script, "auto, lower-bound, missing-five(i,j) or none");
    refute->add_flag("--full-join", full_join, "Join multi-position constraints as well");
    refute->callback([&] { run = [&] { return cmd_refute(g, complex_text, lang_sel, script, full_join); }; });

    auto* check = app.add_subcommand("check-trace", "Replay a derivation trace");
    check->add_option("trace", trace_path, "Trace file or -")->required();
    check->add_option("complex", complex_text)->required();
    check->add_option("language", lang_sel)->required();
    check->callback([&] { run = [&] { return cmd_check_trace(g, trace_path, complex_text, lang_sel); }; });

    auto* mu = app.add_subcommand("mu", "Bounds on the shortest generating interval length");
    mu->add_option("n", n)->required()->check(CLI::Range(1, 64));
    mu->add_flag("--certify", certify, "Derive and validate the lower-bound conflict");
    mu->add_flag("--trace", show_trace, "Print the certificate trace");
    mu->callback([&] { run = [&] { return cmd_mu(g, n, certify, show_trace); }; });

    auto* enumerate = app.add_subcommand("enumerate", "Covering interval complexes up to symmetry");
    enumerate->add_option("n", n)->required()->check(CLI::Range(1, 64));
    enumerate->add_flag("--all", all, "Include complexes that are not minimal");
    enumerate->add_option("--bound", bound, "Largest n accepted")->check(CLI::Range(1, 16));
    enumerate->callback([&] { run = [&] { return cmd_enumerate(g, n, all, bound); }; });

    auto* families = app.add_subcommand("families", "Known families of minimal generating complexes");
    families->require_subcommand(1);
    auto* flist = families->add_subcommand("list", "List the members over I_n");
    flist->add_option("n", n)->required()->check(CLI::Range(2, 64));
    flist->add_flag("--symmetries", symmetries, "Include shifted and reflected members");
    flist->callback([&] { run = [&] { return cmd_families_list(g, n, symmetries); }; });
    auto* fconstruct = families->add_subcommand("construct", "Build the member with the given tag");
    fconstruct->add_option("tag", tag, "e.g. K5(n=7,i=3,j=5)")->required();
    fconstruct->callback([&] { run = [&] { return cmd_families_construct(g, tag); }; });
    auto* fclassify = families->add_subcommand("classify", "Identify a complex up to symmetry");
    fclassify->add_option("complex", complex_text)->required();
    fclassify->callback([&] { run = [&] { return cmd_classify(g, complex_text); }; });

    auto* classify_cmd = app.add_subcommand("classify", "Identify a complex up to symmetry");
    classify_cmd->add_option("complex", complex_text)->required();
    classify_cmd->callback([&] { run = [&] { return cmd_classify(g, complex_text); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return run();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kUnknown;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
