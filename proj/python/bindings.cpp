#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monogen/analysis.hpp"
#include "monogen/render.hpp"

namespace py = pybind11;
using namespace monogen;

namespace {

std::vector<std::string> word_strings(const Language& l) {
    std::vector<std::string> out;
    for (Word w : l.words()) out.push_back(word_to_string(w, l.n()));
    return out;
}

VertexMask mask_of(const std::vector<int>& vs) {
    VertexMask m = 0;
    for (int v : vs) m |= VertexMask{1} << v;
    return m;
}

py::dict mu_dict(const MuResult& r) {
    py::dict d;
    d["n"] = r.n;
    d["lower"] = r.lower;
    d["upper"] = r.upper;
    d["exact"] = r.exact ? py::cast(*r.exact) : py::none();
    d["witness"] = r.witness;
    d["witness_size"] = r.witness_size;
    d["family"] = r.witness_family ? py::cast(to_string(*r.witness_family)) : py::none();
    d["certificate"] =
        r.certificate ? py::cast(to_text(*r.certificate, short_intervals_complex(r.n), mon(r.n))) : py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_monogen, m) {
    m.doc() = "Local generation of monotonic languages by simplicial complexes";

    auto base = py::register_exception<Error>(m, "MonogenError");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ResourceError>(m, "ResourceError", base.ptr());

    py::class_<Complex>(m, "Complex")
        .def(py::init([](const std::string& text) { return parse_complex(text); }), py::arg("text"))
        .def_static("from_sets", [](int n, const std::vector<std::vector<int>>& sets) {
            std::vector<VertexMask> ms;
            for (const auto& s : sets) ms.push_back(mask_of(s));
            return Complex::from_masks(n, ms);
        })
        .def_static("full", &Complex::full)
        .def_property_readonly("n", &Complex::n)
        .def_property_readonly("maximal", [](const Complex& k) {
            std::vector<std::vector<int>> out;
            for (const auto& s : k.maximal()) out.push_back(s.vertices());
            return out;
        })
        .def("member", [](const Complex& k, const std::vector<int>& s) { return k.member(mask_of(s)); })
        .def("subcomplex_of", &Complex::subcomplex_of)
        .def("insert_vertex", [](const Complex& k, int i) { return insert_vertex(k, i); })
        .def("delete_vertex", [](const Complex& k, int i) { return delete_vertex(k, i); })
        .def("is_interval_complex", [](const Complex& k) { return is_interval_complex(k); })
        .def("transform", [](const Complex& k, int shift, bool reflect) { return Symmetry(k.n(), shift, reflect).apply(k); },
             py::arg("shift"), py::arg("reflect") = false)
        .def("render_ascii", [](const Complex& k) { return render_ascii(k); })
        .def("render_svg", [](const Complex& k) { return render_svg(k); })
        .def("__str__", [](const Complex& k) { return to_string(k); })
        .def("__repr__", [](const Complex& k) { return "Complex('" + to_string(k) + "')"; })
        .def("__len__", &Complex::size)
        .def("__eq__", [](const Complex& a, const Complex& b) { return a == b; })
        .def("__hash__", [](const Complex& k) { return py::hash(py::str(to_string(k))); });

    py::class_<Language>(m, "Language")
        .def(py::init([](const std::string& selector) { return language_from_selector(selector); }),
             py::arg("selector"))
        .def_property_readonly("n", &Language::n)
        .def_property_readonly("words", &word_strings)
        .def("__len__", &Language::size)
        .def("__contains__", [](const Language& l, const std::string& w) { return l.contains(word_from_string(w)); })
        .def("__eq__", [](const Language& a, const Language& b) { return a == b; });
    m.def("mon", &mon);
    m.def("u", &u);
    m.def("decomposes", [](const std::vector<int>& x, const std::vector<int>& y, const Language& l) {
        return decomposes(mask_of(x), mask_of(y), l);
    });

    py::class_<GenFunction>(m, "GenFunction")
        .def(py::init([](const std::string& selector) { return function_from_selector(selector); }),
             py::arg("selector"))
        .def_property_readonly("out_n", &GenFunction::out_n)
        .def_property_readonly("input_names", [](const GenFunction& f) {
            std::vector<std::string> out;
            for (const auto& c : f.inputs()) out.push_back(c.name);
            return out;
        })
        .def("evaluate", [](const GenFunction& f, const std::vector<int>& x) {
            return word_to_string(f.evaluate(x), f.out_n());
        })
        .def("image", [](const GenFunction& f) { return image(f); })
        .def("comm_complex", [](const GenFunction& f) { return comm_complex(f); })
        .def("windows", [](const GenFunction& f) {
            const auto d = essential_windows(f);
            std::vector<std::vector<int>> out;
            for (int i = 0; i < d.out_n; ++i) out.push_back(d.window(i));
            return out;
        })
        .def("generates", [](const GenFunction& f, const Language& l, const Complex& k) { return generates(f, l, k); })
        .def("lift_insert", [](const GenFunction& f, int i) { return lift_insert(f, i); })
        .def("to_text", [](const GenFunction& f) { return to_text(f); });
    m.def("builtin", &builtin);
    m.def("k2_generator", &k2_generator);

    m.def(
        "saturate",
        [](const Complex& k, const Language& l, bool full_join, std::size_t max_constraints, int max_domain) {
            ProverOptions o;
            o.full_join = full_join;
            o.budget.max_constraints = max_constraints;
            o.budget.max_input_domain = max_domain;
            const auto v = saturate(k, l, o);
            py::dict d;
            d["verdict"] = std::string(verdict_name(v.kind));
            d["count"] = v.count;
            d["trace"] = v.kind == Verdict::Kind::Conflict ? py::cast(to_text(v.trace, k, l)) : py::none();
            d["limits"] = v.limits;
            return d;
        },
        py::arg("complex"), py::arg("language"), py::arg("full_join") = false,
        py::arg("max_constraints") = Budget{}.max_constraints, py::arg("max_domain") = -1);
    m.def(
        "check_trace",
        [](const std::string& text, const Complex& k, const Language& l) {
            const auto c = check_trace(std::string_view(text), k, l);
            return py::make_tuple(c.ok, c.message);
        },
        py::arg("trace"), py::arg("complex"), py::arg("language"));

    m.def("family_complex", [](const std::string& tag) { return family_complex(parse_family_id(tag)); });
    m.def("family_members", [](int n, bool symmetries) {
        std::vector<std::string> out;
        for (const auto& id : family_members(n, symmetries)) out.push_back(to_string(id));
        return out;
    }, py::arg("n"), py::arg("symmetries") = false);
    m.def("classify", [](const Complex& k) -> py::object {
        const auto c = classify(k);
        if (!c) return py::none();
        return py::make_tuple(to_string(c->id), c->symmetry.shift(), c->symmetry.reflect());
    });
    m.def("short_intervals_complex", &short_intervals_complex);
    m.def("missing_five_complex", &missing_five_complex);
    m.def("refute_short_intervals",
          [](int n) { return to_text(refute_short_intervals(n), short_intervals_complex(n), mon(n)); });
    m.def("refute_missing_five", [](int n, int i, int j) {
        return to_text(refute_missing_five(n, i, j), missing_five_complex(n, i, j), mon(n));
    });
    m.def("mu_bounds", [](int n, bool certify) { return mu_dict(mu_bounds(n, certify)); }, py::arg("n"),
          py::arg("certify") = false);
    m.def("decide", [](const Complex& k) { return std::string(status_name(decide(k).status)); });
    m.def("minimality_check", [](const Complex& k) {
        const auto r = minimality_check(k, mon(k.n()));
        switch (r.kind) {
            case MinimalityResult::Kind::Minimal: return std::string("MINIMAL");
            case MinimalityResult::Kind::NotMinimal: return std::string("NOT_MINIMAL");
            default: return std::string("UNKNOWN");
        }
    });
    m.def("enumerate_minimal", [](int n) {
        std::vector<std::string> out;
        for (const auto& e : enumerate_minimal(n)) out.push_back(to_string(e));
        return out;
    });
    m.def("enumerate_interval_complexes", [](int n, int max_len) { return enumerate_interval_complexes(n, max_len); });
}
