#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fvlab/cd_algebra.hpp"
#include "fvlab/cli.hpp"
#include "fvlab/macaulay.hpp"
#include "fvlab/poset.hpp"
#include "fvlab/rank5.hpp"
#include "fvlab/simplicial_decider.hpp"
#include "fvlab/vector_calculus.hpp"

namespace py = pybind11;

// Python ints cross the boundary through their decimal strings.
namespace pybind11::detail {
template <>
struct type_caster<fvlab::BigInt> {
    PYBIND11_TYPE_CASTER(fvlab::BigInt, const_name("int"));

    bool load(handle src, bool) {
        if (!src || !PyLong_Check(src.ptr())) return false;
        value = fvlab::parse_bigint(std::string(py::str(src)));
        return true;
    }

    static handle cast(const fvlab::BigInt& v, return_value_policy, handle) {
        const std::string text = fvlab::to_string(v);
        return PyLong_FromString(text.c_str(), nullptr, 10);
    }
};
}  // namespace pybind11::detail

namespace {

using namespace fvlab;
using Ints = std::vector<BigInt>;

py::object fraction(const Rational& r) {
    return py::module_::import("fractions").attr("Fraction")(BigInt(numerator(r)), BigInt(denominator(r)));
}

py::dict decision_dict(const Decision& d) {
    py::dict out;
    out["accepted"] = d.accepted;
    if (d.certificate) out["g"] = d.certificate->entries();
    if (d.reason) {
        out["reason"] = std::string(to_string(*d.reason));
        out["index"] = d.index;
    }
    if (d.h) out["h"] = d.h->entries();
    return out;
}

std::map<std::string, BigInt> cd_dict(const CdPolynomial& q) { return q.terms(); }

CdPolynomial cd_from(int degree, const std::map<std::string, BigInt>& terms) {
    CdPolynomial q(degree);
    for (const auto& [w, c] : terms) q.add(w, c);
    return q;
}

GradedPoset named_poset(const std::string& kind, int n) {
    if (kind == "boolean") return boolean_lattice(n);
    if (kind == "polygon") return polygon(n);
    if (kind == "dihedral") return dihedral_sphere(n);
    if (kind == "path") return path_poset(n);
    throw InvalidInput("unknown poset kind '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_fvlab, m) {
    m.doc() = "Exact face-vector, M-sequence and cd-index computations";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
    py::register_exception<CdInexpressible>(m, "CdInexpressible", PyExc_ValueError);

    m.def("f_to_h", [](const Ints& f) { return f_to_h(FVector(f)).entries(); }, py::arg("f"));
    m.def("h_to_f", [](const Ints& h) { return h_to_f(HVector(h)).entries(); }, py::arg("h"));
    m.def("h_to_g", [](const Ints& h) { return h_to_g(HVector(h)).entries(); }, py::arg("h"));
    m.def("g_to_h", [](const Ints& g, int d) { return g_to_h(GVector(g), d).entries(); }, py::arg("g"), py::arg("d"));
    m.def("fatness", [](const Ints& f) { return fraction(fatness(FVector(f))); }, py::arg("f"));

    m.def("binomial", &binomial, py::arg("n"), py::arg("k"));
    m.def(
        "macaulay_rep",
        [](const BigInt& a, unsigned i) {
            std::vector<std::pair<BigInt, unsigned>> out;
            const MacaulayRep rep = macaulay_rep(a, i);
            for (const auto& t : rep.terms()) out.emplace_back(t.top, t.bottom);
            return out;
        },
        py::arg("a"), py::arg("i"));
    m.def("pseudo_power", &pseudo_power, py::arg("a"), py::arg("i"));
    m.def("is_m_sequence", [](const Ints& g) { return static_cast<bool>(is_m_sequence(GVector(g))); }, py::arg("g"));
    m.def("approximate_point", [](const Ints& x) { return approximate_point(OrthantPoint(x)).entries(); },
          py::arg("x"));

    m.def("decide_simplicial", [](const Ints& f) { return decision_dict(decide_simplicial_f(FVector(f))); },
          py::arg("f"));

    m.def("flag_vector", [](const std::string& kind, int n) { return flag_vector(named_poset(kind, n)).counts(); },
          py::arg("kind"), py::arg("n"));
    m.def("cd_index", [](const std::string& kind, int n) { return cd_dict(cd_index(named_poset(kind, n))); },
          py::arg("kind"), py::arg("n"));
    m.def("cd_words", &cd_words, py::arg("degree"));
    m.def(
        "cd_mul",
        [](const std::map<std::string, BigInt>& p, const std::map<std::string, BigInt>& q) {
            if (p.empty() || q.empty()) throw InvalidInput("cd_mul needs nonempty polynomials");
            const CdPolynomial a = cd_from(cd_word_degree(p.begin()->first), p);
            const CdPolynomial b = cd_from(cd_word_degree(q.begin()->first), q);
            return cd_dict(cd_mul(a, b));
        },
        py::arg("p"), py::arg("q"));
    m.def("stanley_sphere", [](const std::string& word, int m) { return cd_dict(stanley_sphere(word, m).cd); },
          py::arg("word"), py::arg("m"));

    m.def(
        "decide_rank5",
        [](const BigInt& a, const BigInt& b, const BigInt& d2) {
            const Rank5Result res = decide_rank5(Rank5Instance(a, b, d2));
            py::dict out;
            out["feasible"] = res.feasible;
            if (res.witness) {
                out["x"] = Ints(res.witness->x.begin(), res.witness->x.end());
                out["y"] = Ints(res.witness->y.begin(), res.witness->y.end());
            }
            return out;
        },
        py::arg("c2d"), py::arg("dc2"), py::arg("d2"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            const cli::Outcome o = cli::run(args, Caps::from_environment());
            return py::make_tuple(o.exit_code, o.out, o.err);
        },
        py::arg("args"));
}
