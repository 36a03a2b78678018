// Python bindings: a thin string/JSON-based surface over the core library.
// Numbers cross the boundary as decimal strings (they routinely exceed 64
// bits) and structured results as JSON documents; the Python package wraps
// them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "rectify/constructible.hpp"
#include "rectify/demos.hpp"
#include "rectify/matrix.hpp"
#include "rectify/report.hpp"

namespace py = pybind11;
using namespace rectify;

namespace {

std::vector<Int> to_ints(const std::vector<std::string>& xs) {
    std::vector<Int> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.emplace_back(x);
    return out;
}

std::string rectify_json(const std::vector<std::string>& A, const std::string& p,
                         const std::string& k, bool force, const std::string& t) {
    std::vector<Int> a = to_ints(A);
    Int pi(p), ki(k), ti(t);
    RectifiedSet rs = rectify::rectify(a, pi, ki, force, ti);
    return rectified_to_json(a, pi, ki, ti, rs).dump();
}

std::string verify_document(const std::string& doc_json) {
    ParsedResult r = result_from_json(Json::parse(doc_json));
    VerifyReport rep = verify_ring_isomorphism(r.A, r.p, r.points, r.tower, r.k, r.t);
    Json out;
    out["verified"] = rep.pass;
    out["relations_checked"] = rep.checked.get_str();
    out["verify_message"] = rep.first_discrepancy;
    return out.dump();
}

std::string lift_linear_json(const std::vector<std::string>& A, const std::string& p,
                             const std::string& k, bool force) {
    std::vector<Int> a = to_ints(A);
    LinearRectification lr = rectify_linear(a, Int(p), Int(k), force);
    Json out;
    Json pts = Json::array(), loc = Json::array();
    for (const auto& b : lr.points) pts.push_back(b.get_str());
    for (const auto& q : lr.localized) loc.push_back(q.get_str());
    out["points"] = std::move(pts);
    out["localized"] = std::move(loc);
    out["multiplier"] = lr.multiplier.get_str();
    out["guaranteed"] = lr.guaranteed;
    return out.dump();
}

DomainPoly<PolyDomain> as_dompoly(const PolyDomain& pd, const IntPoly& f, int var) {
    std::vector<IntPoly> c(f.degree_in(var) + 1, pd.zero());
    for (long e = 0; e <= f.degree_in(var); ++e)
        c[e] = f.coefficient_poly(var, static_cast<unsigned>(e));
    DomainPoly<PolyDomain> d(std::move(c));
    d.normalize(pd);
    return d;
}

std::pair<IntPoly, IntPoly> parse_pair(const std::string& ft, const std::string& gt) {
    IntPoly f0 = IntPoly::parse(ft), g0 = IntPoly::parse(gt);
    int nv = std::max({f0.nvars(), g0.nvars(), 1});
    return {IntPoly::parse(ft, nv), IntPoly::parse(gt, nv)};
}

std::string resultant_str(const std::string& ft, const std::string& gt, int var1) {
    auto [f, g] = parse_pair(ft, gt);
    PolyDomain pd(f.nvars());
    return resultant(pd, as_dompoly(pd, f, var1 - 1), as_dompoly(pd, g, var1 - 1)).to_string();
}

std::string subresultant_str(const std::string& ft, const std::string& gt, int var1, long i) {
    auto [f, g] = parse_pair(ft, gt);
    PolyDomain pd(f.nvars());
    int var = var1 - 1;
    auto S = subresultant(pd, as_dompoly(pd, f, var), as_dompoly(pd, g, var), i);
    IntPoly s(f.nvars());
    for (long e = 0; e <= S.deg(); ++e)
        s += S.coeffs[e] * IntPoly::variable(var, f.nvars()).pow(static_cast<unsigned>(e));
    return s.to_string();
}

std::string build_chain_json(const std::string& target, const std::string& k) {
    return chain_to_json(build_chain(Int(target), Int(k))).dump();
}

std::string special_chain_json(const std::string& p, const std::string& form) {
    SpecialForm sf = form == "mersenne" ? SpecialForm::mersenne : SpecialForm::fermat;
    return chain_to_json(build_special_chain(Int(p), sf)).dump();
}

bool verify_chain_json(const std::string& doc_json) {
    return verify_chain(chain_from_json(Json::parse(doc_json)));
}

std::string adversarial_json(const std::string& p, const std::string& k) {
    AdversarialSet adv = adversarial_set(Int(p), Int(k));
    Json out;
    Json as = Json::array();
    for (const auto& a : adv.A) as.push_back(a.get_str());
    out["set"] = std::move(as);
    out["witness"] = chain_to_json(adv.witness);
    out["witness_verified"] = verify_chain(adv.witness);
    return out.dump();
}

std::string transfer_json(const std::vector<std::string>& A, const std::string& p,
                          const std::string& mode, const std::string& poly) {
    TransferMode tm;
    if (mode == "sumproduct") tm = TransferMode::sumproduct;
    else if (mode == "incidence") tm = TransferMode::incidence;
    else if (mode == "inverse") tm = TransferMode::inverse;
    else if (mode == "polynomial_image") tm = TransferMode::polynomial_image;
    else throw std::invalid_argument("unknown transfer mode: " + mode);
    std::vector<Int> a = to_ints(A);
    IntPoly f = poly.empty() ? IntPoly::variable(0, 1).pow(2) : IntPoly::parse(poly, 1);
    TransferReport rep = transfer_report(a, Int(p), tm, &f);
    return transfer_to_json(a, Int(p), rep).dump();
}

py::tuple sharpness(long n) {
    PointLineConfig cfg = sharpness_lattice(n);
    QDomain q;
    return py::make_tuple(static_cast<long>(cfg.points.size()),
                          static_cast<long>(cfg.lines.size()), count_incidences(cfg, q));
}

py::tuple sparse_square(const std::string& poly) {
    auto [nf, nf2] = sparse_square_terms(IntPoly::parse(poly, 1));
    return py::make_tuple(nf, nf2);
}

}  // namespace

PYBIND11_MODULE(_rectify, m) {
    m.doc() = "Exact rectification of small subsets of F_p into algebraic extensions of Q";

    py::register_exception<BoundAbortError>(m, "BoundAbortError");

    m.def("rectify", &rectify_json, py::arg("set"), py::arg("p"), py::arg("k"),
          py::arg("force") = false, py::arg("t") = "0",
          "Run the full pipeline; returns the result document as a JSON string.");
    m.def("verify_document", &verify_document, py::arg("document"),
          "Re-verify an emitted result document (JSON string).");
    m.def("lift_linear", &lift_linear_json, py::arg("set"), py::arg("p"), py::arg("k"),
          py::arg("force") = false,
          "Integer lift preserving bounded linear relations; JSON string result.");
    m.def("resultant", &resultant_str, py::arg("f"), py::arg("g"), py::arg("var") = 1,
          "Resultant of two polynomials in text syntax, eliminating x<var>.");
    m.def("subresultant", &subresultant_str, py::arg("f"), py::arg("g"), py::arg("var"),
          py::arg("i"), "Subresultant polynomial S_i in text syntax.");
    m.def("build_chain", &build_chain_json, py::arg("target"), py::arg("k"),
          "Constructibility chain document (JSON string).");
    m.def("special_chain", &special_chain_json, py::arg("p"), py::arg("form"),
          "Short chain for Mersenne/Fermat targets (JSON string).");
    m.def("verify_chain", &verify_chain_json, py::arg("document"),
          "Independent verification of a chain document.");
    m.def("adversarial_set", &adversarial_json, py::arg("p"), py::arg("k"),
          "Chain-residue adversarial subset of F_p with its witness chain.");
    m.def("transfer_report", &transfer_json, py::arg("set"), py::arg("p"), py::arg("mode"),
          py::arg("poly") = "", "Set-cardinality transfer report (JSON string).");
    m.def("sharpness_lattice", &sharpness, py::arg("n"),
          "(points, lines, incidences) of the extremal incidence lattice.");
    m.def("sparse_square_terms", &sparse_square, py::arg("poly"),
          "(N(f), N(f^2)) exact term counts for a univariate polynomial.");
}
