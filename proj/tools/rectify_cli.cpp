// Command-line frontend: exact rectification of small subsets of F_p and the
// companion utilities (linear lifts, resultants, constructibility chains,
// adversarial sets, demos).
//
// Exit codes: 0 verified success, 1 usage error, 2 bound-abort (or an unmet
// --require-guarantee), 3 verification failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "rectify/constructible.hpp"
#include "rectify/demos.hpp"
#include "rectify/matrix.hpp"
#include "rectify/report.hpp"

namespace {

using namespace rectify;

constexpr int kOk = 0, kUsage = 1, kBoundAbort = 2, kVerifyFail = 3;

std::vector<Int> parse_set(const std::string& text) {
    std::vector<Int> out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty()) out.emplace_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (out.empty()) throw CLI::ValidationError("--set", "expected a comma-separated integer list");
    return out;
}

struct OutputOptions {
    std::string path;    // empty = stdout
    std::string format;  // "text" or "json"
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--out", out.path, "Write the result document to this file");
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_str("text");
}

int emit(const Json& doc, const OutputOptions& out, int code) {
    std::string body = out.format == "json" ? doc.dump(2) + "\n" : render_text(doc);
    if (out.path.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(out.path);
        if (!f) throw std::runtime_error("cannot open output file: " + out.path);
        f << body;
    }
    return code;
}

Json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    return Json::parse(f);
}

Json error_doc(const std::string& command, const std::string& status, const std::string& message) {
    Json d;
    d["command"] = command;
    d["status"] = status;
    d["message"] = message;
    return d;
}

// ---------------------------------------------------------------------------

int run_rectify(const std::string& pt, const std::string& setT, long k, long t, bool force,
                bool requireGuarantee, long seed, const OutputOptions& out) {
    Int p(pt);
    std::vector<Int> A = parse_set(setT);
    try {
        RectifiedSet rs = rectify::rectify(A, p, Int(k), force, Int(t));
        Json doc = rectified_to_json(A, p, Int(k), Int(t), rs);
        doc["input"]["seed"] = seed;
        if (requireGuarantee && !rs.guaranteed) {
            doc["flags"]["require_guarantee_failed"] = true;
            return emit(doc, out, kBoundAbort);
        }
        return emit(doc, out, rs.verified ? kOk : kVerifyFail);
    } catch (const BoundAbortError& e) {
        return emit(error_doc("rectify", "bound-abort", e.what()), out, kBoundAbort);
    }
}

int run_verify(const std::string& in, const OutputOptions& out) {
    ParsedResult r = result_from_json(load_json(in));
    VerifyReport rep = verify_ring_isomorphism(r.A, r.p, r.points, r.tower, r.k, r.t);
    Json doc;
    doc["command"] = "verify";
    doc["input_file"] = in;
    doc["verified"] = rep.pass;
    doc["relations_checked"] = rep.checked.get_str();
    doc["verify_message"] = rep.first_discrepancy;
    return emit(doc, out, rep.pass ? kOk : kVerifyFail);
}

int run_lift_linear(const std::string& pt, const std::string& setT, long k, bool force,
                    const OutputOptions& out) {
    Int p(pt);
    std::vector<Int> A = parse_set(setT);
    LinearRectification lr;
    try {
        lr = rectify_linear(A, p, Int(k), force);
    } catch (const std::domain_error& e) {
        return emit(error_doc("lift-linear", "bound-abort", e.what()), out, kBoundAbort);
    }
    Json doc;
    doc["command"] = "lift-linear";
    Json in;
    in["p"] = p.get_str();
    in["k"] = std::to_string(k);
    Json as = Json::array();
    for (const auto& a : A) as.push_back(a.get_str());
    in["set"] = std::move(as);
    doc["input"] = std::move(in);
    Json pts = Json::array(), loc = Json::array();
    for (const auto& b : lr.points) pts.push_back(b.get_str());
    for (const auto& q : lr.localized) loc.push_back(q.get_str());
    doc["points"] = std::move(pts);
    doc["localized"] = std::move(loc);
    doc["multiplier"] = lr.multiplier.get_str();
    doc["guaranteed"] = lr.guaranteed;
    return emit(doc, out, kOk);
}

/// Shared polynomial-pair setup for the resultant/subres subcommands.
struct PolyPair {
    IntPoly f, g;
    int nvars, var;  // var: 0-based elimination variable
};

PolyPair parse_pair(const std::string& ft, const std::string& gt, long var1) {
    IntPoly f0 = IntPoly::parse(ft), g0 = IntPoly::parse(gt);
    int nv = std::max({f0.nvars(), g0.nvars(), 1});
    PolyPair pp{IntPoly::parse(ft, nv), IntPoly::parse(gt, nv), nv, static_cast<int>(var1) - 1};
    if (pp.var < 0 || pp.var >= nv) throw CLI::ValidationError("--var", "variable index out of range");
    return pp;
}

DomainPoly<PolyDomain> as_dompoly(const PolyDomain& pd, const IntPoly& f, int var) {
    std::vector<IntPoly> c(f.degree_in(var) + 1, pd.zero());
    for (long e = 0; e <= f.degree_in(var); ++e)
        c[e] = f.coefficient_poly(var, static_cast<unsigned>(e));
    DomainPoly<PolyDomain> d(std::move(c));
    d.normalize(pd);
    return d;
}

int run_resultant(const std::string& ft, const std::string& gt, long var1, const OutputOptions& out) {
    PolyPair pp = parse_pair(ft, gt, var1);
    PolyDomain pd(pp.nvars);
    IntPoly r = resultant(pd, as_dompoly(pd, pp.f, pp.var), as_dompoly(pd, pp.g, pp.var));
    Json doc;
    doc["command"] = "resultant";
    doc["f"] = pp.f.to_string();
    doc["g"] = pp.g.to_string();
    doc["var"] = var1;
    doc["resultant"] = r.to_string();
    return emit(doc, out, kOk);
}

int run_subres(const std::string& ft, const std::string& gt, long var1, long i,
               const OutputOptions& out) {
    PolyPair pp = parse_pair(ft, gt, var1);
    PolyDomain pd(pp.nvars);
    auto S = subresultant(pd, as_dompoly(pd, pp.f, pp.var), as_dompoly(pd, pp.g, pp.var), i);
    IntPoly s(pp.nvars);
    for (long e = 0; e <= S.deg(); ++e)
        s += S.coeffs[e] * IntPoly::variable(pp.var, pp.nvars).pow(static_cast<unsigned>(e));
    Json doc;
    doc["command"] = "subres";
    doc["f"] = pp.f.to_string();
    doc["g"] = pp.g.to_string();
    doc["var"] = var1;
    doc["i"] = i;
    doc["subresultant"] = s.to_string();
    return emit(doc, out, kOk);
}

int run_chain(const std::string& target, long k, const std::string& special, const std::string& in,
              const OutputOptions& out) {
    if (!in.empty()) {  // consume and re-verify a chain document
        Chain c = chain_from_json(load_json(in));
        bool ok = verify_chain(c);
        Json doc = chain_to_json(c);
        doc["verified"] = ok;
        return emit(doc, out, ok ? kOk : kVerifyFail);
    }
    if (target.empty()) throw CLI::ValidationError("--target", "required unless --in is given");
    Int r(target);
    Chain c = special.empty()
                  ? build_chain(r, Int(k))
                  : build_special_chain(r, special == "mersenne" ? SpecialForm::mersenne
                                                                 : SpecialForm::fermat);
    Json doc = chain_to_json(c);
    doc["verified"] = verify_chain(c);
    return emit(doc, out, doc["verified"].get<bool>() ? kOk : kVerifyFail);
}

int run_adversarial(const std::string& pt, long k, const OutputOptions& out) {
    Int p(pt);
    AdversarialSet adv = adversarial_set(p, Int(k));
    Json doc;
    doc["command"] = "adversarial";
    Json in;
    in["p"] = p.get_str();
    in["k"] = std::to_string(k);
    doc["input"] = std::move(in);
    Json as = Json::array();
    for (const auto& a : adv.A) as.push_back(a.get_str());
    doc["set"] = std::move(as);
    doc["set_size"] = static_cast<long>(adv.A.size());
    doc["chain_values"] = static_cast<long>(adv.witness.steps.size());
    doc["witness"] = chain_to_json(adv.witness);
    doc["witness_verified"] = verify_chain(adv.witness);
    return emit(doc, out, kOk);
}

int run_demo(const std::string& mode, long n, const std::string& pt, const std::string& setT,
             const std::string& polyT, long seed, const OutputOptions& out) {
    Json doc;
    if (mode == "sharpness") {
        PointLineConfig cfg = sharpness_lattice(n);
        doc["command"] = "demo";
        doc["mode"] = "sharpness";
        doc["n"] = n;
        doc["points"] = static_cast<long>(cfg.points.size());
        doc["lines"] = static_cast<long>(cfg.lines.size());
        doc["incidences"] = count_incidences(cfg, QDomain{});
        return emit(doc, out, kOk);
    }
    if (mode == "sparse-square") {
        IntPoly f = polyT.empty() ? IntPoly::zero(1) : IntPoly::parse(polyT, 1);
        auto [nf, nf2] = sparse_square_terms(f);
        doc["command"] = "demo";
        doc["mode"] = "sparse-square";
        doc["f"] = f.to_string();
        doc["terms_f"] = nf;
        doc["terms_f_squared"] = nf2;
        return emit(doc, out, kOk);
    }
    TransferMode tm;
    if (mode == "sumproduct") tm = TransferMode::sumproduct;
    else if (mode == "incidence") tm = TransferMode::incidence;
    else if (mode == "inverse") tm = TransferMode::inverse;
    else if (mode == "polynomial-image") tm = TransferMode::polynomial_image;
    else throw CLI::ValidationError("--mode", "unknown demo mode: " + mode);
    Int p(pt);
    std::vector<Int> A = parse_set(setT);
    IntPoly f = polyT.empty() ? IntPoly::variable(0, 1).pow(2) : IntPoly::parse(polyT, 1);
    try {
        TransferReport rep = transfer_report(A, p, tm, &f);
        doc = transfer_to_json(A, p, rep);
        doc["input"]["seed"] = seed;
        return emit(doc, out, rep.all_equal && rep.result.verified ? kOk : kVerifyFail);
    } catch (const BoundAbortError& e) {
        return emit(error_doc("demo", "bound-abort", e.what()), out, kBoundAbort);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rectification of small subsets of F_p into algebraic extensions of Q"};
    app.require_subcommand(1);

    std::string pt, setT, ft, gt, polyT, target, special, in, mode;
    long k = 2, t = 0, var1 = 1, si = 0, n = 64, seed = 0;
    bool force = false, requireGuarantee = false;
    OutputOptions out;

    auto* cRect = app.add_subcommand("rectify", "Rectify a subset of F_p");
    cRect->add_option("--p", pt, "Prime modulus")->required();
    cRect->add_option("--k", k, "Relation bound k (>= 2)")->required();
    cRect->add_option("--t", t, "Degree bound t (default k)");
    cRect->add_option("--set", setT, "Comma-separated residues")->required();
    cRect->add_flag("--force", force, "Continue past exact-bound aborts");
    cRect->add_flag("--require-guarantee", requireGuarantee,
                    "Exit 2 unless the triple-log gate certifies the run");
    cRect->add_option("--seed", seed, "Seed echoed into the document");
    add_output_flags(cRect, out);

    auto* cVerify = app.add_subcommand("verify", "Re-verify an emitted result document");
    cVerify->add_option("--in", in, "Result document (JSON)")->required();
    add_output_flags(cVerify, out);

    auto* cLift = app.add_subcommand("lift-linear", "Integer lift preserving bounded linear relations");
    cLift->add_option("--p", pt, "Prime modulus")->required();
    cLift->add_option("--k", k, "Relation bound k (>= 2)")->required();
    cLift->add_option("--set", setT, "Comma-separated residues")->required();
    cLift->add_flag("--force", force, "Run even when the k^(n+1) < p guarantee fails");
    add_output_flags(cLift, out);

    auto* cRes = app.add_subcommand("resultant", "Resultant of two polynomials");
    cRes->add_option("--f", ft, "First polynomial, e.g. \"x1^2 - 2\"")->required();
    cRes->add_option("--g", gt, "Second polynomial")->required();
    cRes->add_option("--var", var1, "Elimination variable (1-based, default x1)");
    add_output_flags(cRes, out);

    auto* cSub = app.add_subcommand("subres", "Subresultant S_i of two polynomials");
    cSub->add_option("--f", ft, "First polynomial")->required();
    cSub->add_option("--g", gt, "Second polynomial")->required();
    cSub->add_option("--var", var1, "Elimination variable (1-based, default x1)");
    cSub->add_option("--i", si, "Subresultant index")->required();
    add_output_flags(cSub, out);

    auto* cChain = app.add_subcommand("chain", "Build or verify a constructibility chain");
    cChain->add_option("--target", target, "Target integer");
    cChain->add_option("--k", k, "Bound k (>= 2)");
    cChain->add_option("--special", special, "Short chain form")
        ->check(CLI::IsMember({"mersenne", "fermat"}));
    cChain->add_option("--in", in, "Verify an existing chain document instead of building");
    add_output_flags(cChain, out);

    auto* cAdv = app.add_subcommand("adversarial", "Chain-residue adversarial set");
    cAdv->add_option("--p", pt, "Prime modulus")->required();
    cAdv->add_option("--k", k, "Bound k (>= 3)")->required();
    add_output_flags(cAdv, out);

    auto* cDemo = app.add_subcommand("demo", "Application demos");
    cDemo->add_option("--mode", mode,
                      "sharpness | sumproduct | incidence | inverse | polynomial-image | sparse-square")
        ->required();
    cDemo->add_option("--n", n, "Lattice size for sharpness");
    cDemo->add_option("--p", pt, "Prime modulus (transfer modes)");
    cDemo->add_option("--set", setT, "Comma-separated residues (transfer modes)");
    cDemo->add_option("--poly", polyT, "Univariate polynomial (sparse-square, polynomial-image)");
    cDemo->add_option("--seed", seed, "Seed echoed into the document");
    add_output_flags(cDemo, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*cRect) return run_rectify(pt, setT, k, t, force, requireGuarantee, seed, out);
        if (*cVerify) return run_verify(in, out);
        if (*cLift) return run_lift_linear(pt, setT, k, force, out);
        if (*cRes) return run_resultant(ft, gt, var1, out);
        if (*cSub) return run_subres(ft, gt, var1, si, out);
        if (*cChain) return run_chain(target, k, special, in, out);
        if (*cAdv) return run_adversarial(pt, k, out);
        if (*cDemo) return run_demo(mode, n, pt, setT, polyT, seed, out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
