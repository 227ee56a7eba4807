#include "odc/cli.hpp"
#include "odc/curves.hpp"
#include "odc/ratcase.hpp"
#include "odc/telescope.hpp"
#include "odc/termio.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace odc;

namespace {

py::object fraction(const Rat& q) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(py::int_(py::str(to_string(Integer(q.get_num())))), py::int_(py::str(to_string(Integer(q.get_den())))));
}

ProperTerm term_of(const std::string& text) {
    ProperTerm h = parse_term(text);
    h.validate();
    return h;
}

py::dict params(const std::string& text) {
    const StructuralParams sp = structural_params(term_of(text));
    py::dict d;
    d["delta"] = sp.delta;
    d["theta"] = sp.theta;
    d["lambda"] = sp.lambda;
    d["mu"] = sp.mu;
    d["nu"] = sp.nu;
    return d;
}

py::dict curve_dict(const CurveSpec& c, const std::pair<CurvePoint, CurvePoint>& pts) {
    py::dict d;
    d["formula"] = c.str();
    d["rmin"] = c.rmin;
    py::list points;
    for (const CurvePoint& p : {pts.first, pts.second}) points.append(py::make_tuple(p.r, p.d, p.satisfies));
    d["points"] = points;
    return d;
}

py::dict curve(const std::string& text) {
    const StructuralParams sp = structural_params(term_of(text));
    return curve_dict(curve_nonrational(sp), corollary_nonrational(sp));
}

py::dict rat_curve(const std::string& decomp) {
    const RationalParams rp = RationalParams::from(parse_decomp(decomp));
    return curve_dict(curve_rational(rp), corollary_rational(rp));
}

int dmin_of(const std::string& text, int r) { return dmin(curve_nonrational(structural_params(term_of(text))), r); }

std::optional<std::string> telescope(const std::string& text, std::optional<int> order, std::optional<int> degree) {
    const ProperTerm h = term_of(text);
    if (degree) {
        const SolveOutcome out = solve_structured(h, order.value_or(structural_params(h).nu), *degree);
        if (!out.pair) return std::nullopt;
        return serialize_operator(out.pair->L, out.pair->C.value);
    }
    const auto z = solve_zeilberger(h, order.value_or(6));
    if (!z) return std::nullopt;
    return serialize_operator(z->pair.L, z->pair.C.value);
}

bool verify(const std::string& text, const std::string& op) {
    const OperatorFile f = parse_operator(op);
    if (!f.C) throw PreconditionError("operator has no certificate");
    return verify_pair(term_of(text), f.L, *f.C);
}

std::vector<std::tuple<int, int, bool>> region(const std::string& text, int rmax, int dmax) {
    RegionOptions o;
    o.keep_pairs = false;
    const Region reg = region_scan(term_of(text), rmax, dmax, o);
    std::vector<std::tuple<int, int, bool>> out;
    for (const auto& c : reg.cells) out.emplace_back(c.r, c.d, c.exists);
    return out;
}

py::object cost_of(const std::string& text, int r, int d, const std::string& kappa) {
    CostModel m;
    m.sp = structural_params(term_of(text));
    m.kappa = parse_rat(kappa);
    return fraction(cost(m, r, d));
}

py::tuple suggest(const std::string& text, int rmax, const std::string& kappa) {
    CostModel m;
    m.sp = structural_params(term_of(text));
    m.kappa = parse_rat(kappa);
    const CostRow best = suggest_order(m, curve_nonrational(m.sp), rmax);
    return py::make_tuple(best.r, best.d, fraction(best.cost));
}

std::string decompose_text(const std::string& rational) {
    return serialize_decomp(decompose(parse_rational(rational).reduced()));
}

std::optional<std::string> rat_telescope(const std::string& decomp, int r, int d) {
    const auto L = solve_rational(parse_decomp(decomp), r, d);
    if (!L) return std::nullopt;
    return serialize_operator(*L);
}

bool rat_verify(const std::string& decomp, const std::string& op) {
    return verify_rational(parse_decomp(decomp), parse_operator(op).L);
}

py::tuple run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact telescopers for proper hypergeometric terms";

    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            PyErr_SetString(parse_error.ptr(), e.what());
        }
    });

    m.def("params", &params, py::arg("term"), "Structural parameters of a term document.");
    m.def("curve", &curve, py::arg("term"), "Order-degree curve and its two corollary points.");
    m.def("dmin", &dmin_of, py::arg("term"), py::arg("r"), "Smallest degree above the curve at order r.");
    m.def("telescope", &telescope, py::arg("term"), py::arg("order") = py::none(), py::arg("degree") = py::none(),
          "Operator document for a telescoper, or None.");
    m.def("verify", &verify, py::arg("term"), py::arg("operator"));
    m.def("region", &region, py::arg("term"), py::arg("rmax"), py::arg("dmax"),
          "Cells (r, d, exists) of the solvable region.");
    m.def("cost", &cost_of, py::arg("term"), py::arg("r"), py::arg("d"), py::arg("kappa") = "1");
    m.def("suggest_order", &suggest, py::arg("term"), py::arg("rmax"), py::arg("kappa") = "1",
          "(r, d, cost) minimizing the cost along the curve.");
    m.def("decompose", &decompose_text, py::arg("rational"), "Decomposition document of a rational input.");
    m.def("rat_curve", &rat_curve, py::arg("decomposition"));
    m.def("rat_telescope", &rat_telescope, py::arg("decomposition"), py::arg("r"), py::arg("d"));
    m.def("rat_verify", &rat_verify, py::arg("decomposition"), py::arg("operator"));
    m.def("run_cli", &run_cli, py::arg("args"), "Runs one CLI command; returns (exit code, stdout, stderr).");
}
