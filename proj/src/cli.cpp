#include "odc/cli.hpp"

#include "odc/curves.hpp"
#include "odc/telescope.hpp"
#include "odc/termio.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

namespace odc {

namespace {

struct Options {
    std::string input;
    std::string second;
    std::optional<int> order;
    std::optional<int> degree;
    std::optional<int> rmin;
    std::optional<int> rmax;
    int dmax = 12;
    std::string mode;
    int slack = -1;
    bool allow_splittable = false;
    std::string out_path;
    std::string csv_path;
    std::string kappa = "1";
    bool rational = false;
    std::string reading = "ap";
    std::string a = "1";
    std::string b = "1";
};

class NoSolution : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void emit(const Options& o, std::ostream& out, const std::string& text) {
    if (o.out_path.empty())
        out << text;
    else
        write_file(o.out_path, text);
}

Rat parse_kappa(const std::string& s) {
    const PolyNK p = parse_poly(s);
    if (!p.is_constant() || p.coeff(0, 0) <= 0) throw PreconditionError("kappa must be a positive constant");
    return p.coeff(0, 0);
}

ProperTerm load_term(const std::string& path) {
    ProperTerm h = parse_term(read_file(path));
    h.validate();
    return h;
}

std::string point_str(const CurvePoint& p) {
    return "(" + std::to_string(p.r) + ", " + std::to_string(p.d) + ")" + (p.satisfies ? "" : " [not above the curve]");
}

void print_curve(std::ostream& out, const CurveSpec& c, const CurvePoint& p1, const CurvePoint& p2, int rmin, int rmax) {
    out << "curve: d > " << c.str() << " for r >= " << c.rmin << "\n";
    out << "points: " << point_str(p1) << " " << point_str(p2) << "\n";
    out << "r d_min\n";
    for (int r = std::max(rmin, c.rmin); r <= rmax; ++r) out << r << " " << dmin(c, r) << "\n";
}

int cmd_params(const Options& o, std::ostream& out) {
    const StructuralParams sp = structural_params(load_term(o.input));
    out << "delta=" << sp.delta << " theta=" << sp.theta << " lambda=" << sp.lambda << " mu=" << sp.mu
        << " nu=" << sp.nu << "\n";
    return 0;
}

int cmd_curve(const Options& o, std::ostream& out) {
    const StructuralParams sp = structural_params(load_term(o.input));
    const CurveSpec c = curve_nonrational(sp);
    const int rmin = o.rmin.value_or(c.rmin);
    const int rmax = o.rmax.value_or(std::max(rmin, c.rmin) + 10);
    if (!o.csv_path.empty()) write_file(o.csv_path, curve_csv(c, rmin, rmax));
    const auto [p1, p2] = corollary_nonrational(sp);
    print_curve(out, c, p1, p2, rmin, rmax);
    return 0;
}

int cmd_telescope(const Options& o, std::ostream& out) {
    const ProperTerm h = load_term(o.input);
    std::string mode = o.mode;
    if (mode.empty()) mode = o.degree ? "structured" : "zeilberger";
    if (mode == "structured") {
        if (!o.order || !o.degree) throw PreconditionError("structured mode needs --order and --degree");
        SolveOptions so;
        so.allow_splittable = o.allow_splittable;
        so.slack = std::max(0, o.slack);
        const SolveOutcome res = solve_structured(h, *o.order, *o.degree, so);
        if (!res.pair)
            throw NoSolution("no telescoper at order " + std::to_string(*o.order) + " and degree " +
                             std::to_string(*o.degree) + (res.note.empty() ? "" : " (" + res.note + ")"));
        emit(o, out, serialize_operator(res.pair->L, res.pair->C.value));
        return 0;
    }
    if (mode == "zeilberger") {
        ZeilbergerOptions zo;
        zo.allow_splittable = o.allow_splittable;
        if (o.slack >= 0) zo.slack = o.slack;
        const int rmax = o.order.value_or(6);
        const auto res = solve_zeilberger(h, rmax, zo);
        if (!res) throw NoSolution("no telescoper up to order " + std::to_string(rmax));
        emit(o, out, serialize_operator(res->pair.L, res->pair.C.value));
        return 0;
    }
    throw PreconditionError("unknown mode '" + mode + "'");
}

int cmd_region(const Options& o, std::ostream& out, std::ostream& err) {
    const ProperTerm h = load_term(o.input);
    RegionOptions ro;
    ro.allow_splittable = o.allow_splittable;
    if (o.slack >= 0) ro.slack = o.slack;
    ro.keep_pairs = false;
    ro.progress = [&err](int r, int marked) { err << "row r=" << r << " marked=" << marked << std::endl; };
    const Region region = region_scan(h, o.rmax.value_or(6), o.dmax, ro);
    const std::string csv = region_csv(region);
    if (!o.csv_path.empty())
        write_file(o.csv_path, csv);
    else
        emit(o, out, csv);
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const ProperTerm h = load_term(o.input);
    const OperatorFile op = parse_operator(read_file(o.second));
    if (!op.C) throw PreconditionError("operator file has no certificate");
    if (verify_pair(h, op.L, *op.C)) {
        out << "verified\n";
        return 0;
    }
    out << "not verified\n";
    return 1;
}

CostModel model_for(const Options& o, CurveSpec& curve) {
    CostModel m;
    m.kappa = parse_kappa(o.kappa);
    if (o.rational) {
        const DecomposedInput inp = parse_decomp(read_file(o.input));
        m.kind = CurveCase::Rational;
        m.deg_u = inp.deg_u();
        curve = curve_rational(RationalParams::from(inp));
    } else {
        m.sp = structural_params(load_term(o.input));
        curve = curve_nonrational(m.sp);
    }
    return m;
}

int cmd_cost(const Options& o, std::ostream& out) {
    CurveSpec curve;
    const CostModel m = model_for(o, curve);
    if (o.order) {
        const int d = o.degree.value_or(dmin(curve, *o.order));
        out << "cost=" << to_string(cost(m, *o.order, d)) << "\n";
        return 0;
    }
    const int rmin = o.rmin.value_or(curve.rmin);
    const int rmax = o.rmax.value_or(std::max(rmin, curve.rmin) + 10);
    const std::string csv = cost_csv(cost_table(m, curve, rmin, rmax));
    if (!o.csv_path.empty())
        write_file(o.csv_path, csv);
    else
        emit(o, out, csv);
    return 0;
}

int cmd_suggest(const Options& o, std::ostream& out) {
    CurveSpec curve;
    const CostModel m = model_for(o, curve);
    const CostRow best = suggest_order(m, curve, o.rmax.value_or(curve.rmin + 50));
    out << "r=" << best.r << " d=" << best.d << " cost=" << to_string(best.cost) << "\n";
    return 0;
}

int cmd_rat_curve(const Options& o, std::ostream& out) {
    const RationalParams rp = RationalParams::from(parse_decomp(read_file(o.input)));
    OrderReading reading;
    if (o.reading == "ap")
        reading = OrderReading::Ap;
    else if (o.reading == "a")
        reading = OrderReading::A;
    else
        throw PreconditionError("--reading must be 'ap' or 'a'");
    const CurveSpec c = curve_rational(rp);
    const int rmin = o.rmin.value_or(c.rmin);
    const int rmax = o.rmax.value_or(std::max(rmin, c.rmin) + 10);
    if (!o.csv_path.empty()) write_file(o.csv_path, curve_csv(c, rmin, rmax));
    const auto [p1, p2] = corollary_rational(rp, reading);
    print_curve(out, c, p1, p2, rmin, rmax);
    return 0;
}

int cmd_rat_telescope(const Options& o, std::ostream& out) {
    const DecomposedInput inp = parse_decomp(read_file(o.input));
    const CurveSpec c = curve_rational(RationalParams::from(inp));
    const int r = o.order.value_or(c.rmin);
    const int d = o.degree ? *o.degree : std::max(dmin(c, r), inp.deg_u());
    const auto L = solve_rational(inp, r, d);
    if (!L) throw NoSolution("no telescoper at order " + std::to_string(r) + " and degree " + std::to_string(d));
    emit(o, out, serialize_operator(*L));
    return 0;
}

int cmd_rat_verify(const Options& o, std::ostream& out) {
    const DecomposedInput inp = parse_decomp(read_file(o.input));
    const OperatorFile op = parse_operator(read_file(o.second));
    if (verify_rational(inp, op.L)) {
        out << "verified\n";
        return 0;
    }
    out << "not verified\n";
    return 1;
}

int cmd_decompose(const Options& o, std::ostream& out) {
    const RationalInput in = parse_rational(read_file(o.input));
    emit(o, out, serialize_decomp(decompose(in.reduced())));
    return 0;
}

int cmd_lift(const Options& o, std::ostream& out) {
    const OperatorFile op = parse_operator(read_file(o.input));
    const PolyN a = parse_poly_n(o.a), b = parse_poly_n(o.b);
    if (a.is_zero() || b.is_zero()) throw PreconditionError("--a and --b must be nonzero");
    emit(o, out, serialize_operator(lift(op.L, a, b)));
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Order-degree curves and telescopers for proper hypergeometric terms", "odc"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);
    Options o;

    auto input = [&](CLI::App* sc, const std::string& what) {
        sc->add_option("input", o.input, what)->required()->check(CLI::ExistingFile);
    };
    auto window = [&](CLI::App* sc) {
        sc->add_option("--rmin", o.rmin, "first order of the table");
        sc->add_option("--rmax", o.rmax, "last order of the table");
        sc->add_option("--csv", o.csv_path, "write the table as CSV");
    };
    auto out_opt = [&](CLI::App* sc) { sc->add_option("--out", o.out_path, "write the result to a file"); };

    auto* params = app.add_subcommand("params", "print the structural parameters of a term");
    input(params, "term file");

    auto* curve = app.add_subcommand("curve", "order-degree curve of a term");
    input(curve, "term file");
    window(curve);

    auto* tel = app.add_subcommand("telescope", "compute a telescoper and certificate");
    input(tel, "term file");
    tel->add_option("--order", o.order, "order r (maximal order in zeilberger mode)")->check(CLI::NonNegativeNumber);
    tel->add_option("--degree", o.degree, "degree d")->check(CLI::NonNegativeNumber);
    tel->add_option("--mode", o.mode, "structured or zeilberger")->check(CLI::IsMember({"structured", "zeilberger"}));
    tel->add_option("--slack", o.slack, "extra degree for the certificate ansatz")->check(CLI::NonNegativeNumber);
    tel->add_flag("--allow-splittable", o.allow_splittable, "run even if the term looks splittable");
    out_opt(tel);

    auto* reg = app.add_subcommand("region", "mark the (r, d) cells where a telescoper exists");
    input(reg, "term file");
    reg->add_option("--rmax", o.rmax, "largest order")->check(CLI::NonNegativeNumber);
    reg->add_option("--dmax", o.dmax, "largest degree")->check(CLI::NonNegativeNumber);
    reg->add_option("--slack", o.slack, "extra degree for the certificate ansatz")->check(CLI::NonNegativeNumber);
    reg->add_option("--csv", o.csv_path, "write the region as CSV");
    reg->add_flag("--allow-splittable", o.allow_splittable, "run even if the term looks splittable");
    out_opt(reg);

    auto* ver = app.add_subcommand("verify", "check a telescoper and certificate exactly");
    input(ver, "term file");
    ver->add_option("operator", o.second, "operator file")->required()->check(CLI::ExistingFile);

    auto* cst = app.add_subcommand("cost", "cost estimate along the curve");
    input(cst, "term file, or decomposition file with --rational");
    cst->add_flag("--rational", o.rational, "input is a decomposition file");
    cst->add_option("--kappa", o.kappa, "cost constant");
    cst->add_option("--order", o.order, "single order")->check(CLI::NonNegativeNumber);
    cst->add_option("--degree", o.degree, "degree for --order (default: d_min)")->check(CLI::NonNegativeNumber);
    window(cst);
    out_opt(cst);

    auto* sug = app.add_subcommand("suggest", "order of minimal cost along the curve");
    input(sug, "term file, or decomposition file with --rational");
    sug->add_flag("--rational", o.rational, "input is a decomposition file");
    sug->add_option("--kappa", o.kappa, "cost constant");
    sug->add_option("--rmax", o.rmax, "largest order considered");

    auto* rcurve = app.add_subcommand("rat-curve", "order-degree curve of a decomposed rational term");
    input(rcurve, "decomposition file");
    rcurve->add_option("--reading", o.reading, "coefficients weighting the second point: ap or a");
    window(rcurve);

    auto* rtel = app.add_subcommand("rat-telescope", "telescoper of a decomposed rational term");
    input(rtel, "decomposition file");
    rtel->add_option("--order", o.order, "order r (default: the curve's threshold)")->check(CLI::NonNegativeNumber);
    rtel->add_option("--degree", o.degree, "degree d (default: d_min)")->check(CLI::NonNegativeNumber);
    out_opt(rtel);

    auto* rver = app.add_subcommand("rat-verify", "check a telescoper of a decomposed rational term");
    input(rver, "decomposition file");
    rver->add_option("operator", o.second, "operator file")->required()->check(CLI::ExistingFile);

    auto* dec = app.add_subcommand("decompose", "decompose a rational term");
    input(dec, "rational input file");
    out_opt(dec);

    auto* lf = app.add_subcommand("lift", "lift a telescoper through S_n(w)/w = a/b");
    input(lf, "operator file");
    lf->add_option("--a", o.a, "numerator polynomial in n");
    lf->add_option("--b", o.b, "denominator polynomial in n");
    out_opt(lf);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        if (name == "params") return cmd_params(o, out);
        if (name == "curve") return cmd_curve(o, out);
        if (name == "telescope") return cmd_telescope(o, out);
        if (name == "region") return cmd_region(o, out, err);
        if (name == "verify") return cmd_verify(o, out);
        if (name == "cost") return cmd_cost(o, out);
        if (name == "suggest") return cmd_suggest(o, out);
        if (name == "rat-curve") return cmd_rat_curve(o, out);
        if (name == "rat-telescope") return cmd_rat_telescope(o, out);
        if (name == "rat-verify") return cmd_rat_verify(o, out);
        if (name == "decompose") return cmd_decompose(o, out);
        if (name == "lift") return cmd_lift(o, out);
        err << "unknown command " << name << "\n";
        return 2;
    } catch (const NoSolution& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

} // namespace odc
