#include "schsym/cli.hpp"

#include "schsym/closure.hpp"
#include "schsym/onshell.hpp"
#include "schsym/parser.hpp"
#include "schsym/printer.hpp"
#include "schsym/reps.hpp"
#include "schsym/spectrum.hpp"
#include "schsym/superconf.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <sstream>

namespace schsym {

namespace {

using nlohmann::json;

const SymbolTable& table() { return rep_symbols(); }

// The substituted point nu = -1/(4a) shared by the constant and linear
// representations.
FracPoly nu_point() {
    return FracPoly(Poly(Rational(-1)),
                    Poly(MonomialTerm{Rational(4), Monomial::sym(sym::a)}));
}

std::string coeff_str(const FracPoly& f) { return format_frac(f, table()); }

std::string parity_str(Parity p) { return p == Parity::odd ? "odd" : "even"; }

std::string bracket_str(BracketKind k) {
    return k == BracketKind::anticommutator ? "anti" : "comm";
}

// Linear combination over generator names, e.g. "-8*a*nu*z_0 + w_p".
std::string format_combo(const std::vector<FracPoly>& coeffs,
                         const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        std::string c = coeff_str(coeffs[j]);
        std::string piece;
        if (c == "1")
            piece = names[j];
        else if (c == "-1")
            piece = "-" + names[j];
        else if (c.find(' ') != std::string::npos)
            piece = "(" + c + ")*" + names[j];
        else
            piece = c + "*" + names[j];
        if (out.empty())
            out = piece;
        else if (piece.front() == '-')
            out += " - " + piece.substr(1);
        else
            out += " + " + piece;
    }
    return out.empty() ? "0" : out;
}

json result_json(const std::vector<FracPoly>& coeffs,
                 const std::vector<std::string>& names) {
    json arr = json::array();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        arr.push_back({{"coeff", coeff_str(coeffs[j])}, {"gen", names[j]}});
    }
    return arr;
}

json table_json(const StructureTable& t, bool with_parity) {
    json doc;
    doc["basis"] = t.names;
    if (with_parity) {
        json par = json::array();
        for (Parity p : t.parities) par.push_back(parity_str(p));
        doc["parity"] = par;
    }
    doc["kind"] = t.kind == TableKind::lie ? "lie" : "super";
    json entries = json::array();
    for (const TableEntry& e : t.entries)
        entries.push_back({{"i", t.names[e.i]},
                           {"j", t.names[e.j]},
                           {"bracket", bracket_str(e.bracket)},
                           {"result", result_json(e.coeffs, t.names)}});
    doc["entries"] = entries;
    json failures = json::array();
    for (const TableFailure& f : t.failures)
        failures.push_back({{"i", t.names[f.i]},
                            {"j", t.names[f.j]},
                            {"bracket", bracket_str(f.bracket)},
                            {"at", describe_key(f.why.key, table())},
                            {"residual", coeff_str(f.why.residual)}});
    doc["failures"] = failures;
    return doc;
}

void print_table(std::ostream& out, const StructureTable& t) {
    for (const TableEntry& e : t.entries) {
        bool nonzero = false;
        for (const FracPoly& c : e.coeffs) nonzero = nonzero || !c.is_zero();
        if (!nonzero) continue;
        const char* open = e.bracket == BracketKind::anticommutator ? "{" : "[";
        const char* close = e.bracket == BracketKind::anticommutator ? "}" : "]";
        out << open << t.names[e.i] << ", " << t.names[e.j] << close << " = "
            << format_combo(e.coeffs, t.names) << "\n";
    }
    for (const TableFailure& f : t.failures) {
        const char* open = f.bracket == BracketKind::anticommutator ? "{" : "[";
        const char* close = f.bracket == BracketKind::anticommutator ? "}" : "]";
        out << "NOT CLOSED: " << open << t.names[f.i] << ", " << t.names[f.j] << close
            << " leaves the span; residual " << coeff_str(f.why.residual) << " at "
            << describe_key(f.why.key, table()) << "\n";
    }
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

struct Options {
    bool json = false;
    long seed = 42;
};

int cmd_rep(std::ostream& out, const Options& opt, RepCase rc, bool extended) {
    NamedBasis basis = build_rep(rc);
    if (extended) basis = extend_rep(basis);
    if (opt.json) {
        json doc;
        doc["case"] = rep_case_name(rc);
        doc["extended"] = extended;
        json gens = json::array();
        for (const BasisElement& e : basis)
            gens.push_back({{"name", e.name},
                            {"parity", parity_str(e.parity)},
                            {"expr", format_expr(e.op, table())}});
        doc["generators"] = gens;
        out << doc.dump(2) << "\n";
    } else {
        for (const BasisElement& e : basis)
            out << e.name << " = " << format_expr(e.op, table()) << "\n";
    }
    return 0;
}

int cmd_bracket(std::ostream& out, std::ostream& err, const Options& opt, RepCase rc,
                BracketKind kind, const std::string& g1, const std::string& g2) {
    NamedBasis basis = extend_rep(build_rep(rc));
    for (const std::string& g : {g1, g2})
        if (!basis.index_of(g)) {
            err << "unknown generator '" << g << "'\n";
            return 2;
        }
    DiffOp value = bracket(basis.op(g1), basis.op(g2), kind);
    ExpressResult r = express_in_basis(value, basis);
    std::vector<std::string> names;
    for (const BasisElement& e : basis) names.push_back(e.name);
    const char* open = kind == BracketKind::anticommutator ? "{" : "[";
    const char* close = kind == BracketKind::anticommutator ? "}" : "]";
    if (opt.json) {
        json doc{{"i", g1},
                 {"j", g2},
                 {"bracket", bracket_str(kind)},
                 {"expr", format_expr(value, table())},
                 {"in_span", r.ok}};
        if (r.ok) doc["result"] = result_json(r.coeffs, names);
        out << doc.dump(2) << "\n";
    } else {
        out << open << g1 << ", " << g2 << close << " = ";
        if (r.ok)
            out << format_combo(r.coeffs, names) << "\n";
        else
            out << format_expr(value, table()) << "  (outside the generator span)\n";
    }
    return 0;
}

int cmd_closure(std::ostream& out, const Options& opt, RepCase rc, TableKind kind,
                bool subst_nu) {
    // The commutator table closes on the six first-order generators; the
    // graded table needs the second-order enlargement to absorb {w_p, w_m}.
    NamedBasis basis = build_rep(rc);
    if (kind == TableKind::super) basis = extend_rep(basis);
    StructureTable t = closure_table(basis, kind);
    if (subst_nu) t = substitute_table(t, sym::nu, nu_point());
    if (opt.json) {
        out << table_json(t, kind == TableKind::super).dump(2) << "\n";
    } else {
        print_table(out, t);
        out << (t.closed() ? "closed" : "NOT closed") << " (" << t.names.size()
            << " generators, kind " << (kind == TableKind::lie ? "lie" : "super")
            << ")\n";
    }
    return t.closed() ? 0 : 1;
}

int cmd_duality(std::ostream& out, const Options& opt, RepCase rc) {
    DualityReport report = duality_check(extend_rep(build_rep(rc)));
    if (opt.json) {
        json doc;
        doc["holds"] = report.holds;
        doc["notes"] = report.notes;
        doc["lie"] = table_json(report.lie, false);
        doc["super"] = table_json(report.super, true);
        out << doc.dump(2) << "\n";
    } else {
        for (const std::string& n : report.notes) out << n << "\n";
        out << (report.holds ? "duality holds" : "duality FAILS") << "\n";
    }
    return report.holds ? 0 : 1;
}

int cmd_onshell(std::ostream& out, std::ostream& err, const Options& opt, RepCase rc,
                const std::string& gen) {
    NamedBasis basis = extend_rep(build_rep(rc));
    DiffOp omega = build_omega(rc);
    if (!gen.empty()) {
        if (!basis.index_of(gen)) {
            err << "unknown generator '" << gen << "'\n";
            return 2;
        }
        auto f = onshell_factor(basis.op(gen), omega);
        if (!f) {
            err << "no factor: [" << gen << ", Omega] is not a ring multiple of Omega\n";
            return 1;
        }
        if (opt.json) {
            json doc{{"gen", gen}, {"f", format_ring(*f, table())}};
            out << doc.dump(2) << "\n";
        } else {
            out << "f = " << format_ring(*f, table()) << "\n";
        }
        return 0;
    }

    OnshellReport report = onshell_report(basis, omega);
    std::vector<std::string> names;
    for (const BasisElement& e : basis) names.push_back(e.name);
    bool all_ok = report.all_factored;
    for (const OnshellLine& line : report.lines) all_ok = all_ok && line.symmetry;
    if (opt.json) {
        json doc;
        doc["case"] = rep_case_name(rc);
        doc["omega"] = format_expr(omega, table());
        json lines = json::array();
        for (const OnshellLine& line : report.lines) {
            json l{{"gen", line.gen},
                   {"vanishes", line.vanishes},
                   {"symmetry", line.symmetry}};
            if (line.factor) l["f"] = format_ring(*line.factor, table());
            if (line.combo_ok) l["combo"] = result_json(line.combo, names);
            lines.push_back(l);
        }
        doc["lines"] = lines;
        doc["all_factored"] = report.all_factored;
        out << doc.dump(2) << "\n";
    } else {
        for (const OnshellLine& line : report.lines) {
            out << line.gen << ": ";
            if (line.factor)
                out << "f = " << format_ring(*line.factor, table());
            else
                out << "no factor";
            if (!line.vanishes && line.combo_ok)
                out << "; [" << line.gen << ", Omega] = " << format_combo(line.combo, names);
            out << "\n";
        }
        out << (all_ok ? "all generators are on-shell symmetries"
                       : "on-shell check FAILED")
            << "\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_spectrum(std::ostream& out, const Options& opt, unsigned n, bool numeric) {
    NamedBasis basis = build_rep(RepCase::quadratic);
    DiffOp omega = build_omega(RepCase::quadratic);
    auto roots = gaussian_vacuum_ansatz(omega);
    VacuumSolution vac = select_fock_branch(roots, basis.op("w_p"), basis.op("w_m"));
    auto states = ladder_states(vac, omega, basis.op("z_0"), n);

    std::vector<double> inst = default_instantiation();
    std::vector<double> residuals;
    if (numeric)
        for (const LadderState& s : states)
            residuals.push_back(numeric_residual(
                s.psi, omega, 20, static_cast<std::uint64_t>(opt.seed), inst));

    if (opt.json) {
        json doc;
        doc["lambda"] = format_monomial_term(vac.lambda, table());
        doc["beta"] = format_monomial_term(vac.beta, table());
        doc["annihilator"] = "w_p";
        doc["ladder"] = "w_m";
        json arr = json::array();
        for (const LadderState& s : states) {
            json st{{"n", s.n},
                    {"z0", format_monomial_term(s.z0_eigen, table())},
                    {"psi", format_ring(s.psi, table())}};
            if (numeric) st["residual"] = residuals[s.n];
            arr.push_back(st);
        }
        doc["states"] = arr;
        if (numeric) {
            doc["numeric"] = {{"a", inst[sym::a]},
                              {"nu", inst[sym::nu]},
                              {"samples", 20},
                              {"seed", opt.seed}};
        }
        out << doc.dump(2) << "\n";
    } else {
        out << "vacuum: lambda = " << format_monomial_term(vac.lambda, table())
            << ", beta = " << format_monomial_term(vac.beta, table()) << "\n";
        out << "annihilator: w_p, ladder: w_m\n";
        for (const LadderState& s : states) {
            out << "n=" << s.n << ": z_0 = " << format_monomial_term(s.z0_eigen, table())
                << ", psi = " << format_ring(s.psi, table());
            if (numeric) out << ", residual = " << sci(residuals[s.n]);
            out << "\n";
        }
        if (numeric)
            out << "numeric oracle: a = " << inst[sym::a] << ", nu = " << inst[sym::nu]
                << ", 20 samples, seed " << opt.seed << "\n";
    }
    return 0;
}

int sigma_closure(std::ostream& out, const Options& opt, const SigmaModel& model) {
    StructureTable t = sigma_closure_table(model);
    if (opt.json)
        out << table_json(t, true).dump(2) << "\n";
    else {
        print_table(out, t);
        out << (t.closed() ? "closed" : "NOT closed") << "\n";
    }
    return t.closed() ? 0 : 1;
}

int sigma_onshell(std::ostream& out, const Options& opt, const SigmaModel& model) {
    bool all_ok = true;
    json arr = json::array();
    for (std::size_t i = 0; i < model.ops.size(); ++i) {
        bool ok = eom_onshell_check(model.ops[i], Rational(1));
        all_ok = all_ok && ok;
        if (opt.json)
            arr.push_back({{"gen", model.names[i]}, {"onshell", ok}});
        else
            out << model.names[i] << ": eps=1 equations of motion "
                << (ok ? "preserved" : "NOT preserved") << "\n";
    }
    if (opt.json)
        out << json{{"eps", 1}, {"results", arr}}.dump(2) << "\n";
    else if (all_ok)
        out << "all generators preserve the eps=1 equations of motion\n";
    return all_ok ? 0 : 1;
}

int sigma_square(std::ostream& out, const Options& opt, const SigmaModel& model) {
    SquareCertificate cert = hamiltonian_square_search(model);
    if (opt.json) {
        json doc{{"target", cert.target},
                 {"expressible", cert.expressible},
                 {"satisfiable", cert.satisfiable}};
        if (cert.expressible) doc["equations"] = cert.equations;
        if (cert.satisfiable) {
            doc["alpha"] = cert.alpha.str();
            doc["beta"] = cert.beta.str();
        }
        out << doc.dump(2) << "\n";
        return cert.satisfiable ? 1 : 0;
    }
    if (cert.satisfiable) {
        out << "satisfiable: alpha = " << cert.alpha.str() << ", beta = "
            << cert.beta.str() << "\n";
        return 1;
    }
    out << "UNSATISFIABLE: " << cert.equations << "\n";
    if (cert.expressible) out << "H lies in the even sector: {Qp, Qm} = 2*H\n";
    return 0;
}

int cmd_sigma(std::ostream& out, const Options& opt, const std::string& check) {
    SigmaModel model = build_n1_hyperbolic();
    if (check == "closure") return sigma_closure(out, opt, model);
    if (check == "onshell") return sigma_onshell(out, opt, model);
    if (check == "square") return sigma_square(out, opt, model);
    int rc = sigma_closure(out, opt, model);
    rc = std::max(rc, sigma_onshell(out, opt, model));
    rc = std::max(rc, sigma_square(out, opt, model));
    return rc;
}

int cmd_parse(std::ostream& out, const Options& opt, std::string text) {
    if (text.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    }
    DiffOp p = parse_expr(text, table());
    std::string canonical = format_expr(p, table());
    if (opt.json)
        out << json{{"input", text}, {"canonical", canonical}}.dump(2) << "\n";
    else
        out << canonical << "\n";
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact symbolic checks for Schrodinger-type symmetry algebras"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit JSON on stdout");
    app.add_option("--seed", opt.seed, "seed for the numeric oracle sampler");

    std::string case_s = "const";
    bool extended = false;
    auto* rep = app.add_subcommand("rep", "representation fixtures");
    auto* dump = rep->add_subcommand("dump", "print the generators");
    dump->add_option("--case", case_s, "const|lin|quad")
        ->check(CLI::IsMember({"const", "lin", "quad"}));
    dump->add_flag("--extended", extended, "include w_p1, w_0s, w_m1");

    std::string type_s = "comm", g1, g2;
    auto* br = app.add_subcommand("bracket", "bracket of two named generators");
    br->add_option("--case", case_s, "const|lin|quad")
        ->check(CLI::IsMember({"const", "lin", "quad"}));
    br->add_option("--type", type_s, "comm|anti")->check(CLI::IsMember({"comm", "anti"}));
    br->add_option("G1", g1, "first generator")->required();
    br->add_option("G2", g2, "second generator")->required();

    std::string kind_s = "lie";
    bool subst_nu = false;
    auto* cl = app.add_subcommand("closure", "bracket closure table");
    cl->add_option("--case", case_s, "const|lin|quad")
        ->check(CLI::IsMember({"const", "lin", "quad"}));
    cl->add_option("--kind", kind_s, "lie|super")->check(CLI::IsMember({"lie", "super"}));
    cl->add_flag("--subst-nu", subst_nu, "specialize nu to -1/(4a)");

    auto* du = app.add_subcommand("duality", "commutator/anticommutator duality report");
    du->add_option("--case", case_s, "const|lin|quad")
        ->check(CLI::IsMember({"const", "lin", "quad"}));

    std::string gen;
    auto* os = app.add_subcommand("onshell", "factors [g, Omega] = f*Omega");
    os->add_option("--case", case_s, "const|lin|quad")
        ->check(CLI::IsMember({"const", "lin", "quad"}));
    os->add_option("--gen", gen, "restrict to one generator");

    unsigned n = 3;
    bool numeric = false;
    auto* sp = app.add_subcommand("spectrum", "oscillator ladder states");
    sp->add_option("--n", n, "highest state index");
    sp->add_flag("--numeric", numeric, "run the finite-difference residual oracle");

    std::string check_s = "all";
    auto* sg = app.add_subcommand("sigma", "graded matrix model checks");
    sg->add_option("--check", check_s, "closure|onshell|square|all")
        ->check(CLI::IsMember({"closure", "onshell", "square", "all"}));

    std::string expr_text;
    auto* pa = app.add_subcommand("parse", "parse and canonically reprint an expression");
    pa->add_option("EXPR", expr_text, "expression; stdin when omitted");

    for (CLI::App* sub : {rep, dump, br, cl, du, os, sp, sg, pa}) sub->fallthrough();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    RepCase rc = *rep_case_from_string(case_s);
    BracketKind bk =
        type_s == "anti" ? BracketKind::anticommutator : BracketKind::commutator;
    TableKind tk = kind_s == "super" ? TableKind::super : TableKind::lie;

    try {
        if (*dump) return cmd_rep(out, opt, rc, extended);
        if (*br) return cmd_bracket(out, err, opt, rc, bk, g1, g2);
        if (*cl) return cmd_closure(out, opt, rc, tk, subst_nu);
        if (*du) return cmd_duality(out, opt, rc);
        if (*os) return cmd_onshell(out, err, opt, rc, gen);
        if (*sp) return cmd_spectrum(out, opt, n, numeric);
        if (*sg) return cmd_sigma(out, opt, check_s);
        if (*pa) return cmd_parse(out, opt, expr_text);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << app.help();
    return 2;
}

}  // namespace schsym
