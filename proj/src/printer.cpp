#include "schsym/printer.hpp"

#include <vector>

namespace schsym {

namespace {

void append_power(std::vector<std::string>& factors, const std::string& base, int e) {
    if (e == 0) return;
    if (e == 1)
        factors.push_back(base);
    else
        factors.push_back(base + "^" + std::to_string(e));
}

void append_symbols(std::vector<std::string>& factors, const Monomial& m,
                    const SymbolTable& table) {
    for (std::size_t i = 0; i < m.width(); ++i)
        append_power(factors, table.name(i), m.exponent(i));
}

// One additive piece: sign split off, the rest joined with '*'. The rational
// magnitude is omitted when it is 1 and other factors exist.
struct Piece {
    bool negative = false;
    std::string text;
};

Piece render_factors(const Rational& coeff, const std::vector<std::string>& factors) {
    Piece p;
    p.negative = coeff.is_negative();
    Rational mag = coeff.abs();
    std::string s;
    if (!mag.is_one() || factors.empty()) s = mag.str();
    for (const auto& f : factors) {
        if (!s.empty()) s += "*";
        s += f;
    }
    p.text = std::move(s);
    return p;
}

std::string join_pieces(const std::vector<Piece>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i == 0)
            out += pieces[i].negative ? "-" : "";
        else
            out += pieces[i].negative ? " - " : " + ";
        out += pieces[i].text;
    }
    return out;
}

Piece render_exp_entry(const ExpEntry& e, const SymbolTable& table) {
    std::vector<std::string> factors;
    append_symbols(factors, e.mono, table);
    if (e.base == ExpBase::t)
        factors.push_back("t");
    else
        factors.push_back("x^2");
    return render_factors(e.coeff, factors);
}

Piece render_ring_term(const RingTerm& t, const SymbolTable& table, int dt, int dx) {
    std::vector<std::string> factors;
    append_symbols(factors, t.mono, table);
    append_power(factors, "t", t.tdeg);
    append_power(factors, "x", t.xdeg);
    if (!t.exp.empty()) factors.push_back("exp(" + format_exp_arg(t.exp, table) + ")");
    append_power(factors, "Dt", dt);
    append_power(factors, "Dx", dx);
    return render_factors(t.coeff, factors);
}

}  // namespace

std::string format_rational(const Rational& r) { return r.str(); }

std::string format_monomial_term(const MonomialTerm& mt, const SymbolTable& table) {
    if (mt.coeff.is_zero()) return "0";
    std::vector<std::string> factors;
    append_symbols(factors, mt.mono, table);
    Piece p = render_factors(mt.coeff, factors);
    return (p.negative ? "-" : "") + p.text;
}

std::string format_exp_arg(const ExpArg& arg, const SymbolTable& table) {
    std::vector<Piece> pieces;
    for (const ExpEntry& e : arg.entries()) pieces.push_back(render_exp_entry(e, table));
    return join_pieces(pieces);
}

std::string format_ring(const RingElement& e, const SymbolTable& table) {
    std::vector<Piece> pieces;
    for (const RingTerm& t : e.terms()) pieces.push_back(render_ring_term(t, table, 0, 0));
    return join_pieces(pieces);
}

std::string format_expr(const DiffOp& p, const SymbolTable& table) {
    std::vector<Piece> pieces;
    for (const DiffTerm& d : p.terms())
        for (const RingTerm& t : d.coeff.terms())
            pieces.push_back(render_ring_term(t, table, d.dt, d.dx));
    return join_pieces(pieces);
}

}  // namespace schsym
