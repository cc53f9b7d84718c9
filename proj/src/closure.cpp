#include "schsym/closure.hpp"

#include "schsym/printer.hpp"

#include <algorithm>
#include <tuple>

namespace schsym {

bool CoordKey::operator==(const CoordKey& o) const {
    return slot == o.slot && dt == o.dt && dx == o.dx && tdeg == o.tdeg &&
           xdeg == o.xdeg && exp == o.exp;
}

bool CoordKey::operator<(const CoordKey& o) const {
    if (slot != o.slot) return slot < o.slot;
    if (dt != o.dt) return dt < o.dt;
    if (dx != o.dx) return dx < o.dx;
    if (tdeg != o.tdeg) return tdeg < o.tdeg;
    if (xdeg != o.xdeg) return xdeg < o.xdeg;
    return exp < o.exp;
}

namespace {

// Laurent monomials split into a polynomial numerator and denominator.
FracPoly frac_of(const Rational& coeff, const Monomial& mono) {
    Monomial pos, neg;
    for (std::size_t i = 0; i < mono.width(); ++i) {
        int e = mono.exponent(i);
        if (e > 0) pos = pos * Monomial::sym(i, e);
        if (e < 0) neg = neg * Monomial::sym(i, -e);
    }
    Poly num(MonomialTerm{coeff, pos});
    Poly den(MonomialTerm{Rational(1), neg});
    return FracPoly(std::move(num), std::move(den));
}

void add_coord(Coords& out, CoordKey key, const FracPoly& value) {
    auto [it, fresh] = out.emplace(std::move(key), value);
    if (!fresh) it->second = it->second + value;
    if (it->second.is_zero()) out.erase(it);
}

void add_scaled(Coords& out, const Coords& src, const FracPoly& scale) {
    if (scale.is_zero()) return;
    for (const auto& [key, value] : src) add_coord(out, key, value * scale);
}

}  // namespace

void accumulate_coords(Coords& out, int slot, const DiffOp& op) {
    for (const DiffTerm& d : op.terms())
        for (const RingTerm& rt : d.coeff.terms()) {
            CoordKey key{slot, d.dt, d.dx, rt.tdeg, rt.xdeg, rt.exp};
            add_coord(out, std::move(key), frac_of(rt.coeff, rt.mono));
        }
}

Coords coords_of(const DiffOp& op) {
    Coords out;
    accumulate_coords(out, 0, op);
    return out;
}

std::string describe_key(const CoordKey& key, const SymbolTable& table) {
    std::string s;
    auto factor = [&s](const std::string& f) {
        if (!s.empty()) s += "*";
        s += f;
    };
    auto power = [&factor](const std::string& base, int e) {
        if (e == 0) return;
        factor(e == 1 ? base : base + "^" + std::to_string(e));
    };
    power("t", key.tdeg);
    power("x", key.xdeg);
    if (!key.exp.empty()) factor("exp(" + format_exp_arg(key.exp, table) + ")");
    power("Dt", key.dt);
    power("Dx", key.dx);
    if (s.empty()) s = "1";
    if (key.slot != 0) s += " [slot " + std::to_string(key.slot) + "]";
    return s;
}

bool ExpressResult::supported_only_on(const std::vector<std::size_t>& allowed) const {
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        if (std::find(allowed.begin(), allowed.end(), j) == allowed.end()) return false;
    }
    return true;
}

ExpressResult express_in_coords(const std::vector<Coords>& columns, const Coords& target) {
    std::map<CoordKey, std::size_t> row_of;
    for (const auto& [key, value] : target) row_of.emplace(key, 0);
    for (const Coords& col : columns)
        for (const auto& [key, value] : col) row_of.emplace(key, 0);
    std::size_t m = 0;
    for (auto& [key, idx] : row_of) idx = m++;

    const std::size_t n = columns.size();
    std::vector<std::vector<FracPoly>> A(m, std::vector<FracPoly>(n));
    std::vector<FracPoly> b(m);
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& [key, value] : columns[j]) A[row_of.at(key)][j] = value;
    for (const auto& [key, value] : target) b[row_of.at(key)] = value;

    // Gauss-Jordan, walking columns left to right; the first still-unused
    // row with a nonzero entry pivots, columns without one stay at zero.
    std::vector<std::optional<std::size_t>> pivot(n);
    std::vector<bool> used(m, false);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t r = m;
        for (std::size_t i = 0; i < m; ++i)
            if (!used[i] && !A[i][j].is_zero()) {
                r = i;
                break;
            }
        if (r == m) continue;
        used[r] = true;
        pivot[j] = r;
        FracPoly p = A[r][j];
        for (std::size_t jj = 0; jj < n; ++jj) A[r][jj] = A[r][jj] / p;
        b[r] = b[r] / p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || A[i][j].is_zero()) continue;
            FracPoly f = A[i][j];
            for (std::size_t jj = 0; jj < n; ++jj) A[i][jj] = A[i][jj] - f * A[r][jj];
            b[i] = b[i] - f * b[r];
        }
    }

    ExpressResult out;
    out.coeffs.assign(n, FracPoly::zero());
    for (std::size_t j = 0; j < n; ++j)
        if (pivot[j]) out.coeffs[j] = b[*pivot[j]];

    // Re-substitute before reporting; an inconsistent system surfaces here
    // as a nonzero residual at some coordinate.
    Coords residual = target;
    for (std::size_t j = 0; j < n; ++j) add_scaled(residual, columns[j], -out.coeffs[j]);
    if (residual.empty()) {
        out.ok = true;
    } else {
        const auto& [key, value] = *residual.begin();
        out.failure = SpanFailure{key, value};
    }
    return out;
}

ExpressResult express_in_basis(const DiffOp& target, const NamedBasis& basis) {
    std::vector<Coords> columns;
    columns.reserve(basis.size());
    for (const BasisElement& e : basis) columns.push_back(coords_of(e.op));
    return express_in_coords(columns, coords_of(target));
}

BracketKind super_bracket_kind(Parity a, Parity b) {
    return (a == Parity::odd && b == Parity::odd) ? BracketKind::anticommutator
                                                  : BracketKind::commutator;
}

const TableEntry* StructureTable::find(std::size_t i, std::size_t j) const {
    for (const TableEntry& e : entries)
        if (e.i == i && e.j == j) return &e;
    return nullptr;
}

StructureTable closure_table(const NamedBasis& basis, TableKind kind) {
    StructureTable table;
    table.kind = kind;
    for (const BasisElement& e : basis) {
        table.names.push_back(e.name);
        table.parities.push_back(e.parity);
    }

    std::vector<Coords> columns;
    columns.reserve(basis.size());
    for (const BasisElement& e : basis) columns.push_back(coords_of(e.op));

    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            BracketKind bk = kind == TableKind::lie
                                 ? BracketKind::commutator
                                 : super_bracket_kind(basis[i].parity, basis[j].parity);
            if (i == j && bk == BracketKind::commutator) continue;
            DiffOp value = bracket(basis[i].op, basis[j].op, bk);
            ExpressResult r = express_in_coords(columns, coords_of(value));
            if (r.ok)
                table.entries.push_back(TableEntry{i, j, bk, std::move(r.coeffs)});
            else
                table.failures.push_back(TableFailure{i, j, bk, *r.failure});
        }
    }
    return table;
}

StructureTable substitute_table(const StructureTable& t, std::size_t index,
                                const FracPoly& value) {
    StructureTable out = t;
    for (TableEntry& e : out.entries)
        for (FracPoly& c : e.coeffs) c = c.substitute(index, value);
    for (TableFailure& f : out.failures)
        f.why.residual = f.why.residual.substitute(index, value);
    return out;
}

bool tables_equal(const StructureTable& x, const StructureTable& y) {
    if (x.names != y.names || x.kind != y.kind) return false;
    if (x.parities != y.parities) return false;
    if (!x.closed() || !y.closed()) return false;
    if (x.entries.size() != y.entries.size()) return false;
    for (std::size_t k = 0; k < x.entries.size(); ++k) {
        const TableEntry& a = x.entries[k];
        const TableEntry& b = y.entries[k];
        if (a.i != b.i || a.j != b.j || a.bracket != b.bracket) return false;
        if (a.coeffs.size() != b.coeffs.size()) return false;
        for (std::size_t c = 0; c < a.coeffs.size(); ++c)
            if (a.coeffs[c] != b.coeffs[c]) return false;
    }
    return true;
}

namespace {

DiffOp graded_bracket(const DiffOp& a, Parity pa, const DiffOp& b, Parity pb) {
    return bracket(a, b, super_bracket_kind(pa, pb));
}

}  // namespace

std::optional<std::array<std::string, 3>> jacobi_check(const NamedBasis& basis,
                                                       TableKind kind) {
    const std::size_t n = basis.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const auto& [an, A, pa] = basis[i];
                const auto& [bn, B, pb] = basis[j];
                const auto& [cn, C, pc] = basis[k];
                DiffOp sum;
                if (kind == TableKind::lie) {
                    sum = commutator(A, commutator(B, C)) +
                          commutator(B, commutator(C, A)) +
                          commutator(C, commutator(A, B));
                } else {
                    auto sign = [](Parity u, Parity v) {
                        return (u == Parity::odd && v == Parity::odd) ? Rational(-1)
                                                                      : Rational(1);
                    };
                    sum = graded_bracket(A, pa, graded_bracket(B, pb, C, pc), pb + pc)
                              .scaled(sign(pa, pc)) +
                          graded_bracket(B, pb, graded_bracket(C, pc, A, pa), pc + pa)
                              .scaled(sign(pb, pa)) +
                          graded_bracket(C, pc, graded_bracket(A, pa, B, pb), pa + pb)
                              .scaled(sign(pc, pb));
                }
                if (!sum.is_zero()) return std::array<std::string, 3>{an, bn, cn};
            }
    return std::nullopt;
}

DualityReport duality_check(const NamedBasis& basis) {
    DualityReport report;
    report.lie = closure_table(basis, TableKind::lie);
    report.super = closure_table(basis, TableKind::super);
    report.holds = report.lie.closed() && report.super.closed();
    if (!report.lie.closed()) report.notes.push_back("commutator table does not close");
    if (!report.super.closed()) report.notes.push_back("graded table does not close");
    if (!report.holds) return report;

    std::vector<std::size_t> central;
    std::vector<std::size_t> even_second;
    if (auto i = basis.index_of("c")) central.push_back(*i);
    for (const char* name : {"w_p1", "w_0s", "w_m1"}) {
        if (auto i = basis.index_of(name)) even_second.push_back(*i);
    }

    for (const TableEntry& e : report.super.entries) {
        if (e.bracket == BracketKind::commutator) {
            const TableEntry* le = report.lie.find(e.i, e.j);
            if (!le || le->coeffs != e.coeffs) {
                report.holds = false;
                report.notes.push_back("tables disagree at [" + basis[e.i].name + ", " +
                                       basis[e.j].name + "]");
            }
            continue;
        }
        // Odd-odd pair: the anticommutator must stay inside the even
        // second-order span.
        bool anti_ok = true;
        for (std::size_t c = 0; c < e.coeffs.size(); ++c) {
            if (e.coeffs[c].is_zero()) continue;
            if (std::find(even_second.begin(), even_second.end(), c) == even_second.end())
                anti_ok = false;
        }
        if (!anti_ok) {
            report.holds = false;
            report.notes.push_back("{" + basis[e.i].name + ", " + basis[e.j].name +
                                   "} leaves the even second-order span");
        }
        // Its commutator counterpart must be central. Pairs of one generator
        // with itself have no commutator row; [g, g] = 0 is central anyway.
        if (e.i != e.j) {
            const TableEntry* le = report.lie.find(e.i, e.j);
            bool comm_ok = le != nullptr;
            if (le)
                for (std::size_t c = 0; c < le->coeffs.size(); ++c) {
                    if (le->coeffs[c].is_zero()) continue;
                    if (std::find(central.begin(), central.end(), c) == central.end())
                        comm_ok = false;
                }
            if (!comm_ok) {
                report.holds = false;
                report.notes.push_back("[" + basis[e.i].name + ", " + basis[e.j].name +
                                       "] is not central");
            } else {
                report.notes.push_back("odd pair (" + basis[e.i].name + ", " +
                                       basis[e.j].name +
                                       "): commutator is central, anticommutator is even");
            }
        }
    }
    return report;
}

}  // namespace schsym
