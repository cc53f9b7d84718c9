#include "schsym/superconf.hpp"

#include <stdexcept>

namespace schsym {

namespace {

bool t_only(const DiffOp& op) {
    for (const DiffTerm& d : op.terms()) {
        if (d.dx != 0) return false;
        for (const RingTerm& rt : d.coeff.terms()) {
            if (rt.xdeg != 0) return false;
            for (const ExpEntry& e : rt.exp.entries())
                if (e.base == ExpBase::x2) return false;
        }
    }
    return true;
}

void check_shape(const std::array<DiffOp, 4>& e, Parity p) {
    for (const DiffOp& op : e)
        if (!t_only(op))
            throw std::invalid_argument("matrixop: entries must not involve x");
    bool diag_zero = e[0].is_zero() && e[3].is_zero();
    bool off_zero = e[1].is_zero() && e[2].is_zero();
    if (p == Parity::even ? !off_zero : !diag_zero)
        throw std::logic_error("matrixop: entry shape contradicts parity");
}

}  // namespace

MatrixOp::MatrixOp(std::array<DiffOp, 4> e, Parity p) : e_(std::move(e)), parity_(p) {
    check_shape(e_, parity_);
}

MatrixOp MatrixOp::diagonal(DiffOp phi_phi, DiffOp psi_psi) {
    return MatrixOp({std::move(phi_phi), DiffOp(), DiffOp(), std::move(psi_psi)},
                    Parity::even);
}

MatrixOp MatrixOp::antidiagonal(DiffOp phi_from_psi, DiffOp psi_from_phi) {
    return MatrixOp({DiffOp(), std::move(phi_from_psi), std::move(psi_from_phi), DiffOp()},
                    Parity::odd);
}

bool MatrixOp::is_zero() const {
    for (const DiffOp& op : e_)
        if (!op.is_zero()) return false;
    return true;
}

MatrixOp MatrixOp::operator+(const MatrixOp& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (parity_ != o.parity_)
        throw std::invalid_argument("matrixop: cannot add opposite parities");
    return MatrixOp({e_[0] + o.e_[0], e_[1] + o.e_[1], e_[2] + o.e_[2], e_[3] + o.e_[3]},
                    parity_);
}

MatrixOp MatrixOp::operator-(const MatrixOp& o) const { return *this + (-o); }

MatrixOp MatrixOp::operator-() const {
    return MatrixOp({-e_[0], -e_[1], -e_[2], -e_[3]}, parity_);
}

MatrixOp MatrixOp::operator*(const MatrixOp& o) const {
    std::array<DiffOp, 4> out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            out[r * 2 + c] = entry(r, 0) * o.entry(0, c) + entry(r, 1) * o.entry(1, c);
    // The shape check doubles as the parity bookkeeping assertion.
    return MatrixOp(std::move(out), parity_ + o.parity_);
}

MatrixOp MatrixOp::scaled(const Rational& c) const {
    return MatrixOp({e_[0].scaled(c), e_[1].scaled(c), e_[2].scaled(c), e_[3].scaled(c)},
                    parity_);
}

bool MatrixOp::operator==(const MatrixOp& o) const { return e_ == o.e_; }

MatrixOp graded_matrix_bracket(const MatrixOp& a, const MatrixOp& b) {
    if (a.parity() == Parity::odd && b.parity() == Parity::odd) return a * b + b * a;
    return a * b - b * a;
}

std::optional<std::size_t> SigmaModel::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    return std::nullopt;
}

const MatrixOp& SigmaModel::op(const std::string& name) const {
    auto i = index_of(name);
    if (!i) throw std::invalid_argument("sigma: no generator '" + name + "'");
    return ops[*i];
}

SigmaModel build_n1_hyperbolic() {
    auto exp_t = [](long k) {
        return RingElement::exponential(
            ExpArg::single(Rational(k), Monomial::unit(), ExpBase::t));
    };
    SigmaModel m;
    for (int s : {+1, -1}) {
        RingElement e1 = exp_t(s);
        RingElement e2 = exp_t(2 * s);
        // phi picks up e^{st} * psi; psi picks up e^{st} (phi' - s phi).
        DiffOp q_phi_from_psi = DiffOp::from_ring(e1);
        DiffOp q_psi_from_phi =
            DiffOp::term(e1, 1, 0) - DiffOp::from_ring(e1.scaled(Rational(s)));
        m.names.push_back(s > 0 ? "Qp" : "Qm");
        m.ops.push_back(MatrixOp::antidiagonal(q_phi_from_psi, q_psi_from_phi));

        DiffOp z_phi = DiffOp::term(e2, 1, 0) - DiffOp::from_ring(e2.scaled(Rational(s)));
        DiffOp z_psi = DiffOp::term(e2, 1, 0);
        m.names.push_back(s > 0 ? "Zp" : "Zm");
        m.ops.push_back(MatrixOp::diagonal(z_phi, z_psi));
    }
    m.names.push_back("H");
    m.ops.push_back(MatrixOp::diagonal(DiffOp::d_t(), DiffOp::d_t()));

    // Conventional listing order: charges first, then the even sector.
    SigmaModel ordered;
    for (const char* n : {"Qp", "Qm", "Zp", "Zm", "H"}) {
        ordered.names.push_back(n);
        ordered.ops.push_back(m.op(n));
    }
    return ordered;
}

Coords coords_of(const MatrixOp& m) {
    Coords out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) accumulate_coords(out, r * 2 + c, m.entry(r, c));
    return out;
}

StructureTable sigma_closure_table(const SigmaModel& model) {
    StructureTable table;
    table.kind = TableKind::super;
    table.names = model.names;
    std::vector<Coords> columns;
    for (const MatrixOp& op : model.ops) {
        table.parities.push_back(op.parity());
        columns.push_back(coords_of(op));
    }
    for (std::size_t i = 0; i < model.ops.size(); ++i)
        for (std::size_t j = i; j < model.ops.size(); ++j) {
            BracketKind bk = super_bracket_kind(model.ops[i].parity(), model.ops[j].parity());
            if (i == j && bk == BracketKind::commutator) continue;
            MatrixOp value = graded_matrix_bracket(model.ops[i], model.ops[j]);
            ExpressResult r = express_in_coords(columns, coords_of(value));
            if (r.ok)
                table.entries.push_back(TableEntry{i, j, bk, std::move(r.coeffs)});
            else
                table.failures.push_back(TableFailure{i, j, bk, *r.failure});
        }
    return table;
}

MatrixOp eom_operator(const Rational& eps) {
    DiffOp phi = DiffOp::d_t() * DiffOp::d_t() - DiffOp::from_ring(RingElement::constant(eps));
    return MatrixOp::diagonal(std::move(phi), DiffOp::d_t());
}

namespace {

// On phi solutions d_t^2 acts as eps; on psi solutions d_t acts as zero.
DiffOp reduce_on_phi(const DiffOp& op, const Rational& eps) {
    std::vector<DiffTerm> out;
    for (const DiffTerm& d : op.terms()) {
        Rational scale(1);
        int dt = d.dt;
        while (dt >= 2) {
            dt -= 2;
            scale *= eps;
        }
        out.push_back(DiffTerm{d.coeff.scaled(scale), dt, d.dx});
    }
    return DiffOp(std::move(out));
}

DiffOp reduce_on_psi(const DiffOp& op) {
    return DiffOp::from_ring(op.coefficient(0, 0));
}

}  // namespace

bool eom_onshell_check(const MatrixOp& g, const Rational& eps) {
    MatrixOp m = eom_operator(eps) * g;
    for (int r = 0; r < 2; ++r) {
        if (!reduce_on_phi(m.entry(r, 0), eps).is_zero()) return false;
        if (!reduce_on_psi(m.entry(r, 1)).is_zero()) return false;
    }
    return true;
}

SquareCertificate square_search(const SigmaModel& model, const MatrixOp& target,
                                const std::string& target_name) {
    SquareCertificate cert;
    cert.target = target_name;

    const MatrixOp& qp = model.op("Qp");
    const MatrixOp& qm = model.op("Qm");
    std::vector<Coords> columns = {coords_of(graded_matrix_bracket(qp, qp)),
                                   coords_of(graded_matrix_bracket(qp, qm)),
                                   coords_of(graded_matrix_bracket(qm, qm))};
    ExpressResult r = express_in_coords(columns, coords_of(target.scaled(Rational(2))));
    if (!r.ok) return cert;
    for (const FracPoly& c : r.coeffs)
        if (!c.is_rational()) return cert;
    cert.expressible = true;
    cert.u = r.coeffs[0].as_rational();
    cert.v = r.coeffs[1].as_rational();
    cert.w = r.coeffs[2].as_rational();
    cert.equations = "alpha^2=" + cert.u.str() + ", beta^2=" + cert.w.str() +
                     ", 2*alpha*beta=" + cert.v.str();

    auto ra = cert.u.sqrt_exact();
    auto rb = cert.w.sqrt_exact();
    if (!ra || !rb) return cert;
    for (Rational alpha : {*ra, -*ra})
        for (Rational beta : {*rb, -*rb}) {
            if (Rational(2) * alpha * beta != cert.v) continue;
            cert.satisfiable = true;
            cert.alpha = alpha;
            cert.beta = beta;
            return cert;
        }
    return cert;
}

SquareCertificate hamiltonian_square_search(const SigmaModel& model) {
    return square_search(model, model.op("H"), "H");
}

}  // namespace schsym
