#include "schsym/onshell.hpp"

#include <stdexcept>

namespace schsym {

namespace {

void require_unit_dt(const DiffOp& omega) {
    if (!omega.coefficient(1, 0).is_one())
        throw std::invalid_argument("onshell: omega needs a unit d_t coefficient");
}

}  // namespace

std::optional<RingElement> onshell_factor(const DiffOp& g, const DiffOp& omega) {
    require_unit_dt(omega);
    DiffOp b = commutator(g, omega);
    RingElement f = b.coefficient(1, 0);
    if (b - DiffOp::from_ring(f) * omega == DiffOp::zero()) return f;
    return std::nullopt;
}

bool is_onshell_symmetry(const DiffOp& d, const DiffOp& omega) {
    require_unit_dt(omega);
    return reduce_mod(omega * d, omega).remainder.is_zero();
}

OnshellReport onshell_report(const NamedBasis& basis, const DiffOp& omega) {
    OnshellReport report;
    report.all_factored = true;
    for (const BasisElement& e : basis) {
        OnshellLine line;
        line.gen = e.name;
        DiffOp b = commutator(e.op, omega);
        line.vanishes = b.is_zero();
        line.factor = onshell_factor(e.op, omega);
        ExpressResult combo = express_in_basis(b, basis);
        line.combo_ok = combo.ok;
        line.combo = std::move(combo.coeffs);
        line.symmetry = is_onshell_symmetry(e.op, omega);
        if (!line.factor) report.all_factored = false;
        report.lines.push_back(std::move(line));
    }
    return report;
}

}  // namespace schsym
