#pragma once

// Symmetry checks against an evolution operator: factor extraction
// [g, omega] = f * omega, membership of omega*D in the left ideal generated
// by omega, and the per-generator report pairing both views.

#include "schsym/closure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schsym {

// f with bracket(g, omega) == f * omega, when such a ring element exists.
// f is read off the pure d_t coefficient and verified by subtraction.
// omega must have unit d_t coefficient.
std::optional<RingElement> onshell_factor(const DiffOp& g, const DiffOp& omega);

// True when D maps the kernel of omega into itself: the remainder of
// omega*D on left division by omega vanishes.
bool is_onshell_symmetry(const DiffOp& d, const DiffOp& omega);

struct OnshellLine {
    std::string gen;
    bool vanishes = false;                 // [g, omega] == 0 exactly
    std::optional<RingElement> factor;     // nullopt when no factor exists
    std::vector<FracPoly> combo;           // [g, omega] over the basis
    bool combo_ok = false;
    bool symmetry = false;
};

struct OnshellReport {
    std::vector<OnshellLine> lines;
    bool all_factored = false;
};

OnshellReport onshell_report(const NamedBasis& basis, const DiffOp& omega);

}  // namespace schsym
