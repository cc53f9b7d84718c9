#pragma once

// Differential operators in d_t and d_x with RingElement coefficients kept on
// the left. Composition is non-commutative; everything else is plain linear
// algebra over the coefficient ring.

#include "schsym/ring.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace schsym {

using WaveFunction = RingElement;

struct DiffTerm {
    RingElement coeff;
    int dt = 0;  // >= 0
    int dx = 0;  // >= 0

    bool operator==(const DiffTerm& o) const {
        return dt == o.dt && dx == o.dx && coeff == o.coeff;
    }
};

enum class BracketKind : std::uint8_t { commutator, anticommutator };

class DiffOp {
public:
    DiffOp() = default;

    // Normalizes: merges equal (dt, dx), sorts descending, drops zeros.
    explicit DiffOp(std::vector<DiffTerm> terms);

    static DiffOp zero() { return DiffOp(); }
    static DiffOp identity() { return from_ring(RingElement::one()); }
    static DiffOp from_ring(RingElement c);
    static DiffOp d_t() { return term(RingElement::one(), 1, 0); }
    static DiffOp d_x() { return term(RingElement::one(), 0, 1); }
    static DiffOp term(RingElement coeff, int dt, int dx);

    const std::vector<DiffTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_dt() const;

    // Coefficient of d_t^dt d_x^dx; zero when absent.
    RingElement coefficient(int dt, int dx) const;

    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const;
    DiffOp operator-() const;
    DiffOp operator*(const DiffOp& o) const;  // composition
    DiffOp scaled(const Rational& c) const;
    DiffOp scaled(const RingElement& c) const;
    DiffOp pow(unsigned k) const;

    WaveFunction apply(const WaveFunction& f) const;

    DiffOp substitute(std::size_t sym, const MonomialTerm& value) const;

    // Scaling grade: coefficient weight plus dt + dx/2 per term, when every
    // term carries the same value.
    std::optional<Rational> grading(const SymbolTable& table) const;

    // Similarity transform exp(g) P exp(-g), realized as the substitution
    // d_t -> d_t - dg/dt, d_x -> d_x - dg/dx. Conjugation is an algebra
    // homomorphism, so the substitution is exact for any ring g even though
    // exp(g) itself need not lie in the ring.
    DiffOp conjugate_exp(const RingElement& g) const;

    // Substitutes x -> x + s for a scaled symbol monomial s. Rejected when a
    // coefficient carries a Gaussian factor, which the shift would take out
    // of the ring.
    DiffOp shift_x(const MonomialTerm& s) const;

    bool operator==(const DiffOp& o) const { return terms_ == o.terms_; }
    bool operator!=(const DiffOp& o) const { return !(*this == o); }

private:
    std::vector<DiffTerm> terms_;  // descending by (dt, dx)
};

DiffOp bracket(const DiffOp& a, const DiffOp& b, BracketKind kind);

inline DiffOp commutator(const DiffOp& a, const DiffOp& b) {
    return bracket(a, b, BracketKind::commutator);
}
inline DiffOp anticommutator(const DiffOp& a, const DiffOp& b) {
    return bracket(a, b, BracketKind::anticommutator);
}

// Left division with remainder by a first-order operator: p = q * omega + r
// with r free of d_t. omega must be d_t plus terms without d_t, with unit
// leading coefficient.
struct Reduction {
    DiffOp quotient;
    DiffOp remainder;
};
Reduction reduce_mod(const DiffOp& p, const DiffOp& omega);

}  // namespace schsym
