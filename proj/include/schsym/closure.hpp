#pragma once

// Exact linear algebra over the operator coefficients: expressing an operator
// in a named generator set, bracket closure tables, and the commutator /
// anticommutator duality between the two table flavours.

#include "schsym/basis.hpp"
#include "schsym/fracpoly.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace schsym {

// Coordinate of one scalar component of an operator. slot distinguishes
// matrix positions when several operators are stacked; plain operators use
// slot 0. The symbol monomial itself is the value, not part of the key.
struct CoordKey {
    int slot = 0;
    int dt = 0;
    int dx = 0;
    int tdeg = 0;
    int xdeg = 0;
    ExpArg exp;

    bool operator==(const CoordKey& o) const;
    bool operator<(const CoordKey& o) const;
};

using Coords = std::map<CoordKey, FracPoly>;

void accumulate_coords(Coords& out, int slot, const DiffOp& op);
Coords coords_of(const DiffOp& op);

std::string describe_key(const CoordKey& key, const SymbolTable& table);

// Witness that a target is outside the span: the coordinate that cannot be
// matched and the residual value left there.
struct SpanFailure {
    CoordKey key;
    FracPoly residual;
};

struct ExpressResult {
    bool ok = false;
    std::vector<FracPoly> coeffs;        // one per column; zero when unused
    std::optional<SpanFailure> failure;  // set when ok is false

    bool supported_only_on(const std::vector<std::size_t>& allowed) const;
};

// Solves sum_j coeffs[j] * columns[j] = target exactly, eliminating in
// column order so earlier generators absorb any slack first. The solution is
// re-substituted before being reported.
ExpressResult express_in_coords(const std::vector<Coords>& columns, const Coords& target);

ExpressResult express_in_basis(const DiffOp& target, const NamedBasis& basis);

enum class TableKind : std::uint8_t { lie, super };

// Bracket flavour a super table uses for a generator pair.
BracketKind super_bracket_kind(Parity a, Parity b);

struct TableEntry {
    std::size_t i = 0;
    std::size_t j = 0;
    BracketKind bracket = BracketKind::commutator;
    std::vector<FracPoly> coeffs;
};

struct TableFailure {
    std::size_t i = 0;
    std::size_t j = 0;
    BracketKind bracket = BracketKind::commutator;
    SpanFailure why;
};

struct StructureTable {
    std::vector<std::string> names;
    std::vector<Parity> parities;
    TableKind kind = TableKind::lie;
    std::vector<TableEntry> entries;
    std::vector<TableFailure> failures;

    bool closed() const { return failures.empty(); }
    const TableEntry* find(std::size_t i, std::size_t j) const;
};

// Brackets of all generator pairs i < j, re-expressed in the generators.
// Super tables also take the anticommutator of each odd generator with
// itself; those pairs appear with i == j.
StructureTable closure_table(const NamedBasis& basis, TableKind kind);

StructureTable substitute_table(const StructureTable& t, std::size_t index,
                                const FracPoly& value);

// Same pairs, same bracket kinds, equal coefficients.
bool tables_equal(const StructureTable& x, const StructureTable& y);

// Graded Jacobi identity over every generator triple; returns the first
// failing triple, or nullopt when the identity holds throughout.
std::optional<std::array<std::string, 3>> jacobi_check(const NamedBasis& basis,
                                                       TableKind kind);

struct DualityReport {
    StructureTable lie;
    StructureTable super;
    bool holds = false;
    std::vector<std::string> notes;
};

// The generator set must close under both table flavours, the two tables
// must agree wherever both take a commutator, the odd-odd commutators must
// land on the central generator alone, and the odd-odd anticommutators must
// land inside the even second-order span.
DualityReport duality_check(const NamedBasis& basis);

}  // namespace schsym
