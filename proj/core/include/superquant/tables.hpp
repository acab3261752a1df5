#pragma once

#include "superquant/harmonic.hpp"

#include <string>
#include <vector>

namespace superquant {

struct CellReport {
    std::string table;
    std::string cell;
    bool pass = false;
    std::string residual;  // empty when pass
};

struct TableReport {
    std::string table;
    std::vector<CellReport> cells;

    bool all_pass() const {
        for (const auto& c : cells)
            if (!c.pass) return false;
        return true;
    }
    size_t failures() const {
        size_t f = 0;
        for (const auto& c : cells)
            if (!c.pass) ++f;
        return f;
    }
};

enum class TableKind { CommRel13, KerTTable, InversionCommutators, PowersTable, WeightTable };

std::string table_name(TableKind t);

/// Recompute every cell of the requested table symbolically on the given
/// chart. Failures carry the symbolic residual; nothing is silently
/// skipped. The weight-dependent tables are checked at two rational
/// weights, which is conclusive since all identities are affine in the
/// weight.
TableReport verify_table(TableKind which, const Chart& ch);

/// Expected supercommutator of two of the 13 generators (the frozen
/// 13 x 13 table data).
PolyOp expected_commutator(Gen a, Gen b, const Chart& ch);

/// Conformal-affine weight shift n*(delta' - delta) of a generator viewed
/// as a map between weighted symbol modules.
int ce_shift(Gen g);
/// True for the generators that stay invariant under inversions as well.
bool fully_conformal(Gen g);

}  // namespace superquant
