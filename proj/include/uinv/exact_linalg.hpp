#pragma once

#include <vector>

#include "uinv/rational.hpp"

namespace uinv {

using RatRow = std::vector<Rational>;
using RatMatrix = std::vector<RatRow>;

struct Echelon {
    RatMatrix rref;               // reduced row echelon form, pivot entries 1
    std::vector<int> pivot_cols;  // ascending
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

/// Deterministic reduced row echelon form. The forward pass is fraction-free
/// over integers (rows cleared of denominators, cross-multiplication updates,
/// per-row content stripped) with first-nonzero pivoting; back-substitution is
/// rational.
Echelon rref(RatMatrix m);

int rank(RatMatrix m);

/// Canonical kernel basis of m (as row vectors over the column index space):
/// one vector per free column, free coordinate set to 1.
RatMatrix nullspace(const RatMatrix& m);

/// True if v lies in the row span of the echelon form.
bool in_row_span(const Echelon& e, RatRow v);

/// True if the two row families span the same subspace.
bool same_row_span(const RatMatrix& a, const RatMatrix& b);

}  // namespace uinv
