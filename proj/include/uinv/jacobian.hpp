#pragma once

#include <vector>

#include "uinv/polynomial.hpp"

namespace uinv {

struct JacobianReport {
    bool independent;
    bool overcount;      // more polynomials than variables (trivially dependent)
    bool used_symbolic;  // the sampled ranks were inconclusive
};

/// Algebraic independence over characteristic zero via the Jacobian
/// criterion. The Jacobian is first evaluated at the deterministic points
/// x_j = j^t for t = 1, 2, 3; any full-rank sample certifies independence.
/// Otherwise the rank is computed symbolically over the fraction field with
/// fraction-free elimination on polynomial entries.
JacobianReport jacobian_rank_report(const std::vector<Polynomial>& ps);

bool jacobian_independent(const std::vector<Polynomial>& ps);

/// Rank of a polynomial matrix over the fraction field.
int symbolic_rank(std::vector<std::vector<Polynomial>> m);

}  // namespace uinv
