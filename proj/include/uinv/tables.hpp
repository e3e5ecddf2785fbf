#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>

#include "uinv/rational.hpp"

namespace uinv {

/// Binomial coefficient with the truncated convention: C(a, b) = 0 unless
/// 0 <= b <= a. The closed-form coefficient formulas rely on this silently.
Integer binomial(long a, long b);

/// Counts for the generator families: m = floor(n/2) quadratic generators and
/// mu_count = floor((n-1)/2) cubic ones. Named mu_count to keep the block
/// count apart from the linear coefficient family mu_coeff.
inline int quadratic_count(int n) { return n / 2; }
inline int mu_count(int n) { return (n - 1) / 2; }

// Closed-form coefficient families of the quadratic invariants u_k
// (lambda/mu) and the cubic invariants v_k (alpha/beta). Each formula
// evaluates to zero outside its declared index window, so callers may probe
// any (i, j).
Rational lambda_coeff(int k, int i, int j);
Rational mu_coeff(int k, int i);
Rational alpha_coeff(int k, int i, int j);
Rational beta_coeff(int k, int j);

enum class CoeffKind { Lambda, Mu, Alpha, Beta };

/// One coefficient family for a fixed block index k, restricted to its
/// declared window. Mu and Beta are one-index families stored under (i, 0).
struct CoefficientTable {
    CoeffKind kind;
    int k;
    std::map<std::pair<int, int>, Rational> entries;

    Rational at(int i, int j = 0) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? Rational(0) : it->second;
    }
    bool all_nonzero() const {
        for (const auto& [ij, v] : entries)
            if (v.is_zero()) return false;
        return true;
    }
};

/// Window contents per family:
///   lambda: i in [1, k-1], j in [k, 2k-i]         (k >= 1)
///   mu:     i in [k, 2k]                          (k >= 1)
///   alpha:  i in [1, k-1], j in [k+1, 2k-i+1]     (k >= 2)
///   beta:   j in [k+1, 2k+1]                      (k >= 2)
CoefficientTable coeff_table(CoeffKind kind, int k);

// Test hook: adds delta to a single closed-form coefficient so the suite can
// prove it notices corrupted tables. Not thread safe; intended for negative
// controls only.
struct CoeffFault {
    CoeffKind kind;
    int k, i, j;
    Rational delta;
};
void inject_coeff_fault(const CoeffFault& fault);
void clear_coeff_fault();

/// Checks that the u_k tables solve the linear system cut out by d(u) = 0 in
/// an ambient ring of n >= 2k variables: the mu equations, the four classes of
/// lambda equations, and vanishing of the last matrix column.
bool check_quadratic_system(int k, int n);

/// Boundary values, interior recursion and the beta recursion for the cubic
/// coefficient tables of v_k.
bool check_alpha_beta_recursions(int k);

/// The two boundary diagonals alpha_{i,2k+1-i} = (-1)^{k-i}(1+2(k-i)) and
/// alpha_{i,k+1} = (-1)^{k-i}(k-i+1).
bool check_alpha_boundary_diagonals(int k);

using TableFn = std::function<Rational(int, int)>;

/// Data for the two-index recursion lambda_{i,j} = delta (lambda_{i+1,j-1} +
/// lambda_{i+1,j}) + mu_{i,j-1} on rows [row_lo, row_hi], scanned over the
/// column window [col_lo, col_hi].
struct RecurrenceSpec {
    int row_lo, row_hi;
    int col_lo, col_hi;
    Rational delta;
    std::optional<Rational> gamma;  // set when mu obeys its own recursion
    TableFn mu;                     // zero function when absent
};

/// Verifies the hypothesis relation and its c-step closed forms on the table:
/// the general double-sum expansion, the mu = 0 specialization, and (when
/// gamma is present) the geometric-sum form. Throws on a shift that exceeds
/// the row interval.
bool recurrence_check(const RecurrenceSpec& spec, const TableFn& lambda, int c);

/// The k-fold nested sum I_k = sum_{c > c_1 > ... > c_k >= 0} 1 computed
/// literally; equals C(c, k).
Integer nested_sum(int c, int k);

}  // namespace uinv
