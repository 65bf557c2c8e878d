#pragma once

#include <vector>

#include "defk/bigint.hpp"
#include "defk/matrix.hpp"

namespace defk {

// Lengths of the parallel cycles of a deficiency-3 configuration of order n,
// or any hypothetical spectrum with the right total length.
struct CycleSpectrum {
    int order;                // n
    std::vector<int> lengths; // each t_x >= 3

    int m() const { return static_cast<int>(lengths.size()); }
    int even_count() const;
    int length_sum() const;
};

// The t x t circulant with first row n, -1, 0, ..., 0, -1. Small t coalesces:
// t = 1 gives [n-2], t = 2 gives [[n, -2], [-2, n]], keeping row sums at n - 2.
IntMatrix cycle_block(int n, int t);

// det(cycle_block(n, t)) through the integer recurrence
// D_0 = 2, D_1 = n, D_s = n*D_{s-1} - D_{s-2}; the result is D_t - 2.
BigInt cycle_block_det(int n, int t);

// Determinant of the Gram matrix of a symmetric configuration of order n and
// deficiency k whose lines fall into parallel classes of size k:
// (n+1)^(k+1+(k-1)q) * (n-(k-1))^q with q = (n^2+n)/k.
// Requires k >= 2, k | n^2+n, n >= k-1.
BigInt closed_form_det(int n, int k);

// The (n^2+n+k) x (n^2+n+k) Gram pattern behind closed_form_det: all-ones with
// (n+1)I blocks of size k on the diagonal, one block per parallel class.
// groups must be (n^2+n)/k + 1; pass 0 to have it computed.
IntMatrix assemble_structural_B(int n, int k, int groups = 0);

// Gram pattern of a deficiency-3 configuration with the given cycle spectrum:
// all-ones plus block-diagonal cycle_block(n, t_x) blocks.
// Requires sum of lengths = n^2 + n + 3.
IntMatrix assemble_cycle_B(const CycleSpectrum& spec);

// det(assemble_cycle_B(spec)) in closed form:
// (n-2)^(m-1) * (n+1)^2 * (n+2)^(#even t_x) * product of reduced factors,
// each reduced factor the cycle-block characteristic value with its (x-2)
// root (and (x+2) for even t_x) removed by exact polynomial division before
// evaluating at n. Every reduced factor is a perfect square.
BigInt eq2_det(const CycleSpectrum& spec);

// e^T A^{-1} e for A = cycle_block(n, t): equals t/(n-2), cross-checked
// against an exact rational solve of A y = e. Throws
// Error(Fault::singular_at_n_two) at n = 2 where row sums vanish.
BigRat grand_sum_inverse_quadform(int t, int n);

}  // namespace defk
