#ifndef HECKEX_ES_MOD2_HPP
#define HECKEX_ES_MOD2_HPP

// Integer matrices encoding the odd-period relations, their reductions mod 2,
// the Pascal-Sierpinski family P_n / Q_n, and direct F_2 checks of the column
// selection that singles out the basis exponents.
//
// All indices are 0-based. Column 0 of A, B, C, D is the dummy column.
// w2 = w/2, w4 = floor(w/4).

#include <cstddef>
#include <vector>

#include "heckex/bit_matrix.hpp"
#include "heckex/linalg.hpp"

namespace heckex {

/// (w+1) x (w2+1)
IntMatrix build_A(int w);
/// (w2+1) x (w2+1)
IntMatrix build_B(int w);
/// (w4+1) x (w2+1)
IntMatrix build_C(int w);
/// B stacked over C: (w2+w4+2) x (w2+1)
IntMatrix build_D(int w);

BitMatrix reduce_mod2(const IntMatrix& m);

/// 2^n x 2^n, P_0 = [1], P_n = [[P, P], [0, P]].
BitMatrix pascal_P(int n);
/// P_n + identity
BitMatrix pascal_Q(int n);

/// X[[k]]
BitMatrix principal_submatrix(const BitMatrix& x, std::size_t k);

/// Column indices (1..w2, ascending) of the selected set for w = 12k + 2a,
/// k >= 1, 0 <= a <= 5. Throws std::domain_error for w < 12 or odd w.
std::vector<std::size_t> selected_columns(int w);

/// {1..w2} minus selected_columns(w)
std::vector<std::size_t> complement_columns(int w);

/// Closed form of the complement: {w2-2, w2-4, ..., w2-2 d_w} for w = 0 mod 4,
/// {w2-1, w2-3, ..., w2-1-2(d_w-1)} for w = 2 mod 4; ascending.
std::vector<std::size_t> expected_complement(int w);

struct BasisSelectionReport {
  bool independent = false;     ///< F_2 rank of the selected columns of M equals #S
  bool cardinality_ok = false;  ///< w2 - #S = d_w
  bool lemma41_ok = false;      ///< K = Q_n[[w2+1]] for the least n with w2+1 <= 2^n
  bool rowsum_ok = false;       ///< B rows are row sums of A (row 0 copied)

  bool all() const { return independent && cardinality_ok && lemma41_ok && rowsum_ok; }
};

BasisSelectionReport verify_basis_selection(int w);

}  // namespace heckex

#endif  // HECKEX_ES_MOD2_HPP
