#ifndef HECKEX_CHECKS_HPP
#define HECKEX_CHECKS_HPP

// Verification sweeps behind `heckex check <suite>`. Each stops at the first
// failing case and reports it.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace heckex {

struct CheckOutcome {
  std::size_t cases = 0;
  std::optional<std::string> failure;

  bool passed() const { return !failure; }
};

/// action_matrix(10, m) == [[tau(m)]] for m = 1..m_max
CheckOutcome check_tau(int m_max);

/// is_in_U and even parity of build_S(w, n, m), even w in [w_min, w_max],
/// basis n, m in [1, m_max]
CheckOutcome check_uspace(int w_min, int w_max, int m_max);

/// build_S == build_S_oracle on the same kind of grid
CheckOutcome check_oracle(int w_min, int w_max, int m_max);

/// E(h,k) - E(k,-h) == S(h,k) at weight w, basis n, m in [1, m_max],
/// (h, k) in [1, grid]^2
CheckOutcome check_reciprocity_grid(int w, int m_max, int grid);

/// T_{m} E_{w,n} == E^m_{w,n} for m in [2, m_max], (h, k) in [1, grid]^2
CheckOutcome check_hecke_symbols(int w, int m_max, int grid);

/// T_2 T_3 = T_6, T_2^2 = T_4 + 2^{w+1} I and the default coprime grid,
/// for each listed w
CheckOutcome check_hecke_algebra(const std::vector<int>& weights);

/// verify_basis_selection(w) all-true and the complement closed form, even w
/// in [w_min, w_max]
CheckOutcome check_mod2(int w_min, int w_max);

}  // namespace heckex

#endif  // HECKEX_CHECKS_HPP
