#include "heckex/checks.hpp"

#include <sstream>

#include "heckex/dedekind_symbol.hpp"
#include "heckex/es_mod2.hpp"
#include "heckex/hecke_matrix.hpp"

namespace heckex {

namespace {

std::string label(int w, int n, int m) {
  std::ostringstream out;
  out << "w=" << w << " n=" << n << " m=" << m;
  return out.str();
}

}  // namespace

CheckOutcome check_tau(int m_max) {
  CheckOutcome out;
  const auto tau = tau_oracle(m_max);
  for (int m = 1; m <= m_max; ++m) {
    ++out.cases;
    const RationalMatrix t = action_matrix(10, m);
    const Rational expected(tau[static_cast<std::size_t>(m - 1)]);
    if (t.rows() != 1 || t(0, 0) != expected) {
      out.failure = "m=" + std::to_string(m) + ": T_m = " +
                    (t.rows() == 1 ? to_string(t(0, 0)) : std::string("?")) +
                    ", tau(m) = " + to_string(expected);
      return out;
    }
  }
  return out;
}

CheckOutcome check_uspace(int w_min, int w_max, int m_max) {
  CheckOutcome out;
  for (int w = w_min + (w_min % 2); w <= w_max; w += 2) {
    for (int n : basis_exponents(w).exponents) {
      for (int m = 1; m <= m_max; ++m) {
        ++out.cases;
        const HomogPoly s = build_S(w, n, m);
        if (!is_in_U(s)) {
          out.failure = label(w, n, m) + ": S not in U_w";
          return out;
        }
        if (parity(s) != Parity::Even) {
          out.failure = label(w, n, m) + ": S has parity " + to_string(parity(s));
          return out;
        }
      }
    }
  }
  return out;
}

CheckOutcome check_oracle(int w_min, int w_max, int m_max) {
  CheckOutcome out;
  for (int w = w_min + (w_min % 2); w <= w_max; w += 2) {
    for (int n : basis_exponents(w).exponents) {
      for (int m = 1; m <= m_max; ++m) {
        ++out.cases;
        if (!(build_S(w, n, m) == build_S_oracle(w, n, m))) {
          out.failure = label(w, n, m) + ": closed form differs from defining sum";
          return out;
        }
      }
    }
  }
  return out;
}

CheckOutcome check_reciprocity_grid(int w, int m_max, int grid) {
  CheckOutcome out;
  for (int n : basis_exponents(w).exponents) {
    for (int m = 1; m <= m_max; ++m) {
      for (int h = 1; h <= grid; ++h) {
        for (int k = 1; k <= grid; ++k) {
          ++out.cases;
          if (!check_reciprocity(SymbolSpec{w, n, m}, h, k)) {
            out.failure = label(w, n, m) + " (h,k)=(" + std::to_string(h) + "," +
                          std::to_string(k) + "): E(h,k) - E(k,-h) != S(h,k)";
            return out;
          }
        }
      }
    }
  }
  return out;
}

CheckOutcome check_hecke_symbols(int w, int m_max, int grid) {
  CheckOutcome out;
  for (int n : basis_exponents(w).exponents) {
    for (int m = 2; m <= m_max; ++m) {
      for (int h = 1; h <= grid; ++h) {
        for (int k = 1; k <= grid; ++k) {
          ++out.cases;
          const SymbolPoint pt{h, k};
          const Rational lhs = hecke_transform_E(SymbolSpec{w, n, 1}, m, pt);
          const Rational rhs = eval_E(SymbolSpec{w, n, m}, pt);
          if (lhs != rhs) {
            out.failure = label(w, n, m) + " (h,k)=(" + std::to_string(h) + "," +
                          std::to_string(k) + "): T_m E = " + to_string(lhs) +
                          ", E^m = " + to_string(rhs);
            return out;
          }
        }
      }
    }
  }
  return out;
}

CheckOutcome check_hecke_algebra(const std::vector<int>& weights) {
  CheckOutcome out;
  for (int w : weights) {
    ++out.cases;
    if (!satisfies_prime_power_recursion(w, 2, 1)) {
      out.failure = "w=" + std::to_string(w) + ": T_2^2 != T_4 + 2^{w+1} I";
      return out;
    }
    ++out.cases;
    if (!satisfies_prime_power_recursion(w, 3, 1)) {
      out.failure = "w=" + std::to_string(w) + ": T_3^2 != T_9 + 3^{w+1} I";
      return out;
    }
    for (const auto& [a, b] : default_coprime_pairs()) {
      ++out.cases;
      if (!satisfies_multiplicativity(w, a, b)) {
        out.failure = "w=" + std::to_string(w) + ": T_" + std::to_string(a) + " T_" +
                      std::to_string(b) + " != T_" + std::to_string(a * b);
        return out;
      }
    }
  }
  return out;
}

CheckOutcome check_mod2(int w_min, int w_max) {
  CheckOutcome out;
  for (int w = w_min + (w_min % 2); w <= w_max; w += 2) {
    ++out.cases;
    const BasisSelectionReport r = verify_basis_selection(w);
    if (!r.all()) {
      std::ostringstream msg;
      msg << "w=" << w << ": independent=" << r.independent
          << " cardinality_ok=" << r.cardinality_ok << " lemma41_ok=" << r.lemma41_ok
          << " rowsum_ok=" << r.rowsum_ok;
      out.failure = msg.str();
      return out;
    }
    if (complement_columns(w) != expected_complement(w)) {
      out.failure = "w=" + std::to_string(w) + ": complement of the selected columns differs";
      return out;
    }
  }
  return out;
}

}  // namespace heckex
