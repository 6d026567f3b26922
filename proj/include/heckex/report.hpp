#ifndef HECKEX_REPORT_HPP
#define HECKEX_REPORT_HPP

#include <string>
#include <vector>

#include "heckex/hecke_matrix.hpp"

namespace heckex {

struct HeckeReport {
  int w = 0;
  int m = 0;
  int dim = 0;
  std::vector<int> basis_exponents;
  RationalMatrix matrix;
  CharPoly charpoly;
  Rational trace;
};

HeckeReport make_hecke_report(int w, int m);

/// Compact JSON, keys in the order w, m, dim, basis_exponents, matrix,
/// charpoly, trace; every number is a decimal "num" or "num/den" string
/// except w, m, dim and the exponents. Newline-terminated.
std::string render_json(const HeckeReport& r);
std::string render_text(const HeckeReport& r);
std::string render_latex(const HeckeReport& r);

/// e.g. "x^2 + 3020312682800*x + 101633401431659687926336"
std::string format_polynomial(const std::vector<Rational>& ascending, const std::string& var = "x");

}  // namespace heckex

#endif  // HECKEX_REPORT_HPP
