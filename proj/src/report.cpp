#include "heckex/report.hpp"

#include <sstream>

#include <json.hpp>

namespace heckex {

HeckeReport make_hecke_report(int w, int m) {
  HeckeReport r;
  const BasisSpec basis = basis_exponents(w);
  r.w = w;
  r.m = m;
  r.dim = basis.dim;
  r.basis_exponents = basis.exponents;
  r.matrix = action_matrix(w, m);
  r.charpoly = char_poly(r.matrix);
  r.trace = trace(r.matrix);
  return r;
}

std::string render_json(const HeckeReport& r) {
  nlohmann::ordered_json j;
  j["w"] = r.w;
  j["m"] = r.m;
  j["dim"] = r.dim;
  j["basis_exponents"] = r.basis_exponents;
  auto rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < r.matrix.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (Eigen::Index c = 0; c < r.matrix.cols(); ++c) row.push_back(to_string(r.matrix(i, c)));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  auto cp = nlohmann::ordered_json::array();
  for (const auto& c : r.charpoly.coeffs) cp.push_back(to_string(c));
  j["charpoly"] = std::move(cp);
  j["trace"] = to_string(r.trace);
  return j.dump() + "\n";
}

std::string format_polynomial(const std::vector<Rational>& ascending, const std::string& var) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = ascending.size(); i-- > 0;) {
    const Rational& c = ascending[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    const bool unit = mag == 1;
    if (i == 0 || !unit) out << to_string(mag);
    if (i > 0) {
      if (!unit) out << '*';
      out << var;
      if (i > 1) out << '^' << i;
    }
  }
  if (first) out << '0';
  return out.str();
}

std::string render_text(const HeckeReport& r) {
  std::ostringstream out;
  out << "w = " << r.w << ", m = " << r.m << ", dim = " << r.dim << '\n';
  out << "basis exponents:";
  for (int n : r.basis_exponents) out << ' ' << n;
  out << '\n';
  out << "representation matrix:";
  if (r.dim == 0) out << " (empty)";
  out << '\n';
  for (Eigen::Index i = 0; i < r.matrix.rows(); ++i) {
    out << " ";
    for (Eigen::Index c = 0; c < r.matrix.cols(); ++c) out << ' ' << to_string(r.matrix(i, c));
    out << '\n';
  }
  out << "characteristic polynomial: " << format_polynomial(r.charpoly.coeffs) << '\n';
  out << "trace: " << to_string(r.trace) << '\n';
  return out.str();
}

namespace {

std::string latex_number(const Rational& x) {
  if (is_integer(x)) return to_string(x);
  return "\\frac{" + to_string(numerator(x)) + "}{" + to_string(denominator(x)) + "}";
}

}  // namespace

std::string render_latex(const HeckeReport& r) {
  std::ostringstream out;
  out << "% w = " << r.w << ", m = " << r.m << ", dim = " << r.dim << '\n';
  out << "\\mathbf{T}_{" << r.m << "} = ";
  if (r.dim == 0) {
    out << "\\text{(empty)}\n";
  } else {
    out << "\\begin{pmatrix}\n";
    for (Eigen::Index i = 0; i < r.matrix.rows(); ++i) {
      out << "  ";
      for (Eigen::Index c = 0; c < r.matrix.cols(); ++c) {
        if (c > 0) out << " & ";
        out << latex_number(r.matrix(i, c));
      }
      if (i + 1 < r.matrix.rows()) out << " \\\\";
      out << '\n';
    }
    out << "\\end{pmatrix}\n";
  }
  // ascending, as the coefficients are listed elsewhere
  out << "\\chi(x) = ";
  bool first = true;
  for (std::size_t i = 0; i < r.charpoly.coeffs.size(); ++i) {
    const Rational& c = r.charpoly.coeffs[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    if (i == 0 || mag != 1) out << latex_number(mag);
    if (i > 0) out << 'x';
    if (i > 1) out << "^{" << i << '}';
  }
  if (first) out << '0';
  out << '\n';
  out << "\\operatorname{tr} = " << latex_number(r.trace) << '\n';
  return out.str();
}

}  // namespace heckex
