// heckex: Hecke operator matrices, period polynomials and Dedekind symbols
// in exact arithmetic.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid arguments.

#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heckex/checks.hpp"
#include "heckex/dedekind_symbol.hpp"
#include "heckex/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

int report_check(const std::string& suite, const heckex::CheckOutcome& outcome) {
  if (outcome.passed()) {
    std::cout << "PASS " << suite << " (" << outcome.cases << " cases)\n";
    return kExitOk;
  }
  std::cout << "FAIL " << suite << " after " << outcome.cases << " cases: " << *outcome.failure
            << '\n';
  return kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace heckex;

  CLI::App app{"Exact Hecke operator matrices on cusp forms via period polynomials"};
  app.require_subcommand(1);

  int w = 0, m = 1, n = 0;
  std::int64_t h = 1, k = 0;
  std::string format = "text";

  auto* matrix = app.add_subcommand("matrix", "Matrix of T_m, its characteristic polynomial and trace");
  matrix->add_option("--w", w, "even weight parameter (weight w+2)")->required();
  matrix->add_option("--m", m, "Hecke index")->required();
  matrix->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of T_m");
  charpoly->add_option("--w", w)->required();
  charpoly->add_option("--m", m)->required();

  auto* basis = app.add_subcommand("basis", "Dimension and basis exponents 4i+-1");
  basis->add_option("--w", w)->required();

  auto* spoly = app.add_subcommand("spoly", "Nonzero coefficients of S^m_{w,n}, one 'nu coeff' per line");
  spoly->add_option("--w", w)->required();
  spoly->add_option("--n", n)->required();
  spoly->add_option("--m", m)->required();

  auto* dedekind = app.add_subcommand("dedekind", "Value of the Dedekind symbol E^m_{w,n}(h,k)");
  dedekind->set_help_flag("--help", "Print this help message and exit");
  dedekind->add_option("--w", w)->required();
  dedekind->add_option("--n", n)->required();
  dedekind->add_option("--m", m)->required();
  dedekind->add_option("--h", h)->required();
  dedekind->add_option("--k", k)->required();

  auto* check = app.add_subcommand("check", "Run a verification suite");
  check->require_subcommand(1);

  int m_max = 12, w_min = 12, w_max = 200;
  auto* tau = check->add_subcommand("tau", "T_m on weight 12 against q prod (1-q^n)^24");
  tau->add_option("--m-max", m_max)->check(CLI::Range(1, 200));

  int u_w_min = 10, u_w_max = 28, u_m_max = 3;
  auto* uspace = check->add_subcommand("uspace", "S^m_{w,n} lies in U_w and is even");
  uspace->add_option("--w-min", u_w_min);
  uspace->add_option("--w-max", u_w_max)->check(CLI::Range(2, 120));
  uspace->add_option("--m-max", u_m_max)->check(CLI::Range(1, 30));

  int o_w_min = 10, o_w_max = 24, o_m_max = 6;
  auto* oracle = check->add_subcommand("oracle", "Closed form of S^m_{w,n} against its defining sum");
  oracle->add_option("--w-min", o_w_min);
  oracle->add_option("--w-max", o_w_max)->check(CLI::Range(2, 60));
  oracle->add_option("--m-max", o_m_max)->check(CLI::Range(1, 20));

  int r_w = 10, r_m_max = 2, r_grid = 4;
  auto* reciprocity = check->add_subcommand("reciprocity", "E(h,k) - E(k,-h) = S(h,k)");
  reciprocity->add_option("--w", r_w);
  reciprocity->add_option("--m-max", r_m_max)->check(CLI::Range(1, 12));
  reciprocity->add_option("--grid", r_grid)->check(CLI::Range(1, 12));

  int s_w = 10, s_m_max = 3, s_grid = 4;
  auto* symbols = check->add_subcommand("hecke-symbols", "T_m E_{w,n} = E^m_{w,n}");
  symbols->add_option("--w", s_w);
  symbols->add_option("--m-max", s_m_max)->check(CLI::Range(2, 12));
  symbols->add_option("--grid", s_grid)->check(CLI::Range(1, 12));

  std::vector<int> weights{10, 22, 26, 28};
  auto* algebra = check->add_subcommand("hecke-algebra", "Hecke relations among T_2, T_3, T_4, T_5, T_6, ...");
  algebra->add_option("--w", weights, "weights to test")->delimiter(',');

  auto* mod2 = check->add_subcommand("mod2", "F_2 checks of the column selection");
  mod2->add_option("--w-min", w_min);
  mod2->add_option("--w-max", w_max)->check(CLI::Range(12, 2000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "heckex: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*matrix) {
      if (m < 1) throw std::domain_error("m must be positive (got m=" + std::to_string(m) + ")");
      const HeckeReport r = make_hecke_report(w, m);
      if (format == "json")
        std::cout << render_json(r);
      else if (format == "latex")
        std::cout << render_latex(r);
      else
        std::cout << render_text(r);
    } else if (*charpoly) {
      if (m < 1) throw std::domain_error("m must be positive (got m=" + std::to_string(m) + ")");
      std::cout << format_polynomial(char_poly(action_matrix(w, m)).coeffs) << '\n';
    } else if (*basis) {
      const BasisSpec b = basis_exponents(w);
      std::cout << "w = " << b.w << ", dim = " << b.dim << ", exponents:";
      for (int e : b.exponents) std::cout << ' ' << e;
      std::cout << '\n';
    } else if (*spoly) {
      const HomogPoly s = build_S(w, n, m);
      for (int nu = 0; nu <= s.degree(); ++nu)
        if (s[nu] != 0) std::cout << nu << ' ' << to_string(s[nu]) << '\n';
    } else if (*dedekind) {
      std::cout << to_string(eval_E(SymbolSpec{w, n, m}, SymbolPoint{h, k})) << '\n';
    } else if (*check) {
      if (*tau) return report_check("tau", check_tau(m_max));
      if (*uspace) return report_check("uspace", check_uspace(u_w_min, u_w_max, u_m_max));
      if (*oracle) return report_check("oracle", check_oracle(o_w_min, o_w_max, o_m_max));
      if (*reciprocity)
        return report_check("reciprocity", check_reciprocity_grid(r_w, r_m_max, r_grid));
      if (*symbols) return report_check("hecke-symbols", check_hecke_symbols(s_w, s_m_max, s_grid));
      if (*algebra) return report_check("hecke-algebra", check_hecke_algebra(weights));
      if (*mod2) return report_check("mod2", check_mod2(w_min, w_max));
    }
  } catch (const std::domain_error& e) {
    std::cerr << "heckex: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "heckex: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "heckex: internal error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}
