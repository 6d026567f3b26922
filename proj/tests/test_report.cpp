#include <doctest.h>

#include <json.hpp>

#include "heckex/report.hpp"

using namespace heckex;

namespace {

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("json for w=10, m=2 is byte exact") {
  CHECK(render_json(make_hecke_report(10, 2)) ==
        "{\"w\":10,\"m\":2,\"dim\":1,\"basis_exponents\":[3],\"matrix\":[[\"-24\"]],"
        "\"charpoly\":[\"24\",\"1\"],\"trace\":\"-24\"}\n");
}

TEST_CASE("json is stable and keeps key order") {
  const std::string a = render_json(make_hecke_report(28, 7));
  const std::string b = render_json(make_hecke_report(28, 7));
  CHECK(a == b);
  CHECK(a.back() == '\n');
  CHECK(a.find(' ') == std::string::npos);

  const auto doc = nlohmann::ordered_json::parse(a);
  std::vector<std::string> keys;
  for (const auto& item : doc.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"w", "m", "dim", "basis_exponents", "matrix", "charpoly", "trace"});
  CHECK(doc["matrix"][1][0] == "79904984173167605760/6439");
  CHECK(doc["charpoly"][0] == "101633401431659687926336");
}

TEST_CASE("text, latex and json carry the same values") {
  for (auto [w, m] : {std::pair{28, 7}, std::pair{22, 3}, std::pair{10, 5}}) {
    const HeckeReport r = make_hecke_report(w, m);
    const auto doc = nlohmann::ordered_json::parse(render_json(r));
    const std::string text = render_text(r), latex = render_latex(r);
    for (Eigen::Index i = 0; i < r.matrix.rows(); ++i) {
      for (Eigen::Index j = 0; j < r.matrix.cols(); ++j) {
        const Rational& x = r.matrix(i, j);
        CHECK(doc["matrix"][i][j] == to_string(x));
        CHECK(contains(text, to_string(x)));
        const std::string tex = is_integer(x) ? to_string(x)
                                              : "\\frac{" + to_string(numerator(x)) + "}{" +
                                                    to_string(denominator(x)) + "}";
        CHECK(contains(latex, tex));
      }
    }
    for (std::size_t i = 0; i < r.charpoly.coeffs.size(); ++i) {
      CHECK(doc["charpoly"][i] == to_string(r.charpoly.coeffs[i]));
    }
    const std::string poly = format_polynomial(r.charpoly.coeffs);
    CHECK(contains(text, "characteristic polynomial: " + poly));
    CHECK(contains(text, "trace: " + to_string(r.trace)));
    CHECK(contains(latex, "\\operatorname{tr} = " + to_string(r.trace)));
    CHECK(doc["trace"] == to_string(r.trace));
  }
}

TEST_CASE("golden text rendering, w=28 m=7") {
  const std::string text = render_text(make_hecke_report(28, 7));
  CHECK(contains(text, "-597428921326303528/6439"));
  CHECK(contains(text, "577981127961754328/6439"));
  CHECK(contains(text, "x^2 + 3020312682800*x + 101633401431659687926336"));
}

TEST_CASE("empty space report") {
  const HeckeReport r = make_hecke_report(12, 2);
  CHECK(r.dim == 0);
  CHECK(r.trace == 0);
  CHECK(render_json(r) ==
        "{\"w\":12,\"m\":2,\"dim\":0,\"basis_exponents\":[],\"matrix\":[],\"charpoly\":[\"1\"],"
        "\"trace\":\"0\"}\n");
  CHECK(contains(render_text(r), "dim = 0"));
}

TEST_CASE("polynomial formatting") {
  CHECK(format_polynomial({Rational(1)}) == "1");
  CHECK(format_polynomial({Rational(24), Rational(1)}) == "x + 24");
  CHECK(format_polynomial({Rational(-3), Rational(0), Rational(1)}) == "x^2 - 3");
  CHECK(format_polynomial({Rational(1, 2), Rational(-1), Rational(1)}, "t") == "t^2 - t + 1/2");
}
