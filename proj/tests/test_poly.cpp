#include <nlohmann/json.hpp>

#include "cpaths/poly.hpp"
#include "doctest.h"

using namespace cpaths;

TEST_CASE("qpoly arithmetic") {
  QPoly a = QPoly::monomial(2) + QPoly::monomial(0, 3);  // q^2 + 3
  QPoly b = QPoly::monomial(1) - QPoly::constant(1);     // q - 1
  CHECK((a * b).to_text() == "q^3 - q^2 + 3 q - 3");
  CHECK((a - a).is_zero());
  CHECK(a.eval_one() == 4);
  CHECK(a.min_degree() == 0);
  CHECK(a.max_degree() == 2);
  CHECK(a.shifted(3).min_degree() == 3);
  CHECK(a.reversed().min_degree() == -2);
  CHECK(QPoly().to_text() == "0");
  CHECK_THROWS(QPoly().min_degree());
}

TEST_CASE("qpoly cancellation never stores zeros") {
  QPoly a;
  a.add_term(5, 7);
  a.add_term(5, -7);
  CHECK(a.is_zero());
  CHECK(a == QPoly());
}

TEST_CASE("exact division") {
  QPoly num = QPoly::monomial(3) - QPoly::constant(1);
  QPoly den = QPoly::monomial(1) - QPoly::constant(1);
  CHECK(num.divide_exact(den).to_text() == "q^2 + q + 1");
  QPoly bad = QPoly::monomial(3) + QPoly::constant(1);
  QPoly den2 = QPoly::monomial(1) - QPoly::constant(2);
  CHECK_THROWS_AS(bad.divide_exact(den2), std::runtime_error);
  CHECK_THROWS_AS(num.divide_exact(QPoly()), std::invalid_argument);
}

TEST_CASE("laurent support") {
  QPoly a = QPoly::monomial(-2, 5);
  CHECK(a.to_text() == "5 q^-2");
  CHECK((a * QPoly::monomial(2)).to_text() == "5");
}

TEST_CASE("big coefficients stay exact") {
  QPoly a = QPoly::constant(1);
  QPoly two = QPoly::constant(2);
  for (int i = 0; i < 200; ++i) a = a * two;
  BigInt expect = 1;
  for (int i = 0; i < 200; ++i) expect *= 2;
  CHECK(a.eval_one() == expect);
  // json falls back to a string beyond long long
  auto j = a.to_json();
  CHECK(j["q^0"].is_string());
}

TEST_CASE("qtpoly slices and text") {
  QTPoly p;
  p.add_term(4, 2, 1);
  p.add_term(6, 0, 1);
  p.add_term(4, 1, 2);
  CHECK(p.to_text() == "q^6 + 2 q^4 t + q^4 t^2");
  CHECK(p.at_t_one().to_text() == "q^6 + 3 q^4");
  // the t-slice is returned as a single-variable polynomial in q's slot
  CHECK(p.at_q_one().to_text() == "q^2 + 2 q + 1");
  CHECK(p.at_q_zero().is_zero());
  auto j = p.to_json();
  CHECK(j["q^4 t^2"] == 1);
  CHECK(j["q^6 t^0"] == 1);
}
