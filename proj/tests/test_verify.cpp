#include "doctest.h"

#include "bentforge/verify.hpp"

using namespace bentforge;

TEST_CASE("suites at n = 2") {
  const VerifyReport prop1 = run_support_fraction_suite(2);
  CHECK(prop1.suite == "prop1");
  CHECK(prop1.cases == 8 * (1 + 3 * 2));
  CHECK(prop1.ok());

  const VerifyReport bentpla1 = run_restriction_plateaued_suite(2);
  CHECK(bentpla1.cases == 8 * 3 * 2);
  CHECK(bentpla1.ok());

  const VerifyReport shap1 = run_derivative_support_suite(2);
  CHECK(shap1.cases == 8 * (2 + 3));
  CHECK(shap1.ok());

  SUBCASE("serial and parallel runs agree") {
    const VerifyReport serial = run_restriction_plateaued_suite(2, Exec::Serial);
    CHECK(serial.cases == bentpla1.cases);
    CHECK(serial.ok() == bentpla1.ok());
  }
}

TEST_CASE("double-count suite") {
  const VerifyReport thm2 = run_double_count_suite(3);
  CHECK(thm2.suite == "thm2");
  CHECK(thm2.cases == 3);  // k = 1, 2, 3 all fit
  CHECK(thm2.ok());

  const VerifyReport capped = run_double_count_suite(6, 10);
  CHECK(capped.cases == 1);  // only k = 1 fits under 2^10
  CHECK(capped.ok());
}
