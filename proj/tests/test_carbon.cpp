#include <doctest.h>

#include <cmath>

#include "vinechar/carbon.hpp"
#include "vinechar/error.hpp"

using namespace vinechar;
using namespace vinechar::carbon;

TEST_CASE("co2_sequestered") {
  CHECK(co2_sequestered(3500.0, 0.70) == doctest::Approx(3500.0 * 0.70 * 44.0 / 12.0));
  CHECK(co2_sequestered(3500.0, 0.70) == doctest::Approx(8983.3).epsilon(1e-5));
  CHECK(co2_sequestered(3500.0, 0.70) / 288.0 == doctest::Approx(31.2).epsilon(1e-3));
  CHECK(co2_sequestered(0.0, 0.70) == 0.0);
  CHECK(kCo2PerCarbon == doctest::Approx(3.6667).epsilon(1e-4));
}

TEST_CASE("sequestration_cost") {
  SequestrationCostInputs in;
  in.capital = 1000.0;
  in.recovery_factor = 0.1;
  in.annual_operating_cost = 400.0;
  in.co2_per_year = 10.0;
  in.ag_benefit = 0.0;
  in.coproduct_benefit = 0.0;
  CHECK(sequestration_cost(in) == doctest::Approx(50.0));

  in.ag_benefit = 20.0;
  in.coproduct_benefit = 5.0;
  CHECK(sequestration_cost(in) == doctest::Approx(25.0));

  in.ag_benefit = 100.0;
  CHECK(sequestration_cost(in) < 0.0);

  in.co2_per_year = 0.0;
  try {
    sequestration_cost(in);
    FAIL("expected ZeroSequestration");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroSequestration);
  }
}

TEST_CASE("implied_ag_benefit solves the cost equation") {
  SequestrationCostInputs in{475200.0, 0.11746, 2.6e6, 8964.0, 0.0, 3.0};
  for (double target : {0.0, 47.64, 62.37, 500.0}) {
    SequestrationCostInputs solved = in;
    solved.ag_benefit = implied_ag_benefit(in, target);
    CHECK(sequestration_cost(solved) == doctest::Approx(target).epsilon(1e-12));
  }
}

TEST_CASE("property: sequestration cost is linear in its terms") {
  SequestrationCostInputs in{1000.0, 0.1, 400.0, 10.0, 2.0, 1.0};
  const double base = sequestration_cost(in);
  SequestrationCostInputs more = in;
  more.annual_operating_cost += 30.0;
  CHECK(sequestration_cost(more) - base == doctest::Approx(3.0));
  more = in;
  more.ag_benefit += 7.0;
  CHECK(sequestration_cost(more) - base == doctest::Approx(-7.0));
  more = in;
  more.capital *= 2.0;
  CHECK(sequestration_cost(more) - base == doctest::Approx(10.0));
}

TEST_CASE("offset_benefit") {
  CHECK(offset_benefit(8976.0, 62.37) == doctest::Approx(559833.12));
  CHECK(offset_benefit(9001.0, 47.64) == doctest::Approx(428807.64));
  CHECK(offset_benefit(9001.0, 0.0) == 0.0);
  // Linear in both arguments.
  CHECK(offset_benefit(2 * 9001.0, 47.64) == doctest::Approx(2 * offset_benefit(9001.0, 47.64)));
}

TEST_CASE("cars_equivalent") {
  CHECK(cars_equivalent(8983.3, 4.6) == 1952);
  CHECK(cars_equivalent(8990.0, 4.6) == 1954);
  CHECK(cars_equivalent(0.0, 4.6) == 0);
  CHECK(cars_equivalent(4.6, 4.6) == 1);
  CHECK(cars_equivalent(4.59, 4.6) == 0);
}

TEST_CASE("property: co2 slope in carbon content and tonnes") {
  for (double t : {10.0, 3518.8, 1e5}) {
    for (double c : {0.5, 0.7, 0.9}) {
      const double v = co2_sequestered(t, c);
      CHECK(v == doctest::Approx(t * c * 44.0 / 12.0).epsilon(1e-14));
      CHECK(co2_sequestered(t, c + 0.01) - v == doctest::Approx(t * 0.01 * 44.0 / 12.0));
    }
  }
}
