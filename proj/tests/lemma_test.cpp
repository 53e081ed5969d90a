#include "doctest.h"
#include "walsh/errors.hpp"
#include "walsh/lemma.hpp"

using namespace walsh;

TEST_CASE("kernel lower bound for logarithmic weights") {
  const Lemma2Report r1 = lemma2_check(WeightFamily::logarithmic(), 1, 4);
  CHECK(r1.min_abs_kernel == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(r1.kappa == doctest::Approx(0.125));
  CHECK(r1.passed);
  CHECK_FALSE(r1.vacuous());
  CHECK(r1.family == "log");

  const Lemma2Report r2 = lemma2_check(WeightFamily::logarithmic(), 2, 5);
  CHECK(r2.min_abs_kernel == doctest::Approx(0.2005952380952381).epsilon(1e-13));
  CHECK(r2.passed);
}

TEST_CASE("kernel lower bound for Cesaro weights") {
  const WeightFamily w = WeightFamily::cesaro(0.5);
  const double frozen[] = {0.1875, 0.1441129893064499, 0.14293361618805428};
  for (std::int64_t a = 1; a <= 3; ++a) {
    const Lemma2Report r = lemma2_check(w, a, 8);
    CHECK(r.resolution == 8);
    CHECK(r.min_abs_kernel == doctest::Approx(frozen[a - 1]).epsilon(1e-12));
    CHECK(r.min_abs_kernel >= 0.03125);
    CHECK(r.passed);
  }
}

TEST_CASE("kernel minimum does not depend on the resolution") {
  for (const WeightFamily& w : {WeightFamily::logarithmic(), WeightFamily::vlog(),
                                WeightFamily::ualpha(0.3)}) {
    for (std::int64_t a = 1; a <= 3; ++a) {
      const Lemma2Report lo = lemma2_check(w, a);
      const Lemma2Report hi = lemma2_check(w, a, static_cast<int>(2 * a + 3));
      CHECK(lo.resolution == 2 * a + 1);
      CHECK(lo.min_abs_kernel == doctest::Approx(hi.min_abs_kernel).epsilon(1e-13));
    }
  }
}

TEST_CASE("fejer weights make the bound vacuous") {
  const Lemma2Report r = lemma2_check(WeightFamily::fejer(), 2);
  CHECK(r.kappa == -0.5);
  CHECK(r.vacuous());
  CHECK(r.passed);
}

TEST_CASE("bound holds across families and block indices") {
  for (const WeightFamily& w : {WeightFamily::logarithmic(), WeightFamily::vlog(),
                                WeightFamily::cesaro(0.55), WeightFamily::ualpha(0.4)}) {
    for (std::int64_t a = 1; a <= 5; ++a) {
      INFO(w.describe(), " alpha=", a);
      const Lemma2Report r = lemma2_check(w, a);
      CHECK(r.passed);
      CHECK(r.min_abs_kernel + kLemmaSlack >= r.kappa);
      CHECK(telescope_check(w, a).holds());
    }
  }
}

TEST_CASE("lemma preconditions") {
  CHECK_THROWS_AS(lemma2_check(WeightFamily::custom({1, 1, 2, 3, 4, 5, 6, 7, 8}), 1),
                  PreconditionError);
  CHECK_THROWS_AS(lemma2_check(WeightFamily::logarithmic(), 0), ArgumentError);
  CHECK_THROWS_AS(lemma2_check(WeightFamily::logarithmic(), 2, 4), DegreeError);
}

TEST_CASE("identity suite") {
  const IdentityReport r =
      identity_suite(Resolution(6), {WeightFamily::logarithmic(), WeightFamily::cesaro(0.5)});
  CHECK(r.resolution == 6);
  REQUIRE(r.checks.size() == 5);
  for (const IdentityCheck& c : r.checks) {
    INFO(c.name, ": ", c.first_failure);
    CHECK(c.passed);
    CHECK(c.cases > 0);
  }
  CHECK(r.all_passed());
  CHECK_THROWS_AS(identity_suite(Resolution(9), {}), ArgumentError);
}
