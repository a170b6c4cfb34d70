#include "doctest.h"
#include "svt/errors.hpp"
#include "svt/verify.hpp"

using namespace svt;

namespace {

SuiteSpec tiny(const std::string& id) {
  SuiteSpec spec;
  spec.suite_id = id;
  spec.m_values = {1};
  spec.i_min = -1;
  spec.i_max = 1;
  spec.k2_min = -1;
  spec.k2_max = 1;
  spec.order = 1;
  return spec;
}

}  // namespace

TEST_CASE("every listed suite runs and passes on a tiny grid") {
  for (const auto& [id, desc] : list_suites()) {
    if (id == "all") continue;
    CAPTURE(id);
    const Report rep = run_suite(tiny(id));
    CHECK(rep.suite_id == id);
    CHECK(rep.cases_run > 0);
    CHECK(rep.passed());
  }
}

TEST_CASE("negative control: a corrupted structure constant is detected") {
  SuiteSpec spec = tiny("relations");
  spec.corrupt_structure_constant = true;
  const Report rep = run_suite(spec);
  CHECK(!rep.passed());
  CHECK(rep.failures.size() > 0);
  CHECK(!rep.failures.front().left.empty());
  CHECK(!rep.failures.front().right.empty());
}

TEST_CASE("unknown suite and order cap") {
  SuiteSpec spec = tiny("nosuch");
  CHECK_THROWS_AS(run_suite(spec), UnknownSuite);
  SuiteSpec big = tiny("combinatorial");
  big.order = 6;
  CHECK_THROWS_AS(run_suite(big), OrderTooLarge);
  big.max_order = 8;
  CHECK(run_suite(big).passed());
}

TEST_CASE("reports are deterministic") {
  const Report a = run_suite(tiny("lemma31"));
  const Report b = run_suite(tiny("lemma31"));
  CHECK(a.cases_run == b.cases_run);
  CHECK(a.failures.size() == b.failures.size());
  for (std::size_t i = 0; i < a.failures.size(); ++i) {
    CHECK(a.failures[i].params == b.failures[i].params);
    CHECK(a.failures[i].left == b.failures[i].left);
  }
}

TEST_CASE("the aggregate suite includes every sub-suite") {
  SuiteSpec spec = tiny("all");
  const Report rep = run_suite(spec);
  CHECK(rep.passed());
  long total = 0;
  for (const auto& [id, desc] : list_suites()) {
    if (id == "all") continue;
    total += run_suite(tiny(id)).cases_run;
  }
  CHECK(rep.cases_run == total);
}

TEST_CASE("report json shape") {
  const auto j = to_json(run_suite(tiny("xy")));
  CHECK(j.contains("suite"));
  CHECK(j.contains("cases_run"));
  CHECK(j.contains("failures"));
  CHECK(j.contains("wall_ms"));
  CHECK(j.at("failures").is_array());
}

TEST_CASE("diff_report") {
  const UeaElement l1 = UeaElement::of_generator(gen_L(1));
  SUBCASE("equal values give an empty diff") {
    const Diff d = diff_report(l1, l1);
    CHECK(d.empty);
    CHECK(d.first.empty());
  }
  SUBCASE("element difference") {
    const UeaElement with_extra =
        l1 + UeaElement::of_generator(gen_L(2), Scalar::alpha());
    const Diff d = diff_report(l1, with_extra);
    CHECK(!d.empty);
    CHECK(d.first == "-αL_2");
    CHECK(d.difference == "-αL_2");
  }
  SUBCASE("series difference localizes the first degree") {
    TSeries<UeaElement> x(3, UeaElement());
    TSeries<UeaElement> y(3, UeaElement());
    x.at(2) = l1;
    const Diff d = diff_report(x, y);
    CHECK(!d.empty);
    CHECK(d.first == "t^2: L_1");
  }
  SUBCASE("shape mismatches are rejected") {
    CHECK_THROWS_AS(diff_report(TensorElement(2), TensorElement(3)),
                    ShapeMismatch);
    CHECK_THROWS_AS(diff_report(TSeries<UeaElement>(2, UeaElement()),
                                TSeries<UeaElement>(3, UeaElement())),
                    ShapeMismatch);
  }
}
