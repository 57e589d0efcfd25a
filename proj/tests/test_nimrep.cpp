#include "modtrace/catalog.hpp"
#include "modtrace/errors.hpp"
#include "modtrace/nimrep.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace modtrace;

namespace {

bool has_rule(const ValidationReport& report, const std::string& rule) {
  return std::any_of(report.violations.begin(), report.violations.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

}  // namespace

TEST_SUITE("nimrep") {
  TEST_CASE("regular modules are valid nimreps") {
    for (const auto& name : builtin_suite()) {
      CAPTURE(name);
      const auto ring = builtin(name).ring;
      const auto rep = regular_module(ring);
      CHECK(rep.module_rank == ring.rank());
      CHECK(validate_nimrep(ring, rep).valid());
      CHECK(is_indecomposable(rep));
    }
  }

  TEST_CASE("subgroup modules of Vect_G are valid") {
    const auto group = symmetric_group_3();
    const auto ring = group_ring(group);
    for (const auto& h : subgroups(group)) {
      const auto rep = vect_g_module(group, h);
      CHECK(rep.module_rank * static_cast<int>(h.size()) == group.order());
      CHECK(validate_nimrep(ring, rep).valid());
      CHECK(is_indecomposable(rep));
    }
  }

  TEST_CASE("broken composition is reported") {
    const auto ring = builtin("fibonacci").ring;
    auto rep = regular_module(ring);
    rep.M[1](1, 1) = 2;
    const auto report = validate_nimrep(ring, rep);
    CHECK_FALSE(report.valid());
    CHECK(has_rule(report, "composition"));
  }

  TEST_CASE("unit, duality and non-negativity rules") {
    const auto ring = group_ring(cyclic_group(3));
    SUBCASE("unit acts nontrivially") {
      auto rep = regular_module(ring);
      rep.M[0] = rep.M[1];
      CHECK(has_rule(validate_nimrep(ring, rep), "unit"));
    }
    SUBCASE("duality") {
      auto rep = regular_module(ring);
      rep.M[2] = rep.M[1];
      CHECK(has_rule(validate_nimrep(ring, rep), "duality"));
    }
    SUBCASE("negative entry") {
      auto rep = regular_module(ring);
      rep.M[1](0, 0) = -1;
      CHECK(has_rule(validate_nimrep(ring, rep), "non-negativity"));
    }
  }

  TEST_CASE("shape and ring mismatches are structural errors") {
    const auto ring = builtin("fibonacci").ring;
    auto rep = regular_module(ring);
    rep.M.pop_back();
    CHECK_THROWS_AS(validate_nimrep(ring, rep), StructuralError);
    auto foreign = regular_module(builtin("ising").ring);
    CHECK_THROWS_AS(validate_nimrep(ring, foreign), StructuralError);
    CHECK_THROWS_AS(direct_sum(regular_module(ring), foreign), StructuralError);
  }

  TEST_CASE("direct sums are block diagonal and decomposable") {
    const auto ring = builtin("ising").ring;
    const auto reg = regular_module(ring);
    const auto sum = direct_sum(reg, reg);
    CHECK(sum.module_rank == 6);
    CHECK(validate_nimrep(ring, sum).valid());
    CHECK_FALSE(is_indecomposable(sum));
    const auto comps = connected_components(sum);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3, 4, 5});
    const auto back = restrict_to(sum, comps[1]);
    for (std::size_t u = 0; u < reg.M.size(); ++u) CHECK(back.M[u] == reg.M[u]);
    CHECK(sum.M[2].block(0, 3, 3, 3).isZero());
  }

  TEST_CASE("adjacency is the sum of the action matrices") {
    const auto ring = builtin("fibonacci").ring;
    IntMatrix expected(2, 2);
    expected << 1, 1, 1, 2;
    CHECK(adjacency(regular_module(ring)) == expected);
  }

  TEST_CASE("relabelling module simples preserves validity") {
    const auto ring = builtin("rep_s3").ring;
    const auto rep = testing::permute_module(regular_module(ring), {2, 0, 1});
    CHECK(validate_nimrep(ring, rep).valid());
  }
}
