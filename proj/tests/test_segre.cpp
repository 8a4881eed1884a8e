#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "segrereg/errors.hpp"
#include "segrereg/segre_engine.hpp"
#include "test_support.hpp"

using namespace segrereg;
using namespace segrereg::testing;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

std::vector<ModuleProfile> p1_x_p1() {
  return {polynomial_ring_profile(2), polynomial_ring_profile(2)};
}

// the worked Stanley-Reisner pair: K[x,y]/(xy) and K[x,y,z]/(xyz)
std::vector<ModuleProfile> points_and_triangle() {
  return {profile_from_complex(two_points(), kQ),
          profile_from_complex(hollow_triangle(), kQ)};
}

} // namespace

TEST_CASE("candidate vectors know their support and weight") {
  CandidateVector u{{2, 0, 1}};
  CHECK(u.support() == std::vector<int>{0, 2});
  CHECK(u.weight() == 1);
  CHECK(CandidateVector{{1, 1}}.weight() == 0);
}

TEST_CASE("candidate set of CM pairs keeps only the top cohomology indices") {
  auto c = candidate_set(p1_x_p1());
  std::vector<CandidateVector> expected = {
      CandidateVector{{0, 2}}, CandidateVector{{2, 0}}, CandidateVector{{2, 2}}};
  CHECK(c == expected);

  auto mixed = candidate_set({cm_profile(1, 0, 0), cm_profile(2, 0, 0)});
  expected = {CandidateVector{{0, 2}}, CandidateVector{{1, 0}}, CandidateVector{{1, 2}}};
  CHECK(mixed == expected);

  auto single = candidate_set({cm_profile(2, 0, 0)});
  CHECK(single == std::vector<CandidateVector>{CandidateVector{{2}}});
}

TEST_CASE("gamma on the quadric surface P1 x P1") {
  auto profiles = p1_x_p1();
  CHECK(gamma_value(CandidateVector{{2, 2}}, profiles) == 1);
  CHECK(gamma_value(CandidateVector{{2, 0}}, profiles) == 0);
  CHECK(gamma_value(CandidateVector{{0, 2}}, profiles) == 0);
  CHECK_THROWS_AS(gamma_value(CandidateVector{{1, 0}}, profiles), std::invalid_argument);
}

TEST_CASE("gamma on the worked Stanley-Reisner pair") {
  auto profiles = points_and_triangle();
  CHECK(gamma_value(CandidateVector{{1, 0}}, profiles) == 1);
  CHECK(gamma_value(CandidateVector{{0, 2}}, profiles) == 2);
  CHECK(gamma_value(CandidateVector{{1, 2}}, profiles) == 2);
}

TEST_CASE("term survival against the initial degrees outside the support") {
  auto profiles = p1_x_p1();
  CHECK_FALSE(term_nonzero(CandidateVector{{2, 0}}, profiles)); // -2 < σ = 0
  CHECK(term_nonzero(CandidateVector{{2, 2}}, profiles));       // full support
  CHECK(term_end(CandidateVector{{2, 2}}, profiles) == -2);
  CHECK_THROWS_AS(term_end(CandidateVector{{2, 0}}, profiles), std::invalid_argument);

  auto pair = points_and_triangle();
  CHECK(term_nonzero(CandidateVector{{0, 2}}, pair)); // end 0 ≥ σ = 0
  CHECK(term_end(CandidateVector{{0, 2}}, pair) == 0);
  CHECK(term_end(CandidateVector{{1, 2}}, pair) == 0);

  auto single = std::vector<ModuleProfile>{cm_profile(2, 1, 0)};
  CHECK(term_end(CandidateVector{{2}}, single) == -1);
}

TEST_CASE("cohomology decomposition of the quadric surface") {
  auto by_degree = decompose_cohomology(p1_x_p1());
  // dim of the product is 3: degrees 1..3 are all present in the map
  CHECK(by_degree.size() == 3);
  CHECK(by_degree.at(1).empty());
  CHECK(by_degree.at(2).empty());
  REQUIRE(by_degree.at(3).size() == 1);
  CHECK(by_degree.at(3)[0].u == std::vector<int>{2, 2});
  CHECK(by_degree.at(3)[0].end == -2);
}

TEST_CASE("cohomology decomposition of the worked pair") {
  auto by_degree = decompose_cohomology(points_and_triangle());
  CHECK(by_degree.size() == 2);
  REQUIRE(by_degree.at(1).size() == 1);
  CHECK(by_degree.at(1)[0].u == std::vector<int>{1, 0});
  CHECK(by_degree.at(1)[0].end == 0);
  REQUIRE(by_degree.at(2).size() == 2);
  CHECK(by_degree.at(2)[0].u == std::vector<int>{0, 2});
  CHECK(by_degree.at(2)[1].u == std::vector<int>{1, 2});
  CHECK(by_degree.at(2)[0].end == 0);
  CHECK(by_degree.at(2)[1].end == 0);
}

TEST_CASE("single factor decomposition is the module's own cohomology") {
  auto p = profile_from_complex(hollow_triangle(), kQ);
  auto by_degree = decompose_cohomology({p});
  REQUIRE(by_degree.at(2).size() == 1);
  CHECK(by_degree.at(2)[0].u == std::vector<int>{2});
  CHECK(by_degree.at(1).empty());
}

TEST_CASE("regularity of the quadric surface is 1, exactly") {
  auto report = regularity_segre(p1_x_p1());
  CHECK(report.reg == 1);
  CHECK(report.exact);
  CHECK(report.violations.empty());
  REQUIRE(report.witnesses.size() == 1);
  CHECK(report.witnesses[0] == std::vector<int>{2, 2});
}

TEST_CASE("regularity of the worked pair is 2, exactly") {
  auto report = regularity_segre(points_and_triangle());
  CHECK(report.reg == 2);
  CHECK(report.exact);
  // both (0,2) and (1,2) attain the maximum
  CHECK(report.witnesses.size() == 2);
}

TEST_CASE("single factor gives back the module regularity") {
  auto p = profile_from_complex(hollow_triangle(), kQ);
  auto report = regularity_segre({p});
  CHECK(report.reg == 2);
  CHECK(report.exact);
}

TEST_CASE("unverified flags downgrade to an upper bound") {
  ModuleProfile p = cm_profile(2, 0, 0);
  p.unbounded_below[2] = false;
  auto report = regularity_segre({p, polynomial_ring_profile(2)});
  CHECK_FALSE(report.exact);
  CHECK_FALSE(report.violations.empty());
  CHECK(report.reg == 1); // the bound itself is unchanged
}

TEST_CASE("heuristic veronese transforms are reported") {
  ModuleProfile p;
  p.dim = 2;
  p.depth = 2;
  p.sigma = 0;
  p.ends[2] = ExtendedInt(0);
  p.no_gaps[2] = true;
  p.unbounded_below[2] = true;
  p.transform_heuristic = true;
  auto report = regularity_segre({p, polynomial_ring_profile(2)});
  CHECK_FALSE(report.exact);
}

TEST_CASE("hypothesis violations are refused with the failing factor named") {
  ModuleProfile shallow;
  shallow.dim = 2;
  shallow.depth = 1;
  shallow.sigma = 0;
  shallow.ends[1] = ExtendedInt(0);
  shallow.ends[2] = ExtendedInt(0);
  CHECK_THROWS_AS(regularity_segre({shallow, cm_profile(2, 0, 0)}), hypothesis_error);
  CHECK_THROWS_AS(decompose_cohomology({shallow}), hypothesis_error);

  ModuleProfile zero_dim;
  zero_dim.dim = 0;
  zero_dim.depth = 0;
  zero_dim.ends[0] = ExtendedInt(0);
  CHECK_THROWS_AS(regularity_segre({zero_dim}), hypothesis_error);
}

TEST_CASE("multiple CM dimension-1 factors are folded") {
  auto report = regularity_segre(
      {cm_profile(1, 1, 0), cm_profile(1, 0, 0), cm_profile(2, 0, 0)});
  CHECK(report.folded_dim1_factors == 1);
  // after folding this is the pair (d=1, reg 1) x (d=2, reg 0)
  auto direct = regularity_segre({cm_profile(1, 1, 0), cm_profile(2, 0, 0)});
  CHECK(report.reg == direct.reg);

  // dimension 1 with depth 0 violates both the depth hypothesis and CM-ness
  ModuleProfile not_cm;
  not_cm.dim = 1;
  not_cm.depth = 0;
  not_cm.sigma = 0;
  not_cm.ends[1] = ExtendedInt(0);
  CHECK_THROWS_AS(regularity_segre({not_cm, cm_profile(1, 0, 0)}), hypothesis_error);
}

TEST_CASE("gamma recursion holds on the acceptance profile tuples") {
  // γ_{u + λ e_k} = min(γ_u + λ - 1, end(H^λ(M_k)) + λ + w(u))
  auto check_recursion = [](const std::vector<ModuleProfile>& profiles) {
    auto candidates = candidate_set(profiles);
    for (const auto& u : candidates) {
      for (std::size_t k = 0; k < profiles.size(); ++k) {
        if (u.u[k] != 0) continue;
        for (int lambda = 1; lambda <= profiles[k].dim; ++lambda) {
          if (!profiles[k].end(lambda).is_finite()) continue;
          CandidateVector extended = u;
          extended.u[k] = lambda;
          long long expected = std::min(gamma_value(u, profiles) + lambda - 1,
                                        profiles[k].end(lambda).value() + lambda +
                                            u.weight());
          CHECK(gamma_value(extended, profiles) == expected);
        }
      }
    }
  };
  check_recursion(p1_x_p1());
  check_recursion(points_and_triangle());
  for (int d1 = 1; d1 <= 3; ++d1)
    for (int d2 = d1 == 1 ? 2 : 1; d2 <= 3; ++d2)
      for (long long r1 = 0; r1 <= 2; ++r1)
        for (long long r2 = 0; r2 <= 2; ++r2)
          check_recursion({cm_profile(d1, r1, 0), cm_profile(d2, r2, 0)});
}

TEST_CASE("when exact, the max over surviving terms attains the regularity") {
  auto check = [](std::vector<ModuleProfile> profiles) {
    auto report = regularity_segre(profiles);
    REQUIRE(report.exact);
    long long best = report.reg - 1; // any smaller sentinel works
    bool seen = false;
    for (const auto& [j, terms] : report.cohomology)
      for (const auto& term : terms) {
        long long value = 1 + (j - 1) + term.end;
        if (!seen || value > best) { best = value; seen = true; }
      }
    REQUIRE(seen);
    CHECK(best == report.reg);
  };
  check(p1_x_p1());
  check(points_and_triangle());
  check({cm_profile(3, 2, 0), cm_profile(2, 0, 0), cm_profile(2, 1, 0)});
}

TEST_CASE("every surviving term bounds the regularity from below") {
  auto check_bound = [](std::vector<ModuleProfile> profiles) {
    auto report = regularity_segre(profiles);
    for (auto& [j, terms] : decompose_cohomology(profiles))
      for (auto& term : terms) CHECK(report.reg >= 1 + (j - 1) + term.end);
  };
  check_bound(p1_x_p1());
  check_bound(points_and_triangle());
  check_bound({cm_profile(3, 2, 0), cm_profile(2, 1, 0)});
}

TEST_CASE("closed CM form on the worked examples") {
  CHECK(regularity_segre_cm({{2, 0}, {2, 0}}) == 1);
  CHECK(regularity_segre_cm({{3, 0}, {2, 0}}) == 1);
  CHECK(regularity_segre_cm({{1, 1}, {2, 2}}) == 2);
  CHECK_THROWS_AS(regularity_segre_cm({{0, 0}}), std::invalid_argument);
}

TEST_CASE("closed CM form specializes the engine on a grid") {
  for (int d1 = 1; d1 <= 4; ++d1)
    for (int d2 = d1 == 1 ? 2 : 1; d2 <= 4; ++d2)
      for (long long r1 = -2; r1 <= 3; ++r1)
        for (long long r2 = -2; r2 <= 3; ++r2) {
          auto engine = regularity_segre({cm_profile(d1, r1, 0), cm_profile(d2, r2, 0)});
          CHECK(engine.exact);
          CHECK(regularity_segre_cm({{d1, r1}, {d2, r2}}) == engine.reg);
        }
}

TEST_CASE("closed veronese form on the worked examples") {
  CHECK(regularity_segre_veronese_cm({{2, 0, 0, 2}, {2, 0, 0, 2}}) == 2);
  CHECK(regularity_segre_veronese_cm({{2, 0, 0, 1}, {2, 0, 0, 1}}) ==
        regularity_segre_cm({{2, 0}, {2, 0}}));
  CHECK(regularity_segre_veronese_cm({{2, 0, 0, 3}}) == 1);
  CHECK_THROWS_AS(regularity_segre_veronese_cm({{2, 0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("closed veronese form equals the engine on transformed profiles") {
  for (int d = 2; d <= 3; ++d)
    for (long long reg = 0; reg <= 2; ++reg)
      for (long long tau = -1; tau <= 2; ++tau)
        for (long long n = 1; n <= 3; ++n) {
          auto engine = regularity_segre(
              {veronese_transform(cm_profile(d, reg, 0), n, tau),
               veronese_transform(cm_profile(2, 0, 0), 2, 0)});
          CHECK(regularity_segre_veronese_cm({{d, reg, tau, n}, {2, 0, 0, 2}}) ==
                engine.reg);
        }
}

TEST_CASE("cox-materov values") {
  CHECK(cox_materov({{2, 0, 1}, {2, 0, 1}}) == 1);
  CHECK(cox_materov({{2, 0, 2}, {2, 0, 2}}) == 2);
  CHECK(cox_materov({{2, 0, 3}}) == 1);
}

TEST_CASE("cox-materov is the twisted veronese special case on a grid") {
  for (int d1 = 2; d1 <= 3; ++d1)
    for (int d2 = 2; d2 <= 3; ++d2)
      for (long long m1 = -1; m1 <= 2; ++m1)
        for (long long m2 = -1; m2 <= 2; ++m2)
          for (long long n1 = 1; n1 <= 3; ++n1)
            for (long long n2 = 1; n2 <= 3; ++n2)
              CHECK(cox_materov({{d1, m1, n1}, {d2, m2, n2}}) ==
                    regularity_segre_veronese_cm({{d1, 0, m1, n1}, {d2, 0, m2, n2}}));
}

TEST_CASE("permuting the factors leaves every output invariant") {
  std::vector<ModuleProfile> profiles = {profile_from_complex(two_points(), kQ),
                                         cm_profile(3, 1, 0),
                                         polynomial_ring_profile(2)};
  std::vector<ModuleProfile> swapped = {profiles[2], profiles[0], profiles[1]};
  CHECK(regularity_segre(profiles).reg == regularity_segre(swapped).reg);
  CHECK(regularity_segre(profiles).exact == regularity_segre(swapped).exact);
  CHECK(regularity_segre_cm({{2, 0}, {3, 1}}) == regularity_segre_cm({{3, 1}, {2, 0}}));
}

TEST_CASE("the top nonvanishing degree is the dimension of the product") {
  auto check_top = [](std::vector<ModuleProfile> profiles) {
    long long expected = 1;
    for (const auto& p : profiles) expected += p.dim - 1;
    auto by_degree = decompose_cohomology(profiles);
    int top_nonzero = 0;
    for (const auto& [j, terms] : by_degree)
      if (!terms.empty()) top_nonzero = std::max(top_nonzero, j);
    CHECK(top_nonzero == expected);
  };
  check_top(p1_x_p1());
  check_top({cm_profile(3, 1, 0), cm_profile(2, 0, 0)});
  check_top({cm_profile(2, 2, 0), cm_profile(2, 0, 0), cm_profile(3, 0, 0)});
}
