#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "segrereg/betti.hpp"
#include "segrereg/errors.hpp"
#include "test_support.hpp"

using namespace segrereg;
using namespace segrereg::testing;

namespace {
const FieldSpec kQ = FieldSpec::rationals();
}

TEST_CASE("graded betti of K[x,y]/(xy)") {
  // Taylor resolution of the single monomial xy: 0 → S(-2) → S → R → 0
  auto table = graded_betti(two_points(), kQ);
  CHECK(table.rank(0, 0) == 1);
  CHECK(table.rank(1, 0b11) == 1);
  CHECK(table.entries().size() == 2);
  CHECK(regularity_from_betti(table) == 1);
  CHECK(projective_dimension(table) == 1);
}

TEST_CASE("graded betti of K[x,y,z]/(xyz)") {
  auto table = graded_betti(hollow_triangle(), kQ);
  CHECK(table.rank(0, 0) == 1);
  CHECK(table.rank(1, 0b111) == 1);
  CHECK(table.entries().size() == 2);
  CHECK(regularity_from_betti(table) == 2);
}

TEST_CASE("graded betti of K as a quotient of K[x,y] is the Koszul complex") {
  auto table = graded_betti(irrelevant_complex(2), kQ);
  CHECK(table.rank(0, 0) == 1);
  CHECK(table.rank(1, 0b01) == 1);
  CHECK(table.rank(1, 0b10) == 1);
  CHECK(table.rank(2, 0b11) == 1);
  CHECK(table.entries().size() == 4);
  CHECK(regularity_from_betti(table) == 0);
  CHECK(projective_dimension(table) == 2);
}

TEST_CASE("full simplex has the trivial table") {
  auto table = graded_betti(full_simplex(3), kQ);
  CHECK(table.rank(0, 0) == 1);
  CHECK(table.entries().size() == 1);
  CHECK(regularity_from_betti(table) == 0);
  CHECK(projective_dimension(table) == 0);
}

TEST_CASE("empty complex yields an empty table and regularity refuses it") {
  auto table = graded_betti(empty_complex(2), kQ);
  CHECK(table.empty());
  CHECK_THROWS_AS(regularity_from_betti(table), std::domain_error);
}

TEST_CASE("coarse view sums the multigraded entries") {
  auto table = graded_betti(irrelevant_complex(2), kQ);
  CHECK(table.coarse_rank(1, 1) == 2);
  CHECK(table.coarse_rank(2, 2) == 1);
  CHECK(table.coarse_rank(0, 0) == 1);
  CHECK(table.coarse_rank(1, 2) == 0);

  auto coarse = table.coarse();
  long long total = 0;
  for (const auto& [key, rank] : coarse) total += rank;
  long long total_fine = 0;
  for (const auto& [key, rank] : table.entries()) total_fine += rank;
  CHECK(total == total_fine);
}

TEST_CASE("vertex cap is enforced") {
  CHECK_THROWS_AS(graded_betti(full_simplex(5), kQ, 4), cap_exceeded_error);
  CHECK_NOTHROW(graded_betti(full_simplex(5), kQ, 5));
}

TEST_CASE("beta_0 is concentrated in the empty subset") {
  std::mt19937 rng(321);
  for (int trial = 0; trial < 30; ++trial) {
    auto delta = random_complex(2 + static_cast<int>(rng() % 4), rng);
    auto table = graded_betti(delta, kQ);
    for (const auto& [key, rank] : table.entries()) {
      if (key.first == 0) {
        CHECK(key.second == 0);
        CHECK(rank == 1);
      }
      CHECK(key.first <= face_size(key.second));
    }
  }
}

TEST_CASE("entries depend only on the restriction: disjoint extra point") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    auto delta = random_complex(n, rng);
    // same complex on [n+1] with the new vertex isolated
    std::vector<Face> facets = delta.facets();
    facets.push_back(Face{1} << n);
    auto extended = build_complex_masks(n + 1, facets);

    auto table = graded_betti(delta, kQ);
    auto table_ext = graded_betti(extended, kQ);
    const Face old_vertices = (Face{1} << n) - 1;
    for (const auto& [key, rank] : table.entries())
      CHECK(table_ext.rank(key.first, key.second) == rank);
    for (const auto& [key, rank] : table_ext.entries())
      if ((key.second & ~old_vertices) == 0)
        CHECK(table.rank(key.first, key.second) == rank);
  }
}

TEST_CASE("alternating sums reproduce the euler characteristic per subset") {
  std::mt19937 rng(888);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    auto delta = random_complex(n, rng);
    auto table = graded_betti(delta, kQ);
    const Face full = (Face{1} << n) - 1;
    for (Face sigma = 0;; ++sigma) {
      long long alternating = 0;
      for (const auto& [key, rank] : table.entries())
        if (key.second == sigma)
          alternating += (key.first % 2 == 0 ? rank : -rank);
      // Hochster: Σ_i (-1)^i β_{i,σ} = Σ_i (-1)^i rank H̃_{|σ|-i-1}(Δ|_σ),
      // which the euler identity turns into a face count of Δ|_σ.
      long long faces_alternating = 0;
      for (Face f : restrict_to(delta, sigma).all_faces())
        faces_alternating += (face_size(f) % 2 == 1 ? 1 : -1);
      const int size = face_size(sigma);
      // substituting i = |σ| - deg - 1 gives Σ_i (-1)^i β_{i,σ} =
      // (-1)^{|σ|-1} Σ_F (-1)^{|F|-1}
      long long expected = (size % 2 == 1 ? 1 : -1) * faces_alternating;
      CHECK(alternating == expected);
      if (sigma == full) break;
    }
  }
}
