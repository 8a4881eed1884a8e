#ifndef SEGREREG_TEST_SUPPORT_HPP
#define SEGREREG_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "segrereg/simplicial_complex.hpp"

namespace segrereg::testing {

// --- named complexes used across the suites ---

inline SimplicialComplex two_points() { return build_complex(2, {{1}, {2}}); }

inline SimplicialComplex hollow_triangle() {
  return build_complex(3, {{1, 2}, {2, 3}, {1, 3}});
}

inline SimplicialComplex path3() { return build_complex(3, {{1, 2}, {2, 3}}); }

inline SimplicialComplex full_simplex(int n) {
  std::vector<int> all;
  for (int v = 1; v <= n; ++v) all.push_back(v);
  return build_complex(n, {all});
}

inline SimplicialComplex irrelevant_complex(int n) {
  return build_complex(n, {std::vector<int>{}});
}

inline SimplicialComplex empty_complex(int n) { return build_complex(n, {}); }

inline SimplicialComplex disjoint_edges4() { return build_complex(4, {{1, 2}, {3, 4}}); }

inline SimplicialComplex tetrahedron_boundary() {
  return build_complex(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

// --- exhaustive and random complex generation ---

/// Every simplicial complex on [n], as a facet antichain over the 2^n masks.
/// Includes the empty complex ({}), the irrelevant complex ({0}) and the
/// full simplex.  The counts are the Dedekind numbers: 168 for n=4, 7581
/// for n=5.
inline std::vector<std::vector<Face>> all_facet_antichains(int n) {
  const Face full = (Face{1} << n) - 1;
  std::vector<std::vector<Face>> out;
  std::vector<Face> current;
  auto comparable = [](Face a, Face b) { return (a & b) == a || (a & b) == b; };
  auto dfs = [&](auto&& self, Face next) -> void {
    out.push_back(current);
    for (Face f = next; f <= full; ++f) {
      bool ok = true;
      for (Face g : current)
        if (comparable(f, g)) { ok = false; break; }
      if (!ok) continue;
      current.push_back(f);
      self(self, f + 1);
      current.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

/// A random complex on [n]: a handful of random faces, closed downward.
/// Always contains at least one vertex.
inline SimplicialComplex random_complex(int n, std::mt19937& rng) {
  const Face full = (Face{1} << n) - 1;
  std::uniform_int_distribution<int> count_dist(1, 5);
  std::uniform_int_distribution<Face> face_dist(1, full);
  std::vector<Face> faces;
  const int count = count_dist(rng);
  for (int k = 0; k < count; ++k) faces.push_back(face_dist(rng));
  return build_complex_masks(n, faces);
}

/// Relabel the vertices of Δ by a permutation of {1..n} (perm[v-1] is the
/// image of v).
inline SimplicialComplex relabel(const SimplicialComplex& delta,
                                 const std::vector<int>& perm) {
  std::vector<Face> facets;
  for (Face f : delta.facets()) {
    Face image = 0;
    for (int v : face_vertices(f)) image |= Face{1} << (perm[v - 1] - 1);
    facets.push_back(image);
  }
  return build_complex_masks(delta.vertex_count(), facets);
}

// --- independent brute-force oracles (no shared code with the library
//     paths they check) ---

/// Membership by scanning the facet list directly.
inline bool naive_is_face(const SimplicialComplex& delta, Face f) {
  for (Face g : delta.facets())
    if ((f & g) == f) return true;
  return false;
}

/// Alexander dual by enumerating every subset and testing the complement.
inline std::vector<Face> naive_dual_faces(const SimplicialComplex& delta) {
  const int n = delta.vertex_count();
  const Face full = (Face{1} << n) - 1;
  std::vector<Face> faces;
  for (Face f = 0;; ++f) {
    if (!naive_is_face(delta, full & ~f)) faces.push_back(f);
    if (f == full) break;
  }
  return faces;
}

/// dim_K K[Δ]_k by enumerating exponent vectors of total degree k on n ≤ 6
/// variables and testing the support.
inline long long naive_hilbert_dim(const SimplicialComplex& delta, int k) {
  const int n = delta.vertex_count();
  long long count = 0;
  std::vector<int> exponents(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == n - 1) {
      exponents[static_cast<std::size_t>(var)] = remaining;
      Face support = 0;
      for (int i = 0; i < n; ++i)
        if (exponents[static_cast<std::size_t>(i)] > 0) support |= Face{1} << i;
      if (naive_is_face(delta, support)) ++count;
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      exponents[static_cast<std::size_t>(var)] = e;
      self(self, var + 1, remaining - e);
    }
  };
  if (n == 0) return 0;
  rec(rec, 0, k);
  return count;
}

/// All exponent vectors a ≤ 0 with Σ|a_l| = j, for the coarse-vs-multigraded
/// summation check.
inline std::vector<std::vector<long long>> nonpositive_vectors(int n, long long j) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> a(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int var, long long remaining) -> void {
    if (var == n - 1) {
      a[static_cast<std::size_t>(var)] = -remaining;
      out.push_back(a);
      return;
    }
    for (long long e = 0; e <= remaining; ++e) {
      a[static_cast<std::size_t>(var)] = -e;
      self(self, var + 1, remaining - e);
    }
  };
  rec(rec, 0, j);
  return out;
}

} // namespace segrereg::testing

#endif
