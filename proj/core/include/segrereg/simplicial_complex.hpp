#ifndef SEGREREG_SIMPLICIAL_COMPLEX_HPP
#define SEGREREG_SIMPLICIAL_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "segrereg/field.hpp"

namespace segrereg {

/// A face is a subset of {1..n} stored as a bitmask: vertex v <-> bit v-1.
using Face = std::uint32_t;

inline int face_size(Face f) { return __builtin_popcount(f); }

/// Parse/emit 1-indexed vertex lists.
Face face_from_vertices(const std::vector<int>& vertices, int n);
std::vector<int> face_vertices(Face f);

/// A finite simplicial complex on the vertex set {1..n}, stored by its
/// facets (inclusion-maximal faces).  Two degenerate complexes are
/// first-class and distinct:
///   - the empty complex: no faces at all (facet list empty);
///   - the irrelevant complex {∅}: the empty face only (one facet, mask 0).
/// Alexander duality maps the full simplex and the empty complex to each
/// other, so both must round-trip.
class SimplicialComplex {
public:
  SimplicialComplex() = default;
  SimplicialComplex(int n, std::vector<Face> facets);

  int vertex_count() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }

  bool is_empty_complex() const { return facets_.empty(); }
  bool is_irrelevant_complex() const { return facets_.size() == 1 && facets_[0] == 0; }
  bool is_full_simplex() const;

  /// F ∈ Δ  ⇔  F is contained in some facet.
  bool is_face(Face f) const;

  /// Krull dimension of the Stanley-Reisner ring: the largest facet size
  /// (0 for the irrelevant complex).  Invalid on the empty complex.
  int krull_dim() const;

  /// Simplicial dimension: largest facet size minus one; the irrelevant
  /// complex has dimension -1.  Invalid on the empty complex.
  int dim() const;

  /// All faces, sorted ascending as masks.  Includes mask 0 (∅) whenever the
  /// complex is nonempty.
  std::vector<Face> all_faces() const;

  /// Number of faces of each size, indexed 0..krull_dim.
  std::vector<long long> face_counts_by_size() const;

  bool operator==(const SimplicialComplex&) const = default;

private:
  int n_ = 0;
  std::vector<Face> facets_; // canonical: sorted, pairwise incomparable
};

/// Complex generated by the given faces (1-indexed vertex lists): the listed
/// faces and all their subsets.  An empty face list generates the empty
/// complex; pass [[]] for the irrelevant complex.  Throws on n <= 0 or a
/// vertex out of range.
SimplicialComplex build_complex(int n, const std::vector<std::vector<int>>& faces);

/// Same, for faces already encoded as masks.
SimplicialComplex build_complex_masks(int n, const std::vector<Face>& faces);

/// Alexander dual on the same vertex set: F ∈ Δ* ⇔ complement(F) ∉ Δ.
SimplicialComplex alexander_dual(const SimplicialComplex& delta, int max_vertices = 16);

/// link(Δ, F) = { G : G ∩ F = ∅, G ∪ F ∈ Δ } on the ambient vertex set.
/// Throws if F is not a face.
SimplicialComplex link(const SimplicialComplex& delta, Face f);

/// restrict(Δ, σ) = { G ∈ Δ : G ⊆ σ }.
SimplicialComplex restrict_to(const SimplicialComplex& delta, Face sigma);

/// Ranks of reduced simplicial homology over the chosen field, indexed by
/// degree.  Only nonzero ranks are stored; everything outside [-1, dim]
/// vanishes.  The irrelevant complex has rank 1 in degree -1; the empty
/// complex has no homology at all.
class HomologyRanks {
public:
  HomologyRanks() = default;
  explicit HomologyRanks(std::map<int, long long> nonzero) : ranks_(std::move(nonzero)) {}

  long long rank(int degree) const {
    auto it = ranks_.find(degree);
    return it == ranks_.end() ? 0 : it->second;
  }
  const std::map<int, long long>& nonzero() const { return ranks_; }

  bool operator==(const HomologyRanks&) const = default;

private:
  std::map<int, long long> ranks_;
};

HomologyRanks reduced_homology_ranks(const SimplicialComplex& delta, const FieldSpec& field);

/// dim_K K[Δ]_k: monomials of degree k whose support is a face.  Exact;
/// throws on k < 0.
long long hilbert_dim(const SimplicialComplex& delta, long long k);

} // namespace segrereg

#endif
