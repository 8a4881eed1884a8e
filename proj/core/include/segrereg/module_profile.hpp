#ifndef SEGREREG_MODULE_PROFILE_HPP
#define SEGREREG_MODULE_PROFILE_HPP

#include <map>
#include <optional>

#include "segrereg/degree_set.hpp"
#include "segrereg/extended_int.hpp"
#include "segrereg/field.hpp"
#include "segrereg/simplicial_complex.hpp"

namespace segrereg {

/// The regularity data of one graded module that the Segre engine consumes:
/// dimension, depth, initial degree, the end of each local cohomology module,
/// and per-index no-gaps / unbounded-below flags.  Flags absent from the maps
/// are unknown; the engine treats unknown as unverified and downgrades its
/// answer to an upper bound.
///
/// `exact` optionally carries the nonvanishing sets (and dimension
/// evaluators) behind those ends; it is filled when the profile comes from a
/// complex or a closed-form construction, and is what the verification layer
/// consumes.
struct ModuleProfile {
  int dim = 0;               // Krull dimension d ≥ 1
  int depth = 0;
  long long sigma = 0;       // min degree where the module is nonzero
  std::map<int, ExtendedInt> ends;       // j → end(H^j); -inf entries omitted
  std::map<int, bool> no_gaps;           // absent = unknown
  std::map<int, bool> unbounded_below;   // absent = unknown
  bool transform_heuristic = false;      // end-wise Veronese applied to a non-CM profile
  std::optional<ExactFactorData> exact;

  ExtendedInt end(int j) const {
    auto it = ends.find(j);
    return it == ends.end() ? ExtendedInt::neg_inf() : it->second;
  }

  bool is_cohen_macaulay() const { return depth == dim; }

  /// max_j end(H^j) + j; requires at least one finite end.
  long long reg() const;

  /// Both flags verified true for every index with a nonzero cohomology.
  bool assumption_flags_verified() const;
};

/// Profile of a Stanley-Reisner ring, with exact evaluators attached.
/// Requires a complex with at least one vertex (dim ≥ 1).
ModuleProfile profile_from_complex(const SimplicialComplex& delta, const FieldSpec& field);

/// Cohen-Macaulay shorthand: only H^d is nonzero, end = reg - d, no gaps and
/// unbounded below (top local cohomology of a depth ≥ 1 module).  The exact
/// nonvanishing sets are pinned by those two facts; dimension evaluators are
/// not available from the shorthand.
ModuleProfile cm_profile(int d, long long reg, long long sigma);

/// Polynomial ring in d ≥ 1 variables: cm_profile(d, 0, 0) plus closed-form
/// dimension evaluators (binomial counts for S and for H^d).
ModuleProfile polynomial_ring_profile(int d);

/// Shifted Veronese reindexing k ↦ nk+τ applied end-wise: end ↦ ⌊(end-τ)/n⌋,
/// σ ↦ ⌈(σ-τ)/n⌉, gap flags preserved.  Exact for Cohen-Macaulay profiles;
/// on anything else the result is marked transform_heuristic (the end-wise
/// rule can misreport ends of gapped cohomology).  Attached exact sets are
/// reindexed exactly either way.
ModuleProfile veronese_transform(const ModuleProfile& p, long long n, long long tau);

/// Segre product of two Cohen-Macaulay dimension-1 profiles: again CM of
/// dimension 1, reg = max of the regs, σ = max of the σs.
ModuleProfile fold_dim1_cm(const ModuleProfile& p, const ModuleProfile& q);

} // namespace segrereg

#endif
