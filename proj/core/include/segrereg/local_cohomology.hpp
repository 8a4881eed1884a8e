#ifndef SEGREREG_LOCAL_COHOMOLOGY_HPP
#define SEGREREG_LOCAL_COHOMOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "segrereg/extended_int.hpp"
#include "segrereg/field.hpp"
#include "segrereg/simplicial_complex.hpp"

namespace segrereg {

/// Exact description of the degrees where H^i_m(K[Δ]) does not vanish,
/// together with an exact coarse-dimension evaluator.
///
/// Every nonvanishing degree is ≤ 0, and the set always has the shape
///   { 0 (if the degree-0 piece is nonzero) } ∪ { -j : j ≥ tail_threshold }.
/// A face F of size f contributes to degree -j exactly when j ≥ f (there are
/// C(j-1, f-1) exponent vectors with that support and total degree j), so the
/// smallest contributing nonempty face size starts an uninterrupted tail.
class CohomologyDegreeSet {
public:
  CohomologyDegreeSet(int index, std::vector<long long> contributions_by_face_size);

  int index() const { return index_; }

  /// Is (H^i)_0 nonzero?
  bool zero_degree_present() const { return contributions_[0] != 0; }

  /// Smallest nonempty contributing face size m: (H^i)_{-j} ≠ 0 for all
  /// j ≥ m.  Absent when no nonempty face contributes.
  std::optional<int> tail_threshold() const;

  /// Largest nonvanishing degree; -inf for the zero module.
  ExtendedInt end() const;

  bool is_zero_module() const { return !zero_degree_present() && !tail_threshold(); }

  /// Exact dim_K (H^i)_degree for any degree (0 for positive degrees).
  long long dim_at(long long degree) const;

  bool contains(long long degree) const { return dim_at(degree) > 0; }

  /// True unless the degree set has an internal hole, which happens exactly
  /// when degree 0 is present but the tail starts at -2 or below.
  bool has_no_gaps() const;

  /// (H^i)_k ≠ 0 for every k ≤ end().
  bool unbounded_below() const;

  /// Σ over faces of size f of rank H̃_{i-f-1}(link F); index 0 is the ∅ term.
  const std::vector<long long>& contributions_by_face_size() const { return contributions_; }

private:
  int index_;
  std::vector<long long> contributions_;
};

/// dim_K (H^i_m(K[Δ]))_a for a componentwise ≤ 0 exponent vector a, as the
/// reduced homology of the link of supp(a); zero when supp(a) is not a face.
/// Throws on a positive entry.
long long lc_multigraded_dim(const SimplicialComplex& delta, const FieldSpec& field,
                             int i, const std::vector<long long>& a);

/// dim_K (H^i_m(K[Δ]))_{-j}, exact, any j ≥ 0.
long long lc_coarse_dim(const SimplicialComplex& delta, const FieldSpec& field,
                        int i, long long j);

/// The coarse dual-Betti formula
///   Σ_{h=1}^{min(j,n)} C(n,h) C(h+j-1,j) β_{i+1-h,n-h}(K[Δ*])
/// evaluated verbatim, j > 0.  Diagnostic only: it does not agree with the
/// multigraded summation on all inputs (e.g. two points, i=1), so it is never
/// used as ground truth.  See lc_diagnose.
long long lc_coarse_dim_dual_betti(const SimplicialComplex& delta, const FieldSpec& field,
                              int i, long long j, int max_vertices = 16);

/// Exact degree set of H^i_m(K[Δ]); nullopt for the zero module.
/// Requires 0 ≤ i ≤ krull_dim.
std::optional<CohomologyDegreeSet> degree_set(const SimplicialComplex& delta,
                                              const FieldSpec& field, int i);

/// One row of the assumption report.
struct AssumptionStatus {
  int index = 0;
  bool no_gaps = false;
  bool infinitely_many_degrees = false;
};

struct AssumptionReport {
  bool satisfied = false;
  bool depth_hypothesis_ok = false; // depth ≥ min(2, dim)
  std::vector<AssumptionStatus> indices; // one per nonzero H^i
  std::vector<std::string> violations;
};

/// Ends, depth, dim and regularity of K[Δ] from the exact degree sets.
struct CohomologySummary {
  int vertex_count = 0;
  int dim = 0;
  int depth = 0;
  long long reg = 0;
  std::vector<std::optional<CohomologyDegreeSet>> by_index; // size dim+1

  ExtendedInt end(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= by_index.size())
      return ExtendedInt::neg_inf();
    return by_index[static_cast<std::size_t>(i)] ? by_index[static_cast<std::size_t>(i)]->end()
                                                 : ExtendedInt::neg_inf();
  }
};

/// Requires a nonempty complex (the zero ring has no cohomology summary).
CohomologySummary summarize(const SimplicialComplex& delta, const FieldSpec& field);

AssumptionReport check_assumption(const SimplicialComplex& delta, const FieldSpec& field);

/// Side-by-side values of the multigraded summation and the coarse
/// dual-Betti formula at (i, -j).
struct CoarseDiagnostic {
  int i = 0;
  long long j = 0;
  long long multigraded_value = 0;
  long long dual_betti_value = 0;
  bool agree = false;
};

std::vector<CoarseDiagnostic> lc_diagnose(const SimplicialComplex& delta,
                                          const FieldSpec& field, long long max_j,
                                          int max_vertices = 16);

} // namespace segrereg

#endif
