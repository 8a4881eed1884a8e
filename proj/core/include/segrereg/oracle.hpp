#ifndef SEGREREG_ORACLE_HPP
#define SEGREREG_ORACLE_HPP

#include <string>
#include <vector>

#include "segrereg/degree_set.hpp"
#include "segrereg/extended_int.hpp"
#include "segrereg/field.hpp"
#include "segrereg/module_profile.hpp"
#include "segrereg/simplicial_complex.hpp"

namespace segrereg {

/// Graded dimension of a Segre product at one degree: the product of the
/// factor dimensions there.  Requires dimension functions on every factor.
long long segre_graded_dim(const std::vector<GradedEvaluator>& factors, long long t);

/// Exact end of the tensor term picked out by u: the largest degree where
/// H^{u_i} (for i in the support) and the modules (outside it) are all
/// nonzero, found by intersecting the exact nonvanishing sets.  No gap flags
/// and no end formulas are consumed; -inf when no common degree exists.
/// Requires u ≠ 0.
ExtendedInt exact_term_end(const std::vector<int>& u,
                           const std::vector<ExactFactorData>& factors);

/// Regularity of the Segre product recomputed from scratch: the cohomology
/// decomposition ranges over all u ≠ 0, each term's end comes from
/// exact_term_end, and reg = max 1 + Σ(u_l - 1) + end.  Checks the same
/// structural hypotheses as the engine but shares none of its shortcut
/// formulas.
long long regularity_oracle(const std::vector<ExactFactorData>& factors);

/// Extract the exact factor data attached to profiles; throws when absent.
std::vector<ExactFactorData> exact_factors(const std::vector<ModuleProfile>& profiles);

/// Internal consistency of the two regularity routes for one ring, plus the
/// depth cross-check depth = n - pd.
struct CrosscheckReport {
  bool pass = false;
  long long reg_from_betti = 0;
  long long reg_from_cohomology = 0;
  int depth_from_cohomology = 0;
  int depth_auslander_buchsbaum = 0;
  std::vector<std::string> mismatches;
};

CrosscheckReport crosscheck(const SimplicialComplex& delta, const FieldSpec& field,
                            int max_vertices = 16);

} // namespace segrereg

#endif
