#ifndef SEGREREG_SEGRE_ENGINE_HPP
#define SEGREREG_SEGRE_ENGINE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "segrereg/module_profile.hpp"

namespace segrereg {

/// One cohomology-index vector u with 0 ≤ u_i ≤ d_i, u ≠ 0.  Its support
/// indexes the factors whose local cohomology enters the tensor term; its
/// weight Σ_{l∈Supp}(u_l - 1) fixes which H^j of the product it lands in
/// (j = weight + 1).
struct CandidateVector {
  std::vector<int> u;

  std::vector<int> support() const; // 0-based factor indices
  long long weight() const;
  bool operator==(const CandidateVector&) const = default;
  bool operator<(const CandidateVector& o) const { return u < o.u; }
};

/// One nonvanishing tensor term of H^j of the Segre product.
struct CohomologyTerm {
  std::vector<int> u;
  long long end = 0;
};

struct CandidateInfo {
  std::vector<int> u;
  long long gamma = 0;               // 1 + weight + min factor end
  bool term_nonzero = false;         // does the full tensor term survive?
  std::optional<long long> term_end; // its end, when nonzero
};

struct SegreReport {
  long long reg = 0;
  bool exact = false;                   // all assumption flags verified
  std::vector<std::string> violations;  // why not exact
  std::map<int, std::vector<CohomologyTerm>> cohomology; // j → nonvanishing terms
  std::vector<std::vector<int>> witnesses;               // u attaining the max
  std::vector<CandidateInfo> candidates;                 // all of C_2 \ {0}
  int folded_dim1_factors = 0;
};

/// All u ≠ 0 whose supported cohomologies are nonzero, in lexicographic
/// order.  These are the only index vectors that can contribute to the
/// cohomology of the product.
std::vector<CandidateVector> candidate_set(const std::vector<ModuleProfile>& profiles);

/// 1 + Σ_{l∈Supp u}(u_l - 1) + min_{i∈Supp u} end(H^{u_i}).  Throws when some
/// required cohomology vanishes (u outside the candidate set).
long long gamma_value(const CandidateVector& u, const std::vector<ModuleProfile>& profiles);

/// Does the tensor term survive multiplication by the factors outside the
/// support?  True iff min_{i∈Supp u} end(H^{u_i}) ≥ max_{j∉Supp u} σ_j (max
/// over the empty set is -inf, so full support always survives).  Justified
/// by the no-gaps flags; callers that cannot verify them get an upper bound.
bool term_nonzero(const CandidateVector& u, const std::vector<ModuleProfile>& profiles);

/// end(E_u) = min_{i∈Supp u} end(H^{u_i}); requires term_nonzero.
long long term_end(const CandidateVector& u, const std::vector<ModuleProfile>& profiles);

/// The cohomology of the Segre product, split by cohomological degree
/// j = 1 .. Σd_i - s + 1: each j lists the nonvanishing terms with ends.
/// Folds multiple CM dimension-1 factors first; throws hypothesis_error when
/// depth < min(2, dim) for some factor or a dimension-1 factor is not
/// foldable.
std::map<int, std::vector<CohomologyTerm>> decompose_cohomology(
    std::vector<ModuleProfile> profiles);

/// Castelnuovo-Mumford regularity of the Segre product as max γ_u over the
/// candidate set; exact when every factor's no-gaps/unbounded flags are
/// verified, otherwise an upper bound (report.exact == false).
SegreReport regularity_segre(std::vector<ModuleProfile> profiles);

struct CmFactor {
  int dim = 0;
  long long reg = 0;
};

struct VeroneseCmFactor {
  int dim = 0;
  long long reg = 0;
  long long shift = 0;   // τ
  long long veronese = 1; // n ≥ 1
};

struct CoxMaterovFactor {
  int dim = 0;       // number of variables of the polynomial ring
  long long twist = 0; // m
  long long veronese = 1;
};

/// Closed form for Cohen-Macaulay factors (σ = 0):
///   reg = max over nonempty supports S of 1 + Σ_{l∈S}(d_l - 1) - max_{l∈S}(d_l - reg_l).
long long regularity_segre_cm(const std::vector<CmFactor>& factors);

/// Closed form for shifted Veronese transforms of CM factors:
///   reg = max over S of 1 + Σ_{l∈S}(d_l - 1) - max_{l∈S} ⌈(d_l - reg_l + τ_l)/n_l⌉.
long long regularity_segre_veronese_cm(const std::vector<VeroneseCmFactor>& factors);

/// Twisted Veronese products of polynomial rings:
///   reg = max over S of 1 + Σ_{l∈S}(d_l - 1) - max_{l∈S} ⌈(d_l + m_l)/n_l⌉.
long long cox_materov(const std::vector<CoxMaterovFactor>& factors);

/// Shared hypothesis check + dimension-1 folding; exposed for the oracle and
/// the CLI.  Returns the normalized profile list and how many factors were
/// folded away.
std::pair<std::vector<ModuleProfile>, int> normalize_factors(
    std::vector<ModuleProfile> profiles);

} // namespace segrereg

#endif
