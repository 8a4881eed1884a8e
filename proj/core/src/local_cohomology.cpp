#include "segrereg/local_cohomology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "segrereg/betti.hpp"
#include "segrereg/numeric.hpp"

namespace segrereg {

namespace {

void require_nonempty(const SimplicialComplex& delta, const char* who) {
  if (delta.is_empty_complex())
    throw std::domain_error(std::string(who) + ": the empty complex has a zero ring");
}

/// table[i][f] = Σ_{F∈Δ, |F|=f} rank H̃_{i-f-1}(link F); the f = 0 slot is
/// the ∅ term rank H̃_{i-1}(Δ).  These numbers determine every coarse
/// dimension of every H^i in closed form.  One link homology computation per
/// face serves all cohomological indices at once.
std::vector<std::vector<long long>> contribution_table(const SimplicialComplex& delta,
                                                       const FieldSpec& field) {
  const int d = delta.krull_dim();
  std::vector<std::vector<long long>> table(
      static_cast<std::size_t>(d) + 1,
      std::vector<long long>(static_cast<std::size_t>(d) + 1, 0));
  for (Face f : delta.all_faces()) {
    const int size = face_size(f);
    const HomologyRanks ranks = reduced_homology_ranks(link(delta, f), field);
    for (int i = 0; i <= d; ++i)
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(size)] +=
          ranks.rank(i - size - 1);
  }
  return table;
}

std::vector<long long> contributions_for_index(const SimplicialComplex& delta,
                                               const FieldSpec& field, int i) {
  return contribution_table(delta, field)[static_cast<std::size_t>(i)];
}

} // namespace

CohomologyDegreeSet::CohomologyDegreeSet(int index,
                                         std::vector<long long> contributions_by_face_size)
    : index_(index), contributions_(std::move(contributions_by_face_size)) {
  if (contributions_.empty())
    throw std::invalid_argument("CohomologyDegreeSet: contributions must include the ∅ slot");
}

std::optional<int> CohomologyDegreeSet::tail_threshold() const {
  for (std::size_t f = 1; f < contributions_.size(); ++f)
    if (contributions_[f] != 0) return static_cast<int>(f);
  return std::nullopt;
}

ExtendedInt CohomologyDegreeSet::end() const {
  if (zero_degree_present()) return ExtendedInt(0);
  if (auto m = tail_threshold()) return ExtendedInt(-*m);
  return ExtendedInt::neg_inf();
}

long long CohomologyDegreeSet::dim_at(long long degree) const {
  if (degree > 0) return 0;
  if (degree == 0) return contributions_[0];
  const long long j = -degree;
  long long total = 0;
  for (std::size_t f = 1; f < contributions_.size(); ++f)
    total += contributions_[f] * binomial(j - 1, static_cast<long long>(f) - 1);
  return total;
}

bool CohomologyDegreeSet::has_no_gaps() const {
  auto m = tail_threshold();
  return !(zero_degree_present() && m && *m >= 2);
}

bool CohomologyDegreeSet::unbounded_below() const {
  auto m = tail_threshold();
  if (!m) return false;
  return !zero_degree_present() || *m == 1;
}

long long lc_multigraded_dim(const SimplicialComplex& delta, const FieldSpec& field,
                             int i, const std::vector<long long>& a) {
  require_nonempty(delta, "lc_multigraded_dim");
  if (a.size() != static_cast<std::size_t>(delta.vertex_count()))
    throw std::invalid_argument("lc_multigraded_dim: exponent vector length mismatch");
  Face support = 0;
  for (std::size_t l = 0; l < a.size(); ++l) {
    if (a[l] > 0)
      throw std::invalid_argument("lc_multigraded_dim: exponent vector must be ≤ 0");
    if (a[l] < 0) support |= Face{1} << l;
  }
  if (!delta.is_face(support)) return 0;
  const HomologyRanks ranks = reduced_homology_ranks(link(delta, support), field);
  return ranks.rank(i - face_size(support) - 1);
}

long long lc_coarse_dim(const SimplicialComplex& delta, const FieldSpec& field,
                        int i, long long j) {
  require_nonempty(delta, "lc_coarse_dim");
  if (j < 0) throw std::invalid_argument("lc_coarse_dim: j must be ≥ 0");
  const auto contributions = contributions_for_index(delta, field, i);
  const CohomologyDegreeSet set(i, contributions);
  return set.dim_at(-j);
}

long long lc_coarse_dim_dual_betti(const SimplicialComplex& delta, const FieldSpec& field,
                              int i, long long j, int max_vertices) {
  require_nonempty(delta, "lc_coarse_dim_dual_betti");
  if (j <= 0) throw std::invalid_argument("lc_coarse_dim_dual_betti: j must be > 0");
  const int n = delta.vertex_count();
  const BettiTable dual_betti =
      graded_betti(alexander_dual(delta, max_vertices), field, max_vertices);
  long long total = 0;
  const long long hmax = std::min<long long>(j, n);
  for (long long h = 1; h <= hmax; ++h)
    total += binomial(n, h) * binomial(h + j - 1, j) *
             dual_betti.coarse_rank(static_cast<int>(i + 1 - h), static_cast<int>(n - h));
  return total;
}

std::optional<CohomologyDegreeSet> degree_set(const SimplicialComplex& delta,
                                              const FieldSpec& field, int i) {
  require_nonempty(delta, "degree_set");
  if (i < 0 || i > delta.krull_dim())
    throw std::invalid_argument("degree_set: index out of range 0..dim");
  CohomologyDegreeSet set(i, contributions_for_index(delta, field, i));
  if (set.is_zero_module()) return std::nullopt;
  return set;
}

CohomologySummary summarize(const SimplicialComplex& delta, const FieldSpec& field) {
  require_nonempty(delta, "summarize");
  CohomologySummary summary;
  summary.vertex_count = delta.vertex_count();
  summary.dim = delta.krull_dim();
  summary.by_index.resize(static_cast<std::size_t>(summary.dim) + 1);

  const auto table = contribution_table(delta, field);
  int depth = summary.dim;
  long long reg = 0;
  bool saw_nonzero = false;
  for (int i = 0; i <= summary.dim; ++i) {
    CohomologyDegreeSet set(i, table[static_cast<std::size_t>(i)]);
    if (set.is_zero_module()) continue;
    if (!saw_nonzero) depth = i;
    long long r = set.end().value() + i;
    reg = saw_nonzero ? std::max(reg, r) : r;
    saw_nonzero = true;
    summary.by_index[static_cast<std::size_t>(i)] = std::move(set);
  }
  // H^dim never vanishes for a nonzero ring, so saw_nonzero holds here.
  summary.depth = depth;
  summary.reg = reg;
  return summary;
}

AssumptionReport check_assumption(const SimplicialComplex& delta, const FieldSpec& field) {
  const CohomologySummary summary = summarize(delta, field);
  AssumptionReport report;
  report.depth_hypothesis_ok = summary.depth >= std::min(2, summary.dim);
  if (!report.depth_hypothesis_ok)
    report.violations.push_back("depth " + std::to_string(summary.depth) + " < min(2, dim " +
                                std::to_string(summary.dim) + ")");
  for (int i = 0; i <= summary.dim; ++i) {
    const auto& set = summary.by_index[static_cast<std::size_t>(i)];
    if (!set) continue;
    AssumptionStatus status;
    status.index = i;
    status.no_gaps = set->has_no_gaps();
    status.infinitely_many_degrees = set->tail_threshold().has_value();
    if (!status.no_gaps)
      report.violations.push_back("H^" + std::to_string(i) + " has a gap below degree 0");
    if (!status.infinitely_many_degrees)
      report.violations.push_back("H^" + std::to_string(i) +
                                  " is nonzero in only finitely many degrees");
    report.indices.push_back(status);
  }
  report.satisfied = report.violations.empty();
  return report;
}

std::vector<CoarseDiagnostic> lc_diagnose(const SimplicialComplex& delta,
                                          const FieldSpec& field, long long max_j,
                                          int max_vertices) {
  require_nonempty(delta, "lc_diagnose");
  std::vector<CoarseDiagnostic> out;
  for (int i = 0; i <= delta.krull_dim(); ++i) {
    for (long long j = 1; j <= max_j; ++j) {
      CoarseDiagnostic row;
      row.i = i;
      row.j = j;
      row.multigraded_value = lc_coarse_dim(delta, field, i, j);
      row.dual_betti_value = lc_coarse_dim_dual_betti(delta, field, i, j, max_vertices);
      row.agree = row.multigraded_value == row.dual_betti_value;
      out.push_back(row);
    }
  }
  return out;
}

} // namespace segrereg
