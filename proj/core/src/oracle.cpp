#include "segrereg/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "segrereg/betti.hpp"
#include "segrereg/errors.hpp"
#include "segrereg/local_cohomology.hpp"

namespace segrereg {

namespace {

void check_oracle_hypotheses(const std::vector<ExactFactorData>& factors) {
  if (factors.empty()) throw std::invalid_argument("at least one factor is required");
  int dim1_count = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    if (f.dim < 1)
      throw hypothesis_error("factor " + std::to_string(i + 1) + " has dimension < 1");
    if (f.depth < std::min(2, f.dim))
      throw hypothesis_error("factor " + std::to_string(i + 1) + " has depth " +
                             std::to_string(f.depth) + " < min(2, dim)");
    if (f.dim == 1) ++dim1_count;
  }
  if (dim1_count > 1)
    throw hypothesis_error(
        "more than one dimension-1 factor; fold them before verification");
}

/// The sets whose intersection carries the term E_u.
std::vector<const DegreeSet*> term_supports(const std::vector<int>& u,
                                            const std::vector<ExactFactorData>& factors,
                                            bool& some_empty) {
  static const DegreeSet kEmpty = DegreeSet::empty_set();
  std::vector<const DegreeSet*> sets;
  sets.reserve(u.size());
  some_empty = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const DegreeSet* s;
    if (u[i] == 0) {
      s = &factors[i].module_fn.support;
    } else {
      auto it = factors[i].cohomology_fn.find(u[i]);
      s = it == factors[i].cohomology_fn.end() ? &kEmpty : &it->second.support;
    }
    if (s->empty()) some_empty = true;
    sets.push_back(s);
  }
  return sets;
}

} // namespace

long long segre_graded_dim(const std::vector<GradedEvaluator>& factors, long long t) {
  long long product = 1;
  for (const auto& f : factors) product *= f.dim_at(t);
  return product;
}

ExtendedInt exact_term_end(const std::vector<int>& u,
                           const std::vector<ExactFactorData>& factors) {
  if (u.size() != factors.size())
    throw std::invalid_argument("exact_term_end: index vector length mismatch");
  if (std::all_of(u.begin(), u.end(), [](int x) { return x == 0; }))
    throw std::invalid_argument("exact_term_end: u must be nonzero");

  bool some_empty = false;
  const auto sets = term_supports(u, factors, some_empty);
  if (some_empty) return ExtendedInt::neg_inf();
  if (std::all_of(sets.begin(), sets.end(),
                  [](const DegreeSet* s) { return s->up_ray_min().has_value(); }))
    throw std::domain_error("exact_term_end: intersection is unbounded above");

  // The maximum of the intersection, if finite, is a "right edge" of one of
  // the sets: an isolated point or a down-ray max (one past it leaves that
  // set).  A cohomology set never has an up-ray, and u ≠ 0 supplies at least
  // one cohomology set, so the intersection is bounded above.
  std::vector<long long> candidates;
  for (const DegreeSet* s : sets) {
    for (long long p : s->points()) candidates.push_back(p);
    if (s->down_ray_max()) candidates.push_back(*s->down_ray_max());
  }
  std::sort(candidates.rbegin(), candidates.rend());
  for (long long t : candidates) {
    bool in_all = true;
    for (const DegreeSet* s : sets)
      if (!s->contains(t)) { in_all = false; break; }
    if (in_all) return ExtendedInt(t);
  }
  return ExtendedInt::neg_inf();
}

long long regularity_oracle(const std::vector<ExactFactorData>& factors) {
  check_oracle_hypotheses(factors);

  // all u in the box {0..d_1} x ... x {0..d_s}, skipping 0
  std::vector<int> u(factors.size(), 0);
  bool found = false;
  long long best = 0;
  while (true) {
    std::size_t pos = factors.size();
    bool done = true;
    while (pos > 0) {
      --pos;
      if (u[pos] < factors[pos].dim) { ++u[pos]; done = false; break; }
      u[pos] = 0;
    }
    if (done) break;

    ExtendedInt end = exact_term_end(u, factors);
    if (!end.is_finite()) continue;
    long long weight = 0;
    for (int ui : u)
      if (ui != 0) weight += ui - 1;
    long long value = 1 + weight + end.value();
    if (!found || value > best) { best = value; found = true; }
  }
  if (!found)
    throw std::domain_error(
        "regularity_oracle: every tensor term vanishes; inconsistent factor data");
  return best;
}

std::vector<ExactFactorData> exact_factors(const std::vector<ModuleProfile>& profiles) {
  std::vector<ExactFactorData> out;
  out.reserve(profiles.size());
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (!profiles[i].exact)
      throw std::invalid_argument("factor " + std::to_string(i + 1) +
                                  " carries no exact degree-set data");
    out.push_back(*profiles[i].exact);
  }
  return out;
}

CrosscheckReport crosscheck(const SimplicialComplex& delta, const FieldSpec& field,
                            int max_vertices) {
  CrosscheckReport report;
  const BettiTable table = graded_betti(delta, field, max_vertices);
  const CohomologySummary summary = summarize(delta, field);

  report.reg_from_betti = regularity_from_betti(table);
  report.reg_from_cohomology = summary.reg;
  report.depth_from_cohomology = summary.depth;
  report.depth_auslander_buchsbaum = delta.vertex_count() - projective_dimension(table);

  if (report.reg_from_betti != report.reg_from_cohomology)
    report.mismatches.push_back("regularity: betti table gives " +
                                std::to_string(report.reg_from_betti) +
                                ", local cohomology gives " +
                                std::to_string(report.reg_from_cohomology));
  if (report.depth_from_cohomology != report.depth_auslander_buchsbaum)
    report.mismatches.push_back("depth: local cohomology gives " +
                                std::to_string(report.depth_from_cohomology) +
                                ", n - pd gives " +
                                std::to_string(report.depth_auslander_buchsbaum));
  report.pass = report.mismatches.empty();
  return report;
}

} // namespace segrereg
