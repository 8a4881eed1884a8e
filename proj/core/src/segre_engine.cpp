#include "segrereg/segre_engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "segrereg/errors.hpp"
#include "segrereg/numeric.hpp"

namespace segrereg {

namespace {

/// Enumerate all u in {0..d_1} x ... x {0..d_s} \ {0} in lexicographic order.
template <typename Fn>
void for_each_index_vector(const std::vector<int>& dims, Fn&& fn) {
  std::vector<int> u(dims.size(), 0);
  while (true) {
    std::size_t pos = dims.size();
    while (pos > 0) {
      --pos;
      if (u[pos] < dims[pos]) { ++u[pos]; break; }
      u[pos] = 0;
      if (pos == 0) return;
    }
    fn(u);
  }
}

bool in_candidate_set(const std::vector<int>& u, const std::vector<ModuleProfile>& profiles) {
  bool nonzero = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    nonzero = true;
    if (!profiles[i].end(u[i]).is_finite()) return false;
  }
  return nonzero;
}

void check_engine_hypotheses(const std::vector<ModuleProfile>& profiles) {
  if (profiles.empty())
    throw std::invalid_argument("at least one factor is required");
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const auto& p = profiles[i];
    if (p.dim < 1)
      throw hypothesis_error("factor " + std::to_string(i + 1) + " has dimension " +
                             std::to_string(p.dim) + " < 1");
    if (p.depth < std::min(2, p.dim))
      throw hypothesis_error("factor " + std::to_string(i + 1) + " has depth " +
                             std::to_string(p.depth) + " < min(2, dim " +
                             std::to_string(p.dim) + ")");
  }
}

} // namespace

std::vector<int> CandidateVector::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

long long CandidateVector::weight() const {
  long long w = 0;
  for (int ui : u)
    if (ui != 0) w += ui - 1;
  return w;
}

std::pair<std::vector<ModuleProfile>, int> normalize_factors(
    std::vector<ModuleProfile> profiles) {
  check_engine_hypotheses(profiles);
  std::vector<ModuleProfile> dim1, rest;
  for (auto& p : profiles)
    (p.dim == 1 ? dim1 : rest).push_back(std::move(p));
  int folded = 0;
  if (dim1.size() > 1) {
    for (const auto& p : dim1)
      if (!p.is_cohen_macaulay())
        throw hypothesis_error(
            "more than one dimension-1 factor and not all are Cohen-Macaulay; "
            "the product is outside the covered cases");
    while (dim1.size() > 1) {
      ModuleProfile merged = fold_dim1_cm(dim1[dim1.size() - 2], dim1.back());
      dim1.pop_back();
      dim1.back() = std::move(merged);
      ++folded;
    }
  }
  std::vector<ModuleProfile> out = std::move(dim1);
  for (auto& p : rest) out.push_back(std::move(p));
  return {std::move(out), folded};
}

std::vector<CandidateVector> candidate_set(const std::vector<ModuleProfile>& profiles) {
  std::vector<int> dims;
  dims.reserve(profiles.size());
  for (const auto& p : profiles) dims.push_back(p.dim);
  std::vector<CandidateVector> out;
  for_each_index_vector(dims, [&](const std::vector<int>& u) {
    if (in_candidate_set(u, profiles)) out.push_back(CandidateVector{u});
  });
  std::sort(out.begin(), out.end());
  return out;
}

long long gamma_value(const CandidateVector& u, const std::vector<ModuleProfile>& profiles) {
  if (u.u.size() != profiles.size())
    throw std::invalid_argument("gamma_value: index vector length mismatch");
  if (!in_candidate_set(u.u, profiles))
    throw std::invalid_argument("gamma_value: some required cohomology vanishes");
  ExtendedInt min_end = ExtendedInt::pos_inf();
  for (std::size_t i = 0; i < u.u.size(); ++i)
    if (u.u[i] != 0) min_end = min(min_end, profiles[i].end(u.u[i]));
  return 1 + u.weight() + min_end.value();
}

bool term_nonzero(const CandidateVector& u, const std::vector<ModuleProfile>& profiles) {
  if (!in_candidate_set(u.u, profiles))
    throw std::invalid_argument("term_nonzero: u is outside the candidate set");
  ExtendedInt min_end = ExtendedInt::pos_inf();
  ExtendedInt max_sigma_outside = ExtendedInt::neg_inf(); // max over empty set
  for (std::size_t i = 0; i < u.u.size(); ++i) {
    if (u.u[i] != 0)
      min_end = min(min_end, profiles[i].end(u.u[i]));
    else
      max_sigma_outside = max(max_sigma_outside, ExtendedInt(profiles[i].sigma));
  }
  return min_end >= max_sigma_outside;
}

long long term_end(const CandidateVector& u, const std::vector<ModuleProfile>& profiles) {
  if (!term_nonzero(u, profiles))
    throw std::invalid_argument("term_end: the term vanishes");
  ExtendedInt min_end = ExtendedInt::pos_inf();
  for (std::size_t i = 0; i < u.u.size(); ++i)
    if (u.u[i] != 0) min_end = min(min_end, profiles[i].end(u.u[i]));
  return min_end.value();
}

std::map<int, std::vector<CohomologyTerm>> decompose_cohomology(
    std::vector<ModuleProfile> profiles) {
  auto [factors, folded] = normalize_factors(std::move(profiles));
  (void)folded;

  long long top = 1;
  for (const auto& p : factors) top += p.dim - 1;

  std::map<int, std::vector<CohomologyTerm>> by_degree;
  for (long long j = 1; j <= top; ++j) by_degree[static_cast<int>(j)] = {};

  for (const auto& u : candidate_set(factors)) {
    if (!term_nonzero(u, factors)) continue;
    const int j = static_cast<int>(u.weight() + 1);
    by_degree[j].push_back(CohomologyTerm{u.u, term_end(u, factors)});
  }
  return by_degree;
}

SegreReport regularity_segre(std::vector<ModuleProfile> profiles) {
  auto [factors, folded] = normalize_factors(std::move(profiles));

  SegreReport report;
  report.folded_dim1_factors = folded;

  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!factors[i].assumption_flags_verified())
      report.violations.push_back("factor " + std::to_string(i + 1) +
                                  ": no-gaps/unbounded-below flags not verified");
    if (factors[i].transform_heuristic)
      report.violations.push_back("factor " + std::to_string(i + 1) +
                                  ": end-wise Veronese transform of a non-CM profile");
  }
  report.exact = report.violations.empty();

  const auto candidates = candidate_set(factors);
  if (candidates.empty())
    throw hypothesis_error("no candidate index vector: all cohomology vanishes");

  bool first = true;
  for (const auto& u : candidates) {
    CandidateInfo info;
    info.u = u.u;
    info.gamma = gamma_value(u, factors);
    info.term_nonzero = term_nonzero(u, factors);
    if (info.term_nonzero) info.term_end = term_end(u, factors);
    if (first || info.gamma > report.reg) {
      report.reg = info.gamma;
      first = false;
    }
    report.candidates.push_back(std::move(info));
  }
  for (const auto& info : report.candidates)
    if (info.gamma == report.reg) report.witnesses.push_back(info.u);

  for (const auto& info : report.candidates)
    if (info.term_nonzero)
      report.cohomology[static_cast<int>(CandidateVector{info.u}.weight() + 1)].push_back(
          CohomologyTerm{info.u, *info.term_end});

  return report;
}

long long regularity_segre_cm(const std::vector<CmFactor>& factors) {
  if (factors.empty()) throw std::invalid_argument("at least one factor is required");
  for (const auto& f : factors)
    if (f.dim < 1) throw std::invalid_argument("factor dimension must be ≥ 1");

  // max over nonempty supports; a support contributes
  //   1 + Σ(d_l - 1) - max(d_l - reg_l)
  long long best = 0;
  bool first = true;
  const std::size_t s = factors.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << s); ++mask) {
    long long sum_b = 0, max_alpha = 0;
    bool alpha_set = false;
    for (std::size_t l = 0; l < s; ++l) {
      if (!(mask & (std::size_t{1} << l))) continue;
      sum_b += factors[l].dim - 1;
      long long alpha = factors[l].dim - factors[l].reg;
      if (!alpha_set || alpha > max_alpha) { max_alpha = alpha; alpha_set = true; }
    }
    long long value = 1 + sum_b - max_alpha;
    if (first || value > best) { best = value; first = false; }
  }
  return best;
}

long long regularity_segre_veronese_cm(const std::vector<VeroneseCmFactor>& factors) {
  if (factors.empty()) throw std::invalid_argument("at least one factor is required");
  std::vector<CmFactor> transformed;
  transformed.reserve(factors.size());
  for (const auto& f : factors) {
    if (f.dim < 1) throw std::invalid_argument("factor dimension must be ≥ 1");
    if (f.veronese < 1) throw std::invalid_argument("Veronese index must be ≥ 1");
    // reg of the reindexed factor: d - ⌈(d - reg + τ)/n⌉
    long long reg = f.dim - ceil_div(f.dim - f.reg + f.shift, f.veronese);
    transformed.push_back(CmFactor{f.dim, reg});
  }
  return regularity_segre_cm(transformed);
}

long long cox_materov(const std::vector<CoxMaterovFactor>& factors) {
  std::vector<VeroneseCmFactor> as_veronese;
  as_veronese.reserve(factors.size());
  for (const auto& f : factors)
    as_veronese.push_back(VeroneseCmFactor{f.dim, 0, f.twist, f.veronese});
  return regularity_segre_veronese_cm(as_veronese);
}

} // namespace segrereg
