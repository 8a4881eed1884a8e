#include "segrereg/module_profile.hpp"

#include <memory>
#include <stdexcept>

#include "segrereg/local_cohomology.hpp"
#include "segrereg/numeric.hpp"

namespace segrereg {

long long ModuleProfile::reg() const {
  bool found = false;
  long long r = 0;
  for (const auto& [j, e] : ends) {
    if (!e.is_finite()) continue;
    long long v = e.value() + j;
    if (!found || v > r) { r = v; found = true; }
  }
  if (!found) throw std::domain_error("ModuleProfile::reg: all cohomology vanishes");
  return r;
}

bool ModuleProfile::assumption_flags_verified() const {
  for (const auto& [j, e] : ends) {
    if (!e.is_finite()) continue;
    auto ng = no_gaps.find(j);
    auto ub = unbounded_below.find(j);
    if (ng == no_gaps.end() || !ng->second) return false;
    if (ub == unbounded_below.end() || !ub->second) return false;
  }
  return true;
}

ModuleProfile profile_from_complex(const SimplicialComplex& delta, const FieldSpec& field) {
  if (delta.is_empty_complex() || delta.krull_dim() < 1)
    throw std::invalid_argument(
        "profile_from_complex: the complex must have at least one vertex");

  const CohomologySummary summary = summarize(delta, field);

  ModuleProfile p;
  p.dim = summary.dim;
  p.depth = summary.depth;
  p.sigma = 0; // K[Δ] is generated in degree 0

  ExactFactorData exact;
  exact.dim = p.dim;
  exact.depth = p.depth;
  exact.sigma = 0;
  // K[Δ] has positive depth here, so it is nonzero in every degree ≥ 0.
  auto shared = std::make_shared<const SimplicialComplex>(delta);
  exact.module_fn.support = DegreeSet::up_ray(0);
  exact.module_fn.dim = [shared](long long t) { return hilbert_dim(*shared, t); };

  for (int i = 0; i <= summary.dim; ++i) {
    const auto& set = summary.by_index[static_cast<std::size_t>(i)];
    if (!set) continue;
    p.ends[i] = set->end();
    p.no_gaps[i] = set->has_no_gaps();
    p.unbounded_below[i] = set->unbounded_below();

    GradedEvaluator ev;
    if (set->zero_degree_present()) ev.support.add_point(0);
    if (auto m = set->tail_threshold()) ev.support.set_down_ray(-*m);
    auto set_copy = std::make_shared<const CohomologyDegreeSet>(*set);
    ev.dim = [set_copy](long long t) { return set_copy->dim_at(t); };
    exact.cohomology_fn[i] = std::move(ev);
  }
  p.exact = std::move(exact);
  return p;
}

ModuleProfile cm_profile(int d, long long reg, long long sigma) {
  if (d < 1) throw std::invalid_argument("cm_profile: dimension must be ≥ 1");
  ModuleProfile p;
  p.dim = d;
  p.depth = d;
  p.sigma = sigma;
  p.ends[d] = ExtendedInt(reg - d);
  p.no_gaps[d] = true;
  p.unbounded_below[d] = true;

  ExactFactorData exact;
  exact.dim = d;
  exact.depth = d;
  exact.sigma = sigma;
  exact.module_fn.support = DegreeSet::up_ray(sigma);
  exact.cohomology_fn[d].support = DegreeSet::down_ray(reg - d);
  p.exact = std::move(exact);
  return p;
}

ModuleProfile polynomial_ring_profile(int d) {
  ModuleProfile p = cm_profile(d, 0, 0);
  // dim S_t = C(t+d-1, d-1); dim (H^d)_t = C(-t-1, d-1), nonzero iff t ≤ -d.
  p.exact->module_fn.dim = [d](long long t) {
    return t < 0 ? 0 : binomial(t + d - 1, d - 1);
  };
  p.exact->cohomology_fn[d].dim = [d](long long t) {
    return binomial(-t - 1, d - 1);
  };
  return p;
}

ModuleProfile veronese_transform(const ModuleProfile& p, long long n, long long tau) {
  if (n < 1) throw std::invalid_argument("veronese_transform: n must be ≥ 1");
  ModuleProfile out;
  out.dim = p.dim;
  out.depth = p.depth;
  out.sigma = ceil_div(p.sigma - tau, n);
  for (const auto& [j, e] : p.ends)
    out.ends[j] = e.is_finite() ? ExtendedInt(floor_div(e.value() - tau, n)) : e;
  out.no_gaps = p.no_gaps;
  out.unbounded_below = p.unbounded_below;
  out.transform_heuristic =
      p.transform_heuristic || (!p.is_cohen_macaulay() && !(n == 1 && tau == 0));

  if (p.exact) {
    ExactFactorData exact;
    exact.dim = p.dim;
    exact.depth = p.depth;
    exact.sigma = out.sigma;
    exact.module_fn.support = p.exact->module_fn.support.reindexed(n, tau);
    if (p.exact->module_fn.dim) {
      auto inner = p.exact->module_fn.dim;
      exact.module_fn.dim = [inner, n, tau](long long t) { return inner(n * t + tau); };
    }
    for (const auto& [j, ev] : p.exact->cohomology_fn) {
      GradedEvaluator tev;
      tev.support = ev.support.reindexed(n, tau);
      if (tev.support.empty()) continue;
      if (ev.dim) {
        auto inner = ev.dim;
        tev.dim = [inner, n, tau](long long t) { return inner(n * t + tau); };
      }
      exact.cohomology_fn[j] = std::move(tev);
    }
    out.exact = std::move(exact);
  }
  return out;
}

ModuleProfile fold_dim1_cm(const ModuleProfile& p, const ModuleProfile& q) {
  if (p.dim != 1 || q.dim != 1 || !p.is_cohen_macaulay() || !q.is_cohen_macaulay())
    throw std::invalid_argument(
        "fold_dim1_cm: both factors must be Cohen-Macaulay of dimension 1");
  ModuleProfile out = cm_profile(1, std::max(p.reg(), q.reg()), std::max(p.sigma, q.sigma));
  // graded pieces multiply, so dimension evaluators fold when both are known
  if (p.exact && q.exact && p.exact->module_fn.dim && q.exact->module_fn.dim) {
    auto pf = p.exact->module_fn.dim, qf = q.exact->module_fn.dim;
    out.exact->module_fn.dim = [pf, qf](long long t) { return pf(t) * qf(t); };
  }
  return out;
}

} // namespace segrereg
