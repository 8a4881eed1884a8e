#ifndef SEGREREG_DEGREE_SET_HPP
#define SEGREREG_DEGREE_SET_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "segrereg/extended_int.hpp"

namespace segrereg {

/// A set of integer degrees of the shape
///   (-inf, down_ray_max]  ∪  {isolated points}  ∪  [up_ray_min, +inf).
/// Every nonvanishing set in this library lives in this family: graded
/// modules of positive depth occupy an up-ray [σ, ∞), local cohomology
/// occupies an optional {0} plus a down-ray, and the family is closed under
/// the Veronese/shift reindexing k ↦ nk+τ.
class DegreeSet {
public:
  DegreeSet() = default;

  static DegreeSet empty_set() { return DegreeSet{}; }
  static DegreeSet down_ray(long long max);
  static DegreeSet up_ray(long long min);
  static DegreeSet single(long long point);

  DegreeSet& add_point(long long p);
  DegreeSet& set_down_ray(long long max);
  DegreeSet& set_up_ray(long long min);

  bool contains(long long t) const;
  bool empty() const;

  /// Largest element: +inf with an up-ray, -inf when empty.
  ExtendedInt max() const;

  const std::optional<long long>& down_ray_max() const { return down_ray_max_; }
  const std::optional<long long>& up_ray_min() const { return up_ray_min_; }
  const std::vector<long long>& points() const { return points_; }

  /// Preimage under degree reindexing: { k : n·k + tau ∈ this }, n ≥ 1.
  DegreeSet reindexed(long long n, long long tau) const;

  bool operator==(const DegreeSet&) const = default;

private:
  void normalize();

  std::optional<long long> down_ray_max_;
  std::optional<long long> up_ray_min_;
  std::vector<long long> points_; // sorted, strictly between the rays
};

/// Exact graded-dimension data for one graded object: the nonvanishing set,
/// and (when available) a pure evaluator degree → dimension.  The evaluator
/// is optional because a Cohen-Macaulay shorthand pins the set exactly but
/// not the dimensions.
struct GradedEvaluator {
  DegreeSet support;
  std::function<long long(long long)> dim; // may be empty

  bool has_dims() const { return static_cast<bool>(dim); }
  long long dim_at(long long t) const;
};

/// Everything the verification layer may use about one Segre factor: exact
/// nonvanishing sets (and dimensions where available) of the module and of
/// each nonzero local cohomology module.  Deliberately carries no gap flags
/// and no precomputed ends beyond the sets themselves.
struct ExactFactorData {
  int dim = 0;
  int depth = 0;
  long long sigma = 0;
  GradedEvaluator module_fn;
  std::map<int, GradedEvaluator> cohomology_fn; // only nonzero H^j appear
};

} // namespace segrereg

#endif
