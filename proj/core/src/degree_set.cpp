#include "segrereg/degree_set.hpp"

#include <algorithm>
#include <stdexcept>

#include "segrereg/numeric.hpp"

namespace segrereg {

DegreeSet DegreeSet::down_ray(long long max) {
  DegreeSet s;
  s.down_ray_max_ = max;
  return s;
}

DegreeSet DegreeSet::up_ray(long long min) {
  DegreeSet s;
  s.up_ray_min_ = min;
  return s;
}

DegreeSet DegreeSet::single(long long point) {
  DegreeSet s;
  s.points_.push_back(point);
  return s;
}

DegreeSet& DegreeSet::add_point(long long p) {
  points_.push_back(p);
  normalize();
  return *this;
}

DegreeSet& DegreeSet::set_down_ray(long long max) {
  down_ray_max_ = down_ray_max_ ? std::max(*down_ray_max_, max) : max;
  normalize();
  return *this;
}

DegreeSet& DegreeSet::set_up_ray(long long min) {
  up_ray_min_ = up_ray_min_ ? std::min(*up_ray_min_, min) : min;
  normalize();
  return *this;
}

void DegreeSet::normalize() {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  std::erase_if(points_, [&](long long p) {
    return (down_ray_max_ && p <= *down_ray_max_) || (up_ray_min_ && p >= *up_ray_min_);
  });
}

bool DegreeSet::contains(long long t) const {
  if (down_ray_max_ && t <= *down_ray_max_) return true;
  if (up_ray_min_ && t >= *up_ray_min_) return true;
  return std::binary_search(points_.begin(), points_.end(), t);
}

bool DegreeSet::empty() const {
  return !down_ray_max_ && !up_ray_min_ && points_.empty();
}

ExtendedInt DegreeSet::max() const {
  if (up_ray_min_) return ExtendedInt::pos_inf();
  if (!points_.empty()) return ExtendedInt(points_.back());
  if (down_ray_max_) return ExtendedInt(*down_ray_max_);
  return ExtendedInt::neg_inf();
}

DegreeSet DegreeSet::reindexed(long long n, long long tau) const {
  if (n < 1) throw std::invalid_argument("DegreeSet::reindexed: n must be ≥ 1");
  DegreeSet out;
  if (down_ray_max_) out.down_ray_max_ = floor_div(*down_ray_max_ - tau, n);
  if (up_ray_min_) out.up_ray_min_ = ceil_div(*up_ray_min_ - tau, n);
  for (long long p : points_)
    if ((p - tau) % n == 0) out.points_.push_back((p - tau) / n);
  out.normalize();
  return out;
}

long long GradedEvaluator::dim_at(long long t) const {
  if (!dim)
    throw std::domain_error("GradedEvaluator: no dimension function attached");
  return dim(t);
}

} // namespace segrereg
