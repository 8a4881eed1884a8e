#include "segrereg/betti.hpp"

#include <stdexcept>
#include <string>

#include "segrereg/errors.hpp"

namespace segrereg {

long long BettiTable::coarse_rank(int i, int j) const {
  long long total = 0;
  for (const auto& [key, rank] : entries_)
    if (key.first == i && face_size(key.second) == j) total += rank;
  return total;
}

std::map<std::pair<int, int>, long long> BettiTable::coarse() const {
  std::map<std::pair<int, int>, long long> out;
  for (const auto& [key, rank] : entries_)
    out[{key.first, face_size(key.second)}] += rank;
  return out;
}

BettiTable graded_betti(const SimplicialComplex& delta, const FieldSpec& field,
                        int max_vertices) {
  const int n = delta.vertex_count();
  if (n > max_vertices)
    throw cap_exceeded_error("graded_betti: " + std::to_string(n) +
                             " vertices exceeds the cap " + std::to_string(max_vertices) +
                             " (2^n subsets are enumerated)");

  std::map<BettiTable::Key, long long> entries;
  const Face full = (Face{1} << n) - 1;
  for (Face sigma = 0; ; ++sigma) {
    const HomologyRanks ranks = reduced_homology_ranks(restrict_to(delta, sigma), field);
    const int size = face_size(sigma);
    for (int i = 0; i <= size; ++i) {
      long long r = ranks.rank(size - i - 1);
      if (r != 0) entries[{i, sigma}] = r;
    }
    if (sigma == full) break;
  }
  return BettiTable(delta, field, std::move(entries));
}

long long regularity_from_betti(const BettiTable& table) {
  if (table.empty())
    throw std::domain_error("regularity_from_betti: empty table (zero ring)");
  long long reg = 0;
  bool first = true;
  for (const auto& [key, rank] : table.entries()) {
    (void)rank;
    long long v = face_size(key.second) - key.first;
    if (first || v > reg) { reg = v; first = false; }
  }
  return reg;
}

int projective_dimension(const BettiTable& table) {
  if (table.empty())
    throw std::domain_error("projective_dimension: empty table (zero ring)");
  int pd = 0;
  for (const auto& [key, rank] : table.entries()) {
    (void)rank;
    pd = std::max(pd, key.first);
  }
  return pd;
}

} // namespace segrereg
