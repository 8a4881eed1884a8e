#ifndef SEGREREG_BETTI_HPP
#define SEGREREG_BETTI_HPP

#include <map>
#include <utility>
#include <vector>

#include "segrereg/field.hpp"
#include "segrereg/simplicial_complex.hpp"

namespace segrereg {

/// Multigraded Betti numbers β_{i,σ} of a Stanley-Reisner ring, with the
/// coarse view β_{i,j} = Σ_{|σ|=j} β_{i,σ}.  Absent entries are zero.
class BettiTable {
public:
  using Key = std::pair<int, Face>; // (homological index i, subset σ)

  BettiTable() = default;
  BettiTable(SimplicialComplex delta, FieldSpec field, std::map<Key, long long> entries)
      : delta_(std::move(delta)), field_(field), entries_(std::move(entries)) {}

  const SimplicialComplex& complex() const { return delta_; }
  const FieldSpec& field() const { return field_; }
  const std::map<Key, long long>& entries() const { return entries_; }

  long long rank(int i, Face sigma) const {
    auto it = entries_.find({i, sigma});
    return it == entries_.end() ? 0 : it->second;
  }

  /// Coarse Betti number β_{i,j}, j a total degree.
  long long coarse_rank(int i, int j) const;
  std::map<std::pair<int, int>, long long> coarse() const;

  bool empty() const { return entries_.empty(); }

private:
  SimplicialComplex delta_;
  FieldSpec field_;
  std::map<Key, long long> entries_;
};

/// Full multigraded Betti table of K[Δ] via reduced homology of vertex-set
/// restrictions: β_{i,σ} = rank H̃_{|σ|-i-1}(Δ|_σ).  Enumerates all 2^n
/// subsets, so n is capped (throw beyond max_vertices).
BettiTable graded_betti(const SimplicialComplex& delta, const FieldSpec& field,
                        int max_vertices = 16);

/// reg K[Δ] read off the table: max{ |σ| - i : β_{i,σ} ≠ 0 }.  Throws on an
/// empty table (the zero ring has no regularity).
long long regularity_from_betti(const BettiTable& table);

/// Projective dimension: max{ i : β_{i,σ} ≠ 0 }.
int projective_dimension(const BettiTable& table);

} // namespace segrereg

#endif
