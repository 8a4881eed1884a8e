#ifndef SEGREREG_FIELD_HPP
#define SEGREREG_FIELD_HPP

#include <cstdint>
#include <vector>

namespace segrereg {

/// Coefficient field for homology and Betti computations: the rationals
/// (characteristic 0) or a prime field F_p.  All ranks over either field are
/// exact; there is no floating point anywhere downstream of this type.
struct FieldSpec {
  std::uint32_t characteristic = 0; // 0 or a prime

  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec prime(std::uint32_t p);

  bool operator==(const FieldSpec&) const = default;
};

/// True iff p is prime (trial division; the characteristic is user input,
/// never large).
bool is_prime(std::uint64_t p);

/// Exact rank of an integer matrix over the given field.  Rows may be empty;
/// an empty matrix has rank 0.  Characteristic 0 runs elimination over
/// arbitrary-precision rationals, characteristic p over F_p.
long long matrix_rank(std::vector<std::vector<long long>> rows, const FieldSpec& field);

} // namespace segrereg

#endif
