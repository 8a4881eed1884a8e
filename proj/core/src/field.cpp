#include "segrereg/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace segrereg {

namespace {

using Rational = boost::multiprecision::cpp_rational;

long long rank_rational(std::vector<std::vector<long long>>& rows) {
  if (rows.empty() || rows[0].empty()) return 0;
  const std::size_t m = rows.size(), n = rows[0].size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = rows[i][j];

  long long rank = 0;
  for (std::size_t col = 0; col < n && static_cast<std::size_t>(rank) < m; ++col) {
    std::size_t pivot = m;
    for (std::size_t i = rank; i < m; ++i)
      if (a[i][col] != 0) { pivot = i; break; }
    if (pivot == m) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t i = rank + 1; i < m; ++i) {
      if (a[i][col] == 0) continue;
      Rational f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < n; ++j)
        a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid; a != 0 mod p
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p), new_r = static_cast<long long>(a % p);
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t; std::swap(t, new_t);
    r -= q * new_r; std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

long long rank_mod_p(std::vector<std::vector<long long>>& rows, std::uint64_t p) {
  if (rows.empty() || rows[0].empty()) return 0;
  const std::size_t m = rows.size(), n = rows[0].size();
  std::vector<std::vector<std::uint64_t>> a(m, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long long v = rows[i][j] % static_cast<long long>(p);
      if (v < 0) v += static_cast<long long>(p);
      a[i][j] = static_cast<std::uint64_t>(v);
    }

  long long rank = 0;
  for (std::size_t col = 0; col < n && static_cast<std::size_t>(rank) < m; ++col) {
    std::size_t pivot = m;
    for (std::size_t i = rank; i < m; ++i)
      if (a[i][col] != 0) { pivot = i; break; }
    if (pivot == m) continue;
    std::swap(a[rank], a[pivot]);
    std::uint64_t inv = inverse_mod(a[rank][col], p);
    for (std::size_t i = rank + 1; i < m; ++i) {
      if (a[i][col] == 0) continue;
      std::uint64_t f = (a[i][col] * inv) % p;
      for (std::size_t j = col; j < n; ++j) {
        std::uint64_t sub = (f * a[rank][j]) % p;
        a[i][j] = (a[i][j] + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

} // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("FieldSpec: characteristic must be 0 or a prime, got " +
                                std::to_string(p));
  return FieldSpec{p};
}

long long matrix_rank(std::vector<std::vector<long long>> rows, const FieldSpec& field) {
  if (field.characteristic == 0) return rank_rational(rows);
  if (!is_prime(field.characteristic))
    throw std::invalid_argument("matrix_rank: characteristic must be 0 or a prime");
  return rank_mod_p(rows, field.characteristic);
}

} // namespace segrereg
