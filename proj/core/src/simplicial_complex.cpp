#include "segrereg/simplicial_complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "segrereg/errors.hpp"
#include "segrereg/numeric.hpp"

namespace segrereg {

namespace {

constexpr int kMaskWidth = 31; // Face is a uint32_t bitmask

void check_vertex_count(int n) {
  if (n <= 0) throw std::invalid_argument("vertex count must be positive");
  if (n > kMaskWidth)
    throw std::invalid_argument("vertex count " + std::to_string(n) +
                                " exceeds the representable maximum " +
                                std::to_string(kMaskWidth));
}

/// Drop faces contained in another listed face; sort; dedupe.
std::vector<Face> maximal_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> out;
  for (Face f : faces) {
    bool contained = false;
    for (Face g : faces)
      if (g != f && (f & g) == f) { contained = true; break; }
    if (!contained) out.push_back(f);
  }
  return out;
}

} // namespace

Face face_from_vertices(const std::vector<int>& vertices, int n) {
  Face f = 0;
  for (int v : vertices) {
    if (v < 1 || v > n)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n));
    f |= Face{1} << (v - 1);
  }
  return f;
}

std::vector<int> face_vertices(Face f) {
  std::vector<int> out;
  for (int v = 0; f != 0; ++v, f >>= 1)
    if (f & 1) out.push_back(v + 1);
  return out;
}

SimplicialComplex::SimplicialComplex(int n, std::vector<Face> facets) : n_(n) {
  check_vertex_count(n);
  const Face full = (Face{1} << n) - 1;
  for (Face f : facets)
    if ((f & ~full) != 0)
      throw std::invalid_argument("facet has a vertex outside 1.." + std::to_string(n));
  facets_ = maximal_faces(std::move(facets));
}

bool SimplicialComplex::is_full_simplex() const {
  const Face full = (Face{1} << n_) - 1;
  return facets_.size() == 1 && facets_[0] == full;
}

bool SimplicialComplex::is_face(Face f) const {
  for (Face g : facets_)
    if ((f & g) == f) return true;
  return false;
}

int SimplicialComplex::krull_dim() const {
  if (is_empty_complex())
    throw std::domain_error("the empty complex has a zero Stanley-Reisner ring");
  int d = 0;
  for (Face f : facets_) d = std::max(d, face_size(f));
  return d;
}

int SimplicialComplex::dim() const { return krull_dim() - 1; }

std::vector<Face> SimplicialComplex::all_faces() const {
  std::vector<Face> out;
  std::vector<bool> seen(std::size_t{1} << n_, false);
  for (Face facet : facets_) {
    // enumerate all submasks of the facet, including 0
    Face sub = facet;
    while (true) {
      if (!seen[sub]) { seen[sub] = true; out.push_back(sub); }
      if (sub == 0) break;
      sub = (sub - 1) & facet;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> SimplicialComplex::face_counts_by_size() const {
  std::vector<long long> counts(static_cast<std::size_t>(krull_dim()) + 1, 0);
  for (Face f : all_faces()) ++counts[face_size(f)];
  return counts;
}

SimplicialComplex build_complex(int n, const std::vector<std::vector<int>>& faces) {
  check_vertex_count(n);
  std::vector<Face> masks;
  masks.reserve(faces.size());
  for (const auto& f : faces) masks.push_back(face_from_vertices(f, n));
  return SimplicialComplex(n, std::move(masks));
}

SimplicialComplex build_complex_masks(int n, const std::vector<Face>& faces) {
  return SimplicialComplex(n, faces);
}

SimplicialComplex alexander_dual(const SimplicialComplex& delta, int max_vertices) {
  const int n = delta.vertex_count();
  if (n > max_vertices)
    throw cap_exceeded_error("alexander_dual: " + std::to_string(n) +
                             " vertices exceeds the cap " + std::to_string(max_vertices));
  const Face full = (Face{1} << n) - 1;
  std::vector<Face> dual_faces;
  for (Face f = 0; ; ++f) {
    if (!delta.is_face(full & ~f)) dual_faces.push_back(f);
    if (f == full) break;
  }
  return SimplicialComplex(n, std::move(dual_faces));
}

SimplicialComplex link(const SimplicialComplex& delta, Face f) {
  if (!delta.is_face(f))
    throw std::invalid_argument("link: argument is not a face of the complex");
  std::vector<Face> link_facets;
  for (Face g : delta.facets())
    if ((g & f) == f) link_facets.push_back(g & ~f);
  return SimplicialComplex(delta.vertex_count(), std::move(link_facets));
}

SimplicialComplex restrict_to(const SimplicialComplex& delta, Face sigma) {
  std::vector<Face> restricted;
  for (Face g : delta.facets()) restricted.push_back(g & sigma);
  // g & sigma is a face (subset of g), so the generated complex is exactly
  // { G ∈ Δ : G ⊆ σ }; maximal_faces prunes the redundancy.
  return SimplicialComplex(delta.vertex_count(), std::move(restricted));
}

HomologyRanks reduced_homology_ranks(const SimplicialComplex& delta, const FieldSpec& field) {
  if (delta.is_empty_complex()) return HomologyRanks{};

  // chain groups by simplicial dimension k = |F| - 1, from k = -1 upward
  const std::vector<Face> faces = delta.all_faces();
  int top = -1;
  for (Face f : faces) top = std::max(top, face_size(f) - 1);

  std::vector<std::vector<Face>> by_dim(static_cast<std::size_t>(top) + 2);
  for (Face f : faces) by_dim[static_cast<std::size_t>(face_size(f))].push_back(f);

  // boundary_rank[s] = rank of the boundary map out of the size-s faces,
  // i.e. ∂_{s-1} : C_{s-1} -> C_{s-2}
  std::vector<long long> boundary_rank(static_cast<std::size_t>(top) + 2, 0);
  for (int k = 0; k <= top; ++k) {
    const auto& rows_faces = by_dim[static_cast<std::size_t>(k + 1)];
    const auto& cols_faces = by_dim[static_cast<std::size_t>(k)];
    if (rows_faces.empty() || cols_faces.empty()) continue;
    std::vector<std::vector<long long>> mat(
        rows_faces.size(), std::vector<long long>(cols_faces.size(), 0));
    for (std::size_t r = 0; r < rows_faces.size(); ++r) {
      Face f = rows_faces[r];
      int sign = 1;
      for (Face rest = f; rest != 0; rest &= rest - 1) {
        Face vertex_bit = rest & (~rest + 1);
        Face sub = f & ~vertex_bit;
        auto it = std::lower_bound(cols_faces.begin(), cols_faces.end(), sub);
        mat[r][static_cast<std::size_t>(it - cols_faces.begin())] = sign;
        sign = -sign;
      }
    }
    boundary_rank[static_cast<std::size_t>(k + 1)] = matrix_rank(std::move(mat), field);
  }

  std::map<int, long long> ranks;
  for (int k = -1; k <= top; ++k) {
    long long dim_ck =
        static_cast<long long>(by_dim[static_cast<std::size_t>(k + 1)].size());
    long long h = dim_ck - boundary_rank[static_cast<std::size_t>(k + 1)] -
                  (k + 2 <= top + 1 ? boundary_rank[static_cast<std::size_t>(k + 2)] : 0);
    if (h != 0) ranks[k] = h;
  }
  return HomologyRanks{std::move(ranks)};
}

long long hilbert_dim(const SimplicialComplex& delta, long long k) {
  if (k < 0) throw std::invalid_argument("hilbert_dim: degree must be nonnegative");
  if (delta.is_empty_complex()) return 0;
  if (k == 0) return 1;
  long long total = 0;
  const auto counts = delta.face_counts_by_size();
  for (std::size_t sz = 1; sz < counts.size(); ++sz)
    total += counts[sz] * binomial(k - 1, static_cast<long long>(sz) - 1);
  return total;
}

} // namespace segrereg
