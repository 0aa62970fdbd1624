#pragma once

// Shared lattices and brute-force helpers for the test suites.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cellman/constructions.hpp"
#include "cellman/isomorphism.hpp"
#include "cellman/lattice.hpp"

namespace fixtures {

using namespace cellman;

inline FaceLattice s(int d) { return standard_sphere(d); }

/// Two cones a1, a2 over the path b-c-d-e, glued along the path and the
/// edges a1-b, a1-e (6 vertices, classes {a1,a2}).
inline FaceLattice s1_example() {
  std::vector<std::string> labels{"a1", "a2", "b", "c", "d", "e"};
  auto f = [](std::initializer_list<int> vs) { return VertexSet::of(vs); };
  return build_from_facets(labels, {f({0, 2, 3}), f({0, 3, 4}), f({0, 4, 5}), f({0, 1, 5}), f({0, 1, 2}),
                                    f({1, 2, 3}), f({1, 3, 4}), f({1, 4, 5})});
}

/// (S^0 * S^0) (x) S^-1, the square pyramid.
inline FaceLattice square_pyramid() { return tensor(join(s(0), s(0)), s(-1)); }

/// Copy of L with vertex v renamed to perm[v].
inline FaceLattice relabel(const FaceLattice& L, const std::vector<int>& perm) {
  std::vector<std::string> labels(L.labels().size());
  for (std::size_t v = 0; v < perm.size(); ++v) labels[static_cast<std::size_t>(perm[v])] = L.labels()[v];
  std::vector<VertexSet> shadows;
  for (const auto& f : L.proper_faces()) shadows.push_back(map_set(f.shadow, perm));
  return build_from_faces(labels, shadows);
}

inline std::vector<int> random_perm(int n, std::mt19937& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// A mixed bag of small valid lattices.
inline std::vector<FaceLattice> small_catalog() {
  return {s(-1),
          s(0),
          s(1),
          s(2),
          s(3),
          cycle(4),
          cycle(5),
          cycle(7),
          octahedron(),
          tensor(cycle(5), s(-1)),
          square_pyramid(),
          join(s(0), s(1)),
          join(cycle(5), s(1)),
          projective_plane_6(),
          s1_example(),
          cartesian(cycle(3), cycle(3)),
          cartesian(cycle(4), cycle(3)),
          dual(octahedron()),
          tensor(cycle(4), s(0)),
          join(square_pyramid(), s(0))};
}

/// Number of faces strictly between a and b, by scanning every face.
inline int middle_count(const FaceLattice& L, VertexSet a, VertexSet b) {
  int c = 0;
  for (const auto& f : L.faces())
    if (a.proper_subset_of(f.shadow) && f.shadow.proper_subset_of(b)) ++c;
  return c;
}

/// Set of all shadows, for face-family comparisons.
inline std::set<std::uint64_t> shadow_set(const FaceLattice& L) {
  std::set<std::uint64_t> out;
  for (const auto& f : L.faces()) out.insert(f.shadow.bits());
  return out;
}

}  // namespace fixtures
