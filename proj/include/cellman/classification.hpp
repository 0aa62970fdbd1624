#pragma once

// Catalogs of excess-1 and reducible excess-2 pseudomanifolds, their closed
// form counts, and a brute-force enumerator for tiny cases.

#include <string>
#include <vector>

#include "cellman/constructions.hpp"
#include "cellman/isomorphism.hpp"
#include "cellman/lattice.hpp"
#include "cellman/parallel.hpp"

namespace cellman {

struct ClassificationItem {
  std::string family;  // "Join2", "JoinTensor", "Join3", "JoinTensorJoin"
  std::vector<int> params;
  FaceLattice lattice;

  /// e.g. "JoinTensor(0,0,-1)"
  std::string tag() const {
    std::string out = family + "(";
    for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + std::to_string(params[i]);
    return out + ")";
  }
};

namespace detail {

inline FaceLattice sphere_join(std::initializer_list<int> dims) {
  auto it = dims.begin();
  FaceLattice out = standard_sphere(*it);
  for (++it; it != dims.end(); ++it) out = join(out, standard_sphere(*it));
  return out;
}

inline FaceLattice build_item(const std::string& family, const std::vector<int>& p) {
  if (family == "Join2") return sphere_join({p[0], p[1]});
  if (family == "Join3") return sphere_join({p[0], p[1], p[2]});
  if (family == "JoinTensor") return tensor(sphere_join({p[0], p[1]}), standard_sphere(p[2]));
  if (family == "JoinTensorJoin")
    return join(tensor(sphere_join({p[0], p[1]}), standard_sphere(p[2])), standard_sphere(p[3]));
  throw Error(ErrorKind::InvalidParameter, "unknown family " + family);
}

/// Materializes the lattices in parallel; order is preserved.
inline std::vector<ClassificationItem> materialize(std::vector<ClassificationItem> items) {
  parallel_for(items.size(), [&](std::size_t i) { items[i].lattice = build_item(items[i].family, items[i].params); });
  return items;
}

inline long long floor_div(long long a, long long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace detail

/// Excess-1 catalog: S^b1 * S^b2 (0 <= b1 <= b2, b1 + b2 = d - 1), then
/// (S^d1 * S^d2) (x) S^d3 (0 <= d1 <= d2, d3 >= -1, d1 + d2 + d3 = d - 3).
inline std::vector<ClassificationItem> enumerate_excess1(int d) {
  if (d < 1) throw Error(ErrorKind::InvalidParameter, "excess-1 catalog needs d >= 1");
  std::vector<ClassificationItem> items;
  for (int b1 = 0; 2 * b1 <= d - 1; ++b1) items.push_back({"Join2", {b1, d - 1 - b1}, {}});
  for (int d1 = 0; 2 * d1 <= d - 2; ++d1)
    for (int d2 = d1; d1 + d2 <= d - 2; ++d2) items.push_back({"JoinTensor", {d1, d2, d - 3 - d1 - d2}, {}});
  return detail::materialize(std::move(items));
}

/// Reducible excess-2 catalog: S^b1 * S^b2 * S^b3 (0 <= b1 <= b2 <= b3,
/// sum d - 2), then ((S^d1 * S^d2) (x) S^d3) * S^d4 (0 <= d1 <= d2,
/// d3 >= -1, d4 >= 0, sum d - 4). The neighbourly subset needs every
/// b_i >= 1 and d1, d2, d4 >= 1.
inline std::vector<ClassificationItem> enumerate_reducible_excess2(int d, bool neighbourly_only = false) {
  if (d < 2) throw Error(ErrorKind::InvalidParameter, "reducible excess-2 catalog needs d >= 2");
  const int lo = neighbourly_only ? 1 : 0;
  std::vector<ClassificationItem> items;
  for (int b1 = lo; 3 * b1 <= d - 2; ++b1)
    for (int b2 = b1; b1 + 2 * b2 <= d - 2; ++b2) items.push_back({"Join3", {b1, b2, d - 2 - b1 - b2}, {}});
  for (int d1 = lo; 2 * d1 <= d - 3 - lo; ++d1)
    for (int d2 = d1; d1 + d2 <= d - 3 - lo; ++d2)
      for (int d4 = lo; d1 + d2 + d4 <= d - 3; ++d4)
        items.push_back({"JoinTensorJoin", {d1, d2, d - 4 - d1 - d2 - d4, d4}, {}});
  return detail::materialize(std::move(items));
}

/// floor(((d + 1) / 2)^2)
inline long long count_excess1(int d) { return static_cast<long long>(d + 1) * (d + 1) / 4; }

/// floor(((d^2 + 1)(2d - 1) + 9) / 24)
inline long long count_reducible_excess2(int d) {
  const long long x = d;
  return detail::floor_div((x * x + 1) * (2 * x - 1) + 9, 24);
}

/// Reducible neighbourly count: the reducible excess-2 count at d - 3.
inline long long count_neighbourly(int d) {
  const long long x = d - 3;
  return std::max(0LL, detail::floor_div((x * x + 1) * (2 * x - 1) + 9, 24));
}

/// The closed form floor(((d^2 - 6d - 8)(2d - 7) + 9) / 24) as printed in
/// the literature; it disagrees with enumeration (27 vs 17 at d = 10).
inline long long count_neighbourly_printed(int d) {
  const long long x = d;
  return detail::floor_div((x * x - 6 * x - 8) * (2 * x - 7) + 9, 24);
}

namespace detail {

inline void keep_new_class(std::vector<FaceLattice>& found, FaceLattice L) {
  for (const auto& M : found)
    if (isomorphic(M, L)) return;
  found.push_back(std::move(L));
}

/// Intersection closure of a facet family, or nullopt if it does not yield
/// a valid d-dimensional lattice with exactly these facets on n vertices.
inline std::optional<FaceLattice> lattice_on_facets(int n, int d, const std::vector<VertexSet>& facets) {
  try {
    auto L = build_from_facet_intersections(numbered_labels(n), facets);
    if (L.dim() != d || L.facets().size() != facets.size() || !is_valid(L)) return std::nullopt;
    return L;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace detail

/// Every d-dimensional cellular pseudomanifold on n labelled vertices, up to
/// isomorphism, by exhaustive search over facet families.
///  d = 1 (n <= 12): edge sets grown from the smallest vertex still short of
///    two edges; untouched vertices are interchangeable, so only the
///    smallest one is tried as a new neighbour.
///  d = 2 (n <= 5): every family of 3..(n-1)-subsets.
inline std::vector<FaceLattice> brute_force_enumerate(int d, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "n must be positive");
  if (!((d == 1 && n <= 12) || (d == 2 && n <= 5)))
    throw Error(ErrorKind::InfeasibleSize, "brute force supports d=1 with n<=12 and d=2 with n<=5");
  std::vector<FaceLattice> found;

  if (d == 1) {
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::vector<VertexSet> edges;
    auto search = [&](auto&& self) -> void {
      int v = 0;
      while (v < n && degree[static_cast<std::size_t>(v)] == 2) ++v;
      if (v == n) {
        if (auto L = detail::lattice_on_facets(n, 1, edges)) detail::keep_new_class(found, std::move(*L));
        return;
      }
      bool fresh_tried = false;
      for (int w = 0; w < n; ++w) {
        if (w == v || degree[static_cast<std::size_t>(w)] == 2) continue;
        const VertexSet e = VertexSet::single(v) | VertexSet::single(w);
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
        if (degree[static_cast<std::size_t>(w)] == 0) {
          if (fresh_tried) continue;
          fresh_tried = true;
        }
        edges.push_back(e);
        ++degree[static_cast<std::size_t>(v)];
        ++degree[static_cast<std::size_t>(w)];
        self(self);
        --degree[static_cast<std::size_t>(v)];
        --degree[static_cast<std::size_t>(w)];
        edges.pop_back();
      }
    };
    if (n >= 2) search(search);
    return found;
  }

  std::vector<VertexSet> candidates;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const int k = std::popcount(s);
    if (k >= 3 && k <= n - 1) candidates.emplace_back(s);
  }
  const std::size_t total = std::size_t{1} << candidates.size();
  std::vector<std::optional<FaceLattice>> hit(total);
  parallel_for(total, [&](std::size_t mask) {
    if (mask == 0) return;
    std::vector<VertexSet> facets;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if ((mask >> i) & 1U) facets.push_back(candidates[i]);
    hit[mask] = detail::lattice_on_facets(n, 2, facets);
  });
  for (auto& L : hit)
    if (L) detail::keep_new_class(found, std::move(*L));
  return found;
}

}  // namespace cellman
