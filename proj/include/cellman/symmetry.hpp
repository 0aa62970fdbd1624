#pragma once

// The ~-relation (x ~ y when swapping x and y is an automorphism) and what
// is built from it: join decomposition, quotient by classes, inflation.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "cellman/constructions.hpp"
#include "cellman/lattice.hpp"
#include "cellman/parallel.hpp"

namespace cellman {

struct VertexPartition {
  std::vector<VertexSet> classes;  // ordered by smallest member

  std::size_t class_of(int v) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (classes[i].contains(v)) return i;
    return classes.size();
  }
};

struct Decomposition {
  FaceLattice irreducible_part;
  std::vector<VertexSet> sphere_classes;  // in the input's vertex indices
};

inline bool is_automorphism(const FaceLattice& L, const std::vector<int>& perm) {
  const int n = L.vertex_count();
  if (perm.size() != static_cast<std::size_t>(n)) return false;
  VertexSet hit;
  for (int p : perm) {
    if (p < 0 || p >= n || hit.contains(p)) return false;
    hit.insert(p);
  }
  return std::all_of(L.faces().begin(), L.faces().end(),
                     [&](const Face& f) { return L.contains(map_set(f.shadow, perm)); });
}

namespace detail {

/// Only faces holding exactly one of x, y move under the transposition.
inline bool transposition_preserves(const FaceLattice& L, int x, int y) {
  const VertexSet sx = VertexSet::single(x), sy = VertexSet::single(y), both = sx | sy;
  for (const auto& f : L.faces()) {
    const VertexSet hit = f.shadow & both;
    if (hit.empty() || hit == both) continue;
    if (!L.contains((f.shadow - both) | (hit == sx ? sy : sx))) return false;
  }
  return true;
}

}  // namespace detail

inline VertexPartition tilde_partition(const FaceLattice& L) {
  const int n = L.vertex_count();
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
  std::vector<char> related(pairs.size(), 0);
  parallel_for(pairs.size(), [&](std::size_t k) {
    related[k] = detail::transposition_preserves(L, pairs[k].first, pairs[k].second);
  });

  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (related[k]) {
      int a = root(pairs[k].first), b = root(pairs[k].second);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }

  VertexPartition P;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    int r = root(v);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(P.classes.size());
      P.classes.emplace_back();
    }
    P.classes[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].insert(v);
  }
  return P;
}

namespace detail {

/// Classes contained in no facet.
inline std::vector<VertexSet> sphere_classes(const FaceLattice& L, const VertexPartition& P) {
  std::vector<VertexSet> out;
  if (L.dim() < 0) return out;
  const auto facets = L.facets();
  for (auto c : P.classes)
    if (std::none_of(facets.begin(), facets.end(), [&](const Face& f) { return c.subset_of(f.shadow); }))
      out.push_back(c);
  return out;
}

/// Faces inside `keep`, re-indexed onto the vertices of `keep`.
inline FaceLattice restrict_to(const FaceLattice& L, VertexSet keep) {
  const auto kept = keep.elements();
  std::vector<int> index(static_cast<std::size_t>(L.vertex_count()), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    index[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);
    labels.push_back(L.labels()[static_cast<std::size_t>(kept[i])]);
  }
  std::vector<VertexSet> shadows;
  for (const auto& f : L.faces())
    if (f.shadow.subset_of(keep) && f.shadow != keep) shadows.push_back(map_set(f.shadow, index));
  return build_from_faces(std::move(labels), shadows);
}

}  // namespace detail

inline bool is_reducible(const FaceLattice& L) {
  return !detail::sphere_classes(L, tilde_partition(L)).empty();
}

/// L = N * S^{c1} * ... * S^{ck} with N irreducible; the standard-sphere
/// factors are the classes lying in no facet. If nothing remains, N is S^-1.
inline Decomposition decompose(const FaceLattice& L) {
  if (L.dim() < 0) return {L, {}};
  auto spheres = detail::sphere_classes(L, tilde_partition(L));
  if (spheres.empty()) return {L, {}};
  VertexSet removed;
  for (auto c : spheres) removed |= c;
  const VertexSet keep = L.vertex_set() - removed;
  if (keep.empty()) return {standard_sphere(-1), spheres};
  return {detail::restrict_to(L, keep), spheres};
}

/// N joined with a standard sphere on each class.
inline FaceLattice rejoin(const Decomposition& D) {
  FaceLattice out = D.irreducible_part;
  for (auto c : D.sphere_classes) out = join(out, standard_sphere(c.size() - 2));
  return out;
}

inline bool is_proper(const FaceLattice& L) {
  auto P = tilde_partition(L);
  return std::all_of(P.classes.begin(), P.classes.end(), [&](VertexSet c) { return L.contains(c); });
}

inline bool is_primitive(const FaceLattice& L) {
  auto P = tilde_partition(L);
  return std::all_of(P.classes.begin(), P.classes.end(), [](VertexSet c) { return c.size() == 1; });
}

/// M/~: vertices are the classes; a set of classes is a face when its union is.
inline FaceLattice quotient(const FaceLattice& L) {
  const auto P = tilde_partition(L);
  for (auto c : P.classes)
    if (!L.contains(c)) throw Error(ErrorKind::NotProper, "class " + L.format(c) + " is not a face");

  std::vector<std::string> labels;
  for (auto c : P.classes) {
    std::vector<std::string> names;
    c.for_each([&](int v) { names.push_back(L.labels()[static_cast<std::size_t>(v)]); });
    std::sort(names.begin(), names.end());
    std::string label;
    for (const auto& name : names) label += (label.empty() ? "" : "+") + name;
    labels.push_back(label);
  }
  std::vector<VertexSet> shadows;
  for (const auto& f : L.faces()) {
    VertexSet classes, covered;
    for (std::size_t i = 0; i < P.classes.size(); ++i)
      if (P.classes[i].subset_of(f.shadow)) {
        classes.insert(static_cast<int>(i));
        covered |= P.classes[i];
      }
    if (covered == f.shadow) shadows.push_back(classes);
  }
  return build_from_faces(std::move(labels), shadows);
}

/// <N, f>: vertex x of N becomes mult[x] vertices "x.1", "x.2", ...; A is a
/// face when the vertices x with all copies in A form a face of N. The rank
/// of A is #A - #{x} + rank_N({x}); validate() cross-checks it.
inline FaceLattice inflate(const FaceLattice& N, const std::vector<int>& mult) {
  const int n = N.vertex_count();
  if (mult.size() != static_cast<std::size_t>(n))
    throw Error(ErrorKind::InvalidParameter, "need one multiplicity per vertex");
  if (std::any_of(mult.begin(), mult.end(), [](int m) { return m < 1; }))
    throw Error(ErrorKind::InvalidParameter, "multiplicities must be positive");
  if (std::accumulate(mult.begin(), mult.end(), 0) > kMaxVertices)
    throw Error(ErrorKind::CapacityExceeded, "inflation exceeds 64 vertices");

  std::vector<std::string> labels;
  std::vector<VertexSet> block(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int k = 1; k <= mult[static_cast<std::size_t>(x)]; ++k) {
      block[static_cast<std::size_t>(x)].insert(static_cast<int>(labels.size()));
      labels.push_back(N.labels()[static_cast<std::size_t>(x)] + "." + std::to_string(k));
    }

  std::vector<Face> faces;
  for (const auto& F : N.faces()) {
    VertexSet base;
    F.shadow.for_each([&](int x) { base |= block[static_cast<std::size_t>(x)]; });
    std::vector<int> outside = (N.vertex_set() - F.shadow).elements();
    // Every proper part of each outside block, independently.
    auto extend = [&](auto&& self, std::size_t k, VertexSet A) -> void {
      if (k == outside.size()) {
        faces.push_back({A, A.size() - F.shadow.size() + F.rank});
        return;
      }
      const VertexSet b = block[static_cast<std::size_t>(outside[k])];
      for (std::uint64_t sub = 0;; sub = (sub - b.bits()) & b.bits()) {
        if (sub != b.bits()) self(self, k + 1, A | VertexSet(sub));
        if (sub == b.bits()) break;
      }
    };
    extend(extend, 0, base);
  }
  return FaceLattice::assemble(std::move(labels), std::move(faces));
}

}  // namespace cellman
