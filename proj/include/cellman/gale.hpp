#pragma once

// Combinatorial Gale diagrams for excess 2: points sit on 2m equally spaced
// rays (ray i is antipodal to ray i + m) or at the centre. Which sets of at
// most three points hold the centre in their relative interior depends only
// on antipodality and cyclic gaps, so no coordinates are needed.

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cellman/lattice.hpp"
#include "cellman/parallel.hpp"
#include "cellman/symmetry.hpp"

namespace cellman {

inline constexpr int kCenter = -1;

struct GaleDiagram {
  int order = 0;                    // number of rays, even
  std::vector<std::string> labels;  // one per vertex
  std::vector<int> ray;             // ray index per vertex, or kCenter

  int half() const { return order / 2; }
  int antipode(int r) const { return (r + half()) % order; }
  int vertex_count() const { return static_cast<int>(labels.size()); }
  bool operator==(const GaleDiagram&) const = default;
};

namespace detail {

/// Points strictly on each side of the line through directions r and r + m,
/// where r may be a half-step (given doubled: r2 = 2r).
inline std::pair<VertexSet, VertexSet> open_sides(const GaleDiagram& G, int r2) {
  VertexSet left, right;
  const int m2 = G.order;  // half-turn in doubled units
  for (int v = 0; v < G.vertex_count(); ++v) {
    const int p = G.ray[static_cast<std::size_t>(v)];
    if (p == kCenter) continue;
    const int off = ((2 * p - r2) % (2 * G.order) + 2 * G.order) % (2 * G.order);
    if (off == 0 || off == m2) continue;
    (off < m2 ? left : right).insert(v);
  }
  return {left, right};
}

/// Points (other than the centre) on ray r.
inline VertexSet on_ray(const GaleDiagram& G, int r) {
  VertexSet out;
  for (int v = 0; v < G.vertex_count(); ++v)
    if (G.ray[static_cast<std::size_t>(v)] == r) out.insert(v);
  return out;
}

/// Cyclic distance from a forward to b.
inline int forward(const GaleDiagram& G, int a, int b) { return ((b - a) % G.order + G.order) % G.order; }

inline bool triple_spans(const GaleDiagram& G, int a, int b, int c) {
  std::array<int, 3> r{a, b, c};
  std::sort(r.begin(), r.end());
  const int m = G.half();
  return r[1] - r[0] < m && r[2] - r[1] < m && G.order - r[2] + r[0] < m;
}

}  // namespace detail

/// Hemisphere condition: every line through the centre and an occupied ray
/// has at least two points strictly on each side. With a point at the centre
/// every line through the centre counts, including those between rays.
inline ValidationReport gale_validate(const GaleDiagram& G) {
  ValidationReport report;
  if (G.order < 2 || G.order % 2 != 0) {
    report.violations.push_back({"order", {}});
    report.verdict = false;
    return report;
  }
  if (G.ray.size() != G.labels.size() || G.labels.size() > static_cast<std::size_t>(kMaxVertices)) {
    report.violations.push_back({"size", {}});
    report.verdict = false;
    return report;
  }
  bool centre = false;
  for (int v = 0; v < G.vertex_count(); ++v) {
    const int p = G.ray[static_cast<std::size_t>(v)];
    if (p == kCenter) centre = true;
    if (p != kCenter && (p < 0 || p >= G.order)) report.violations.push_back({"ray", {VertexSet::single(v)}});
  }
  if (report.violations.empty()) {
    for (int r2 = 0; r2 < G.order; ++r2) {  // lines r and r + m coincide; half a turn suffices
      const bool half_step = r2 % 2 != 0;
      if (half_step && !centre) continue;
      if (!half_step && !centre && (detail::on_ray(G, r2 / 2) | detail::on_ray(G, G.antipode(r2 / 2))).empty())
        continue;
      auto [left, right] = detail::open_sides(G, r2);
      if (left.size() < 2 || right.size() < 2) {
        VertexSet line = half_step ? VertexSet{} : detail::on_ray(G, r2 / 2) | detail::on_ray(G, G.antipode(r2 / 2));
        report.violations.push_back({"hemisphere", {line, left.size() < 2 ? left : right}});
      }
    }
  }
  report.verdict = report.violations.empty();
  return report;
}

/// Minimal sets whose images hold the centre in their relative interior:
/// a centre point alone, an antipodal pair, or three pairwise non-antipodal
/// rays with every cyclic gap below a half-turn. Sorted lexicographically.
inline std::vector<VertexSet> cofacets(const GaleDiagram& G) {
  std::vector<VertexSet> out;
  const int n = G.vertex_count();
  auto ray = [&](int v) { return G.ray[static_cast<std::size_t>(v)]; };
  for (int x = 0; x < n; ++x) {
    if (ray(x) == kCenter) {
      out.push_back(VertexSet::single(x));
      continue;
    }
    for (int y = x + 1; y < n; ++y) {
      if (ray(y) == kCenter) continue;
      if (ray(y) == G.antipode(ray(x))) out.push_back(VertexSet::of({x, y}));
      if (ray(y) == ray(x) || ray(y) == G.antipode(ray(x))) continue;
      for (int z = y + 1; z < n; ++z) {
        if (ray(z) == kCenter || ray(z) == ray(x) || ray(z) == ray(y)) continue;
        if (ray(z) == G.antipode(ray(x)) || ray(z) == G.antipode(ray(y))) continue;
        if (detail::triple_spans(G, ray(x), ray(y), ray(z))) out.push_back(VertexSet::of({x, y, z}));
      }
    }
  }
  std::sort(out.begin(), out.end(), VertexSet::lex_less);
  return out;
}

/// The sphere whose facets are the complements of the co-facets.
inline FaceLattice sphere_from_diagram(const GaleDiagram& G) {
  auto report = gale_validate(G);
  if (!report.verdict) throw Error(ErrorKind::DegenerateDiagram, "diagram fails the hemisphere condition");
  const VertexSet all = VertexSet::range(G.vertex_count());
  std::vector<VertexSet> facets;
  for (auto c : cofacets(G)) facets.push_back(all - c);
  if (facets.empty()) throw Error(ErrorKind::DegenerateDiagram, "diagram has no co-facets");
  try {
    auto L = build_from_facet_intersections(G.labels, facets);
    if (!is_valid(L)) throw Error(ErrorKind::DegenerateDiagram, "facet family does not validate");
    return L;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DegenerateDiagram) throw;
    throw Error(ErrorKind::DegenerateDiagram, e.what());
  }
}

/// Moves vertex v to target_ray. Allowed only when the shorter closed arc
/// between the antipodes of the old and new rays holds no point (v included).
inline GaleDiagram shift_point(const GaleDiagram& G, int v, int target_ray) {
  if (v < 0 || v >= G.vertex_count()) throw Error(ErrorKind::InvalidParameter, "no such vertex");
  if (target_ray < 0 || target_ray >= G.order) throw Error(ErrorKind::InvalidParameter, "no such ray");
  const int cur = G.ray[static_cast<std::size_t>(v)];
  if (cur == kCenter) throw Error(ErrorKind::InvalidParameter, "cannot shift a centre point");
  if (cur == target_ray) return G;
  const int a = G.antipode(cur), b = G.antipode(target_ray);
  const int ahead = detail::forward(G, a, b);
  const int from = ahead <= G.half() ? a : b;
  const int span = std::min(ahead, G.order - ahead);
  for (int u = 0; u < G.vertex_count(); ++u) {
    const int p = G.ray[static_cast<std::size_t>(u)];
    if (p != kCenter && detail::forward(G, from, p) <= span)
      throw Error(ErrorKind::BlockedShift, "arc between antipodes holds '" + G.labels[static_cast<std::size_t>(u)] + "'");
  }
  GaleDiagram H = G;
  H.ray[static_cast<std::size_t>(v)] = target_ray;
  return H;
}

// ---------------------------------------------------------------------------
// Join faces and their reduction

struct JoinFace {
  Face face;
  VertexSet part_a;  // holds the smallest vertex of the face
  VertexSet part_b;
};

namespace detail {

inline void require_excess2_without_big_facets(const FaceLattice& L) {
  if (excess(L) != 2) throw Error(ErrorKind::PreconditionFailed, "lattice must have excess 2");
  for (const auto& f : L.facets())
    if (f.shadow.size() == L.vertex_count() - 1)
      throw Error(ErrorKind::PreconditionFailed, "facet " + L.format(f.shadow) + " misses a single vertex");
}

/// If the boundary of tau is S(A) * S(B) with #A, #B >= 2, the split.
inline std::optional<JoinFace> as_join_face(const FaceLattice& L, const Face& tau) {
  if (tau.shadow.size() != tau.rank + 1) return std::nullopt;
  auto D = decompose(boundary(L, tau));
  if (D.sphere_classes.size() != 2 || D.irreducible_part.vertex_count() != 1 ||
      D.irreducible_part.dim() != -1)
    return std::nullopt;
  // Boundary vertices are the vertices of tau in increasing order.
  const auto verts = tau.shadow.elements();
  VertexSet A, B;
  D.sphere_classes[0].for_each([&](int i) { A.insert(verts[static_cast<std::size_t>(i)]); });
  D.sphere_classes[1].for_each([&](int i) { B.insert(verts[static_cast<std::size_t>(i)]); });
  if (B.contains(tau.shadow.min())) std::swap(A, B);
  if (A.size() < 2 || B.size() < 2 || (A | B) != tau.shadow) return std::nullopt;
  // Faces below tau are exactly X u Y with X a proper part of A, Y of B.
  std::size_t below = 0;
  for (const auto& f : L.faces()) {
    if (!f.shadow.proper_subset_of(tau.shadow)) continue;
    if (A.subset_of(f.shadow) || B.subset_of(f.shadow)) return std::nullopt;
    ++below;
  }
  const std::size_t expected = ((std::size_t{1} << A.size()) - 1) * ((std::size_t{1} << B.size()) - 1);
  if (below != expected) return std::nullopt;
  return JoinFace{tau, A, B};
}

}  // namespace detail

/// Faces tau with #tau = rank + 1 whose boundary is a join of two standard
/// spheres of dimension >= 0. Needs excess 2 and no facet on n - 1 vertices.
inline std::vector<JoinFace> find_join_faces(const FaceLattice& L) {
  detail::require_excess2_without_big_facets(L);
  std::vector<JoinFace> out;
  for (const auto& f : L.proper_faces())
    if (auto jf = detail::as_join_face(L, f)) out.push_back(*jf);
  return out;
}

/// Replaces the faces above tau: keeps every facet not containing tau and
/// adds A u (B - y) u (R - z) u (S - w) for y in B, z in R, w in S, where the
/// link of tau is S(R) * S(S). An empty R or S contributes nothing.
inline FaceLattice reduce_join_face(const FaceLattice& L, const JoinFace& jf) {
  detail::require_excess2_without_big_facets(L);
  auto idx = L.find(jf.face.shadow);
  if (!idx) throw Error(ErrorKind::PreconditionFailed, "not a face: " + L.format(jf.face.shadow));
  const Face tau = L.face(*idx);
  auto checked = detail::as_join_face(L, tau);
  if (!checked || !((checked->part_a == jf.part_a && checked->part_b == jf.part_b) ||
                    (checked->part_a == jf.part_b && checked->part_b == jf.part_a)))
    throw Error(ErrorKind::PreconditionFailed, L.format(tau.shadow) + " is not a join face with that split");

  // Link vertices: each atom above tau adds one vertex of L.
  std::vector<VertexSet> R_S;
  if (L.top_rank() - tau.rank >= 2) {
    // Link atoms in the order interval() uses; each must add one vertex.
    std::vector<VertexSet> atoms;
    for (auto c : L.upper_covers(*idx)) atoms.push_back(L.face(c).shadow);
    std::sort(atoms.begin(), atoms.end(), VertexSet::lex_less);
    std::vector<int> link_vertex;
    for (auto a : atoms) {
      const VertexSet added = a - tau.shadow;
      if (added.size() != 1) throw Error(ErrorKind::PreconditionFailed, "link of the face is not a join of spheres");
      link_vertex.push_back(added.min());
    }
    auto D = decompose(link(L, tau));
    for (auto c : D.sphere_classes) {
      VertexSet mapped;
      c.for_each([&](int i) { mapped.insert(link_vertex[static_cast<std::size_t>(i)]); });
      R_S.push_back(mapped);
    }
    if (R_S.size() > 2 || D.irreducible_part.dim() != -1)
      throw Error(ErrorKind::PreconditionFailed, "link of the face is not a join of two standard spheres");
  }
  while (R_S.size() < 2) R_S.emplace_back();

  std::vector<VertexSet> facets;
  for (const auto& f : L.facets())
    if (!tau.shadow.subset_of(f.shadow)) facets.push_back(f.shadow);
  auto choices = [](VertexSet s) {
    std::vector<VertexSet> out;
    if (s.empty()) return std::vector<VertexSet>{VertexSet{}};
    s.for_each([&](int v) { out.push_back(s - VertexSet::single(v)); });
    return out;
  };
  for (auto b : choices(jf.part_b))
    for (auto r : choices(R_S[0]))
      for (auto s : choices(R_S[1])) facets.push_back(jf.part_a | b | r | s);

  try {
    auto M = build_from_facet_intersections(L.labels(), facets);
    if (!is_valid(M)) throw Error(ErrorKind::PreconditionFailed, "reduced facet family does not validate");
    return M;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::PreconditionFailed) throw;
    throw Error(ErrorKind::PreconditionFailed, std::string("reduction failed: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Exhaustive certification

/// Searches for a diagram on 2n rays whose sphere is L itself (same vertex
/// indices). A vertex whose complement is a facet must sit at the centre;
/// every other vertex goes on a ray. The first ray-placed vertex is pinned
/// to ray 0 and, by reflection, the second to rays 0..n. Partial placements
/// are pruned as soon as a set of at most three placed vertices disagrees
/// with L about being a co-facet.
inline std::optional<GaleDiagram> gale_search(const FaceLattice& L) {
  const int n = L.vertex_count();
  if (n > 7) throw Error(ErrorKind::InfeasibleSize, "gale_search handles at most 7 vertices");
  if (excess(L) != 2) throw Error(ErrorKind::InfeasibleSize, "gale_search needs excess 2");

  const VertexSet all = L.vertex_set();
  std::set<std::uint64_t> target;
  for (const auto& f : L.facets()) {
    const VertexSet c = all - f.shadow;
    if (c.size() > 3 || c.empty()) return std::nullopt;
    target.insert(c.bits());
  }

  GaleDiagram base{2 * n, L.labels(), std::vector<int>(static_cast<std::size_t>(n), kCenter)};
  std::vector<int> placed_order;
  for (int v = 0; v < n; ++v)
    if (!target.count(VertexSet::single(v).bits())) placed_order.push_back(v);
  if (placed_order.empty()) return std::nullopt;
  for (auto c : target)
    if (std::popcount(c) > 1)
      for (int v = 0; v < n; ++v)
        if (((c >> v) & 1U) && target.count(VertexSet::single(v).bits())) return std::nullopt;

  const auto faces = [&] {
    std::set<std::uint64_t> s;
    for (const auto& f : L.faces()) s.insert(f.shadow.bits());
    return s;
  }();

  auto is_cofacet = [](const GaleDiagram& G, VertexSet T) {
    auto vs = T.elements();
    auto ray = [&](int v) { return G.ray[static_cast<std::size_t>(v)]; };
    if (vs.size() == 2) return ray(vs[1]) == G.antipode(ray(vs[0]));
    if (vs.size() == 3) {
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
          if (ray(vs[i]) == ray(vs[j]) || ray(vs[i]) == G.antipode(ray(vs[j]))) return false;
      return detail::triple_spans(G, ray(vs[0]), ray(vs[1]), ray(vs[2]));
    }
    return false;
  };

  const std::size_t k = placed_order.size();
  std::atomic<bool> done{false};

  auto consistent = [&](const GaleDiagram& G, std::size_t depth) {
    const int v = placed_order[depth];
    for (std::size_t i = 0; i < depth; ++i) {
      const int a = placed_order[i];
      VertexSet pair = VertexSet::of({a, v});
      if (is_cofacet(G, pair) != (target.count(pair.bits()) != 0)) return false;
      for (std::size_t j = i + 1; j < depth; ++j) {
        VertexSet triple = pair | VertexSet::single(placed_order[j]);
        if (is_cofacet(G, triple) != (target.count(triple.bits()) != 0)) return false;
      }
    }
    return true;
  };

  auto finish = [&](const GaleDiagram& G) {
    if (!gale_validate(G).verdict) return false;
    try {
      auto M = sphere_from_diagram(G);
      std::set<std::uint64_t> got;
      for (const auto& f : M.faces()) got.insert(f.shadow.bits());
      return got == faces;
    } catch (const Error&) {
      return false;
    }
  };

  auto search = [&](auto&& self, GaleDiagram& G, std::size_t depth) -> bool {
    if (done) return false;
    if (depth == k) return finish(G);
    const int v = placed_order[depth];
    for (int r = 0; r < G.order; ++r) {
      G.ray[static_cast<std::size_t>(v)] = r;
      if (consistent(G, depth) && self(self, G, depth + 1)) return true;
    }
    G.ray[static_cast<std::size_t>(v)] = kCenter;
    return false;
  };

  // Branch on the second placed vertex's ray.
  const int branches = k >= 2 ? n + 1 : 1;
  std::vector<std::optional<GaleDiagram>> found(static_cast<std::size_t>(branches));
  parallel_for(static_cast<std::size_t>(branches), [&](std::size_t b) {
    if (done) return;
    GaleDiagram G = base;
    G.ray[static_cast<std::size_t>(placed_order[0])] = 0;
    if (k >= 2) {
      G.ray[static_cast<std::size_t>(placed_order[1])] = static_cast<int>(b);
      if (!consistent(G, 1)) return;
    }
    if (search(search, G, k >= 2 ? 2 : 1)) {
      found[b] = G;
      done = true;
    }
  });
  for (auto& g : found)
    if (g) return g;
  return std::nullopt;
}

}  // namespace cellman
