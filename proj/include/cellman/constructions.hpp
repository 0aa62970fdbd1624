#pragma once

// Named lattices and the closed operations on them: standard spheres,
// polygons, the dual, the direct product, join, cartesian product and the
// barycentric subdivision.

#include <string>
#include <unordered_set>
#include <vector>

#include "cellman/lattice.hpp"

namespace cellman {

namespace detail {

inline std::vector<std::string> numbered_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

/// Turns a family of sets over an auxiliary ground set into a lattice whose
/// vertices are the family's atoms (minimal non-empty members). Each member
/// is re-shadowed by the atoms it contains; ranks are recomputed.
inline FaceLattice from_family(const std::vector<std::string>& ground_labels, const std::vector<VertexSet>& family) {
  std::vector<VertexSet> members;
  std::unordered_set<VertexSet> seen;
  for (auto s : family)
    if (!s.empty() && seen.insert(s).second) members.push_back(s);
  // Singleton members are atoms, and anything meeting them is not. Only the
  // rest needs a pairwise minimality check.
  VertexSet singles;
  for (auto s : members)
    if (s.size() == 1) singles |= s;
  std::vector<VertexSet> atoms, rest;
  for (auto s : members) {
    if (s.size() == 1)
      atoms.push_back(s);
    else if (!s.intersects(singles))
      rest.push_back(s);
  }
  for (auto s : rest)
    if (std::none_of(rest.begin(), rest.end(), [&](VertexSet t) { return t.proper_subset_of(s); }))
      atoms.push_back(s);
  std::sort(atoms.begin(), atoms.end(), VertexSet::lex_less);
  if (atoms.size() > static_cast<std::size_t>(kMaxVertices))
    throw Error(ErrorKind::CapacityExceeded, "result has more than 64 vertices");

  std::vector<std::string> labels;
  for (auto a : atoms) {
    std::string label;
    a.for_each([&](int v) {
      if (!label.empty()) label += '+';
      label += ground_labels[static_cast<std::size_t>(v)];
    });
    labels.push_back(label);
  }
  std::vector<VertexSet> shadows;
  for (auto s : members) {
    VertexSet sh;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (atoms[i].subset_of(s)) sh.insert(static_cast<int>(i));
    shadows.push_back(sh);
  }
  return build_from_faces(std::move(labels), shadows);
}

inline std::vector<std::string> prefixed_labels(const FaceLattice& a, const FaceLattice& b) {
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("L:" + l);
  for (const auto& l : b.labels()) labels.push_back("R:" + l);
  return labels;
}

inline VertexSet shifted(VertexSet s, int offset) { return VertexSet(s.bits() << offset); }

}  // namespace detail

/// S^d_{d+2}: every subset of a (d+2)-set. For d = -1 this is the two-element
/// lattice whose single vertex is the top.
inline FaceLattice standard_sphere(int d) {
  if (d < -1) throw Error(ErrorKind::InvalidParameter, "standard sphere needs d >= -1");
  const int n = d + 2;
  if (n > 24) throw Error(ErrorKind::CapacityExceeded, "standard sphere too large to materialize");
  std::vector<VertexSet> shadows;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n) - 1; ++s) shadows.emplace_back(s);
  return build_from_faces(detail::numbered_labels(n), shadows);
}

/// The n-gon.
inline FaceLattice cycle(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidParameter, "cycle needs n >= 3");
  if (n > kMaxVertices) throw Error(ErrorKind::CapacityExceeded, "cycle longer than 64");
  std::vector<VertexSet> shadows;
  for (int i = 0; i < n; ++i) {
    shadows.push_back(VertexSet::single(i));
    shadows.push_back(VertexSet::single(i) | VertexSet::single((i + 1) % n));
  }
  return build_from_faces(detail::numbered_labels(n), shadows);
}

/// The opposite poset; its vertices are the facets of L.
inline FaceLattice dual(const FaceLattice& L) {
  const auto facets = L.facets();
  if (facets.size() > static_cast<std::size_t>(kMaxVertices))
    throw Error(ErrorKind::CapacityExceeded, "dual would have more than 64 vertices");
  std::vector<std::string> labels;
  for (const auto& f : facets) labels.push_back(L.format(f.shadow));
  std::vector<VertexSet> shadows;
  for (const auto& face : L.faces()) {
    VertexSet s;
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (face.shadow.subset_of(facets[i].shadow)) s.insert(static_cast<int>(i));
    shadows.push_back(s);
  }
  return build_from_faces(std::move(labels), shadows);
}

/// Direct product: all pairs (x, y), ordered componentwise.
inline FaceLattice tensor(const FaceLattice& a, const FaceLattice& b) {
  const int na = a.vertex_count();
  if (na + b.vertex_count() > kMaxVertices) throw Error(ErrorKind::CapacityExceeded, "product exceeds 64 vertices");
  std::vector<VertexSet> family;
  family.reserve(a.size() * b.size());
  for (const auto& x : a.faces())
    for (const auto& y : b.faces()) family.push_back(x.shadow | detail::shifted(y.shadow, na));
  return detail::from_family(detail::prefixed_labels(a, b), family);
}

/// Join: pairs with both components proper-or-bottom, plus the top.
inline FaceLattice join(const FaceLattice& a, const FaceLattice& b) {
  const int na = a.vertex_count();
  if (na + b.vertex_count() > kMaxVertices) throw Error(ErrorKind::CapacityExceeded, "join exceeds 64 vertices");
  std::vector<VertexSet> family;
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    for (std::size_t j = 0; j + 1 < b.size(); ++j)
      family.push_back(a.face(i).shadow | detail::shifted(b.face(j).shadow, na));
  family.push_back(a.top().shadow | detail::shifted(b.top().shadow, na));
  return detail::from_family(detail::prefixed_labels(a, b), family);
}

/// Cartesian product: pairs of proper faces, plus bottom and top. Vertex
/// (v, w) is labelled "v×w".
inline FaceLattice cartesian(const FaceLattice& a, const FaceLattice& b) {
  if (a.dim() < 0 || b.dim() < 0) throw Error(ErrorKind::InvalidParameter, "cartesian product needs dims >= 0");
  const int na = a.vertex_count(), nb = b.vertex_count();
  if (na * nb > kMaxVertices) throw Error(ErrorKind::CapacityExceeded, "cartesian product exceeds 64 vertices");
  std::vector<std::string> labels;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      labels.push_back(a.labels()[static_cast<std::size_t>(i)] + "×" + b.labels()[static_cast<std::size_t>(j)]);
  auto pairs = [&](VertexSet x, VertexSet y) {
    VertexSet s;
    x.for_each([&](int i) { y.for_each([&](int j) { s.insert(i * nb + j); }); });
    return s;
  };
  std::vector<VertexSet> family;
  for (const auto& x : a.proper_faces())
    for (const auto& y : b.proper_faces()) family.push_back(pairs(x.shadow, y.shadow));
  family.push_back(VertexSet::range(na * nb));
  return detail::from_family(labels, family);
}

/// Chains of proper faces; vertices are the proper faces of L.
inline FaceLattice barycentric(const FaceLattice& L) {
  if (L.dim() < 0) throw Error(ErrorKind::InvalidParameter, "barycentric subdivision needs dim >= 0");
  const auto proper = L.proper_faces();
  if (proper.size() > static_cast<std::size_t>(kMaxVertices))
    throw Error(ErrorKind::CapacityExceeded, "subdivision would have more than 64 vertices");
  std::vector<std::string> labels;
  for (const auto& f : proper) labels.push_back(L.format(f.shadow));

  std::vector<VertexSet> chains;
  auto extend = [&](auto&& self, VertexSet chain, std::size_t last) -> void {
    chains.push_back(chain);
    for (std::size_t k = 0; k < proper.size(); ++k)
      if (proper[last].shadow.proper_subset_of(proper[k].shadow)) {
        VertexSet next = chain;
        next.insert(static_cast<int>(k));
        self(self, next, k);
      }
  };
  for (std::size_t k = 0; k < proper.size(); ++k) extend(extend, VertexSet::single(static_cast<int>(k)), k);
  return build_from_faces(std::move(labels), chains);
}

/// The 6-vertex real projective plane (hemi-icosahedron).
inline FaceLattice projective_plane_6() {
  const std::vector<std::vector<int>> triangles{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                                {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}};
  std::vector<VertexSet> facets;
  for (const auto& t : triangles) facets.push_back(VertexSet::of({t[0] - 1, t[1] - 1, t[2] - 1}));
  return build_from_facets({"1", "2", "3", "4", "5", "6"}, facets);
}

/// S^0 * S^0 * S^0
inline FaceLattice octahedron() {
  const auto s0 = standard_sphere(0);
  return join(join(s0, s0), s0);
}

/// Lattices by name: "sphere:D", "cycle:N", "rp2", "octahedron", "pyramid:N"
/// (cycle(N) tensor S^-1).
inline FaceLattice named_lattice(const std::string& name) {
  auto colon = name.find(':');
  const std::string head = name.substr(0, colon);
  auto arg = [&] {
    if (colon == std::string::npos) throw Error(ErrorKind::InvalidParameter, "'" + head + "' needs a parameter");
    try {
      return std::stoi(name.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidParameter, "bad parameter in '" + name + "'");
    }
  };
  if (head == "sphere") return standard_sphere(arg());
  if (head == "cycle") return cycle(arg());
  if (head == "pyramid") return tensor(cycle(arg()), standard_sphere(-1));
  if (head == "rp2") return projective_plane_6();
  if (head == "octahedron") return octahedron();
  throw Error(ErrorKind::InvalidParameter, "unknown lattice name '" + name + "'");
}

}  // namespace cellman
