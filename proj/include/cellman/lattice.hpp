#pragma once

// Face lattices of cellular pseudomanifolds, stored as families of vertex
// shadows ordered by inclusion.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cellman/error.hpp"
#include "cellman/vertex_set.hpp"

namespace cellman {

struct Face {
  VertexSet shadow;
  int rank = 0;

  /// dim(f) = rank(f) - 1
  int dim() const { return rank - 1; }
  bool operator==(const Face&) const = default;
};

/// Storage order of faces: by rank, then lexicographic shadow.
inline bool face_order(const Face& a, const Face& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  return VertexSet::lex_less(a.shadow, b.shadow);
}

/// An immutable ranked lattice of faces, each identified with its shadow.
/// faces().front() is the bottom (empty shadow), faces().back() the top
/// (shadow = all vertices).
class FaceLattice {
 public:
  using Index = std::uint32_t;

  FaceLattice() = default;

  /// Assembles a lattice from faces with given ranks. Only structural
  /// bookkeeping (sorting, cover relation) happens here; the axioms are
  /// checked by validate(), which recomputes ranks from scratch.
  static FaceLattice assemble(std::vector<std::string> labels, std::vector<Face> faces) {
    FaceLattice L;
    L.labels_ = std::move(labels);
    std::sort(faces.begin(), faces.end(), face_order);
    L.faces_ = std::move(faces);
    L.index_.reserve(L.faces_.size() * 2);
    for (std::size_t i = 0; i < L.faces_.size(); ++i)
      L.index_.emplace(L.faces_[i].shadow, static_cast<Index>(i));
    L.compute_covers();
    return L;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  VertexSet vertex_set() const { return VertexSet::range(vertex_count()); }
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }
  const Face& face(std::size_t i) const { return faces_[i]; }
  const Face& bottom() const { return faces_.front(); }
  const Face& top() const { return faces_.back(); }
  int top_rank() const { return top().rank; }
  int dim() const { return top_rank() - 2; }

  std::optional<Index> find(VertexSet shadow) const {
    auto it = index_.find(shadow);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(VertexSet shadow) const { return index_.count(shadow) != 0; }

  /// Rank of the face with this shadow; throws NotComparable if absent.
  int rank_of(VertexSet shadow) const {
    auto i = find(shadow);
    if (!i) throw Error(ErrorKind::NotComparable, "not a face: " + format(shadow));
    return faces_[*i].rank;
  }

  const std::vector<Index>& lower_covers(std::size_t i) const { return lower_[i]; }
  const std::vector<Index>& upper_covers(std::size_t i) const { return upper_[i]; }

  std::vector<Face> faces_of_rank(int r) const {
    std::vector<Face> out;
    for (const auto& f : faces_)
      if (f.rank == r) out.push_back(f);
    return out;
  }

  /// Faces covered by the top.
  std::vector<Face> facets() const {
    std::vector<Face> out;
    for (Index i : lower_.back()) out.push_back(faces_[i]);
    std::sort(out.begin(), out.end(), face_order);
    return out;
  }

  std::vector<Face> proper_faces() const {
    if (faces_.size() <= 2) return {};
    return {faces_.begin() + 1, faces_.end() - 1};
  }

  /// "{a,b,c}" using vertex labels.
  std::string format(VertexSet s) const {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int v) {
      if (!first) out += ',';
      first = false;
      out += v < vertex_count() ? labels_[static_cast<std::size_t>(v)] : std::to_string(v);
    });
    return out + "}";
  }

  /// Same faces and covers with new ranks, re-sorted into storage order.
  FaceLattice rerank(const std::vector<int>& rank) const {
    const std::size_t n = faces_.size();
    std::vector<Index> order(n);
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
      return face_order({faces_[a].shadow, rank[a]}, {faces_[b].shadow, rank[b]});
    });
    std::vector<Index> where(n);
    for (std::size_t k = 0; k < n; ++k) where[order[k]] = static_cast<Index>(k);
    FaceLattice L;
    L.labels_ = labels_;
    L.faces_.resize(n);
    L.lower_.resize(n);
    L.upper_.resize(n);
    L.index_.reserve(n * 2);
    for (std::size_t k = 0; k < n; ++k) {
      const Index old = order[k];
      L.faces_[k] = {faces_[old].shadow, rank[old]};
      L.index_.emplace(faces_[old].shadow, static_cast<Index>(k));
      for (Index c : lower_[old]) L.lower_[k].push_back(where[c]);
      for (Index c : upper_[old]) L.upper_[k].push_back(where[c]);
      std::sort(L.lower_[k].begin(), L.lower_[k].end());
      std::sort(L.upper_[k].begin(), L.upper_[k].end());
    }
    return L;
  }

  int label_index(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw Error(ErrorKind::InvalidParameter, "unknown vertex label '" + label + "'");
    return static_cast<int>(it - labels_.begin());
  }

 private:
  // Lower covers of f: the maximal faces strictly inside f. Small shadows
  // enumerate submasks; large ones scan the face list.
  void compute_covers() {
    const std::size_t n = faces_.size();
    lower_.assign(n, {});
    upper_.assign(n, {});
    // Candidates bucketed by shadow size, largest first.
    std::vector<std::vector<Index>> by_size(static_cast<std::size_t>(kMaxVertices) + 1);
    for (std::size_t i = 0; i < n; ++i) {
      const VertexSet s = faces_[i].shadow;
      const int bits = s.size();
      if (bits == 0) continue;
      for (int b = 0; b < bits; ++b) by_size[static_cast<std::size_t>(b)].clear();
      if (bits < 63 && (std::uint64_t{1} << bits) <= 4 * n) {
        const std::uint64_t full = s.bits();
        for (std::uint64_t sub = (full - 1) & full;; sub = (sub - 1) & full) {
          if (auto j = find(VertexSet(sub))) by_size[static_cast<std::size_t>(std::popcount(sub))].push_back(*j);
          if (sub == 0) break;
        }
      } else {
        for (std::size_t j = 0; j < n; ++j)
          if (faces_[j].shadow.proper_subset_of(s))
            by_size[static_cast<std::size_t>(faces_[j].shadow.size())].push_back(static_cast<Index>(j));
      }
      auto& covers = lower_[i];
      for (int b = bits - 1; b >= 0; --b)
        for (Index c : by_size[static_cast<std::size_t>(b)]) {
          const VertexSet cs = faces_[c].shadow;
          bool maximal = std::none_of(covers.begin(), covers.end(),
                                      [&](Index k) { return cs.subset_of(faces_[k].shadow); });
          if (maximal) covers.push_back(c);
        }
      std::sort(covers.begin(), covers.end());
      for (Index c : covers) upper_[c].push_back(static_cast<Index>(i));
    }
  }

  std::vector<std::string> labels_;
  std::vector<Face> faces_;
  std::unordered_map<VertexSet, Index> index_;
  std::vector<std::vector<Index>> lower_;
  std::vector<std::vector<Index>> upper_;
};

namespace detail {

/// Longest-chain ranks from the bottom, following the cover relation.
/// Faces are visited by shadow size, which is topological whatever the
/// stored ranks say.
inline std::vector<int> longest_chain_ranks(const FaceLattice& L) {
  std::vector<std::size_t> order(L.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return L.face(a).shadow.size() < L.face(b).shadow.size(); });
  std::vector<int> rank(L.size(), 0);
  for (auto i : order)
    for (auto c : L.lower_covers(i)) rank[i] = std::max(rank[i], rank[c] + 1);
  return rank;
}

/// Maximal elements of the proper part of a shadow family.
inline std::vector<VertexSet> maximal_proper(const std::vector<VertexSet>& family, VertexSet top) {
  std::vector<VertexSet> sorted;
  for (auto s : family)
    if (s != top) sorted.push_back(s);
  std::sort(sorted.begin(), sorted.end(), [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
  std::vector<VertexSet> out;
  for (auto s : sorted)
    if (std::none_of(out.begin(), out.end(), [&](VertexSet m) { return s.subset_of(m); })) out.push_back(s);
  return out;
}

/// Finds a pair of members whose intersection is not a member, if any.
/// When every member is the intersection of the maximal members above it,
/// checking member-vs-maximal pairs suffices.
template <typename Contains>
std::optional<std::pair<VertexSet, VertexSet>> find_unclosed_pair(const std::vector<VertexSet>& family,
                                                                  VertexSet top, Contains&& contains) {
  const auto maxima = maximal_proper(family, top);
  bool generated = true;
  for (auto s : family) {
    if (s == top) continue;
    VertexSet meet = top;
    for (auto m : maxima)
      if (s.subset_of(m)) meet &= m;
    if (meet != s) {
      generated = false;
      break;
    }
  }
  if (generated) {
    for (auto s : family)
      for (auto m : maxima)
        if (!contains(s & m)) return std::make_pair(s, m);
    return std::nullopt;
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      VertexSet a = family[i], b = family[j];
      if (a.subset_of(b) || b.subset_of(a)) continue;
      if (!contains(a & b)) return std::make_pair(a, b);
    }
  return std::nullopt;
}

}  // namespace detail

/// Builds a lattice from proper-face shadows; the empty set and the full
/// vertex set are added if absent. Ranks are longest-chain lengths.
inline FaceLattice build_from_faces(std::vector<std::string> labels, const std::vector<VertexSet>& shadows) {
  const int n = static_cast<int>(labels.size());
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "a lattice needs at least one vertex");
  if (n > kMaxVertices) throw Error(ErrorKind::CapacityExceeded, "more than 64 vertices");
  const VertexSet all = VertexSet::range(n);

  std::unordered_map<VertexSet, int> seen;
  std::vector<VertexSet> family{VertexSet{}, all};
  seen.emplace(VertexSet{}, 0);
  seen.emplace(all, 0);
  for (auto s : shadows) {
    if (!s.subset_of(all)) throw Error(ErrorKind::InvalidParameter, "shadow uses a vertex outside the label range");
    if (seen.emplace(s, 0).second) family.push_back(s);
  }
  auto contains = [&](VertexSet s) { return seen.count(s) != 0; };

  for (int v = 0; v < n; ++v)
    if (!contains(VertexSet::single(v)))
      throw Error(ErrorKind::NotALattice, "vertex '" + labels[static_cast<std::size_t>(v)] + "' is not a face");
  if (auto bad = detail::find_unclosed_pair(family, all, contains)) {
    auto fmt = [&](VertexSet s) {
      std::string out = "{";
      s.for_each([&](int v) { out += (out.size() > 1 ? "," : "") + labels[static_cast<std::size_t>(v)]; });
      return out + "}";
    };
    throw Error(ErrorKind::NotALattice, "intersection of " + fmt(bad->first) + " and " + fmt(bad->second) +
                                            " is not a face");
  }

  std::vector<Face> faces;
  faces.reserve(family.size());
  for (auto s : family) faces.push_back({s, s.size()});
  FaceLattice L = FaceLattice::assemble(std::move(labels), std::move(faces));
  auto rank = detail::longest_chain_ranks(L);
  for (std::size_t i = 0; i < L.size(); ++i)
    for (auto c : L.lower_covers(i))
      if (rank[c] + 1 != rank[i])
        throw Error(ErrorKind::NotRanked, "cover " + L.format(L.face(c).shadow) + " < " + L.format(L.face(i).shadow) +
                                              " skips a rank");
  return L.rerank(rank);
}

/// All subsets of the given facets (simplicial input).
inline FaceLattice build_from_facets(std::vector<std::string> labels, const std::vector<VertexSet>& facets) {
  std::unordered_map<VertexSet, int> seen;
  std::vector<VertexSet> shadows;
  for (auto f : facets) {
    if (f.size() > 24) throw Error(ErrorKind::CapacityExceeded, "facet too large for subset closure");
    const std::uint64_t full = f.bits();
    for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
      if (sub != 0 && seen.emplace(VertexSet(sub), 0).second) shadows.push_back(VertexSet(sub));
      if (sub == 0) break;
    }
  }
  return build_from_faces(std::move(labels), shadows);
}

/// Faces are all intersections of the given facets.
inline FaceLattice build_from_facet_intersections(std::vector<std::string> labels,
                                                  const std::vector<VertexSet>& facets) {
  std::unordered_map<VertexSet, int> seen;
  std::vector<VertexSet> family;
  for (auto f : facets)
    if (seen.emplace(f, 0).second) family.push_back(f);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      VertexSet m = family[i] & family[j];
      if (seen.emplace(m, 0).second) family.push_back(m);
    }
  return build_from_faces(std::move(labels), family);
}

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  std::string axiom;  // "rank", "lattice", "ranked", "diamond", "connected"
  std::vector<VertexSet> witnesses;
};

struct ValidationReport {
  bool verdict = true;
  std::vector<Violation> violations;

  bool has(const std::string& axiom) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.axiom == axiom; });
  }
};

namespace detail {

/// Faces below z (including z), by DFS over lower covers. `stamp` marks
/// visited faces with `epoch` so the buffer can be reused across calls.
inline void collect_downset(const FaceLattice& L, std::size_t z, std::vector<std::uint32_t>& stamp,
                            std::uint32_t epoch, std::vector<std::uint32_t>& out) {
  out.clear();
  out.push_back(static_cast<std::uint32_t>(z));
  stamp[z] = epoch;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (auto c : L.lower_covers(out[k]))
      if (stamp[c] != epoch) {
        stamp[c] = epoch;
        out.push_back(c);
      }
}

inline bool mask_connected(const std::vector<std::uint64_t>& adj, std::uint64_t nodes) {
  if (nodes == 0) return true;
  std::uint64_t seen = nodes & (~nodes + 1);
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t b = frontier; b != 0; b &= b - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(b))];
    next &= nodes & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == nodes;
}

}  // namespace detail

/// Checks the cellular-pseudomanifold axioms: stored ranks agree with
/// recomputed longest-chain ranks, meets exist, covers step rank by one,
/// rank-gap-2 intervals are diamonds, and rank-gap >= 3 intervals have a
/// connected facet graph. Violations come back in lexicographic shadow order.
inline ValidationReport validate(const FaceLattice& L) {
  ValidationReport report;
  const std::size_t n = L.size();
  auto add = [&](std::string axiom, std::vector<VertexSet> w) {
    report.violations.push_back({std::move(axiom), std::move(w)});
  };

  const auto rank = detail::longest_chain_ranks(L);
  for (std::size_t i = 0; i < n; ++i)
    if (rank[i] != L.face(i).rank) add("rank", {L.face(i).shadow});

  {
    std::vector<VertexSet> family;
    family.reserve(n);
    for (const auto& f : L.faces()) family.push_back(f.shadow);
    if (auto bad = detail::find_unclosed_pair(family, L.top().shadow,
                                              [&](VertexSet s) { return L.contains(s); }))
      add("lattice", {bad->first, bad->second});
  }

  for (std::size_t i = 0; i < n; ++i)
    for (auto c : L.lower_covers(i))
      if (rank[c] + 1 != rank[i]) add("ranked", {L.face(c).shadow, L.face(i).shadow});

  // Diamond: count middle elements of every rank-gap-2 interval.
  std::vector<int> count(n, 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t x = 0; x < n; ++x) {
    touched.clear();
    for (auto y : L.upper_covers(x))
      for (auto z : L.upper_covers(y)) {
        if (rank[z] != rank[x] + 2) continue;
        if (count[z]++ == 0) touched.push_back(z);
      }
    for (auto z : touched) {
      if (count[z] != 2) add("diamond", {L.face(x).shadow, L.face(z).shadow});
      count[z] = 0;
    }
  }

  // Connectivity: Lambda([x,z]) is the subgraph of the coatom graph of z
  // induced on the coatoms above x.
  std::vector<std::uint32_t> stamp(n, 0), down;
  std::uint32_t epoch = 0;
  for (std::size_t z = 0; z < n; ++z) {
    const auto& coatoms = L.lower_covers(z);
    const std::size_t k = coatoms.size();
    if (rank[z] < 3) continue;
    detail::collect_downset(L, z, stamp, ++epoch, down);

    if (k <= 64) {
      std::vector<std::uint64_t> adj(k, 0);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
          auto m = L.find(L.face(coatoms[a]).shadow & L.face(coatoms[b]).shadow);
          if (m && rank[*m] == rank[z] - 2) {
            adj[a] |= std::uint64_t{1} << b;
            adj[b] |= std::uint64_t{1} << a;
          }
        }
      for (auto x : down) {
        if (rank[z] - rank[x] < 3) continue;
        const VertexSet xs = L.face(x).shadow;
        std::uint64_t nodes = 0;
        for (std::size_t a = 0; a < k; ++a)
          if (xs.subset_of(L.face(coatoms[a]).shadow)) nodes |= std::uint64_t{1} << a;
        if (!detail::mask_connected(adj, nodes)) add("connected", {xs, L.face(z).shadow});
      }
    } else {
      std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
          auto m = L.find(L.face(coatoms[a]).shadow & L.face(coatoms[b]).shadow);
          if (m && rank[*m] == rank[z] - 2) adj[a][b] = adj[b][a] = true;
        }
      for (auto x : down) {
        if (rank[z] - rank[x] < 3) continue;
        const VertexSet xs = L.face(x).shadow;
        std::vector<std::size_t> nodes;
        for (std::size_t a = 0; a < k; ++a)
          if (xs.subset_of(L.face(coatoms[a]).shadow)) nodes.push_back(a);
        std::vector<bool> seen(nodes.size(), false);
        std::vector<std::size_t> stack{0};
        if (!nodes.empty()) seen[0] = true;
        std::size_t reached = nodes.empty() ? 0 : 1;
        while (!stack.empty() && !nodes.empty()) {
          std::size_t u = stack.back();
          stack.pop_back();
          for (std::size_t w = 0; w < nodes.size(); ++w)
            if (!seen[w] && adj[nodes[u]][nodes[w]]) {
              seen[w] = true;
              ++reached;
              stack.push_back(w);
            }
        }
        if (reached != nodes.size()) add("connected", {xs, L.face(z).shadow});
      }
    }
  }

  std::stable_sort(report.violations.begin(), report.violations.end(), [](const Violation& a, const Violation& b) {
    return std::lexicographical_compare(a.witnesses.begin(), a.witnesses.end(), b.witnesses.begin(),
                                        b.witnesses.end(), VertexSet::lex_less);
  });
  report.verdict = report.violations.empty();
  return report;
}

inline bool is_valid(const FaceLattice& L) { return validate(L).verdict; }

// ---------------------------------------------------------------------------
// Order operations

inline Face meet(const FaceLattice& L, const Face& f, const Face& g) {
  VertexSet s = f.shadow & g.shadow;
  return {s, L.rank_of(s)};
}

/// Least face containing both; in a lattice this is the intersection of all
/// faces containing the union.
inline Face join_faces(const FaceLattice& L, const Face& f, const Face& g) {
  const VertexSet u = f.shadow | g.shadow;
  if (auto i = L.find(u)) return L.face(*i);
  VertexSet best = L.top().shadow;
  for (const auto& h : L.faces())
    if (u.subset_of(h.shadow)) best &= h.shadow;
  return {best, L.rank_of(best)};
}

/// The interval [a, b], re-based so that its vertices are the atoms of the
/// interval. Atom labels are the labels of the vertices each atom adds to a.
inline FaceLattice interval(const FaceLattice& L, const Face& a, const Face& b) {
  if (!L.contains(a.shadow) || !L.contains(b.shadow) || !a.shadow.subset_of(b.shadow))
    throw Error(ErrorKind::NotComparable, L.format(a.shadow) + " is not below " + L.format(b.shadow));
  if (a.shadow == b.shadow) throw Error(ErrorKind::InvalidParameter, "interval of a single face");
  const int base = L.rank_of(a.shadow);

  std::vector<VertexSet> atoms;
  std::vector<std::string> labels;
  for (auto c : L.upper_covers(*L.find(a.shadow))) {
    const VertexSet cs = L.face(c).shadow;
    if (!cs.subset_of(b.shadow)) continue;
    atoms.push_back(cs);
  }
  std::sort(atoms.begin(), atoms.end(), VertexSet::lex_less);
  if (atoms.size() > kMaxVertices) throw Error(ErrorKind::CapacityExceeded, "interval has more than 64 atoms");
  for (auto cs : atoms) {
    std::string label;
    (cs - a.shadow).for_each([&](int v) {
      if (!label.empty()) label += '+';
      label += L.labels()[static_cast<std::size_t>(v)];
    });
    labels.push_back(label);
  }

  std::vector<Face> faces;
  for (const auto& f : L.faces()) {
    if (!a.shadow.subset_of(f.shadow) || !f.shadow.subset_of(b.shadow)) continue;
    VertexSet s;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (atoms[i].subset_of(f.shadow)) s.insert(static_cast<int>(i));
    faces.push_back({s, f.rank - base});
  }
  return FaceLattice::assemble(std::move(labels), std::move(faces));
}

/// [bottom, g]
inline FaceLattice boundary(const FaceLattice& L, const Face& g) { return interval(L, L.bottom(), g); }
/// [f, top]
inline FaceLattice link(const FaceLattice& L, const Face& f) { return interval(L, f, L.top()); }

// ---------------------------------------------------------------------------
// Graphs and counts

struct Graph {
  std::vector<VertexSet> nodes;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(nodes.size());
    for (auto [u, v] : edges) {
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
  }

  bool connected() const {
    if (nodes.empty()) return true;
    auto adj = adjacency();
    std::vector<bool> seen(nodes.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(u)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          ++reached;
          stack.push_back(w);
        }
    }
    return reached == nodes.size();
  }

  bool complete() const { return edges.size() == nodes.size() * (nodes.size() - 1) / 2; }

  std::vector<int> degrees() const {
    std::vector<int> deg(nodes.size(), 0);
    for (auto [u, v] : edges) {
      ++deg[static_cast<std::size_t>(u)];
      ++deg[static_cast<std::size_t>(v)];
    }
    return deg;
  }
};

/// Lambda(L): facets, adjacent when their meet has rank top_rank - 2.
inline Graph facet_graph(const FaceLattice& L) {
  Graph g;
  for (const auto& f : L.facets()) g.nodes.push_back(f.shadow);
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < g.nodes.size(); ++j) {
      auto m = L.find(g.nodes[i] & g.nodes[j]);
      if (m && L.face(*m).rank == L.top_rank() - 2) g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return g;
}

/// Lambda*(L): vertices, adjacent when their join is 1-dimensional.
inline Graph edge_graph(const FaceLattice& L) {
  Graph g;
  const int n = L.vertex_count();
  for (int v = 0; v < n; ++v) g.nodes.push_back(VertexSet::single(v));
  if (L.dim() < 0) return g;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      Face j = join_faces(L, {VertexSet::single(u), 1}, {VertexSet::single(v), 1});
      if (j.rank == 2) g.edges.emplace_back(u, v);
    }
  return g;
}

/// Number of i-faces for i = 0..dim.
inline std::vector<std::size_t> f_vector(const FaceLattice& L) {
  std::vector<std::size_t> f(static_cast<std::size_t>(std::max(0, L.dim() + 1)), 0);
  for (const auto& face : L.faces())
    if (face.rank >= 1 && face.rank <= L.dim() + 1) ++f[static_cast<std::size_t>(face.rank - 1)];
  return f;
}

/// e(L) = n - d - 2
inline int excess(const FaceLattice& L) { return L.vertex_count() - L.dim() - 2; }

/// Euler characteristic of the barycentric subdivision: the signed count of
/// chains of proper faces, accumulated along the cover relation.
inline long long euler_char_of_bsd(const FaceLattice& L) {
  const std::size_t n = L.size();
  if (n <= 2) return 0;
  // g[f] = sum over chains of proper faces ending at f of (-1)^(len-1)
  std::vector<long long> g(n, 0);
  std::vector<std::uint32_t> stamp(n, 0), down;
  std::uint32_t epoch = 0;
  long long chi = 0;
  for (std::size_t f = 1; f + 1 < n; ++f) {
    detail::collect_downset(L, f, stamp, ++epoch, down);
    long long below = 0;
    for (auto h : down)
      if (h != f && h != 0) below += g[h];
    g[f] = 1 - below;
    chi += g[f];
  }
  return chi;
}

inline bool is_simplicial(const FaceLattice& L) {
  for (std::size_t i = 0; i + 1 < L.size(); ++i)
    if (L.face(i).shadow.size() != L.face(i).rank) return false;
  return true;
}

/// Complete 1-skeleton: every pair of vertices spans an edge.
inline bool is_neighbourly(const FaceLattice& L) { return edge_graph(L).complete(); }

}  // namespace cellman
