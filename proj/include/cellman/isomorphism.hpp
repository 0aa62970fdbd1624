#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "cellman/lattice.hpp"

namespace cellman {

namespace detail {

/// Per-vertex invariant: counts of incident faces by (rank, shadow size),
/// refined twice by the invariants of edge-graph neighbours.
inline std::vector<long long> vertex_colours(const FaceLattice& L) {
  const auto n = static_cast<std::size_t>(L.vertex_count());
  std::vector<std::map<std::pair<int, int>, int>> profile(n);
  for (const auto& f : L.faces())
    f.shadow.for_each([&](int v) { ++profile[static_cast<std::size_t>(v)][{f.rank, f.shadow.size()}]; });

  std::vector<std::vector<long long>> sig(n);
  for (std::size_t v = 0; v < n; ++v)
    for (const auto& [key, count] : profile[v]) sig[v].insert(sig[v].end(), {key.first, key.second, count});

  const auto adj = edge_graph(L).adjacency();
  for (int round = 0; round < 2; ++round) {
    std::vector<std::vector<long long>> next(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::vector<long long>> around;
      for (int w : adj[v]) around.push_back(sig[static_cast<std::size_t>(w)]);
      std::sort(around.begin(), around.end());
      next[v] = sig[v];
      next[v].push_back(-1);
      for (const auto& a : around) {
        next[v].insert(next[v].end(), a.begin(), a.end());
        next[v].push_back(-2);
      }
    }
    sig = std::move(next);
  }

  // Colours must be comparable across lattices, so hash the signatures.
  std::vector<long long> colour(n);
  for (std::size_t v = 0; v < n; ++v) {
    unsigned long long h = 1469598103934665603ULL;
    for (long long x : sig[v]) h = (h ^ static_cast<unsigned long long>(x)) * 1099511628211ULL;
    colour[v] = static_cast<long long>(h);
  }
  return colour;
}

}  // namespace detail

/// A vertex bijection (image[v] in L2 for each v in L1) carrying the faces
/// of L1 exactly onto the faces of L2, or nullopt if none exists.
/// Backtracking over colour classes; each face is checked as soon as all of
/// its vertices are mapped.
inline std::optional<std::vector<int>> is_isomorphic(const FaceLattice& L1, const FaceLattice& L2) {
  const int n = L1.vertex_count();
  if (n != L2.vertex_count() || L1.size() != L2.size() || L1.top_rank() != L2.top_rank()) return std::nullopt;

  auto profile = [](const FaceLattice& L) {
    std::vector<std::pair<int, int>> p;
    for (const auto& f : L.faces()) p.emplace_back(f.rank, f.shadow.size());
    std::sort(p.begin(), p.end());
    return p;
  };
  if (profile(L1) != profile(L2)) return std::nullopt;
  if (L1.faces() == L2.faces()) {
    std::vector<int> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);
    return identity;
  }

  const auto c1 = detail::vertex_colours(L1);
  const auto c2 = detail::vertex_colours(L2);
  {
    auto s1 = c1, s2 = c2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }

  // Vertex order: rarest colour first, then greedily the vertex sharing the
  // most edges with those already placed.
  std::map<long long, int> colour_size;
  for (auto c : c1) ++colour_size[c];
  const auto adj = edge_graph(L1).adjacency();
  std::vector<int> order;
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  std::vector<int> links(static_cast<std::size_t>(n), 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      if (best < 0) {
        best = v;
        continue;
      }
      auto key = [&](int u) {
        return std::make_pair(-links[static_cast<std::size_t>(u)], colour_size[c1[static_cast<std::size_t>(u)]]);
      };
      if (key(v) < key(best)) best = v;
    }
    placed[static_cast<std::size_t>(best)] = true;
    order.push_back(best);
    for (int w : adj[static_cast<std::size_t>(best)]) ++links[static_cast<std::size_t>(w)];
  }

  std::vector<int> position(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) position[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
  std::vector<std::vector<Face>> bucket(static_cast<std::size_t>(n));
  for (std::size_t i = 1; i + 1 < L1.size(); ++i) {
    const Face& f = L1.face(i);
    int last = 0;
    f.shadow.for_each([&](int v) { last = std::max(last, position[static_cast<std::size_t>(v)]); });
    bucket[static_cast<std::size_t>(last)].push_back(f);
  }

  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  auto consistent = [&](int depth) {
    for (const Face& f : bucket[static_cast<std::size_t>(depth)]) {
      auto j = L2.find(map_set(f.shadow, image));
      if (!j || L2.face(*j).rank != f.rank) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    const int v = order[static_cast<std::size_t>(depth)];
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || c2[static_cast<std::size_t>(w)] != c1[static_cast<std::size_t>(v)])
        continue;
      image[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = true;
      if (consistent(depth) && self(self, depth + 1)) return true;
      used[static_cast<std::size_t>(w)] = false;
      image[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return image;
}

inline bool isomorphic(const FaceLattice& a, const FaceLattice& b) { return is_isomorphic(a, b).has_value(); }

}  // namespace cellman
