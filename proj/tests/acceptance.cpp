// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cellman.hpp"
#include "cellman/cli.hpp"

using namespace cellman;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

FaceLattice s(int d) { return standard_sphere(d); }

int cli_count(std::vector<std::string> args) {
  args.insert(args.begin(), {"cellman", "--json"});
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  if (run_cli(static_cast<int>(argv.size()), argv.data(), out, err) != 0) return -1;
  return nlohmann::json::parse(out.str())["count"].get<int>();
}

// Closed forms, written out here rather than taken from the library.
long long floor24(long long num) { return num >= 0 ? num / 24 : -((-num + 23) / 24); }
long long excess1_formula(int d) { return (d + 1) * (d + 1) / 4; }
long long reducible_formula(long long d) { return floor24((d * d + 1) * (2 * d - 1) + 9); }
long long neighbourly_formula(long long d) { return floor24(((d - 3) * (d - 3) + 1) * (2 * d - 7) + 9); }
long long printed_formula(long long d) { return floor24((d * d - 6 * d - 8) * (2 * d - 7) + 9); }

// Parameter tuples counted directly.
long long reducible_tuples(int d, int lo) {
  long long c = 0;
  for (int b1 = lo; b1 <= d; ++b1)
    for (int b2 = b1; b2 <= d; ++b2)
      for (int b3 = b2; b3 <= d; ++b3) c += b1 + b2 + b3 == d - 2;
  for (int d1 = lo; d1 <= d; ++d1)
    for (int d2 = d1; d2 <= d; ++d2)
      for (int d3 = -1; d3 <= d; ++d3)
        for (int d4 = lo; d4 <= d; ++d4) c += d1 + d2 + d3 + d4 == d - 4;
  return c;
}

bool pairwise_distinct(const std::vector<ClassificationItem>& items) {
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = i + 1; j < items.size(); ++j)
      if (isomorphic(items[i].lattice, items[j].lattice)) return false;
  return true;
}

FaceLattice s1_example() {
  auto f = [](std::initializer_list<int> vs) { return VertexSet::of(vs); };
  return build_from_facets({"a1", "a2", "b", "c", "d", "e"},
                           {f({0, 2, 3}), f({0, 3, 4}), f({0, 4, 5}), f({0, 1, 5}), f({0, 1, 2}), f({1, 2, 3}),
                            f({1, 3, 4}), f({1, 4, 5})});
}

/// Catalog items of dimension <= 4 plus assorted named lattices.
std::vector<FaceLattice> catalog() {
  std::vector<FaceLattice> out;
  for (int d = 1; d <= 4; ++d)
    for (auto& it : enumerate_excess1(d)) out.push_back(it.lattice);
  for (int d = 2; d <= 4; ++d)
    for (auto& it : enumerate_reducible_excess2(d)) out.push_back(it.lattice);
  for (int d = -1; d <= 4; ++d) out.push_back(s(d));
  for (int n = 3; n <= 7; ++n) out.push_back(cycle(n));
  out.push_back(octahedron());
  out.push_back(projective_plane_6());
  out.push_back(tensor(cycle(5), s(-1)));
  out.push_back(s1_example());
  out.push_back(join(cycle(5), s(0)));
  return out;
}

std::set<std::uint64_t> shadows(const FaceLattice& L) {
  std::set<std::uint64_t> out;
  for (const auto& f : L.faces()) out.insert(f.shadow.bits());
  return out;
}

std::set<std::set<std::string>> class_labels(const FaceLattice& L) {
  std::set<std::set<std::string>> out;
  for (auto c : tilde_partition(L).classes) {
    std::set<std::string> names;
    c.for_each([&](int v) { names.insert(L.labels()[static_cast<std::size_t>(v)]); });
    out.insert(names);
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome excess1_counts() {
  Outcome o;
  const std::vector<long long> expected{1, 2, 4, 6, 9, 12, 16, 20, 25, 30};
  for (int d = 1; d <= 10; ++d) {
    const long long want = excess1_formula(d);
    o.expect(want == expected[static_cast<std::size_t>(d - 1)], "formula value at d=" + std::to_string(d));
    o.expect(cli_count({"enumerate", "--excess", "1", "--dim", std::to_string(d)}) == want,
             "enumerate count at d=" + std::to_string(d));
    auto items = enumerate_excess1(d);
    o.expect(static_cast<long long>(items.size()) == want, "library count at d=" + std::to_string(d));
    std::vector<char> ok(items.size());
    parallel_for(items.size(), [&](std::size_t i) {
      const auto& L = items[i].lattice;
      ok[i] = is_valid(L) && L.dim() == d && excess(L) == 1;
    });
    for (std::size_t i = 0; i < items.size(); ++i) o.expect(ok[i], items[i].tag() + " fails validation");
    if (d <= 6) o.expect(pairwise_distinct(items), "isomorphic items at d=" + std::to_string(d));
  }
  return o;
}

Outcome brute_force_oracle() {
  Outcome o;
  auto five = brute_force_enumerate(2, 5);
  o.expect(five.size() == 2, "d=2 n=5 found " + std::to_string(five.size()));
  if (five.size() == 2) {
    const FaceLattice a = join(s(0), s(1)), b = tensor(join(s(0), s(0)), s(-1));
    const bool match = (isomorphic(five[0], a) && isomorphic(five[1], b)) ||
                       (isomorphic(five[0], b) && isomorphic(five[1], a));
    o.expect(match, "d=2 n=5 classes differ from S0*S1 and the square pyramid");
  }
  for (int n = 3; n <= 10; ++n) {
    auto found = brute_force_enumerate(1, n);
    o.expect(found.size() == 1 && isomorphic(found[0], cycle(n)), "d=1 n=" + std::to_string(n));
  }
  return o;
}

Outcome reducible_counts() {
  Outcome o;
  std::string values;
  for (int d = 2; d <= 8; ++d) {
    const long long want = reducible_formula(d);
    values += (values.empty() ? "" : ",") + std::to_string(want);
    o.expect(want == reducible_tuples(d, 0), "formula disagrees with tuple count at d=" + std::to_string(d));
    auto items = enumerate_reducible_excess2(d);
    o.expect(static_cast<long long>(items.size()) == want, "enumeration length at d=" + std::to_string(d));
    std::vector<char> ok(items.size());
    parallel_for(items.size(), [&](std::size_t i) {
      ok[i] = is_valid(items[i].lattice) && excess(items[i].lattice) == 2 && is_reducible(items[i].lattice);
    });
    for (std::size_t i = 0; i < items.size(); ++i) o.expect(ok[i], items[i].tag() + " is not a reducible excess-2 item");
    if (d <= 5) o.expect(pairwise_distinct(items), "isomorphic items at d=" + std::to_string(d));
  }
  o.note = "counts d=2..8: " + values;
  return o;
}

Outcome neighbourly_filter() {
  Outcome o;
  for (int d = 5; d <= 10; ++d) {
    auto all = enumerate_reducible_excess2(d);
    auto filtered = enumerate_reducible_excess2(d, true);
    std::vector<char> nb(all.size());
    parallel_for(all.size(), [&](std::size_t i) { nb[i] = is_neighbourly(all[i].lattice); });
    std::vector<std::string> by_predicate, by_filter;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (nb[i]) by_predicate.push_back(all[i].tag());
    for (const auto& it : filtered) by_filter.push_back(it.tag());
    o.expect(by_predicate == by_filter, "filter differs from predicate at d=" + std::to_string(d));
    o.expect(static_cast<long long>(filtered.size()) == neighbourly_formula(d),
             "count differs from the proof expression at d=" + std::to_string(d));
    o.expect(static_cast<long long>(filtered.size()) == reducible_tuples(d, 1), "tuple count at d=" + std::to_string(d));
  }
  const long long enumerated = static_cast<long long>(enumerate_reducible_excess2(10, true).size());
  o.expect(count_neighbourly_printed(10) == printed_formula(10), "printed formula value");
  o.note = "d=10: enumeration " + std::to_string(enumerated) + ", printed formula " +
           std::to_string(printed_formula(10)) + (enumerated != printed_formula(10) ? " (mismatch)" : "");
  return o;
}

Outcome identities() {
  Outcome o;
  auto cat = catalog();
  for (const auto& L : cat) {
    o.expect(isomorphic(dual(dual(L)), L), "dual involution fails on n=" + std::to_string(L.vertex_count()));
    o.expect(isomorphic(join(L, s(-1)), L), "join with S^-1 changes n=" + std::to_string(L.vertex_count()));
  }
  std::vector<FaceLattice> pool{s(0), s(1), s(2), cycle(4), cycle(5), octahedron(), tensor(cycle(5), s(-1)), s1_example()};
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int t = 0; t < 20; ++t) {
    const auto& a = pool[pick(rng)];
    const auto& b = pool[pick(rng)];
    const int d1 = a.dim(), d2 = b.dim(), n1 = a.vertex_count(), n2 = b.vertex_count();
    auto T = tensor(a, b), J = join(a, b);
    o.expect(is_valid(T) && is_valid(J), "product fails validation");
    o.expect(T.dim() - 2 == d1 + d2 && J.dim() - 1 == d1 + d2, "product dimension");
    o.expect(T.vertex_count() == n1 + n2 && J.vertex_count() == n1 + n2, "product vertex count");
    o.expect(excess(T) == excess(a) + excess(b) && excess(J) - 1 == excess(T), "product excess");
    if (d1 >= 1 && d2 >= 1) {
      auto C = cartesian(a, b);
      o.expect(is_valid(C) && C.dim() == d1 + d2 && C.vertex_count() == n1 * n2, "cartesian arithmetic");
    }
  }
  o.expect(isomorphic(tensor(s(-1), s(-1)), s(0)), "S^-1 (x) S^-1");
  for (int b = -1; b <= 4; ++b) o.expect(isomorphic(tensor(s(b), s(-1)), s(b + 1)), "S^b (x) S^-1");
  for (int b = 0; b <= 3; ++b)
    for (int c = 0; b + c <= 3; ++c) o.expect(isomorphic(tensor(s(b), s(c)), s(b + c + 2)), "S^b (x) S^c");
  return o;
}

Outcome tilde_relation() {
  Outcome o;
  using Classes = std::set<std::set<std::string>>;
  o.expect(class_labels(join(s(0), s(1))) == Classes{{"L:0", "L:1"}, {"R:0", "R:1", "R:2"}}, "S0*S1 classes");
  o.expect(class_labels(tensor(join(s(0), s(0)), s(-1))) == Classes{{"L:L:0", "L:L:1"}, {"L:R:0", "L:R:1"}, {"R:0"}},
           "square pyramid classes");
  o.expect(class_labels(octahedron()) == Classes{{"L:L:0", "L:L:1"}, {"L:R:0", "L:R:1"}, {"R:0", "R:1"}},
           "octahedron classes");
  o.expect(is_primitive(tensor(cycle(5), s(-1))), "pentagonal pyramid not primitive");
  o.expect(is_primitive(projective_plane_6()), "RP2 not primitive");

  for (const auto& L : catalog()) {
    auto P = tilde_partition(L);
    for (auto c : P.classes) {
      if (c.size() < 2 || L.dim() < 0) continue;
      for (const auto& f : L.facets()) {
        // Every facet misses at most one member of a class.
        o.expect((c - f.shadow).size() <= 1, "facet avoids two related vertices");
      }
    }
    std::vector<VertexSet> choices{L.vertex_set()};
    for (auto c : P.classes) {
      std::vector<VertexSet> next;
      for (auto base : choices)
        for (int v : c.elements()) next.push_back(base - VertexSet::single(v));
      choices = std::move(next);
      if (choices.size() > 4096) break;
    }
    for (auto f : choices) {
      auto idx = L.find(f);
      o.expect(idx && L.face(*idx).rank == f.size(), "transversal complement is not a simplex face");
    }
  }
  return o;
}

Outcome decomposition() {
  Outcome o;
  int reducible = 0, proper = 0;
  for (const auto& L : catalog()) {
    if (is_reducible(L)) {
      ++reducible;
      o.expect(isomorphic(rejoin(decompose(L)), L), "decompose/rejoin roundtrip");
    }
    if (L.vertex_count() <= 8 && is_proper(L)) {
      ++proper;
      auto Q = quotient(L);
      std::vector<int> mult;
      for (auto c : tilde_partition(L).classes) mult.push_back(c.size());
      o.expect(isomorphic(inflate(Q, mult), L), "quotient/inflate roundtrip");
    }
  }
  o.note = std::to_string(reducible) + " reducible, " + std::to_string(proper) + " proper items";
  return o;
}

Outcome gale_suite() {
  Outcome o;
  GaleDiagram pentagon{20, {"1", "2", "3", "4", "5"}, {0, 4, 8, 12, 16}};
  GaleDiagram oct{6, {"a1", "a2", "b1", "b2", "c1", "c2"}, {0, 0, 2, 2, 4, 4}};
  o.expect(isomorphic(sphere_from_diagram(pentagon), cycle(5)), "pentagon diagram");
  o.expect(isomorphic(sphere_from_diagram(oct), join(join(s(0), s(0)), s(0))), "octahedron diagram");

  std::vector<FaceLattice> targets{cycle(5)};
  for (int d = 1; d <= 2; ++d)
    for (auto& it : enumerate_excess1(d))
      if (excess(it.lattice) == 2) targets.push_back(it.lattice);
  for (auto& it : enumerate_reducible_excess2(2)) targets.push_back(it.lattice);
  for (const auto& L : targets) {
    auto G = gale_search(L);
    o.expect(G && shadows(sphere_from_diagram(*G)) == shadows(L), "no diagram for an excess-2 catalog item");
  }
  o.expect(!gale_search(projective_plane_6()), "RP2 certified");
  o.note = std::to_string(targets.size()) + " certified";
  return o;
}

Outcome join_face_reduction() {
  Outcome o;
  auto L = join(tensor(join(s(0), s(0)), s(-1)), s(0));
  auto faces = find_join_faces(L);
  o.expect(faces.size() == 1 && faces[0].face.shadow.size() == 4, "expected the quadrilateral join face");
  if (faces.empty()) return o;
  auto M = reduce_join_face(L, faces[0]);
  o.expect(is_valid(M) && is_simplicial(M) && excess(M) == 2 && M.dim() == 3, "reduced lattice");
  o.expect(gale_search(L).has_value(), "input not certified");
  o.expect(gale_search(M).has_value(), "output not certified");
  return o;
}

Outcome topology() {
  Outcome o;
  int spheres = 0;
  for (const auto& L : catalog()) {
    if (excess(L) != 2 || L.vertex_count() > 7 || !gale_search(L)) continue;
    ++spheres;
    o.expect(euler_char_of_bsd(L) == 1 + (L.dim() % 2 == 0 ? 1 : -1), "Euler characteristic of a certified sphere");
  }
  o.expect(spheres > 0, "no certified spheres");
  o.expect(euler_char_of_bsd(cartesian(cycle(3), cycle(3))) == 0, "torus");
  o.expect(euler_char_of_bsd(projective_plane_6()) == 1, "RP2");
  o.note = std::to_string(spheres) + " certified spheres";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"excess-1 catalog counts d=1..10", excess1_counts},
      {"brute-force oracle agreement", brute_force_oracle},
      {"reducible excess-2 counts d=2..8", reducible_counts},
      {"neighbourly filter d=5..10", neighbourly_filter},
      {"product and duality identities", identities},
      {"~-relation classes and class lemmas", tilde_relation},
      {"decompose and quotient roundtrips", decomposition},
      {"Gale diagrams and certification", gale_suite},
      {"join-face reduction instance", join_face_reduction},
      {"Euler characteristic sanity", topology},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.failures.empty();
    failed += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first;
    if (!o.note.empty()) std::cout << " (" << o.note << ")";
    std::cout << " " << std::fixed << std::setprecision(1) << secs << "s\n";
    for (std::size_t k = 0; k < o.failures.size() && k < 5; ++k) std::cout << "    " << o.failures[k] << "\n";
  }
  return failed == 0 ? 0 : 1;
}
