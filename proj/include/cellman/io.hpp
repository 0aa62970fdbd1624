#pragma once

// Lattice and diagram files (JSON) and catalog manifests.
//
// Lattice file: {"vertices": [...], "faces": [[...], ...]} listing proper
// faces as ascending index arrays; the empty set and the vertex set are
// implicit. "facets" may replace "faces" for simplicial input.
// Diagram file: {"order": 10, "points": {"v1": 0, "c": "C", ...}}.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cellman/classification.hpp"
#include "cellman/gale.hpp"
#include "cellman/lattice.hpp"
#include "cellman/symmetry.hpp"

namespace cellman {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path.string() + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidParameter, path.string() + ": cannot write");
  out << text;
}

inline ordered_json parse_json(const std::string& text, const std::string& where) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, where + ": " + e.what());
  }
}

inline std::vector<std::string> parse_labels(const ordered_json& j, const std::string& where) {
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw Error(ErrorKind::ParseError, where + ": missing \"vertices\" array");
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
    const auto& v = j["vertices"][i];
    if (!v.is_string() || v.get<std::string>().empty())
      throw Error(ErrorKind::ParseError, where + ": vertices[" + std::to_string(i) + "] must be a non-empty string");
    if (!seen.insert(v.get<std::string>()).second)
      throw Error(ErrorKind::ParseError, where + ": vertices[" + std::to_string(i) + "] repeats '" +
                                             v.get<std::string>() + "'");
    labels.push_back(v.get<std::string>());
  }
  if (labels.empty()) throw Error(ErrorKind::ParseError, where + ": no vertices");
  if (labels.size() > static_cast<std::size_t>(kMaxVertices))
    throw Error(ErrorKind::CapacityExceeded, where + ": more than 64 vertices");
  return labels;
}

inline std::vector<VertexSet> parse_sets(const ordered_json& arr, const std::string& key, int n,
                                         const std::string& where) {
  if (!arr.is_array()) throw Error(ErrorKind::ParseError, where + ": \"" + key + "\" must be an array");
  std::vector<VertexSet> out;
  std::unordered_map<VertexSet, std::size_t> first;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = where + ": " + key + "[" + std::to_string(i) + "]";
    if (!arr[i].is_array()) throw Error(ErrorKind::ParseError, at + " must be an array");
    VertexSet s;
    for (const auto& x : arr[i]) {
      if (!x.is_number_integer()) throw Error(ErrorKind::ParseError, at + " holds a non-integer");
      const auto v = x.get<long long>();
      if (v < 0 || v >= n) throw Error(ErrorKind::ParseError, at + " index " + std::to_string(v) + " out of range");
      if (s.contains(static_cast<int>(v)))
        throw Error(ErrorKind::ParseError, at + " repeats index " + std::to_string(v));
      s.insert(static_cast<int>(v));
    }
    if (s.empty()) throw Error(ErrorKind::ParseError, at + " is empty (the empty face is implicit)");
    if (auto [it, fresh] = first.emplace(s, i); !fresh)
      throw Error(ErrorKind::ParseError, at + " duplicates " + key + "[" + std::to_string(it->second) + "]");
    out.push_back(s);
  }
  return out;
}

}  // namespace detail

/// Parses a lattice document. Unless raw, the result must validate.
inline FaceLattice lattice_from_json(const ordered_json& j, bool raw = false, const std::string& where = "input") {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, where + ": expected an object");
  auto labels = detail::parse_labels(j, where);
  const int n = static_cast<int>(labels.size());
  const bool has_faces = j.contains("faces"), has_facets = j.contains("facets");
  if (has_faces == has_facets) throw Error(ErrorKind::ParseError, where + ": need exactly one of \"faces\", \"facets\"");

  FaceLattice L;
  try {
    if (has_faces) {
      auto faces = detail::parse_sets(j["faces"], "faces", n, where);
      const VertexSet all = VertexSet::range(n);
      for (std::size_t i = 0; i < faces.size(); ++i)
        if (faces[i] == all && n > 1)
          throw Error(ErrorKind::ParseError, where + ": faces[" + std::to_string(i) + "] is the whole vertex set");
      L = build_from_faces(std::move(labels), faces);
    } else {
      L = build_from_facets(std::move(labels), detail::parse_sets(j["facets"], "facets", n, where));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::CapacityExceeded) throw;
    throw Error(ErrorKind::ValidationError, where + ": " + e.what());
  }
  if (!raw) {
    auto report = validate(L);
    if (!report.verdict) {
      std::string axioms;
      for (const auto& v : report.violations) axioms += (axioms.empty() ? "" : ", ") + v.axiom;
      throw Error(ErrorKind::ValidationError, where + ": fails " + axioms);
    }
  }
  return L;
}

inline FaceLattice parse_lattice(const std::string& text, bool raw = false, const std::string& where = "input") {
  return lattice_from_json(detail::parse_json(text, where), raw, where);
}

inline FaceLattice load_lattice(const std::filesystem::path& path, bool raw = false) {
  return parse_lattice(detail::read_file(path), raw, path.string());
}

/// Deterministic text: faces in lexicographic order, one per line.
inline std::string format_lattice(const FaceLattice& L) {
  std::vector<VertexSet> faces;
  for (const auto& f : L.proper_faces()) faces.push_back(f.shadow);
  std::sort(faces.begin(), faces.end(), VertexSet::lex_less);
  std::string out = "{\n  \"vertices\": " + ordered_json(L.labels()).dump() + ",\n  \"faces\": [";
  for (std::size_t i = 0; i < faces.size(); ++i)
    out += std::string(i ? "," : "") + "\n    " + ordered_json(faces[i].elements()).dump();
  out += faces.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

inline void save_lattice(const FaceLattice& L, const std::filesystem::path& path) {
  detail::write_file(path, format_lattice(L));
}

// ---------------------------------------------------------------------------
// Diagrams

inline GaleDiagram diagram_from_json(const ordered_json& j, const std::string& where = "input") {
  if (!j.is_object() || !j.contains("order") || !j["order"].is_number_integer())
    throw Error(ErrorKind::ParseError, where + ": missing integer \"order\"");
  if (!j.contains("points") || !j["points"].is_object())
    throw Error(ErrorKind::ParseError, where + ": missing \"points\" object");
  GaleDiagram G;
  G.order = j["order"].get<int>();
  if (G.order < 2 || G.order % 2 != 0) throw Error(ErrorKind::ParseError, where + ": order must be even and >= 2");
  for (const auto& [label, pos] : j["points"].items()) {
    if (label.empty()) throw Error(ErrorKind::ParseError, where + ": empty point label");
    if (pos.is_string() && pos.get<std::string>() == "C") {
      G.ray.push_back(kCenter);
    } else if (pos.is_number_integer() && pos.get<long long>() >= 0 && pos.get<long long>() < G.order) {
      G.ray.push_back(pos.get<int>());
    } else {
      throw Error(ErrorKind::ParseError, where + ": points." + label + " must be a ray in [0, order) or \"C\"");
    }
    G.labels.push_back(label);
  }
  if (G.labels.empty()) throw Error(ErrorKind::ParseError, where + ": no points");
  if (G.labels.size() > static_cast<std::size_t>(kMaxVertices))
    throw Error(ErrorKind::CapacityExceeded, where + ": more than 64 points");
  return G;
}

inline ordered_json diagram_to_json(const GaleDiagram& G) {
  ordered_json points = ordered_json::object();
  for (int v = 0; v < G.vertex_count(); ++v) {
    const int r = G.ray[static_cast<std::size_t>(v)];
    if (r == kCenter)
      points[G.labels[static_cast<std::size_t>(v)]] = "C";
    else
      points[G.labels[static_cast<std::size_t>(v)]] = r;
  }
  return ordered_json{{"order", G.order}, {"points", points}};
}

inline GaleDiagram load_diagram(const std::filesystem::path& path) {
  return diagram_from_json(detail::parse_json(detail::read_file(path), path.string()), path.string());
}

inline void save_diagram(const GaleDiagram& G, const std::filesystem::path& path) {
  detail::write_file(path, diagram_to_json(G).dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// Catalog manifests

struct ManifestEntry {
  std::string file;
  std::string family;
  std::vector<int> params;
  int n = 0, dim = 0, excess = 0;
  std::vector<std::size_t> f_vector;
  bool simplicial = false, neighbourly = false, reducible = false, proper = false, primitive = false;

  bool operator==(const ManifestEntry&) const = default;
};

inline ManifestEntry describe(const FaceLattice& L, std::string file, std::string family, std::vector<int> params) {
  ManifestEntry e;
  e.file = std::move(file);
  e.family = std::move(family);
  e.params = std::move(params);
  e.n = L.vertex_count();
  e.dim = L.dim();
  e.excess = excess(L);
  e.f_vector = f_vector(L);
  e.simplicial = is_simplicial(L);
  e.neighbourly = is_neighbourly(L);
  e.reducible = is_reducible(L);
  e.proper = is_proper(L);
  e.primitive = is_primitive(L);
  return e;
}

inline ordered_json manifest_entry_to_json(const ManifestEntry& e) {
  return ordered_json{{"file", e.file},         {"family", e.family},           {"params", e.params},
                      {"n", e.n},               {"dim", e.dim},                 {"excess", e.excess},
                      {"f_vector", e.f_vector}, {"simplicial", e.simplicial},   {"neighbourly", e.neighbourly},
                      {"reducible", e.reducible}, {"proper", e.proper},         {"primitive", e.primitive}};
}

inline ManifestEntry manifest_entry_from_json(const ordered_json& j) {
  try {
    ManifestEntry e;
    e.file = j.at("file").get<std::string>();
    e.family = j.at("family").get<std::string>();
    e.params = j.at("params").get<std::vector<int>>();
    e.n = j.at("n").get<int>();
    e.dim = j.at("dim").get<int>();
    e.excess = j.at("excess").get<int>();
    e.f_vector = j.at("f_vector").get<std::vector<std::size_t>>();
    e.simplicial = j.at("simplicial").get<bool>();
    e.neighbourly = j.at("neighbourly").get<bool>();
    e.reducible = j.at("reducible").get<bool>();
    e.proper = j.at("proper").get<bool>();
    e.primitive = j.at("primitive").get<bool>();
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("manifest entry: ") + ex.what());
  }
}

/// "JoinTensor(0,0,-1)" -> "JoinTensor_0_0_m1.json"
inline std::string catalog_file_name(const ClassificationItem& item) {
  std::string out = item.family;
  for (int p : item.params) out += "_" + (p < 0 ? "m" + std::to_string(-p) : std::to_string(p));
  return out + ".json";
}

/// Writes one lattice file per item and manifest.json into dir.
inline std::vector<ManifestEntry> write_catalog(const std::vector<ClassificationItem>& items,
                                                const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<ManifestEntry> entries(items.size());
  parallel_for(items.size(), [&](std::size_t i) {
    const auto name = catalog_file_name(items[i]);
    save_lattice(items[i].lattice, dir / name);
    entries[i] = describe(items[i].lattice, name, items[i].family, items[i].params);
  });
  ordered_json arr = ordered_json::array();
  for (const auto& e : entries) arr.push_back(manifest_entry_to_json(e));
  detail::write_file(dir / "manifest.json", ordered_json{{"schema", 1}, {"entries", arr}}.dump(2) + "\n");
  return entries;
}

inline std::vector<ManifestEntry> load_manifest(const std::filesystem::path& dir) {
  const auto where = (dir / "manifest.json").string();
  auto j = detail::parse_json(detail::read_file(dir / "manifest.json"), where);
  if (!j.contains("entries") || !j["entries"].is_array())
    throw Error(ErrorKind::ParseError, where + ": missing \"entries\" array");
  std::vector<ManifestEntry> out;
  for (const auto& e : j["entries"]) out.push_back(manifest_entry_from_json(e));
  return out;
}

/// Entries whose file fails to load or whose recorded data differs from
/// what the file recomputes to.
inline std::vector<std::string> check_manifest(const std::filesystem::path& dir) {
  std::vector<std::string> bad;
  for (const auto& e : load_manifest(dir)) {
    try {
      auto L = load_lattice(dir / e.file);
      if (!(describe(L, e.file, e.family, e.params) == e)) bad.push_back(e.file + ": recorded data differs");
    } catch (const Error& ex) {
      bad.push_back(e.file + ": " + ex.what());
    }
  }
  return bad;
}

}  // namespace cellman
