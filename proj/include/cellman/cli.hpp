#pragma once

// Command-line front end. Each subcommand loads its inputs, calls one
// library operation and prints the result.
//
// Exit codes: 0 success / true, 1 false or negative verdict (including an
// input that does not validate), 2 usage or parse error.

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cellman/classification.hpp"
#include "cellman/constructions.hpp"
#include "cellman/gale.hpp"
#include "cellman/io.hpp"
#include "cellman/isomorphism.hpp"
#include "cellman/lattice.hpp"
#include "cellman/symmetry.hpp"

namespace cellman {

namespace detail {

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidParameter:
    case ErrorKind::CapacityExceeded:
    case ErrorKind::InfeasibleSize:
      return 2;
    default:
      return 1;
  }
}

inline std::string join_strings(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

inline std::string f_string(const FaceLattice& L) {
  std::vector<std::string> parts;
  for (auto f : f_vector(L)) parts.push_back(std::to_string(f));
  return "(" + join_strings(parts, ",") + ")";
}

inline std::vector<std::string> set_labels(const FaceLattice& L, VertexSet s) {
  std::vector<std::string> out;
  s.for_each([&](int v) { out.push_back(L.labels()[static_cast<std::size_t>(v)]); });
  return out;
}

/// "a=2,b=1" -> one multiplicity per vertex (unlisted vertices get 1).
inline std::vector<int> parse_multiplicities(const FaceLattice& L, const std::string& spec) {
  std::vector<int> mult(static_cast<std::size_t>(L.vertex_count()), 1);
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.rfind('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::ParseError, "multiplicity '" + item + "' is not label=k");
    const std::string label = item.substr(0, eq);
    const int v = L.label_index(label);
    if (v < 0) throw Error(ErrorKind::ParseError, "unknown vertex '" + label + "'");
    try {
      std::size_t used = 0;
      mult[static_cast<std::size_t>(v)] = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "multiplicity '" + item + "' is not label=k");
    }
  }
  return mult;
}

inline int vertex_of(const GaleDiagram& G, const std::string& label) {
  for (int v = 0; v < G.vertex_count(); ++v)
    if (G.labels[static_cast<std::size_t>(v)] == label) return v;
  throw Error(ErrorKind::ParseError, "unknown point '" + label + "'");
}

struct Cli {
  std::ostream& out;
  std::ostream& err;
  bool json = false;

  void print(const ordered_json& j) { out << j.dump(2) << "\n"; }
  ordered_json doc() { return ordered_json{{"schema", 1}}; }

  /// Writes the lattice to `path`, or prints it.
  void emit(const FaceLattice& L, const std::string& path) {
    if (!path.empty()) {
      save_lattice(L, path);
      if (json) {
        auto j = doc();
        j["written"] = path;
        print(j);
      }
      return;
    }
    if (json) {
      auto j = doc();
      j["lattice"] = ordered_json::parse(format_lattice(L));
      print(j);
    } else {
      out << format_lattice(L);
    }
  }

  void emit(const GaleDiagram& G, const std::string& path) {
    if (!path.empty()) {
      save_diagram(G, path);
      return;
    }
    if (json) {
      auto j = doc();
      j["diagram"] = diagram_to_json(G);
      print(j);
    } else {
      out << diagram_to_json(G).dump(2) << "\n";
    }
  }

  ordered_json report_json(const FaceLattice& L, const ValidationReport& r) {
    auto j = doc();
    j["valid"] = r.verdict;
    ordered_json v = ordered_json::array();
    for (const auto& viol : r.violations) {
      ordered_json w = ordered_json::array();
      for (auto s : viol.witnesses) w.push_back(set_labels(L, s));
      v.push_back({{"axiom", viol.axiom}, {"witnesses", w}});
    }
    j["violations"] = v;
    return j;
  }

  void print_report(const ValidationReport& r, const std::function<std::string(VertexSet)>& fmt) {
    if (r.verdict) {
      out << "valid\n";
      return;
    }
    out << "invalid\n";
    for (const auto& viol : r.violations) {
      out << "  " << viol.axiom << ":";
      for (auto s : viol.witnesses) out << " " << fmt(s);
      out << "\n";
    }
  }
};

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"cellman: face lattices of cellular pseudomanifolds"};
  app.require_subcommand(1);
  app.fallthrough();
  detail::Cli cli{out, err};
  app.add_flag("--json", cli.json, "machine-readable output (schema 1)");

  std::string file, file2, out_path, name, mult, vertex, op_name;
  bool raw = false, euler = false, count_only = false, neighbourly_only = false;
  int excess_arg = 0, dim_arg = 0, n_arg = 0, ray_arg = 0;
  std::function<int()> action;

  auto lattice_in = [&](CLI::App* sub, std::string& target, const char* what = "lattice file") {
    sub->add_option("file", target, what)->required();
  };
  auto out_opt = [&](CLI::App* sub) { sub->add_option("-o,--out", out_path, "write the result here"); };

  auto* validate_cmd = app.add_subcommand("validate", "check the lattice axioms");
  lattice_in(validate_cmd, file);
  validate_cmd->callback([&] {
    action = [&] {
      auto L = load_lattice(file, true);
      auto r = validate(L);
      if (cli.json)
        cli.print(cli.report_json(L, r));
      else
        cli.print_report(r, [&](VertexSet s) { return L.format(s); });
      return r.verdict ? 0 : 1;
    };
  });

  auto* info_cmd = app.add_subcommand("info", "dimension, vertex count, excess and f-vector");
  lattice_in(info_cmd, file);
  info_cmd->add_flag("--raw", raw, "skip validation");
  info_cmd->callback([&] {
    action = [&] {
      auto L = load_lattice(file, raw);
      if (cli.json) {
        auto j = cli.doc();
        j["dim"] = L.dim();
        j["n"] = L.vertex_count();
        j["excess"] = excess(L);
        j["f_vector"] = f_vector(L);
        j["simplicial"] = is_simplicial(L);
        j["neighbourly"] = is_neighbourly(L);
        cli.print(j);
      } else {
        out << "dim=" << L.dim() << " n=" << L.vertex_count() << " excess=" << excess(L)
            << " f=" << detail::f_string(L) << "\n";
      }
      return 0;
    };
  });

  auto* dual_cmd = app.add_subcommand("dual", "dual lattice");
  lattice_in(dual_cmd, file);
  out_opt(dual_cmd);
  dual_cmd->callback([&] { action = [&] { cli.emit(dual(load_lattice(file)), out_path); return 0; }; });

  auto* op_cmd = app.add_subcommand("op", "product of two lattices");
  op_cmd->add_option("kind", op_name, "tensor | join | cartesian")
      ->required()
      ->check(CLI::IsMember({"tensor", "join", "cartesian"}));
  op_cmd->add_option("a", file, "first lattice")->required();
  op_cmd->add_option("b", file2, "second lattice")->required();
  out_opt(op_cmd);
  op_cmd->callback([&] {
    action = [&] {
      auto A = load_lattice(file), B = load_lattice(file2);
      cli.emit(op_name == "tensor" ? tensor(A, B) : op_name == "join" ? join(A, B) : cartesian(A, B), out_path);
      return 0;
    };
  });

  auto* bsd_cmd = app.add_subcommand("bsd", "barycentric subdivision");
  lattice_in(bsd_cmd, file);
  out_opt(bsd_cmd);
  bsd_cmd->add_flag("--euler", euler, "print only the Euler characteristic of the subdivision");
  bsd_cmd->callback([&] {
    action = [&] {
      auto L = load_lattice(file);
      if (!euler) {
        cli.emit(barycentric(L), out_path);
        return 0;
      }
      const auto chi = euler_char_of_bsd(L);
      if (cli.json) {
        auto j = cli.doc();
        j["euler"] = chi;
        cli.print(j);
      } else {
        out << chi << "\n";
      }
      return 0;
    };
  });

  auto* classes_cmd = app.add_subcommand("classes", "classes of the ~ relation");
  lattice_in(classes_cmd, file);
  classes_cmd->callback([&] {
    action = [&] {
      auto L = load_lattice(file);
      auto P = tilde_partition(L);
      if (cli.json) {
        auto j = cli.doc();
        j["classes"] = ordered_json::array();
        for (auto c : P.classes) j["classes"].push_back(detail::set_labels(L, c));
        j["proper"] = is_proper(L);
        j["primitive"] = is_primitive(L);
        cli.print(j);
      } else {
        for (auto c : P.classes) out << L.format(c) << "\n";
      }
      return 0;
    };
  });

  auto* decompose_cmd = app.add_subcommand("decompose", "split off standard-sphere join factors");
  lattice_in(decompose_cmd, file);
  out_opt(decompose_cmd);
  decompose_cmd->callback([&] {
    action = [&] {
      auto L = load_lattice(file);
      auto D = decompose(L);
      if (!out_path.empty()) save_lattice(D.irreducible_part, out_path);
      if (cli.json) {
        auto j = cli.doc();
        j["sphere_classes"] = ordered_json::array();
        for (auto c : D.sphere_classes) j["sphere_classes"].push_back(detail::set_labels(L, c));
        j["irreducible"] = ordered_json::parse(format_lattice(D.irreducible_part));
        cli.print(j);
      } else {
        for (auto c : D.sphere_classes) out << "sphere " << L.format(c) << " dim=" << c.size() - 2 << "\n";
        const auto& N = D.irreducible_part;
        out << "irreducible dim=" << N.dim() << " n=" << N.vertex_count() << " f=" << detail::f_string(N) << "\n";
      }
      return 0;
    };
  });

  auto* quotient_cmd = app.add_subcommand("quotient", "collapse each ~ class to one vertex");
  lattice_in(quotient_cmd, file);
  out_opt(quotient_cmd);
  quotient_cmd->callback([&] { action = [&] { cli.emit(quotient(load_lattice(file)), out_path); return 0; }; });

  auto* inflate_cmd = app.add_subcommand("inflate", "replace vertices by several copies");
  lattice_in(inflate_cmd, file);
  inflate_cmd->add_option("-m,--mult", mult, "multiplicities, e.g. a=2,b=3 (others stay 1)")->required();
  out_opt(inflate_cmd);
  inflate_cmd->callback([&] {
    action = [&] {
      auto N = load_lattice(file);
      cli.emit(inflate(N, detail::parse_multiplicities(N, mult)), out_path);
      return 0;
    };
  });

  auto* iso_cmd = app.add_subcommand("iso", "test two lattices for isomorphism");
  iso_cmd->add_option("a", file, "first lattice")->required();
  iso_cmd->add_option("b", file2, "second lattice")->required();
  iso_cmd->callback([&] {
    action = [&] {
      auto A = load_lattice(file), B = load_lattice(file2);
      auto map = is_isomorphic(A, B);
      if (cli.json) {
        auto j = cli.doc();
        j["isomorphic"] = map.has_value();
        if (map) {
          ordered_json m = ordered_json::object();
          for (int v = 0; v < A.vertex_count(); ++v)
            m[A.labels()[static_cast<std::size_t>(v)]] = B.labels()[static_cast<std::size_t>((*map)[v])];
          j["map"] = m;
        }
        cli.print(j);
      } else if (map) {
        for (int v = 0; v < A.vertex_count(); ++v)
          out << A.labels()[static_cast<std::size_t>(v)] << " -> "
              << B.labels()[static_cast<std::size_t>((*map)[static_cast<std::size_t>(v)])] << "\n";
      } else {
        out << "not isomorphic\n";
      }
      return map ? 0 : 1;
    };
  });

  auto* neighbourly_cmd = app.add_subcommand("neighbourly", "is every vertex pair an edge");
  lattice_in(neighbourly_cmd, file);
  neighbourly_cmd->callback([&] {
    action = [&] {
      const bool yes = is_neighbourly(load_lattice(file));
      if (cli.json) {
        auto j = cli.doc();
        j["neighbourly"] = yes;
        cli.print(j);
      } else {
        out << (yes ? "neighbourly" : "not neighbourly") << "\n";
      }
      return yes ? 0 : 1;
    };
  });

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list a classification catalog");
  enumerate_cmd->add_option("--excess", excess_arg, "1 or 2 (reducible)")->required()->check(CLI::IsMember({1, 2}));
  enumerate_cmd->add_option("--dim", dim_arg, "dimension")->required();
  enumerate_cmd->add_flag("--count-only", count_only, "print the closed-form count only");
  enumerate_cmd->add_flag("--neighbourly", neighbourly_only, "neighbourly members only (excess 2)");
  enumerate_cmd->add_option("--out", out_path, "write lattice files and manifest.json into this directory");
  enumerate_cmd->callback([&] {
    action = [&]() -> int {
      if (neighbourly_only && excess_arg != 2)
        throw Error(ErrorKind::InvalidParameter, "--neighbourly applies to --excess 2");
      if (count_only) {
        if (excess_arg == 1 && dim_arg < 1) throw Error(ErrorKind::InvalidParameter, "excess-1 catalog needs d >= 1");
        if (excess_arg == 2 && dim_arg < 2) throw Error(ErrorKind::InvalidParameter, "excess-2 catalog needs d >= 2");
        const long long count = excess_arg == 1 ? count_excess1(dim_arg)
                                : neighbourly_only ? count_neighbourly(dim_arg)
                                                   : count_reducible_excess2(dim_arg);
        if (cli.json) {
          auto j = cli.doc();
          j["count"] = count;
          if (neighbourly_only) j["printed_formula"] = count_neighbourly_printed(dim_arg);
          cli.print(j);
        } else {
          out << count << "\n";
          if (neighbourly_only) out << "printed formula: " << count_neighbourly_printed(dim_arg) << "\n";
        }
        return 0;
      }
      auto items = excess_arg == 1 ? enumerate_excess1(dim_arg) : enumerate_reducible_excess2(dim_arg, neighbourly_only);
      if (!out_path.empty()) write_catalog(items, out_path);
      if (cli.json) {
        auto j = cli.doc();
        j["count"] = items.size();
        j["items"] = ordered_json::array();
        for (const auto& it : items)
          j["items"].push_back({{"tag", it.tag()},
                                {"n", it.lattice.vertex_count()},
                                {"f_vector", f_vector(it.lattice)},
                                {"simplicial", is_simplicial(it.lattice)},
                                {"neighbourly", is_neighbourly(it.lattice)}});
        cli.print(j);
      } else {
        for (const auto& it : items)
          out << it.tag() << " n=" << it.lattice.vertex_count() << " f=" << detail::f_string(it.lattice) << "\n";
      }
      return 0;
    };
  });

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force enumeration for tiny cases");
  oracle_cmd->add_option("--dim", dim_arg, "1 or 2")->required();
  oracle_cmd->add_option("--n", n_arg, "vertex count")->required();
  oracle_cmd->add_option("--out", out_path, "write one lattice file per class into this directory");
  oracle_cmd->callback([&] {
    action = [&] {
      auto found = brute_force_enumerate(dim_arg, n_arg);
      if (!out_path.empty()) {
        std::filesystem::create_directories(out_path);
        for (std::size_t i = 0; i < found.size(); ++i)
          save_lattice(found[i], std::filesystem::path(out_path) / ("oracle_" + std::to_string(i) + ".json"));
      }
      if (cli.json) {
        auto j = cli.doc();
        j["count"] = found.size();
        j["f_vectors"] = ordered_json::array();
        for (const auto& L : found) j["f_vectors"].push_back(f_vector(L));
        cli.print(j);
      } else {
        out << found.size() << "\n";
        for (const auto& L : found) out << "f=" << detail::f_string(L) << "\n";
      }
      return 0;
    };
  });

  auto* make_cmd = app.add_subcommand("make", "build a named lattice: sphere:D cycle:N pyramid:N rp2 octahedron");
  make_cmd->add_option("name", name, "lattice name")->required();
  out_opt(make_cmd);
  make_cmd->callback([&] { action = [&] { cli.emit(named_lattice(name), out_path); return 0; }; });

  auto* gale_cmd = app.add_subcommand("gale", "Gale diagrams (excess 2)");
  gale_cmd->require_subcommand(1);

  auto* gv = gale_cmd->add_subcommand("validate", "hemisphere condition");
  lattice_in(gv, file, "diagram file");
  gv->callback([&] {
    action = [&] {
      auto G = load_diagram(file);
      auto r = gale_validate(G);
      auto fmt = [&](VertexSet s) {
        std::vector<std::string> names;
        s.for_each([&](int v) { names.push_back(G.labels[static_cast<std::size_t>(v)]); });
        return "{" + detail::join_strings(names, ",") + "}";
      };
      if (cli.json) {
        auto j = cli.doc();
        j["valid"] = r.verdict;
        j["violations"] = ordered_json::array();
        for (const auto& viol : r.violations) {
          ordered_json w = ordered_json::array();
          for (auto s : viol.witnesses) w.push_back(fmt(s));
          j["violations"].push_back({{"axiom", viol.axiom}, {"witnesses", w}});
        }
        cli.print(j);
      } else {
        cli.print_report(r, fmt);
      }
      return r.verdict ? 0 : 1;
    };
  });

  auto* gs = gale_cmd->add_subcommand("sphere", "lattice whose facets complement the co-facets");
  lattice_in(gs, file, "diagram file");
  out_opt(gs);
  gs->callback([&] { action = [&] { cli.emit(sphere_from_diagram(load_diagram(file)), out_path); return 0; }; });

  auto* gsearch = gale_cmd->add_subcommand("search", "look for a diagram of an excess-2 lattice (n <= 7)");
  lattice_in(gsearch, file);
  out_opt(gsearch);
  gsearch->callback([&] {
    action = [&] {
      auto G = gale_search(load_lattice(file));
      if (G) {
        cli.emit(*G, out_path);
        return 0;
      }
      if (cli.json) {
        auto j = cli.doc();
        j["diagram"] = nullptr;
        cli.print(j);
      } else {
        out << "no diagram\n";
      }
      return 1;
    };
  });

  auto* gshift = gale_cmd->add_subcommand("shift", "move one point to another ray");
  lattice_in(gshift, file, "diagram file");
  gshift->add_option("--point", vertex, "point label")->required();
  gshift->add_option("--ray", ray_arg, "target ray")->required();
  out_opt(gshift);
  gshift->callback([&] {
    action = [&] {
      auto G = load_diagram(file);
      cli.emit(shift_point(G, detail::vertex_of(G, vertex), ray_arg), out_path);
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (!action) return 2;
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return detail::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cellman
