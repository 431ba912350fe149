// Command-line front end.  Exit codes: 0 success, 1 domain failure
// (unrealizable weights, invalid morphism, obstruction, failed check),
// 2 I/O or parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dowker/dot.hpp"
#include "dowker/homology.hpp"
#include "dowker/io.hpp"

namespace {

using namespace dowker;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Relation load_relation(const std::string& path) { return parse_relation(read_file(path)); }

void warn_empty_rows(const Relation& r) {
  std::vector<std::string> zeros = empty_rows(r);
  if (zeros.empty()) return;
  std::cerr << "note: rows with empty support never enter the complex:";
  for (const std::string& l : zeros) std::cerr << " " << l;
  std::cerr << "\n";
}

void print_complex(const SimplicialComplex& k) {
  std::cout << "vertices:";
  std::vector<std::string> vls;
  for (Vertex v : k.vertices()) vls.push_back(k.label(v));
  std::sort(vls.begin(), vls.end());
  for (const std::string& l : vls) std::cout << " " << l;
  std::cout << "\nmaximal simplices:\n";
  for (const Simplex& s : k.maximal_simplices()) std::cout << "  " << k.name(s) << "\n";
  std::cout << "simplices: " << k.size() << "\n";
  std::cout << "dimension: " << k.dimension() << "\n";
}

void print_weight_block(const char* title, const WeightFunction& w) {
  std::cout << title << ":\n";
  for (const Simplex& s : w.complex().canonical_order())
    std::cout << "  " << w.complex().name(s) << ": " << w.at(s) << "\n";
  std::cout << "  (): " << w.at(Simplex{}) << "\n";
}

std::string complex_brief(const SimplicialComplex& k) {
  if (k.simplices().empty()) return "{}";
  std::string out = "{";
  bool first = true;
  for (const Simplex& s : k.maximal_simplices()) {
    if (!first) out += "; ";
    out += k.name(s);
    first = false;
  }
  return out + "}";
}

std::vector<Simplex> parse_over_list(const SimplicialComplex& base, const std::string& arg) {
  // semicolon-separated canonical simplex keys, e.g. "a;b;a,b"
  std::vector<Simplex> out;
  std::string cur;
  std::istringstream in(arg);
  while (std::getline(in, cur, ';')) {
    std::size_t b = cur.find_first_not_of(" \t");
    std::size_t e = cur.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(simplex_from_key(base, cur.substr(b, e - b + 1)));
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Dowker complexes, weights, cosheaves and duality for binary relations"};
  app.require_subcommand(1);

  std::string rel_path, weights_path, src_path, tgt_path, map_path, from_kind, over_arg;
  bool as_json = false, as_dot = false, show_complex = false, show_cosheaf = false;

  auto add_rel = [&](CLI::App* cmd) {
    cmd->add_option("relation", rel_path, "relation file (text or JSON)")->required();
    cmd->add_flag("--json", as_json, "machine-readable output");
  };

  CLI::App* c_dowker = app.add_subcommand("dowker", "Dowker complex of a relation");
  add_rel(c_dowker);

  CLI::App* c_transpose = app.add_subcommand("transpose", "transpose a relation");
  add_rel(c_transpose);

  CLI::App* c_weights =
      app.add_subcommand("weights", "total and differential weight of a relation");
  add_rel(c_weights);

  CLI::App* c_reconstruct =
      app.add_subcommand("reconstruct", "rebuild a relation from a weight file");
  c_reconstruct->add_option("weights", weights_path, "weight bundle (JSON)")->required();
  c_reconstruct->add_option("--from", from_kind, "total or differential")
      ->required()
      ->check(CLI::IsMember({"total", "differential"}));
  c_reconstruct->add_flag("--json", as_json, "machine-readable output");

  CLI::App* c_hasse = app.add_subcommand("hasse", "face poset of the Dowker complex (DOT)");
  add_rel(c_hasse);

  CLI::App* c_cosheaf = app.add_subcommand("cosheaf", "set-valued representation cosheaf");
  add_rel(c_cosheaf);
  c_cosheaf->add_flag("--dot", as_dot, "DOT diagram");

  CLI::App* c_cosheaf_full =
      app.add_subcommand("cosheaf-full", "complex-valued representation cosheaf");
  add_rel(c_cosheaf_full);
  c_cosheaf_full->add_flag("--dot", as_dot, "DOT diagram");

  CLI::App* c_cosections =
      app.add_subcommand("cosections", "global cosections, or cosections over a subset");
  add_rel(c_cosections);
  c_cosections->add_option("--over", over_arg,
                           "semicolon-separated simplices, e.g. \"a;b;a,b\"");
  c_cosections->add_flag("--complex", show_complex,
                         "print the global cosection complex instead of the classes");

  CLI::App* c_dual = app.add_subcommand("dual", "dual of the representation cosheaf");
  add_rel(c_dual);
  c_dual->add_flag("--dot", as_dot, "DOT diagram");

  CLI::App* c_check =
      app.add_subcommand("check-duality", "compare dual(rep(r)) with rep(transpose(r))");
  add_rel(c_check);
  c_check->add_flag("--dot", as_dot, "DOT of the dual cosheaf instead of the table");

  CLI::App* c_red = app.add_subcommand("redundancy", "redundant rows / redundancy cosheaf");
  add_rel(c_red);
  c_red->add_flag("--cosheaf", show_cosheaf, "print the redundancy cosheaf");
  c_red->add_flag("--dot", as_dot, "DOT diagram (with --cosheaf)");

  CLI::App* c_hom = app.add_subcommand("homology", "GF(2) Betti numbers of the complex");
  add_rel(c_hom);

  CLI::App* c_mor = app.add_subcommand("morphism-check", "validate a relation morphism");
  c_mor->add_option("source", src_path, "source relation")->required();
  c_mor->add_option("target", tgt_path, "target relation")->required();
  c_mor->add_option("map", map_path, "morphism file {\"f\":{...},\"g\":{...}}")->required();
  c_mor->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (c_dowker->parsed()) {
    Relation r = load_relation(rel_path);
    warn_empty_rows(r);
    SimplicialComplex k = dowker_complex(r);
    if (as_json)
      std::cout << complex_to_json(k).dump(2) << "\n";
    else
      print_complex(k);
    return 0;
  }

  if (c_transpose->parsed()) {
    Relation r = load_relation(rel_path);
    if (as_json)
      std::cout << serialize_relation_json(transpose(r));
    else
      std::cout << format_relation_text(transpose(r));
    return 0;
  }

  if (c_weights->parsed()) {
    Relation r = load_relation(rel_path);
    WeightFunction t = total_weight(r), d = differential_weight(r);
    if (as_json) {
      std::cout << weights_to_json(t.complex(), t, d).dump(2) << "\n";
    } else {
      print_weight_block("total", t);
      print_weight_block("differential", d);
    }
    return 0;
  }

  if (c_reconstruct->parsed()) {
    WeightBundle b = parse_weights(read_file(weights_path));
    Relation out;
    if (from_kind == "differential") {
      if (!b.differential) throw ParseError("weights: no differential map in the file");
      out = reconstruct_from_differential(b.complex, *b.differential);
    } else {
      if (!b.total) throw ParseError("weights: no total map in the file");
      TotalReconstruction res = reconstruct_from_total(b.complex, *b.total);
      if (std::holds_alternative<NotRealizable>(res)) {
        const NotRealizable& nr = std::get<NotRealizable>(res);
        std::cerr << "not realizable: weight driven negative at "
                  << b.complex.name(nr.offending) << "\nintermediate weights:\n";
        for (const Simplex& s : b.complex.canonical_order())
          std::cerr << "  " << b.complex.name(s) << ": " << nr.snapshot.at(s) << "\n";
        std::cerr << "  (): " << nr.snapshot.at(Simplex{}) << "\n";
        return 1;
      }
      out = std::get<Relation>(res);
    }
    if (as_json)
      std::cout << serialize_relation_json(out);
    else
      std::cout << format_relation_text(out);
    return 0;
  }

  if (c_hasse->parsed()) {
    Relation r = load_relation(rel_path);
    FacePoset p = face_poset(dowker_complex(r));
    if (as_json) {
      ordered_json j;
      ordered_json elems = ordered_json::array();
      for (const Simplex& s : p.elements()) elems.push_back(p.complex().name(s));
      j["elements"] = elems;
      ordered_json covers = ordered_json::array();
      for (const CoverRelation& c : p.covers())
        covers.push_back({p.complex().name(c.face), p.complex().name(c.coface)});
      j["covers"] = covers;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << to_dot(p);
    }
    return 0;
  }

  if (c_cosheaf->parsed()) {
    Relation r = load_relation(rel_path);
    SetCosheaf c = coshv_rep0(r);
    if (as_dot) {
      std::cout << to_dot(c);
    } else if (as_json) {
      std::cout << set_cosheaf_to_json(c).dump(2) << "\n";
    } else {
      for (const Simplex& s : c.base().elements()) {
        std::cout << c.base().complex().name(s) << ": {";
        bool first = true;
        for (int e : c.costalk(s)) {
          std::cout << (first ? "" : ",") << c.element_name(e);
          first = false;
        }
        std::cout << "}\n";
      }
    }
    return 0;
  }

  if (c_cosheaf_full->parsed()) {
    Relation r = load_relation(rel_path);
    ComplexCosheaf c = coshv_rep(r);
    if (as_dot) {
      std::cout << to_dot(c);
    } else if (as_json) {
      std::cout << complex_cosheaf_to_json(c).dump(2) << "\n";
    } else {
      for (const Simplex& s : c.base().elements())
        std::cout << c.base().complex().name(s) << ": " << complex_brief(c.costalk(s))
                  << "\n";
    }
    return 0;
  }

  if (c_cosections->parsed()) {
    Relation r = load_relation(rel_path);
    if (!over_arg.empty()) {
      ComplexCosheaf c = coshv_rep(r);
      SimplicialComplex u =
          cosections_over(c, parse_over_list(c.base().complex(), over_arg));
      if (as_json)
        std::cout << complex_to_json(u).dump(2) << "\n";
      else
        print_complex(u);
    } else if (show_complex) {
      SimplicialComplex g = global_cosection_complex(coshv_rep(r));
      if (as_json)
        std::cout << complex_to_json(g).dump(2) << "\n";
      else
        print_complex(g);
    } else {
      SetCosheaf c = coshv_rep0(r);
      CosectionSet cs = global_cosections(c);
      if (as_json) {
        std::cout << cosections_to_json(c, cs).dump(2) << "\n";
      } else {
        std::cout << "classes: " << cs.count() << "\n";
        for (int i = 0; i < cs.count(); ++i) {
          std::cout << i + 1 << ":";
          for (const auto& [s, e] : cs.classes[i])
            std::cout << " " << c.base().complex().name(s) << ":" << c.element_name(e);
          std::cout << "\n";
        }
      }
    }
    return 0;
  }

  if (c_dual->parsed()) {
    Relation r = load_relation(rel_path);
    ComplexCosheaf d = dual(coshv_rep(r));
    if (as_dot) {
      std::cout << to_dot(d);
    } else if (as_json) {
      std::cout << complex_cosheaf_to_json(d).dump(2) << "\n";
    } else {
      for (const Simplex& s : d.base().elements())
        std::cout << d.base().complex().name(s) << ": " << complex_brief(d.costalk(s))
                  << "\n";
    }
    return 0;
  }

  if (c_check->parsed()) {
    Relation r = load_relation(rel_path);
    DualityCertificate cert = check_dowker_duality(r);
    if (as_dot) {
      std::cout << to_dot(dual(coshv_rep(r)));
    } else if (as_json) {
      std::cout << certificate_to_json(cert).dump(2) << "\n";
    } else {
      std::cout << (cert.ok ? "PASS" : "FAIL") << "\n";
      std::cout << "base complexes match: " << (cert.base_matched ? "yes" : "no") << "\n";
      for (const auto& row : cert.rows)
        std::cout << "  " << row.simplex << ": dual=" << row.left
                  << " transpose=" << row.right << (row.matched ? " ok" : " MISMATCH")
                  << "\n";
      if (!cert.detail.empty()) std::cout << "detail: " << cert.detail << "\n";
    }
    return cert.ok ? 0 : 1;
  }

  if (c_red->parsed()) {
    Relation r = load_relation(rel_path);
    if (show_cosheaf) {
      ComplexCosheaf s = redundancy_cosheaf(r);
      if (as_dot) {
        std::cout << to_dot(s);
      } else if (as_json) {
        std::cout << complex_cosheaf_to_json(s).dump(2) << "\n";
      } else {
        for (const Simplex& e : s.base().elements())
          std::cout << s.base().complex().name(e) << ": " << complex_brief(s.costalk(e))
                    << "\n";
      }
      return 0;
    }
    RedundancyReport rep = redundant_rows(r);
    if (as_json) {
      std::cout << redundancy_report_to_json(rep).dump(2) << "\n";
    } else {
      std::cout << "redundant rows:\n";
      if (rep.redundant.empty()) std::cout << "  (none)\n";
      for (const auto& e : rep.redundant)
        std::cout << "  " << e.row << " (witness " << e.witness << ")\n";
      std::cout << "duplicate rows:\n";
      if (rep.duplicates.empty()) std::cout << "  (none)\n";
      for (const auto& grp : rep.duplicates) {
        std::cout << " ";
        for (const std::string& l : grp) std::cout << " " << l;
        std::cout << "\n";
      }
    }
    return 0;
  }

  if (c_hom->parsed()) {
    Relation r = load_relation(rel_path);
    std::vector<int> b = betti_numbers(dowker_complex(r));
    if (as_json) {
      ordered_json j;
      j["betti"] = b;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "betti:";
      for (int x : b) std::cout << " " << x;
      std::cout << "\n";
    }
    return 0;
  }

  if (c_mor->parsed()) {
    Relation src = load_relation(src_path);
    Relation tgt = load_relation(tgt_path);
    MorphismMaps maps = parse_morphism(read_file(map_path));
    RelMorphism m = make_morphism(src, tgt, maps.f, maps.g);
    SimplicialMap dm = induced_simplicial_map(m);
    if (as_json) {
      ordered_json j;
      j["ok"] = true;
      ordered_json im = ordered_json::object();
      for (const Simplex& s : dm.source().maximal_simplices())
        im[dm.source().name(s)] = dm.target().name(dm.apply(s));
      j["induced_on_maximal"] = im;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "OK\n";
      for (const Simplex& s : dm.source().maximal_simplices())
        std::cout << "  D(f): " << dm.source().name(s) << " -> "
                  << dm.target().name(dm.apply(s)) << "\n";
    }
    return 0;
  }

  return 2;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const dowker::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dowker::MorphismError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
