#include "dowker/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dowker {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> default_labels(const char* prefix, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

Relation parse_relation_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::vector<std::string>> xl, yl;
  std::vector<std::string> content;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t.rfind("#x:", 0) == 0)
      xl = split_ws(t.substr(3));
    else if (t.rfind("#y:", 0) == 0)
      yl = split_ws(t.substr(3));
    else if (t[0] == '#')
      continue;
    else
      content.push_back(t);
  }
  if (content.empty()) throw ParseError("relation: missing header line");
  std::vector<std::string> head = split_ws(content[0]);
  int nx = 0, ny = 0;
  try {
    if (head.size() != 2) throw std::invalid_argument("");
    std::size_t p1 = 0, p2 = 0;
    nx = std::stoi(head[0], &p1);
    ny = std::stoi(head[1], &p2);
    if (p1 != head[0].size() || p2 != head[1].size() || nx < 0 || ny < 0)
      throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ParseError("relation: header must be two nonnegative integers, got \"" +
                     content[0] + "\"");
  }
  if (static_cast<int>(content.size()) != 1 + nx)
    throw ParseError("relation: expected " + std::to_string(nx) + " matrix rows, found " +
                     std::to_string(content.size() - 1));
  std::vector<std::vector<int>> m(nx);
  for (int i = 0; i < nx; ++i) {
    std::vector<std::string> toks = split_ws(content[1 + i]);
    if (static_cast<int>(toks.size()) != ny)
      throw ParseError("relation: row " + std::to_string(i + 1) + " has " +
                       std::to_string(toks.size()) + " entries, expected " +
                       std::to_string(ny));
    for (const std::string& t : toks) {
      if (t == "0")
        m[i].push_back(0);
      else if (t == "1")
        m[i].push_back(1);
      else
        throw ParseError("relation: entry \"" + t + "\" is not 0 or 1");
    }
  }
  std::vector<std::string> xls = xl.value_or(default_labels("x", nx));
  std::vector<std::string> yls = yl.value_or(default_labels("y", ny));
  if (static_cast<int>(xls.size()) != nx)
    throw ParseError("relation: #x: gives " + std::to_string(xls.size()) +
                     " labels for " + std::to_string(nx) + " rows");
  if (static_cast<int>(yls.size()) != ny)
    throw ParseError("relation: #y: gives " + std::to_string(yls.size()) +
                     " labels for " + std::to_string(ny) + " columns");
  try {
    return Relation(std::move(xls), std::move(yls), m);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("relation: ") + e.what());
  }
}

std::string format_relation_text(const Relation& r) {
  std::ostringstream out;
  out << r.row_count() << " " << r.col_count() << "\n";
  out << "#x:";
  for (const std::string& l : r.x_labels()) out << " " << l;
  out << "\n#y:";
  for (const std::string& l : r.y_labels()) out << " " << l;
  out << "\n";
  for (int i = 0; i < r.row_count(); ++i) {
    for (int j = 0; j < r.col_count(); ++j) out << (j ? " " : "") << (r.at(i, j) ? 1 : 0);
    out << "\n";
  }
  return out.str();
}

Relation relation_from_json(const ordered_json& j) {
  try {
    if (!j.is_object() || !j.contains("x_labels") || !j.contains("y_labels") ||
        !j.contains("matrix"))
      throw ParseError("relation: expected x_labels, y_labels and matrix fields");
    std::vector<std::string> xl = j.at("x_labels").get<std::vector<std::string>>();
    std::vector<std::string> yl = j.at("y_labels").get<std::vector<std::string>>();
    std::vector<std::vector<int>> m = j.at("matrix").get<std::vector<std::vector<int>>>();
    return Relation(std::move(xl), std::move(yl), m);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("relation: ") + e.what());
  }
}

ordered_json relation_to_json(const Relation& r) {
  ordered_json j;
  j["x_labels"] = r.x_labels();
  j["y_labels"] = r.y_labels();
  j["matrix"] = r.matrix();
  return j;
}

std::string serialize_relation_json(const Relation& r) {
  return relation_to_json(r).dump(2) + "\n";
}

Relation parse_relation(const std::string& text) {
  std::size_t b = text.find_first_not_of(" \t\r\n");
  if (b != std::string::npos && text[b] == '{') {
    try {
      return relation_from_json(ordered_json::parse(text));
    } catch (const ordered_json::parse_error& e) {
      throw ParseError(std::string("relation: bad JSON: ") + e.what());
    }
  }
  return parse_relation_text(text);
}

std::string simplex_key(const SimplicialComplex& k, const Simplex& s) {
  return s.empty() ? "" : k.name(s);
}

Simplex simplex_from_key(const SimplicialComplex& k, const std::string& key) {
  if (key.empty()) return Simplex{};
  std::vector<Vertex> vs;
  try {
    for (const std::string& label : split_commas(key)) vs.push_back(k.vertex_id(label));
    return Simplex(std::move(vs));
  } catch (const std::exception& e) {
    throw ParseError("simplex \"" + key + "\": " + e.what());
  }
}

ordered_json complex_to_json(const SimplicialComplex& k) {
  ordered_json j;
  std::vector<std::string> vls;
  for (Vertex v : k.vertices()) vls.push_back(k.label(v));
  std::sort(vls.begin(), vls.end());
  j["vertices"] = vls;
  ordered_json maxs = ordered_json::array();
  for (const Simplex& s : k.maximal_simplices()) maxs.push_back(k.label_set(s));
  j["maximal_simplices"] = maxs;
  j["simplex_count"] = k.size();
  j["dimension"] = k.dimension();
  return j;
}

namespace {

ordered_json weight_map_to_json(const WeightFunction& w) {
  ordered_json j = ordered_json::object();
  for (const Simplex& s : w.complex().canonical_order())
    j[simplex_key(w.complex(), s)] = w.at(s);
  j[""] = w.at(Simplex{});
  return j;
}

WeightFunction weight_map_from_json(const SimplicialComplex& k, const ordered_json& j,
                                    const std::string& which) {
  if (!j.is_object()) throw ParseError("weights: \"" + which + "\" must be an object");
  std::map<Simplex, long long> values;
  for (const Simplex& s : k.simplices()) values[s] = 0;
  values[Simplex{}] = 0;
  for (const auto& [key, val] : j.items()) {
    if (!val.is_number_integer())
      throw ParseError("weights: value at \"" + key + "\" must be an integer");
    Simplex s = simplex_from_key(k, key);
    if (!s.empty() && !k.contains(s))
      throw ParseError("weights: \"" + key + "\" is not a simplex of the complex");
    values[s] = val.get<long long>();
  }
  try {
    return WeightFunction(k, std::move(values), WeightKind::unchecked);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("weights: ") + e.what());
  }
}

}  // namespace

WeightBundle weights_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("maximal_simplices"))
    throw ParseError("weights: expected a maximal_simplices field");
  std::vector<std::vector<std::string>> gens;
  try {
    gens = j.at("maximal_simplices").get<std::vector<std::vector<std::string>>>();
  } catch (const std::exception& e) {
    throw ParseError(std::string("weights: bad maximal_simplices: ") + e.what());
  }
  std::set<std::string> label_set;
  for (const auto& g : gens) label_set.insert(g.begin(), g.end());
  std::vector<std::string> labels(label_set.begin(), label_set.end());
  std::map<std::string, Vertex> id;
  for (std::size_t i = 0; i < labels.size(); ++i) id[labels[i]] = static_cast<Vertex>(i);

  std::vector<Simplex> generators;
  try {
    for (const auto& g : gens) {
      std::vector<Vertex> vs;
      for (const std::string& l : g) vs.push_back(id.at(l));
      generators.emplace_back(std::move(vs));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("weights: bad generator: ") + e.what());
  }

  WeightBundle b;
  b.complex = SimplicialComplex::generated_by(std::move(labels), generators);
  if (j.contains("total")) b.total = weight_map_from_json(b.complex, j.at("total"), "total");
  if (j.contains("differential"))
    b.differential = weight_map_from_json(b.complex, j.at("differential"), "differential");
  return b;
}

WeightBundle parse_weights(const std::string& text) {
  try {
    return weights_from_json(ordered_json::parse(text));
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("weights: bad JSON: ") + e.what());
  }
}

ordered_json weights_to_json(const SimplicialComplex& k,
                             const std::optional<WeightFunction>& total,
                             const std::optional<WeightFunction>& differential) {
  ordered_json j;
  ordered_json maxs = ordered_json::array();
  for (const Simplex& s : k.maximal_simplices()) maxs.push_back(k.label_set(s));
  j["maximal_simplices"] = maxs;
  if (total) j["total"] = weight_map_to_json(*total);
  if (differential) j["differential"] = weight_map_to_json(*differential);
  return j;
}

MorphismMaps parse_morphism(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("morphism: bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("f") || !j.contains("g"))
    throw ParseError("morphism: expected f and g fields");
  MorphismMaps m;
  try {
    m.f = j.at("f").get<std::map<std::string, std::string>>();
    m.g = j.at("g").get<std::map<std::string, std::string>>();
  } catch (const std::exception& e) {
    throw ParseError(std::string("morphism: ") + e.what());
  }
  return m;
}

ordered_json set_cosheaf_to_json(const SetCosheaf& c) {
  ordered_json j;
  j["base"] = complex_to_json(c.base().complex());
  ordered_json stalks = ordered_json::object();
  for (const Simplex& s : c.base().elements()) {
    ordered_json elems = ordered_json::array();
    for (int e : c.costalk(s)) elems.push_back(c.element_name(e));
    stalks[c.base().complex().name(s)] = elems;
  }
  j["costalks"] = stalks;
  ordered_json covers = ordered_json::array();
  for (const CoverRelation& cov : c.base().covers()) {
    ordered_json entry;
    entry["face"] = c.base().complex().name(cov.face);
    entry["coface"] = c.base().complex().name(cov.coface);
    ordered_json ext = ordered_json::object();
    for (const auto& [e, img] : c.extension(cov.face, cov.coface))
      ext[c.element_name(e)] = c.element_name(img);
    entry["extension"] = ext;
    covers.push_back(entry);
  }
  j["covers"] = covers;
  return j;
}

ordered_json complex_cosheaf_to_json(const ComplexCosheaf& c) {
  ordered_json j;
  j["base"] = complex_to_json(c.base().complex());
  ordered_json stalks = ordered_json::object();
  for (const Simplex& s : c.base().elements())
    stalks[c.base().complex().name(s)] = complex_to_json(c.costalk(s));
  j["costalks"] = stalks;
  ordered_json covers = ordered_json::array();
  for (const CoverRelation& cov : c.base().covers()) {
    ordered_json entry;
    entry["face"] = c.base().complex().name(cov.face);
    entry["coface"] = c.base().complex().name(cov.coface);
    covers.push_back(entry);  // extensions are inclusions, nothing to list
  }
  j["covers"] = covers;
  return j;
}

ordered_json cosections_to_json(const SetCosheaf& c, const CosectionSet& cs) {
  ordered_json j;
  j["count"] = cs.count();
  ordered_json classes = ordered_json::array();
  for (const auto& cls : cs.classes) {
    ordered_json members = ordered_json::array();
    for (const auto& [s, e] : cls) {
      ordered_json m;
      m["simplex"] = c.base().complex().name(s);
      m["element"] = c.element_name(e);
      members.push_back(m);
    }
    classes.push_back(members);
  }
  j["classes"] = classes;
  return j;
}

ordered_json certificate_to_json(const DualityCertificate& cert) {
  ordered_json j;
  j["ok"] = cert.ok;
  j["base_matched"] = cert.base_matched;
  ordered_json rows = ordered_json::array();
  for (const auto& row : cert.rows) {
    ordered_json r;
    r["simplex"] = row.simplex;
    r["dual_of_rep"] = row.left;
    r["rep_of_transpose"] = row.right;
    r["matched"] = row.matched;
    rows.push_back(r);
  }
  j["costalks"] = rows;
  if (!cert.detail.empty()) j["detail"] = cert.detail;
  return j;
}

ordered_json redundancy_report_to_json(const RedundancyReport& rep) {
  ordered_json j;
  ordered_json red = ordered_json::array();
  for (const auto& e : rep.redundant) {
    ordered_json entry;
    entry["row"] = e.row;
    entry["witness"] = e.witness;
    red.push_back(entry);
  }
  j["redundant"] = red;
  j["duplicates"] = rep.duplicates;
  return j;
}

}  // namespace dowker
