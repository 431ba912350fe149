#include "dowker/dot.hpp"

#include <sstream>

namespace dowker {

namespace {

std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string set_brief(const SetCosheaf& c, const Simplex& s) {
  std::string out = "{";
  bool first = true;
  for (int e : c.costalk(s)) {
    if (!first) out += ",";
    out += c.element_name(e);
    first = false;
  }
  return out + "}";
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

// nodes for one cosheaf, with an id prefix so clusters can coexist
template <class Cosheaf, class Brief>
void emit_cosheaf(std::ostringstream& out, const Cosheaf& c, const std::string& prefix,
                  const std::string& indent, Brief brief) {
  const SimplicialComplex& k = c.base().complex();
  for (const Simplex& s : c.base().elements())
    out << indent << "\"" << esc(prefix + k.name(s)) << "\" [label=\""
        << esc(k.name(s)) << "\\n" << esc(brief(s)) << "\"];\n";
  for (const CoverRelation& cov : c.base().covers())
    out << indent << "\"" << esc(prefix + k.name(cov.coface)) << "\" -> \""
        << esc(prefix + k.name(cov.face)) << "\";\n";
}

}  // namespace

std::string to_dot(const FacePoset& p) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const Simplex& s : p.elements())
    out << "  \"" << esc(p.complex().name(s)) << "\";\n";
  for (const CoverRelation& c : p.covers())
    out << "  \"" << esc(p.complex().name(c.face)) << "\" -> \""
        << esc(p.complex().name(c.coface)) << "\";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const SetCosheaf& c) {
  std::ostringstream out;
  out << "digraph cosheaf {\n  node [shape=box];\n";
  emit_cosheaf(out, c, "", "  ", [&c](const Simplex& s) { return set_brief(c, s); });
  out << "}\n";
  return out.str();
}

std::string to_dot(const ComplexCosheaf& c) {
  std::ostringstream out;
  out << "digraph cosheaf {\n  node [shape=box];\n";
  emit_cosheaf(out, c, "", "  ",
               [&c](const Simplex& s) { return complex_brief(c.costalk(s)); });
  out << "}\n";
  return out.str();
}

std::string to_dot(const SetCosheafMorphism& m) {
  std::ostringstream out;
  out << "digraph morphism {\n  node [shape=box];\n";
  out << "  subgraph cluster_source {\n    label=\"source\";\n";
  emit_cosheaf(out, m.source(), "s:", "    ",
               [&m](const Simplex& s) { return set_brief(m.source(), s); });
  out << "  }\n  subgraph cluster_target {\n    label=\"target\";\n";
  emit_cosheaf(out, m.target(), "t:", "    ",
               [&m](const Simplex& s) { return set_brief(m.target(), s); });
  out << "  }\n";
  const SimplicialComplex& sk = m.source().base().complex();
  const SimplicialComplex& tk = m.target().base().complex();
  for (const Simplex& s : m.source().base().elements())
    out << "  \"" << esc("s:" + sk.name(s)) << "\" -> \""
        << esc("t:" + tk.name(m.base(s))) << "\" [style=dashed];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const ComplexCosheafMorphism& m) {
  std::ostringstream out;
  out << "digraph morphism {\n  node [shape=box];\n";
  out << "  subgraph cluster_source {\n    label=\"source\";\n";
  emit_cosheaf(out, m.source(), "s:", "    ",
               [&m](const Simplex& s) { return complex_brief(m.source().costalk(s)); });
  out << "  }\n  subgraph cluster_target {\n    label=\"target\";\n";
  emit_cosheaf(out, m.target(), "t:", "    ",
               [&m](const Simplex& s) { return complex_brief(m.target().costalk(s)); });
  out << "  }\n";
  const SimplicialComplex& sk = m.source().base().complex();
  const SimplicialComplex& tk = m.target().base().complex();
  for (const Simplex& s : m.source().base().elements())
    out << "  \"" << esc("s:" + sk.name(s)) << "\" -> \""
        << esc("t:" + tk.name(m.base_map().apply(s))) << "\" [style=dashed];\n";
  out << "}\n";
  return out.str();
}

}  // namespace dowker
