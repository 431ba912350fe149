#include "dowker/duality.hpp"

#include <algorithm>

namespace dowker {

ComplexCosheaf ComplexCosheaf::make(FacePoset base,
                                    std::map<Simplex, SimplicialComplex> costalks,
                                    std::vector<std::string> element_labels) {
  ComplexCosheaf c;
  c.base_ = std::move(base);
  c.costalks_ = std::move(costalks);
  c.element_labels_ = std::move(element_labels);

  if (c.costalks_.size() != c.base_.elements().size())
    throw std::invalid_argument("complex cosheaf: costalk domain differs from the poset");
  for (const Simplex& s : c.base_.elements()) {
    auto it = c.costalks_.find(s);
    if (it == c.costalks_.end())
      throw std::invalid_argument("complex cosheaf: missing costalk at " +
                                  c.base_.complex().name(s));
    if (it->second.labels() != c.element_labels_)
      throw std::invalid_argument("complex cosheaf: costalks must share one label table");
  }
  // inclusion extensions: each coface costalk is a subcomplex of the face costalk
  for (const CoverRelation& cov : c.base_.covers()) {
    const SimplicialComplex& up = c.costalks_.at(cov.coface);
    const SimplicialComplex& lo = c.costalks_.at(cov.face);
    for (const Simplex& s : up.simplices())
      if (!lo.contains(s))
        throw std::invalid_argument("complex cosheaf: costalk at " +
                                    c.base_.complex().name(cov.coface) +
                                    " is not included in the costalk at " +
                                    c.base_.complex().name(cov.face));
  }
  return c;
}

const SimplicialComplex& ComplexCosheaf::costalk(const Simplex& s) const {
  auto it = costalks_.find(s);
  if (it == costalks_.end())
    throw std::out_of_range("complex cosheaf: no costalk at " + base_.complex().name(s));
  return it->second;
}

SimplicialMap ComplexCosheaf::extension(const Simplex& face, const Simplex& coface) const {
  if (!base_.leq(face, coface))
    throw std::invalid_argument("complex cosheaf: extension for incomparable pair");
  std::vector<Vertex> id(element_labels_.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<Vertex>(i);
  return SimplicialMap::make(costalk(coface), costalk(face), std::move(id));
}

bool ComplexCosheaf::operator==(const ComplexCosheaf& other) const {
  if (!(base_ == other.base_)) return false;
  auto norm = [](const ComplexCosheaf& c) {
    std::map<std::vector<std::string>, std::set<std::vector<std::string>>> out;
    for (const auto& [s, k] : c.costalks_) {
      auto key = c.base_.complex().label_set(s);
      out[key];
      for (const Simplex& t : k.simplices()) out[key].insert(k.label_set(t));
    }
    return out;
  };
  return norm(*this) == norm(other);
}

ComplexCosheaf coshv_rep(const Relation& r) {
  FacePoset base = face_poset(dowker_complex(r));
  std::map<Simplex, SimplicialComplex> costalks;
  for (const Simplex& s : base.elements()) {
    std::vector<int> ys = y_sigma(r, s);
    std::vector<Simplex> gens;
    if (!ys.empty()) gens.emplace_back(Simplex(std::move(ys)));
    costalks[s] = SimplicialComplex::generated_by(r.y_labels(), gens);
  }
  return ComplexCosheaf::make(std::move(base), std::move(costalks), r.y_labels());
}

SimplicialComplex cosections_over(const ComplexCosheaf& c, const std::vector<Simplex>& u) {
  std::set<Simplex> acc;
  for (const Simplex& s : u) {
    if (!c.base().complex().contains(s))
      throw std::invalid_argument("cosections_over: " + c.base().complex().name(s) +
                                  " is not a simplex of the base");
    const SimplicialComplex& k = c.costalk(s);
    acc.insert(k.simplices().begin(), k.simplices().end());
  }
  return SimplicialComplex::from_simplex_set(c.element_labels(), std::move(acc));
}

SimplicialComplex global_cosection_complex(const ComplexCosheaf& c) {
  return cosections_over(c, c.base().elements());
}

ComplexCosheaf dual(const ComplexCosheaf& c) {
  SimplicialComplex gamma = global_cosection_complex(c);
  FacePoset dual_base = face_poset(gamma);
  const std::vector<std::string>& x_table = c.base().complex().labels();

  std::map<Simplex, SimplicialComplex> costalks;
  for (const Simplex& alpha : dual_base.elements()) {
    std::set<Simplex> members;
    for (const Simplex& sigma : c.base().elements())
      if (c.costalk(sigma).contains(alpha)) members.insert(sigma);
    // downward closed because extensions are inclusions
    costalks[alpha] = SimplicialComplex::from_simplex_set(x_table, std::move(members));
  }
  return ComplexCosheaf::make(std::move(dual_base), std::move(costalks), x_table);
}

namespace {

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

}  // namespace

DualityCertificate check_dowker_duality(const Relation& r) {
  // route one: dualize the representation cosheaf of r
  ComplexCosheaf left = dual(coshv_rep(r));
  // route two: represent the transpose directly
  ComplexCosheaf right = coshv_rep(transpose(r));

  DualityCertificate cert;
  cert.base_matched = (left.base() == right.base());
  if (!cert.base_matched)
    cert.detail = "dual base differs from the Dowker complex of the transpose";

  bool all = true;
  for (const Simplex& s : right.base().elements()) {
    DualityCertificate::Row row;
    row.simplex = right.base().complex().name(s);
    row.right = complex_brief(right.costalk(s));
    bool found = true;
    Simplex ls;
    try {
      ls = translate_simplex(right.base().complex(), left.base().complex(), s);
      if (!left.base().complex().contains(ls)) found = false;
    } catch (const std::out_of_range&) {
      found = false;
    }
    if (found) {
      row.left = complex_brief(left.costalk(ls));
      row.matched = (left.costalk(ls) == right.costalk(s));
    } else {
      row.left = "(absent)";
      row.matched = false;
    }
    if (!row.matched && cert.detail.empty())
      cert.detail = "costalk mismatch over " + row.simplex + ": dual route gives " +
                    row.left + ", transpose route gives " + row.right;
    all = all && row.matched;
    cert.rows.push_back(std::move(row));
  }
  cert.ok = cert.base_matched && all;
  return cert;
}

ComplexCosheafMorphism ComplexCosheafMorphism::make(
    ComplexCosheaf source, ComplexCosheaf target, SimplicialMap base_map,
    std::map<Simplex, SimplicialMap> components) {
  ComplexCosheafMorphism m;
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.base_map_ = std::move(base_map);
  m.comp_ = std::move(components);

  if (!(m.base_map_.source() == m.source_.base().complex()) ||
      !(m.base_map_.target() == m.target_.base().complex()))
    throw std::invalid_argument("complex cosheaf morphism: base map endpoints mismatch");

  for (const Simplex& s : m.source_.base().elements()) {
    auto it = m.comp_.find(s);
    if (it == m.comp_.end())
      throw std::invalid_argument("complex cosheaf morphism: component missing at " +
                                  m.source_.base().complex().name(s));
    const SimplicialMap& comp = it->second;
    if (!(comp.source() == m.source_.costalk(s)))
      throw std::invalid_argument("complex cosheaf morphism: component domain mismatch at " +
                                  m.source_.base().complex().name(s));
    if (!(comp.target() == m.target_.costalk(m.base_map_.apply(s))))
      throw std::invalid_argument(
          "complex cosheaf morphism: component codomain mismatch at " +
          m.source_.base().complex().name(s));
  }
  // inclusion extensions make the squares a pointwise agreement condition
  for (const CoverRelation& cov : m.source_.base().covers()) {
    const SimplicialMap& low = m.comp_.at(cov.face);
    const SimplicialMap& high = m.comp_.at(cov.coface);
    for (Vertex v : m.source_.costalk(cov.coface).vertices())
      if (low.apply(v) != high.apply(v))
        throw std::invalid_argument("complex cosheaf morphism: square fails at cover " +
                                    m.source_.base().complex().name(cov.face) + " < " +
                                    m.source_.base().complex().name(cov.coface));
  }
  return m;
}

ComplexCosheafMorphism ComplexCosheafMorphism::identity(const ComplexCosheaf& c) {
  std::map<Simplex, SimplicialMap> comps;
  for (const Simplex& s : c.base().elements())
    comps[s] = SimplicialMap::identity(c.costalk(s));
  return make(c, c, SimplicialMap::identity(c.base().complex()), std::move(comps));
}

const SimplicialMap& ComplexCosheafMorphism::component(const Simplex& s) const {
  return comp_.at(s);
}

bool ComplexCosheafMorphism::operator==(const ComplexCosheafMorphism& other) const {
  if (!(source_ == other.source_) || !(target_ == other.target_)) return false;
  if (!(base_map_ == other.base_map_)) return false;
  for (const Simplex& s : source_.base().elements()) {
    Simplex os = translate_simplex(source_.base().complex(),
                                   other.source_.base().complex(), s);
    if (!(comp_.at(s) == other.comp_.at(os))) return false;
  }
  return true;
}

ComplexCosheafMorphism induced_complex_cosheaf_morphism(const RelMorphism& m) {
  ComplexCosheaf src = coshv_rep(m.source());
  ComplexCosheaf tgt = coshv_rep(m.target());
  SimplicialMap base = SimplicialMap::make(src.base().complex(), tgt.base().complex(),
                                           m.f_map());
  std::map<Simplex, SimplicialMap> comps;
  for (const Simplex& s : src.base().elements())
    comps[s] = SimplicialMap::make(src.costalk(s), tgt.costalk(base.apply(s)), m.g_map());
  return ComplexCosheafMorphism::make(std::move(src), std::move(tgt), std::move(base),
                                      std::move(comps));
}

ComplexCosheafMorphism compose(const ComplexCosheafMorphism& outer,
                               const ComplexCosheafMorphism& inner) {
  if (!(inner.target() == outer.source()) ||
      inner.target().element_labels() != outer.source().element_labels() ||
      inner.target().base().complex().labels() != outer.source().base().complex().labels())
    throw std::invalid_argument("compose: complex cosheaf morphism endpoints do not match");
  SimplicialMap base = compose(outer.base_map(), inner.base_map());
  std::map<Simplex, SimplicialMap> comps;
  for (const Simplex& s : inner.source().base().elements())
    comps[s] = compose(outer.component(inner.base_map().apply(s)), inner.component(s));
  return ComplexCosheafMorphism::make(inner.source(), outer.target(), std::move(base),
                                      std::move(comps));
}

ComplexCosheafMorphism dual_morphism(const ComplexCosheafMorphism& m) {
  ComplexCosheaf src_d = dual(m.source());
  ComplexCosheaf tgt_d = dual(m.target());

  // glue the components into one vertex map on the global cosection complex;
  // the squares make the choice of witnessing simplex irrelevant
  std::vector<Vertex> glued(m.source().element_labels().size(), 0);
  std::vector<bool> seen(glued.size(), false);
  for (const Simplex& s : m.source().base().elements())
    for (Vertex v : m.source().costalk(s).vertices()) {
      Vertex image = m.component(s).apply(v);
      if (seen[v] && glued[v] != image)
        throw std::logic_error("dual morphism: components disagree on a shared vertex");
      glued[v] = image;
      seen[v] = true;
    }
  SimplicialMap base = SimplicialMap::make(src_d.base().complex(), tgt_d.base().complex(),
                                           std::move(glued));

  std::map<Simplex, SimplicialMap> comps;
  for (const Simplex& alpha : src_d.base().elements())
    comps[alpha] = SimplicialMap::make(src_d.costalk(alpha),
                                       tgt_d.costalk(base.apply(alpha)),
                                       m.base_map().vertex_map());
  return ComplexCosheafMorphism::make(std::move(src_d), std::move(tgt_d), std::move(base),
                                      std::move(comps));
}

}  // namespace dowker
