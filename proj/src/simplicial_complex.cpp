#include "dowker/simplicial_complex.hpp"

#include <algorithm>
#include <map>

namespace dowker {

Simplex::Simplex(std::vector<Vertex> vertices) : verts_(std::move(vertices)) {
  std::sort(verts_.begin(), verts_.end());
  if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
    throw std::invalid_argument("simplex: duplicate vertex");
}

bool Simplex::contains(Vertex v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::subset_of(const Simplex& other) const {
  return std::includes(other.verts_.begin(), other.verts_.end(), verts_.begin(),
                       verts_.end());
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  for (Vertex v : verts_) out.push_back(without(v));
  return out;
}

std::vector<Simplex> Simplex::nonempty_subsets() const {
  if (verts_.size() > 25)
    throw std::length_error("simplex too large to enumerate subsets");
  std::vector<Simplex> out;
  const std::size_t n = verts_.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) vs.push_back(verts_[i]);
    out.emplace_back(std::move(vs));
  }
  return out;
}

Simplex Simplex::with(Vertex v) const {
  if (contains(v)) return *this;
  std::vector<Vertex> vs = verts_;
  vs.push_back(v);
  return Simplex(std::move(vs));
}

Simplex Simplex::without(Vertex v) const {
  std::vector<Vertex> vs;
  for (Vertex w : verts_)
    if (w != v) vs.push_back(w);
  Simplex s;
  s.verts_ = std::move(vs);  // already sorted/unique
  return s;
}

void SimplicialComplex::finish() {
  for (const Simplex& s : simplices_) {
    if (s.empty())
      throw std::invalid_argument("complex: the empty simplex is not a member");
    for (Vertex v : s.vertices())
      if (v < 0 || v >= static_cast<Vertex>(labels_.size()))
        throw std::invalid_argument("complex: vertex id outside label table");
  }
  std::set<Vertex> vs;
  for (const Simplex& s : simplices_)
    for (Vertex v : s.vertices()) vs.insert(v);
  vertices_.assign(vs.begin(), vs.end());

  maximal_.clear();
  for (const Simplex& s : simplices_) {
    bool dominated = false;
    for (const Simplex& t : simplices_)
      if (s != t && s.subset_of(t)) { dominated = true; break; }
    if (!dominated) maximal_.push_back(s);
  }
  std::sort(maximal_.begin(), maximal_.end(),
            [this](const Simplex& a, const Simplex& b) { return canonical_less(a, b); });
}

SimplicialComplex SimplicialComplex::generated_by(std::vector<std::string> labels,
                                                  const std::vector<Simplex>& generators) {
  SimplicialComplex k;
  k.labels_ = std::move(labels);
  for (const Simplex& g : generators)
    for (Simplex& s : g.nonempty_subsets()) k.simplices_.insert(std::move(s));
  k.finish();
  return k;
}

SimplicialComplex SimplicialComplex::from_simplex_set(std::vector<std::string> labels,
                                                      std::set<Simplex> simplices) {
  SimplicialComplex k;
  k.labels_ = std::move(labels);
  k.simplices_ = std::move(simplices);
  for (const Simplex& s : k.simplices_)
    for (const Simplex& f : s.facets())
      if (!f.empty() && !k.simplices_.count(f))
        throw std::invalid_argument("complex: simplex set is not downward closed");
  k.finish();
  return k;
}

bool SimplicialComplex::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const Simplex& s : maximal_) d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

Vertex SimplicialComplex::vertex_id(const std::string& label) const {
  for (Vertex v : vertices_)
    if (labels_[v] == label) return v;
  throw std::out_of_range("unknown vertex label: " + label);
}

std::vector<std::string> SimplicialComplex::label_set(const Simplex& s) const {
  std::vector<std::string> ls;
  for (Vertex v : s.vertices()) ls.push_back(labels_.at(v));
  std::sort(ls.begin(), ls.end());
  return ls;
}

std::string SimplicialComplex::name(const Simplex& s) const {
  if (s.empty()) return "()";
  std::string out;
  for (const std::string& l : label_set(s)) {
    if (!out.empty()) out += ",";
    out += l;
  }
  return out;
}

bool SimplicialComplex::canonical_less(const Simplex& a, const Simplex& b) const {
  if (a.size() != b.size()) return a.size() > b.size();
  return label_set(a) < label_set(b);
}

std::vector<Simplex> SimplicialComplex::canonical_order() const {
  std::vector<Simplex> out(simplices_.begin(), simplices_.end());
  std::sort(out.begin(), out.end(),
            [this](const Simplex& a, const Simplex& b) { return canonical_less(a, b); });
  return out;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
  if (simplices_.size() != other.simplices_.size()) return false;
  auto names = [](const SimplicialComplex& k) {
    std::set<std::vector<std::string>> out;
    for (const Simplex& s : k.simplices()) out.insert(k.label_set(s));
    return out;
  };
  return names(*this) == names(other);
}

SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.labels().empty()) return b;
  if (b.labels().empty()) return a;
  if (a.labels() != b.labels())
    throw std::invalid_argument("unite: complexes have different label tables");
  std::set<Simplex> ss = a.simplices();
  ss.insert(b.simplices().begin(), b.simplices().end());
  return SimplicialComplex::from_simplex_set(a.labels(), std::move(ss));
}

Simplex translate_simplex(const SimplicialComplex& from, const SimplicialComplex& to,
                          const Simplex& s) {
  std::vector<Vertex> vs;
  for (Vertex v : s.vertices()) vs.push_back(to.vertex_id(from.label(v)));
  return Simplex(std::move(vs));
}

FacePoset FacePoset::of(const SimplicialComplex& k) {
  FacePoset p;
  p.complex_ = k;
  p.elements_ = k.canonical_order();
  for (const Simplex& s : p.elements_)
    for (const Simplex& f : s.facets())
      if (!f.empty()) p.covers_.push_back({f, s});
  std::sort(p.covers_.begin(), p.covers_.end(),
            [&k](const CoverRelation& a, const CoverRelation& b) {
              if (!(a.face == b.face)) return k.canonical_less(a.face, b.face);
              return k.canonical_less(a.coface, b.coface);
            });
  return p;
}

bool FacePoset::leq(const Simplex& a, const Simplex& b) const {
  return complex_.contains(a) && complex_.contains(b) && a.subset_of(b);
}

bool FacePoset::operator==(const FacePoset& other) const {
  if (!(complex_ == other.complex_)) return false;
  auto cover_names = [](const FacePoset& p) {
    std::set<std::pair<std::vector<std::string>, std::vector<std::string>>> out;
    for (const CoverRelation& c : p.covers())
      out.insert({p.complex().label_set(c.face), p.complex().label_set(c.coface)});
    return out;
  };
  return cover_names(*this) == cover_names(other);
}

SimplicialMap SimplicialMap::make(SimplicialComplex source, SimplicialComplex target,
                                  std::vector<Vertex> vertex_map) {
  SimplicialMap m;
  if (vertex_map.size() < source.labels().size())
    vertex_map.resize(source.labels().size(), 0);
  for (Vertex v : source.vertices()) {
    Vertex w = vertex_map.at(v);
    if (!target.has_vertex(w))
      throw std::invalid_argument("simplicial map: vertex " + source.label(v) +
                                  " maps outside the target vertex set");
  }
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.vertex_map_ = std::move(vertex_map);
  for (const Simplex& s : m.source_.simplices()) {
    if (!m.target_.contains(m.apply(s)))
      throw std::invalid_argument("simplicial map: image of " + m.source_.name(s) +
                                  " is not a simplex of the target");
  }
  return m;
}

SimplicialMap SimplicialMap::identity(const SimplicialComplex& k) {
  std::vector<Vertex> id(k.labels().size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<Vertex>(i);
  return make(k, k, std::move(id));
}

Simplex SimplicialMap::apply(const Simplex& s) const {
  std::set<Vertex> image;
  for (Vertex v : s.vertices()) image.insert(vertex_map_.at(v));
  return Simplex(std::vector<Vertex>(image.begin(), image.end()));
}

bool SimplicialMap::operator==(const SimplicialMap& other) const {
  if (!(source_ == other.source_) || !(target_ == other.target_)) return false;
  for (Vertex v : source_.vertices()) {
    // compare by label so differing id spaces still match up
    Vertex ov = other.source_.vertex_id(source_.label(v));
    if (target_.label(vertex_map_.at(v)) != other.target_.label(other.vertex_map_.at(ov)))
      return false;
  }
  return true;
}

SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner) {
  if (!(inner.target() == outer.source()))
    throw std::invalid_argument("compose: simplicial map endpoints do not match");
  std::vector<Vertex> vm(inner.source().labels().size(), 0);
  for (Vertex v : inner.source().vertices()) {
    // translate through labels in case the middle complexes use different ids
    Vertex mid = outer.source().vertex_id(inner.target().label(inner.apply(v)));
    vm[v] = outer.apply(mid);
  }
  return SimplicialMap::make(inner.source(), outer.target(), std::move(vm));
}

SimplicialComplex dowker_complex(const Relation& r) {
  std::vector<Simplex> generators;
  for (int j = 0; j < r.col_count(); ++j) {
    std::vector<int> sup = r.col_support(j);
    if (!sup.empty()) generators.emplace_back(std::move(sup));
  }
  return SimplicialComplex::generated_by(r.x_labels(), generators);
}

std::vector<int> y_sigma(const Relation& r, const Simplex& s) {
  for (Vertex v : s.vertices())
    if (v < 0 || v >= r.row_count())
      throw std::out_of_range("y_sigma: vertex id outside the row range");
  std::vector<int> out;
  for (int j = 0; j < r.col_count(); ++j) {
    bool all = true;
    for (Vertex v : s.vertices())
      if (!r.at(v, j)) { all = false; break; }
    if (all) out.push_back(j);
  }
  return out;
}

FacePoset face_poset(const SimplicialComplex& k) { return FacePoset::of(k); }

SimplicialMap induced_simplicial_map(const RelMorphism& m) {
  return SimplicialMap::make(dowker_complex(m.source()), dowker_complex(m.target()),
                             m.f_map());
}

FacePoset pos_rep(const Relation& r) {
  // Enumerate commonly-witnessed row sets straight off the matrix.
  std::set<Simplex> elems;
  for (int j = 0; j < r.col_count(); ++j) {
    std::vector<int> sup = r.col_support(j);
    if (sup.empty()) continue;
    for (Simplex& s : Simplex(sup).nonempty_subsets()) elems.insert(std::move(s));
  }
  return FacePoset::of(SimplicialComplex::from_simplex_set(r.x_labels(), std::move(elems)));
}

}  // namespace dowker
