#include "dowker/cosheaf.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace dowker {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool sorted_member(const std::vector<int>& v, int e) {
  return std::binary_search(v.begin(), v.end(), e);
}

}  // namespace

SetCosheaf SetCosheaf::make(
    FacePoset base, std::map<Simplex, std::vector<int>> costalks,
    std::map<std::pair<Simplex, Simplex>, std::map<int, int>> cover_extensions,
    std::vector<std::string> element_names) {
  SetCosheaf c;
  c.base_ = std::move(base);
  c.costalks_ = std::move(costalks);
  c.ext_ = std::move(cover_extensions);
  c.names_ = std::move(element_names);

  if (c.costalks_.size() != c.base_.elements().size())
    throw std::invalid_argument("cosheaf: costalk domain differs from the poset");
  for (const Simplex& s : c.base_.elements()) {
    auto it = c.costalks_.find(s);
    if (it == c.costalks_.end())
      throw std::invalid_argument("cosheaf: missing costalk at " +
                                  c.base_.complex().name(s));
    const std::vector<int>& es = it->second;
    if (!std::is_sorted(es.begin(), es.end()) ||
        std::adjacent_find(es.begin(), es.end()) != es.end())
      throw std::invalid_argument("cosheaf: costalk must be sorted and duplicate-free");
    for (int e : es)
      if (e < 0 || e >= static_cast<int>(c.names_.size()))
        throw std::invalid_argument("cosheaf: costalk element outside the name table");
  }

  if (c.ext_.size() != c.base_.covers().size())
    throw std::invalid_argument("cosheaf: extension domain differs from the covers");
  for (const CoverRelation& cov : c.base_.covers()) {
    auto it = c.ext_.find({cov.face, cov.coface});
    if (it == c.ext_.end())
      throw std::invalid_argument("cosheaf: missing extension for cover " +
                                  c.base_.complex().name(cov.face) + " < " +
                                  c.base_.complex().name(cov.coface));
    const std::map<int, int>& m = it->second;
    const std::vector<int>& dom = c.costalks_.at(cov.coface);
    const std::vector<int>& cod = c.costalks_.at(cov.face);
    if (m.size() != dom.size())
      throw std::invalid_argument("cosheaf: extension not total on the coface costalk");
    for (const auto& [e, img] : m) {
      if (!sorted_member(dom, e) || !sorted_member(cod, img))
        throw std::invalid_argument("cosheaf: extension maps outside the costalks");
    }
  }
  return c;
}

const std::vector<int>& SetCosheaf::costalk(const Simplex& s) const {
  auto it = costalks_.find(s);
  if (it == costalks_.end())
    throw std::out_of_range("cosheaf: no costalk at " + base_.complex().name(s));
  return it->second;
}

std::map<int, int> SetCosheaf::extension(const Simplex& face, const Simplex& coface) const {
  if (!base_.leq(face, coface))
    throw std::invalid_argument("cosheaf: extension requested for incomparable pair");
  std::map<int, int> acc;
  for (int e : costalk(coface)) acc[e] = e;
  Simplex cur = coface;
  while (!(cur == face)) {
    // peel off the smallest vertex not in `face`; closure keeps us inside
    Vertex drop = -1;
    for (Vertex v : cur.vertices())
      if (!face.contains(v)) { drop = v; break; }
    Simplex next = cur.without(drop);
    const std::map<int, int>& step = ext_.at({next, cur});
    for (auto& [e, img] : acc) img = step.at(img);
    cur = next;
  }
  return acc;
}

bool SetCosheaf::extensions_are_inclusions() const {
  for (const auto& [cover, m] : ext_)
    for (const auto& [e, img] : m)
      if (e != img) return false;
  return true;
}

bool SetCosheaf::verify_composition() const {
  const std::vector<Simplex>& elems = base_.elements();
  for (const Simplex& a : elems)
    for (const Simplex& c : elems) {
      if (!base_.leq(a, c)) continue;
      std::map<int, int> direct = extension(a, c);
      for (const Simplex& b : elems) {
        if (!(base_.leq(a, b) && base_.leq(b, c))) continue;
        std::map<int, int> lower = extension(a, b), upper = extension(b, c);
        for (int e : costalk(c))
          if (direct.at(e) != lower.at(upper.at(e))) return false;
      }
    }
  return true;
}

bool SetCosheaf::operator==(const SetCosheaf& other) const {
  if (!(base_ == other.base_)) return false;
  auto norm = [](const SetCosheaf& c) {
    std::map<std::vector<std::string>, std::set<std::string>> stalks;
    for (const auto& [s, es] : c.costalks_) {
      auto key = c.base_.complex().label_set(s);
      stalks[key];  // materialize empty costalks too
      for (int e : es) stalks[key].insert(c.names_.at(e));
    }
    std::set<std::tuple<std::vector<std::string>, std::vector<std::string>, std::string,
                        std::string>>
        exts;
    for (const auto& [pr, m] : c.ext_) {
      auto fk = c.base_.complex().label_set(pr.first);
      auto ck = c.base_.complex().label_set(pr.second);
      for (const auto& [e, img] : m)
        exts.insert({fk, ck, c.names_.at(e), c.names_.at(img)});
    }
    return std::make_pair(stalks, exts);
  };
  return norm(*this) == norm(other);
}

SetCosheaf coshv_rep0(const Relation& r) {
  FacePoset base = face_poset(dowker_complex(r));
  std::map<Simplex, std::vector<int>> costalks;
  for (const Simplex& s : base.elements()) costalks[s] = y_sigma(r, s);
  std::map<std::pair<Simplex, Simplex>, std::map<int, int>> exts;
  for (const CoverRelation& cov : base.covers()) {
    std::map<int, int> inc;
    for (int e : costalks.at(cov.coface)) inc[e] = e;
    exts[{cov.face, cov.coface}] = std::move(inc);
  }
  return SetCosheaf::make(std::move(base), std::move(costalks), std::move(exts),
                          r.y_labels());
}

int CosectionSet::class_of(const Simplex& s, int e) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (const auto& [cs, ce] : classes[i])
      if (cs == s && ce == e) return static_cast<int>(i);
  throw std::out_of_range("cosections: pair not present in any costalk");
}

CosectionSet global_cosections(const SetCosheaf& c) {
  std::vector<std::pair<Simplex, int>> nodes;
  std::map<std::pair<Simplex, int>, int> index;
  for (const Simplex& s : c.base().elements())
    for (int e : c.costalk(s)) {
      index[{s, e}] = static_cast<int>(nodes.size());
      nodes.emplace_back(s, e);
    }
  UnionFind uf(static_cast<int>(nodes.size()));
  for (const CoverRelation& cov : c.base().covers()) {
    const std::map<int, int> ext = c.extension(cov.face, cov.coface);
    for (const auto& [e, img] : ext)
      uf.unite(index.at({cov.coface, e}), index.at({cov.face, img}));
  }
  std::map<int, std::vector<std::pair<Simplex, int>>> by_root;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    by_root[uf.find(static_cast<int>(i))].push_back(nodes[i]);

  CosectionSet out;
  std::vector<std::pair<int, std::vector<std::pair<Simplex, int>>>> ordered;
  for (auto& [root, members] : by_root)
    ordered.emplace_back(index.at(members.front()), std::move(members));
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [first, members] : ordered) out.classes.push_back(std::move(members));
  return out;
}

SetCosheafMorphism SetCosheafMorphism::make(
    SetCosheaf source, SetCosheaf target, std::map<Simplex, Simplex> base_map,
    std::map<Simplex, std::map<int, int>> components) {
  SetCosheafMorphism m;
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.base_ = std::move(base_map);
  m.comp_ = std::move(components);

  const SimplicialComplex& tk = m.target_.base().complex();
  for (const Simplex& s : m.source_.base().elements()) {
    auto bit = m.base_.find(s);
    if (bit == m.base_.end())
      throw std::invalid_argument("cosheaf morphism: base map missing at " +
                                  m.source_.base().complex().name(s));
    if (!tk.contains(bit->second))
      throw std::invalid_argument("cosheaf morphism: base image is not a target simplex");
    auto cit = m.comp_.find(s);
    if (cit == m.comp_.end())
      throw std::invalid_argument("cosheaf morphism: component missing at " +
                                  m.source_.base().complex().name(s));
    const std::map<int, int>& comp = cit->second;
    const std::vector<int>& dom = m.source_.costalk(s);
    const std::vector<int>& cod = m.target_.costalk(bit->second);
    if (comp.size() != dom.size())
      throw std::invalid_argument("cosheaf morphism: component not total at " +
                                  m.source_.base().complex().name(s));
    for (const auto& [e, img] : comp)
      if (!sorted_member(dom, e) || !sorted_member(cod, img))
        throw std::invalid_argument("cosheaf morphism: component maps outside costalks at " +
                                    m.source_.base().complex().name(s));
  }
  // order preservation and naturality, cover by cover
  for (const CoverRelation& cov : m.source_.base().covers()) {
    const Simplex& bf = m.base_.at(cov.face);
    const Simplex& bc = m.base_.at(cov.coface);
    if (!bf.subset_of(bc))
      throw std::invalid_argument("cosheaf morphism: base map is not order-preserving");
    const std::map<int, int> src_ext = m.source_.extension(cov.face, cov.coface);
    const std::map<int, int> tgt_ext = m.target_.extension(bf, bc);
    for (int e : m.source_.costalk(cov.coface)) {
      int down_then_map = m.comp_.at(cov.face).at(src_ext.at(e));
      int map_then_down = tgt_ext.at(m.comp_.at(cov.coface).at(e));
      if (down_then_map != map_then_down)
        throw std::invalid_argument("cosheaf morphism: square fails at cover " +
                                    m.source_.base().complex().name(cov.face) + " < " +
                                    m.source_.base().complex().name(cov.coface));
    }
  }
  return m;
}

SetCosheafMorphism SetCosheafMorphism::identity(const SetCosheaf& c) {
  std::map<Simplex, Simplex> base;
  std::map<Simplex, std::map<int, int>> comps;
  for (const Simplex& s : c.base().elements()) {
    base[s] = s;
    std::map<int, int> id;
    for (int e : c.costalk(s)) id[e] = e;
    comps[s] = std::move(id);
  }
  return make(c, c, std::move(base), std::move(comps));
}

const Simplex& SetCosheafMorphism::base(const Simplex& s) const { return base_.at(s); }

const std::map<int, int>& SetCosheafMorphism::component(const Simplex& s) const {
  return comp_.at(s);
}

bool SetCosheafMorphism::operator==(const SetCosheafMorphism& other) const {
  if (!(source_ == other.source_) || !(target_ == other.target_)) return false;
  auto norm = [](const SetCosheafMorphism& m) {
    const SimplicialComplex& sk = m.source_.base().complex();
    const SimplicialComplex& tk = m.target_.base().complex();
    std::map<std::vector<std::string>,
             std::pair<std::vector<std::string>, std::map<std::string, std::string>>>
        out;
    for (const auto& [s, img] : m.base_) {
      std::map<std::string, std::string> comp;
      for (const auto& [e, ie] : m.comp_.at(s))
        comp[m.source_.element_name(e)] = m.target_.element_name(ie);
      out[sk.label_set(s)] = {tk.label_set(img), std::move(comp)};
    }
    return out;
  };
  return norm(*this) == norm(other);
}

SetCosheafMorphism induced_cosheaf_morphism0(const RelMorphism& m) {
  SetCosheaf src = coshv_rep0(m.source());
  SetCosheaf tgt = coshv_rep0(m.target());
  SimplicialMap dm = induced_simplicial_map(m);
  std::map<Simplex, Simplex> base;
  std::map<Simplex, std::map<int, int>> comps;
  for (const Simplex& s : src.base().elements()) {
    base[s] = dm.apply(s);
    std::map<int, int> comp;
    for (int e : src.costalk(s)) comp[e] = m.g(e);
    comps[s] = std::move(comp);
  }
  return SetCosheafMorphism::make(std::move(src), std::move(tgt), std::move(base),
                                  std::move(comps));
}

SetCosheafMorphism compose(const SetCosheafMorphism& outer,
                           const SetCosheafMorphism& inner) {
  if (!(inner.target() == outer.source()) ||
      inner.target().element_names() != outer.source().element_names() ||
      inner.target().base().complex().labels() != outer.source().base().complex().labels())
    throw std::invalid_argument("compose: cosheaf morphism endpoints do not match");
  std::map<Simplex, Simplex> base;
  std::map<Simplex, std::map<int, int>> comps;
  for (const Simplex& s : inner.source().base().elements()) {
    const Simplex& mid = inner.base(s);
    base[s] = outer.base(mid);
    std::map<int, int> comp;
    for (const auto& [e, img] : inner.component(s))
      comp[e] = outer.component(mid).at(img);
    comps[s] = std::move(comp);
  }
  return SetCosheafMorphism::make(inner.source(), outer.target(), std::move(base),
                                  std::move(comps));
}

std::vector<int> cosection_map(const SetCosheafMorphism& m, const CosectionSet& src,
                               const CosectionSet& tgt) {
  std::vector<int> out;
  for (const auto& cls : src.classes) {
    int image = -1;
    for (const auto& [s, e] : cls) {
      int c = tgt.class_of(m.base(s), m.component(s).at(e));
      if (image < 0)
        image = c;
      else if (image != c)
        throw std::logic_error("cosection map: image class is not well defined");
    }
    out.push_back(image);
  }
  return out;
}

std::vector<int> cosection_map(const SetCosheafMorphism& m) {
  return cosection_map(m, global_cosections(m.source()), global_cosections(m.target()));
}

bool faithfulness_witness(const RelMorphism& m, const RelMorphism& m2) {
  if (!(m.source() == m2.source()) || !(m.target() == m2.target()))
    throw std::invalid_argument("faithfulness: morphisms must share endpoints");
  if (!is_positive(m.source()))
    throw std::invalid_argument("faithfulness: source relation must be positive");
  if (m == m2) return true;
  return !(induced_cosheaf_morphism0(m) == induced_cosheaf_morphism0(m2));
}

ModuleSheaf ModuleSheaf::make(FacePoset base, std::map<Simplex, std::vector<int>> stalk_bases,
                              std::vector<std::string> element_names) {
  ModuleSheaf s;
  s.base_ = std::move(base);
  s.bases_ = std::move(stalk_bases);
  s.names_ = std::move(element_names);
  if (s.bases_.size() != s.base_.elements().size())
    throw std::invalid_argument("sheaf: stalk domain differs from the poset");
  for (const Simplex& e : s.base_.elements()) {
    auto it = s.bases_.find(e);
    if (it == s.bases_.end())
      throw std::invalid_argument("sheaf: missing stalk at " + s.base_.complex().name(e));
    const std::vector<int>& b = it->second;
    if (!std::is_sorted(b.begin(), b.end()) ||
        std::adjacent_find(b.begin(), b.end()) != b.end())
      throw std::invalid_argument("sheaf: stalk basis must be sorted and duplicate-free");
    for (int x : b)
      if (x < 0 || x >= static_cast<int>(s.names_.size()))
        throw std::invalid_argument("sheaf: basis element outside the name table");
  }
  for (const CoverRelation& cov : s.base_.covers()) {
    const std::vector<int>& lo = s.bases_.at(cov.face);
    for (int x : s.bases_.at(cov.coface))
      if (!sorted_member(lo, x))
        throw std::invalid_argument(
            "sheaf: coface basis must embed into the face basis (projection sheaf)");
  }
  return s;
}

const std::vector<int>& ModuleSheaf::stalk_basis(const Simplex& s) const {
  auto it = bases_.find(s);
  if (it == bases_.end())
    throw std::out_of_range("sheaf: no stalk at " + base_.complex().name(s));
  return it->second;
}

int ModuleSheaf::stalk_rank(const Simplex& s) const {
  return static_cast<int>(stalk_basis(s).size());
}

IntMatrix ModuleSheaf::restriction(const Simplex& face, const Simplex& coface) const {
  if (!base_.leq(face, coface))
    throw std::invalid_argument("sheaf: restriction requested for incomparable pair");
  const std::vector<int>& from = stalk_basis(face);
  const std::vector<int>& to = stalk_basis(coface);
  IntMatrix m = IntMatrix::zero(static_cast<int>(to.size()), static_cast<int>(from.size()));
  for (std::size_t i = 0; i < to.size(); ++i)
    for (std::size_t j = 0; j < from.size(); ++j)
      if (to[i] == from[j]) m.at(static_cast<int>(i), static_cast<int>(j)) = 1;
  return m;
}

bool ModuleSheaf::operator==(const ModuleSheaf& other) const {
  if (!(base_ == other.base_)) return false;
  auto norm = [](const ModuleSheaf& s) {
    std::map<std::vector<std::string>, std::set<std::string>> out;
    for (const auto& [e, b] : s.bases_) {
      auto key = s.base_.complex().label_set(e);
      out[key];
      for (int x : b) out[key].insert(s.names_.at(x));
    }
    return out;
  };
  return norm(*this) == norm(other);
}

ModuleSheaf shv_rep0(const Relation& r) {
  FacePoset base = face_poset(dowker_complex(r));
  std::map<Simplex, std::vector<int>> bases;
  for (const Simplex& s : base.elements()) bases[s] = y_sigma(r, s);
  return ModuleSheaf::make(std::move(base), std::move(bases), r.y_labels());
}

SectionBasis sheaf_global_sections(const ModuleSheaf& s) {
  // One variable per (simplex, basis element); every restriction s_tau = P s_sigma
  // contributes |basis(tau)| linear constraints.  Exact kernel = the sections.
  const std::vector<Simplex>& elems = s.base().elements();
  std::map<Simplex, int> offset;
  int nvars = 0;
  for (const Simplex& e : elems) {
    offset[e] = nvars;
    nvars += s.stalk_rank(e);
  }
  int nrows = 0;
  for (const CoverRelation& cov : s.base().covers()) nrows += s.stalk_rank(cov.coface);

  IntMatrix sys = IntMatrix::zero(nrows, nvars);
  int row = 0;
  for (const CoverRelation& cov : s.base().covers()) {
    IntMatrix p = s.restriction(cov.face, cov.coface);
    for (int i = 0; i < p.rows; ++i, ++row) {
      sys.at(row, offset.at(cov.coface) + i) += 1;
      for (int j = 0; j < p.cols; ++j)
        sys.at(row, offset.at(cov.face) + j) -= p.at(i, j);
    }
  }

  SectionBasis out;
  for (const std::vector<long long>& v : kernel_basis(sys)) {
    std::map<Simplex, std::vector<long long>> section;
    for (const Simplex& e : elems) {
      std::vector<long long> part(s.stalk_rank(e));
      for (int i = 0; i < s.stalk_rank(e); ++i) part[i] = v[offset.at(e) + i];
      section[e] = std::move(part);
    }
    out.sections.push_back(std::move(section));
  }
  out.dimension = static_cast<int>(out.sections.size());
  return out;
}

ModuleSheafMorphism ModuleSheafMorphism::make(ModuleSheaf lower, ModuleSheaf upper,
                                              std::map<Simplex, Simplex> base_map,
                                              std::map<Simplex, IntMatrix> components) {
  ModuleSheafMorphism m;
  m.lower_ = std::move(lower);
  m.upper_ = std::move(upper);
  m.base_ = std::move(base_map);
  m.comp_ = std::move(components);

  const SimplicialComplex& uk = m.upper_.base().complex();
  for (const Simplex& s : m.lower_.base().elements()) {
    auto bit = m.base_.find(s);
    if (bit == m.base_.end())
      throw std::invalid_argument("sheaf morphism: base map missing at " +
                                  m.lower_.base().complex().name(s));
    if (!uk.contains(bit->second))
      throw std::invalid_argument("sheaf morphism: base image is not an upper simplex");
    auto cit = m.comp_.find(s);
    if (cit == m.comp_.end())
      throw std::invalid_argument("sheaf morphism: component missing at " +
                                  m.lower_.base().complex().name(s));
    const IntMatrix& c = cit->second;
    if (c.rows != m.lower_.stalk_rank(s) || c.cols != m.upper_.stalk_rank(bit->second))
      throw std::invalid_argument("sheaf morphism: component shape mismatch at " +
                                  m.lower_.base().complex().name(s));
  }
  for (const CoverRelation& cov : m.lower_.base().covers()) {
    const Simplex& bf = m.base_.at(cov.face);
    const Simplex& bc = m.base_.at(cov.coface);
    if (!bf.subset_of(bc))
      throw std::invalid_argument("sheaf morphism: base map is not order-preserving");
    IntMatrix down_then_map =
        multiply(m.lower_.restriction(cov.face, cov.coface), m.comp_.at(cov.face));
    IntMatrix map_then_down =
        multiply(m.comp_.at(cov.coface), m.upper_.restriction(bf, bc));
    if (!(down_then_map == map_then_down))
      throw std::invalid_argument("sheaf morphism: square fails at cover " +
                                  m.lower_.base().complex().name(cov.face) + " < " +
                                  m.lower_.base().complex().name(cov.coface));
  }
  return m;
}

ModuleSheafMorphism ModuleSheafMorphism::identity(const ModuleSheaf& s) {
  std::map<Simplex, Simplex> base;
  std::map<Simplex, IntMatrix> comps;
  for (const Simplex& e : s.base().elements()) {
    base[e] = e;
    comps[e] = IntMatrix::identity(s.stalk_rank(e));
  }
  return make(s, s, std::move(base), std::move(comps));
}

const Simplex& ModuleSheafMorphism::base(const Simplex& s) const { return base_.at(s); }

const IntMatrix& ModuleSheafMorphism::component(const Simplex& s) const {
  return comp_.at(s);
}

bool ModuleSheafMorphism::operator==(const ModuleSheafMorphism& other) const {
  if (!(lower_ == other.lower_) || !(upper_ == other.upper_)) return false;
  auto norm = [](const ModuleSheafMorphism& m) {
    std::map<std::vector<std::string>, std::pair<std::vector<std::string>, IntMatrix>> out;
    for (const auto& [s, img] : m.base_)
      out[m.lower_.base().complex().label_set(s)] = {
          m.upper_.base().complex().label_set(img), m.comp_.at(s)};
    return out;
  };
  return norm(*this) == norm(other);
}

ModuleSheafMorphism induced_sheaf_morphism0(const RelMorphism& m) {
  ModuleSheaf lower = shv_rep0(m.source());
  ModuleSheaf upper = shv_rep0(m.target());
  SimplicialMap dm = induced_simplicial_map(m);
  std::map<Simplex, Simplex> base;
  std::map<Simplex, IntMatrix> comps;
  for (const Simplex& s : lower.base().elements()) {
    Simplex img = dm.apply(s);
    base[s] = img;
    const std::vector<int>& lo = lower.stalk_basis(s);
    const std::vector<int>& up = upper.stalk_basis(img);
    IntMatrix c = IntMatrix::zero(static_cast<int>(lo.size()), static_cast<int>(up.size()));
    for (std::size_t i = 0; i < lo.size(); ++i)
      for (std::size_t j = 0; j < up.size(); ++j)
        if (m.g(lo[i]) == up[j]) c.at(static_cast<int>(i), static_cast<int>(j)) = 1;
    comps[s] = std::move(c);
  }
  return ModuleSheafMorphism::make(std::move(lower), std::move(upper), std::move(base),
                                   std::move(comps));
}

ModuleSheafMorphism compose(const ModuleSheafMorphism& outer,
                            const ModuleSheafMorphism& inner) {
  if (!(inner.upper() == outer.lower()) ||
      inner.upper().element_names() != outer.lower().element_names() ||
      inner.upper().base().complex().labels() != outer.lower().base().complex().labels())
    throw std::invalid_argument("compose: sheaf morphism endpoints do not match");
  std::map<Simplex, Simplex> base;
  std::map<Simplex, IntMatrix> comps;
  for (const Simplex& s : inner.lower().base().elements()) {
    const Simplex& mid = inner.base(s);
    base[s] = outer.base(mid);
    comps[s] = multiply(inner.component(s), outer.component(mid));
  }
  return ModuleSheafMorphism::make(inner.lower(), outer.upper(), std::move(base),
                                   std::move(comps));
}

}  // namespace dowker
