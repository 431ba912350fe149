#include "dowker/redundancy.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dowker {

ComplexCosheaf redundancy_cosheaf(const Relation& r) {
  FacePoset base = face_poset(dowker_complex(r));
  std::map<Simplex, SimplicialComplex> costalks;
  for (const Simplex& sigma : base.elements()) {
    std::vector<int> ys = y_sigma(r, sigma);
    // generators: for every row outside sigma, the columns of Y_sigma it
    // also witnesses
    std::vector<Simplex> gens;
    for (int x = 0; x < r.row_count(); ++x) {
      if (sigma.contains(x)) continue;
      std::vector<int> common;
      for (int y : ys)
        if (r.at(x, y)) common.push_back(y);
      if (!common.empty()) gens.emplace_back(std::move(common));
    }
    costalks[sigma] = SimplicialComplex::generated_by(r.y_labels(), gens);
  }
  return ComplexCosheaf::make(std::move(base), std::move(costalks), r.y_labels());
}

RedundancyMorphismResult try_induced_redundancy_morphism(const RelMorphism& m) {
  ComplexCosheaf src = redundancy_cosheaf(m.source());
  ComplexCosheaf tgt = redundancy_cosheaf(m.target());
  SimplicialMap base = SimplicialMap::make(src.base().complex(), tgt.base().complex(),
                                           m.f_map());

  std::map<Simplex, SimplicialMap> comps;
  // canonical scan order so the reported obstruction is deterministic
  for (const Simplex& sigma : src.base().elements()) {
    const SimplicialComplex& dom = src.costalk(sigma);
    const SimplicialComplex& cod = tgt.costalk(base.apply(sigma));
    for (const Simplex& s : dom.canonical_order()) {
      std::set<Vertex> image;
      for (Vertex v : s.vertices()) image.insert(m.g(v));
      Simplex img(std::vector<Vertex>(image.begin(), image.end()));
      if (!cod.contains(img))
        return RedundancyObstruction{sigma, s, dom, cod};
    }
    comps[sigma] = SimplicialMap::make(dom, cod, m.g_map());
  }
  return ComplexCosheafMorphism::make(std::move(src), std::move(tgt), std::move(base),
                                      std::move(comps));
}

RedundancyReport redundant_rows(const Relation& r) {
  RedundancyReport report;
  std::map<std::vector<int>, std::vector<std::string>> by_support;
  for (int x = 0; x < r.row_count(); ++x)
    by_support[r.row_support(x)].push_back(r.x_label(x));

  for (int x = 0; x < r.row_count(); ++x) {
    std::vector<int> sup = r.row_support(x);
    for (int w = 0; w < r.row_count(); ++w) {
      if (w == x) continue;
      std::vector<int> wsup = r.row_support(w);
      if (sup.size() < wsup.size() &&
          std::includes(wsup.begin(), wsup.end(), sup.begin(), sup.end())) {
        report.redundant.push_back({r.x_label(x), r.x_label(w)});
        break;  // one witness suffices
      }
    }
  }
  std::sort(report.redundant.begin(), report.redundant.end(),
            [](const RedundancyReport::Entry& a, const RedundancyReport::Entry& b) {
              return a.row < b.row;
            });

  for (auto& [sup, labels] : by_support) {
    if (labels.size() < 2) continue;
    std::sort(labels.begin(), labels.end());
    report.duplicates.push_back(labels);
  }
  std::sort(report.duplicates.begin(), report.duplicates.end());
  return report;
}

Relation drop_rows(const Relation& r, const std::vector<std::string>& rows) {
  std::set<int> dropped;
  for (const std::string& l : rows) dropped.insert(r.x_id(l));
  std::vector<std::string> x_labels;
  std::vector<std::vector<int>> m;
  for (int x = 0; x < r.row_count(); ++x) {
    if (dropped.count(x)) continue;
    x_labels.push_back(r.x_label(x));
    std::vector<int> row(r.col_count());
    for (int y = 0; y < r.col_count(); ++y) row[y] = r.at(x, y) ? 1 : 0;
    m.push_back(std::move(row));
  }
  return Relation(std::move(x_labels), r.y_labels(), m);
}

}  // namespace dowker
