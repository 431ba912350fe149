#include "dowker/weights.hpp"

#include <algorithm>

namespace dowker {

WeightFunction::WeightFunction(SimplicialComplex complex,
                               std::map<Simplex, long long> values, WeightKind kind)
    : complex_(std::move(complex)), values_(std::move(values)), kind_(kind) {
  if (!values_.count(Simplex{}))
    throw std::invalid_argument("weight: missing value for the empty simplex");
  for (const auto& [s, v] : values_) {
    if (!s.empty() && !complex_.contains(s))
      throw std::invalid_argument("weight: value on a non-simplex");
    if (v < 0)
      throw std::invalid_argument("weight: negative value at " + complex_.name(s));
  }
  if (values_.size() != complex_.simplices().size() + 1)
    throw std::invalid_argument("weight: domain does not cover all simplices");
  if (kind_ == WeightKind::total) {
    WeightFunction probe;  // reuse the public check without copying everything
    probe.complex_ = complex_;
    probe.values_ = values_;
    if (!is_filtration(probe))
      throw std::invalid_argument("weight: declared total but not order-reversing");
  }
}

long long WeightFunction::at(const Simplex& s) const {
  auto it = values_.find(s);
  if (it == values_.end())
    throw std::out_of_range("weight: no value at " + complex_.name(s));
  return it->second;
}

long long WeightFunction::sum() const {
  long long acc = 0;
  for (const auto& [s, v] : values_) acc += v;
  return acc;
}

WeightFunction total_weight(const Relation& r) {
  SimplicialComplex k = dowker_complex(r);
  std::map<Simplex, long long> values;
  for (const Simplex& s : k.simplices())
    values[s] = static_cast<long long>(y_sigma(r, s).size());
  values[Simplex{}] = r.col_count();
  return WeightFunction(std::move(k), std::move(values), WeightKind::total);
}

WeightFunction differential_weight(const Relation& r) {
  SimplicialComplex k = dowker_complex(r);
  std::map<Simplex, long long> values;
  for (const Simplex& s : k.simplices()) values[s] = 0;
  values[Simplex{}] = 0;
  for (int j = 0; j < r.col_count(); ++j)
    values[Simplex(r.col_support(j))] += 1;
  return WeightFunction(std::move(k), std::move(values), WeightKind::differential);
}

bool is_filtration(const WeightFunction& w) {
  const SimplicialComplex& k = w.complex();
  const FacePoset poset = face_poset(k);
  for (const CoverRelation& c : poset.covers())
    if (w.at(c.face) < w.at(c.coface)) return false;
  for (Vertex v : k.vertices())
    if (w.at(Simplex{}) < w.at(Simplex({v}))) return false;
  return true;
}

namespace {

Relation relation_from_columns(const SimplicialComplex& k,
                               const std::vector<Simplex>& columns) {
  const std::vector<Vertex>& rows = k.vertices();
  std::vector<std::string> x_labels;
  for (Vertex v : rows) x_labels.push_back(k.label(v));
  std::vector<std::string> y_labels;
  for (std::size_t j = 0; j < columns.size(); ++j)
    y_labels.push_back("y" + std::to_string(j + 1));
  std::vector<std::vector<int>> m(rows.size(), std::vector<int>(columns.size(), 0));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (columns[j].contains(rows[i])) m[i][j] = 1;
  return Relation(std::move(x_labels), std::move(y_labels), m);
}

void require_same_complex(const SimplicialComplex& k, const WeightFunction& w,
                          const char* op) {
  if (!(w.complex() == k))
    throw std::invalid_argument(std::string(op) + ": weight lives on a different complex");
}

}  // namespace

Relation reconstruct_from_differential(const SimplicialComplex& k,
                                       const WeightFunction& d) {
  require_same_complex(k, d, "reconstruct_from_differential");
  std::vector<Simplex> columns;
  for (const Simplex& s : k.canonical_order())
    for (long long c = 0; c < d.at(s); ++c) columns.push_back(s);
  for (long long c = 0; c < d.at(Simplex{}); ++c) columns.push_back(Simplex{});
  return relation_from_columns(k, columns);
}

TotalReconstruction reconstruct_from_total(
    const SimplicialComplex& k, const WeightFunction& t,
    const std::function<std::size_t(const std::vector<Simplex>&)>& choose) {
  require_same_complex(k, t, "reconstruct_from_total");
  std::map<Simplex, long long> values = t.values();
  const std::vector<Simplex> order = k.canonical_order();
  std::vector<Simplex> columns;

  // Each pass clears at least one unit of weight, so total weight bounds the
  // number of passes; exceeding it means the peeling logic is broken.
  const long long bound = t.sum() + 1;
  for (long long pass = 0;; ++pass) {
    if (pass > bound)
      throw std::logic_error("reconstruct_from_total: termination bound exceeded");

    // admissible: nonzero weight, every strict coface already cleared
    std::vector<Simplex> admissible;
    for (const Simplex& s : order) {
      if (values[s] == 0) continue;
      bool clear = true;
      for (const Simplex& t2 : k.simplices())
        if (!(t2 == s) && s.subset_of(t2) && values[t2] != 0) { clear = false; break; }
      if (clear) admissible.push_back(s);
    }
    if (admissible.empty()) break;  // all simplex weights are zero

    std::size_t pick = choose(admissible);
    if (pick >= admissible.size())
      throw std::logic_error("reconstruct_from_total: chooser index out of range");
    const Simplex chosen = admissible[pick];
    const long long c = values[chosen];

    for (long long i = 0; i < c; ++i) columns.push_back(chosen);

    std::vector<Simplex> subs = chosen.nonempty_subsets();
    std::sort(subs.begin(), subs.end(), [&k](const Simplex& a, const Simplex& b) {
      return k.canonical_less(a, b);
    });
    subs.push_back(Simplex{});
    for (const Simplex& g : subs) {
      values[g] -= c;
      if (values[g] < 0) return NotRealizable{g, values};
    }
  }

  // whatever is left on the empty simplex becomes all-zero columns
  for (long long i = 0; i < values[Simplex{}]; ++i) columns.push_back(Simplex{});
  return relation_from_columns(k, columns);
}

TotalReconstruction reconstruct_from_total(const SimplicialComplex& k,
                                           const WeightFunction& t) {
  return reconstruct_from_total(k, t, [](const std::vector<Simplex>&) {
    return std::size_t{0};
  });
}

}  // namespace dowker
