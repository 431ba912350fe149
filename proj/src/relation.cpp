#include "dowker/relation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dowker {

namespace {

std::map<std::string, int> build_index(const std::vector<std::string>& labels,
                                       const char* side) {
  std::map<std::string, int> idx;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    if (labels[i].empty())
      throw std::invalid_argument(std::string(side) + " label may not be empty");
    if (!idx.emplace(labels[i], i).second)
      throw std::invalid_argument(std::string("duplicate ") + side + " label: " + labels[i]);
  }
  return idx;
}

}  // namespace

Relation::Relation(std::vector<std::string> x_labels, std::vector<std::string> y_labels,
                   const std::vector<std::vector<int>>& matrix)
    : nx_(static_cast<int>(x_labels.size())),
      ny_(static_cast<int>(y_labels.size())),
      x_labels_(std::move(x_labels)),
      y_labels_(std::move(y_labels)) {
  if (static_cast<int>(matrix.size()) != nx_)
    throw std::invalid_argument("relation: matrix has " + std::to_string(matrix.size()) +
                                " rows, expected " + std::to_string(nx_));
  bits_.resize(static_cast<std::size_t>(nx_) * ny_, 0);
  for (int i = 0; i < nx_; ++i) {
    if (static_cast<int>(matrix[i].size()) != ny_)
      throw std::invalid_argument("relation: row " + std::to_string(i) + " has " +
                                  std::to_string(matrix[i].size()) + " entries, expected " +
                                  std::to_string(ny_));
    for (int j = 0; j < ny_; ++j) {
      int v = matrix[i][j];
      if (v != 0 && v != 1)
        throw std::invalid_argument("relation: entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") is " + std::to_string(v) +
                                    ", expected 0 or 1");
      bits_[static_cast<std::size_t>(i) * ny_ + j] = static_cast<std::uint8_t>(v);
    }
  }
  x_index_ = build_index(x_labels_, "row");
  y_index_ = build_index(y_labels_, "column");
}

int Relation::x_id(const std::string& label) const {
  auto it = x_index_.find(label);
  if (it == x_index_.end()) throw std::out_of_range("unknown row label: " + label);
  return it->second;
}

int Relation::y_id(const std::string& label) const {
  auto it = y_index_.find(label);
  if (it == y_index_.end()) throw std::out_of_range("unknown column label: " + label);
  return it->second;
}

std::vector<int> Relation::row_support(int x) const {
  std::vector<int> s;
  for (int j = 0; j < ny_; ++j)
    if (at(x, j)) s.push_back(j);
  return s;
}

std::vector<int> Relation::col_support(int y) const {
  std::vector<int> s;
  for (int i = 0; i < nx_; ++i)
    if (at(i, y)) s.push_back(i);
  return s;
}

std::vector<std::vector<int>> Relation::matrix() const {
  std::vector<std::vector<int>> m(nx_, std::vector<int>(ny_, 0));
  for (int i = 0; i < nx_; ++i)
    for (int j = 0; j < ny_; ++j) m[i][j] = at(i, j) ? 1 : 0;
  return m;
}

bool Relation::operator==(const Relation& other) const {
  return nx_ == other.nx_ && ny_ == other.ny_ && x_labels_ == other.x_labels_ &&
         y_labels_ == other.y_labels_ && bits_ == other.bits_;
}

Relation transpose(const Relation& r) {
  std::vector<std::vector<int>> m(r.col_count(), std::vector<int>(r.row_count(), 0));
  for (int i = 0; i < r.row_count(); ++i)
    for (int j = 0; j < r.col_count(); ++j)
      if (r.at(i, j)) m[j][i] = 1;
  return Relation(r.y_labels(), r.x_labels(), m);
}

bool is_positive(const Relation& r) {
  for (int i = 0; i < r.row_count(); ++i)
    if (r.row_support(i).empty()) return false;
  for (int j = 0; j < r.col_count(); ++j)
    if (r.col_support(j).empty()) return false;
  return true;
}

std::vector<std::string> empty_rows(const Relation& r) {
  std::vector<std::string> out;
  for (int i = 0; i < r.row_count(); ++i)
    if (r.row_support(i).empty()) out.push_back(r.x_label(i));
  return out;
}

bool same_up_to_column_bijection(const Relation& a, const Relation& b) {
  if (a.col_count() != b.col_count()) return false;
  // Compare multisets of column supports, with rows identified by label.
  // A support multiset bijection is exactly a support-preserving column
  // bijection, so sorting both sides performs the search.
  auto supports = [](const Relation& r) {
    std::vector<std::vector<std::string>> out;
    for (int j = 0; j < r.col_count(); ++j) {
      std::vector<std::string> s;
      for (int i : r.col_support(j)) s.push_back(r.x_label(i));
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return supports(a) == supports(b);
}

bool RelMorphism::operator==(const RelMorphism& other) const {
  return src_ == other.src_ && tgt_ == other.tgt_ && f_ == other.f_ && g_ == other.g_;
}

RelMorphism make_morphism(const Relation& src, const Relation& tgt,
                          const std::vector<int>& f, const std::vector<int>& g) {
  if (static_cast<int>(f.size()) != src.row_count())
    throw std::invalid_argument("morphism: f has " + std::to_string(f.size()) +
                                " entries, expected " + std::to_string(src.row_count()));
  if (static_cast<int>(g.size()) != src.col_count())
    throw std::invalid_argument("morphism: g has " + std::to_string(g.size()) +
                                " entries, expected " + std::to_string(src.col_count()));
  for (int v : f)
    if (v < 0 || v >= tgt.row_count())
      throw std::invalid_argument("morphism: f value out of range");
  for (int v : g)
    if (v < 0 || v >= tgt.col_count())
      throw std::invalid_argument("morphism: g value out of range");

  std::vector<std::pair<std::string, std::string>> bad;
  for (int x = 0; x < src.row_count(); ++x)
    for (int y = 0; y < src.col_count(); ++y)
      if (src.at(x, y) && !tgt.at(f[x], g[y]))
        bad.emplace_back(src.x_label(x), src.y_label(y));
  if (!bad.empty()) {
    std::string what = "not a morphism: image of related pair is unrelated;"
                       " witnesses:";
    for (const auto& [x, y] : bad) what += " (" + x + "," + y + ")";
    throw MorphismError(what, std::move(bad));
  }
  return RelMorphism(src, tgt, f, g);
}

RelMorphism make_morphism(const Relation& src, const Relation& tgt,
                          const std::map<std::string, std::string>& f,
                          const std::map<std::string, std::string>& g) {
  std::vector<int> fv(src.row_count()), gv(src.col_count());
  for (int x = 0; x < src.row_count(); ++x) {
    auto it = f.find(src.x_label(x));
    if (it == f.end())
      throw std::invalid_argument("morphism: f does not map row " + src.x_label(x));
    try {
      fv[x] = tgt.x_id(it->second);
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("morphism: f sends " + src.x_label(x) +
                                  " to unknown row " + it->second);
    }
  }
  for (int y = 0; y < src.col_count(); ++y) {
    auto it = g.find(src.y_label(y));
    if (it == g.end())
      throw std::invalid_argument("morphism: g does not map column " + src.y_label(y));
    try {
      gv[y] = tgt.y_id(it->second);
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("morphism: g sends " + src.y_label(y) +
                                  " to unknown column " + it->second);
    }
  }
  return make_morphism(src, tgt, fv, gv);
}

RelMorphism identity_morphism(const Relation& r) {
  std::vector<int> f(r.row_count()), g(r.col_count());
  for (int i = 0; i < r.row_count(); ++i) f[i] = i;
  for (int j = 0; j < r.col_count(); ++j) g[j] = j;
  return make_morphism(r, r, f, g);
}

RelMorphism compose(const RelMorphism& outer, const RelMorphism& inner) {
  if (!(inner.target() == outer.source()))
    throw std::invalid_argument("compose: inner target differs from outer source");
  std::vector<int> f(inner.source().row_count()), g(inner.source().col_count());
  for (int x = 0; x < inner.source().row_count(); ++x) f[x] = outer.f(inner.f(x));
  for (int y = 0; y < inner.source().col_count(); ++y) g[y] = outer.g(inner.g(y));
  return make_morphism(inner.source(), outer.target(), f, g);
}

RelMorphism transpose(const RelMorphism& m) {
  return make_morphism(transpose(m.source()), transpose(m.target()), m.g_map(), m.f_map());
}

}  // namespace dowker
