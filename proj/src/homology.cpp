#include "dowker/homology.hpp"

#include <algorithm>
#include <map>

namespace dowker {

namespace {

// simplices of one cardinality, canonical order
std::vector<Simplex> grade(const SimplicialComplex& k, int dim) {
  std::vector<Simplex> out;
  for (const Simplex& s : k.canonical_order())
    if (static_cast<int>(s.size()) == dim + 1) out.push_back(s);
  return out;
}

}  // namespace

GF2Matrix boundary_matrix(const SimplicialComplex& k, int dim) {
  if (dim < 0 || dim > k.dimension())
    throw std::out_of_range("boundary_matrix: dimension out of range");
  std::vector<Simplex> rows = dim == 0 ? std::vector<Simplex>{} : grade(k, dim - 1);
  std::vector<Simplex> cols = grade(k, dim);
  std::map<Simplex, int> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<int>(i);

  GF2Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const Simplex& f : cols[j].facets())
      if (!f.empty()) m.set(row_index.at(f), static_cast<int>(j), true);
  return m;
}

std::vector<int> betti_numbers(const SimplicialComplex& k) {
  const int dim = k.dimension();
  std::vector<int> betti;
  for (int q = 0; q <= dim; ++q) {
    int n_q = static_cast<int>(grade(k, q).size());
    int rank_q = boundary_matrix(k, q).rank();        // rank of d_q
    int rank_next = q + 1 <= dim ? boundary_matrix(k, q + 1).rank() : 0;
    betti.push_back(n_q - rank_q - rank_next);        // nullity(d_q) - rank(d_{q+1})
  }
  return betti;
}

}  // namespace dowker
