#ifndef DOWKER_HOMOLOGY_HPP
#define DOWKER_HOMOLOGY_HPP

#include "dowker/linalg.hpp"
#include "dowker/simplicial_complex.hpp"

namespace dowker {

/// The boundary operator from dim-simplices to (dim-1)-simplices over GF(2),
/// with rows/columns in canonical order within each dimension.  dim == 0
/// gives a 0-row matrix over the vertices.  Throws std::out_of_range when
/// dim < 0 or dim > k.dimension().
GF2Matrix boundary_matrix(const SimplicialComplex& k, int dim);

/// Betti numbers over GF(2), indices 0..dimension.  Empty complex -> empty.
std::vector<int> betti_numbers(const SimplicialComplex& k);

}  // namespace dowker

#endif  // DOWKER_HOMOLOGY_HPP
