#ifndef DOWKER_DOT_HPP
#define DOWKER_DOT_HPP

#include <string>

#include "dowker/cosheaf.hpp"
#include "dowker/duality.hpp"

namespace dowker {

/// Hasse diagram: one node per simplex (canonical order), one edge per cover
/// relation, faces below cofaces.
std::string to_dot(const FacePoset& p);

/// Cosheaf diagrams: nodes show the simplex and its costalk, solid edges the
/// cover extensions (pointing from cofaces down to faces).
std::string to_dot(const SetCosheaf& c);
std::string to_dot(const ComplexCosheaf& c);

/// Morphism diagrams: source and target as clusters, dashed arrows for the
/// per-simplex components.
std::string to_dot(const SetCosheafMorphism& m);
std::string to_dot(const ComplexCosheafMorphism& m);

}  // namespace dowker

#endif  // DOWKER_DOT_HPP
