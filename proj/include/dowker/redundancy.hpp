#ifndef DOWKER_REDUNDANCY_HPP
#define DOWKER_REDUNDANCY_HPP

#include <string>
#include <variant>
#include <vector>

#include "dowker/duality.hpp"

namespace dowker {

/**
 * The redundancy cosheaf of a relation: over each Dowker simplex sigma, the
 * Dowker complex of the restricted relation (Y_sigma, X minus sigma) — the
 * sets of common columns of sigma that some *other* row also witnesses.
 * Costalks over maximal simplices are empty.
 */
ComplexCosheaf redundancy_cosheaf(const Relation& r);

/// Why a relation morphism fails to induce a map of redundancy cosheaves:
/// the restriction of g on this costalk does not land in the target costalk.
/// In the sharpest case the target costalk is empty while the domain is not.
struct RedundancyObstruction {
  Simplex simplex;                 // source base simplex where it fails
  Simplex failed_member;           // a costalk simplex with no valid image
  SimplicialComplex domain_costalk;
  SimplicialComplex target_costalk;
};

using RedundancyMorphismResult = std::variant<ComplexCosheafMorphism, RedundancyObstruction>;

/**
 * Attempt the g-restriction components over the induced base map.  Unlike
 * the representation cosheaves this is not functorial: the result is either
 * a validated morphism or the first obstruction in canonical scan order
 * (decreasing cardinality, then label-lexicographic).
 */
RedundancyMorphismResult try_induced_redundancy_morphism(const RelMorphism& m);

/**
 * Rows whose support is a proper subset of another row's support.  Each such
 * row generates a dominated simplex of the transposed Dowker complex, so
 * deleting it leaves dowker_complex(transpose(r)) unchanged.  Rows with
 * *equal* supports dominate each other non-properly, so they are reported on
 * the separate duplicate channel (all groups of size >= 2, sorted).
 */
struct RedundancyReport {
  struct Entry {
    std::string row;      // the dominated row
    std::string witness;  // a row whose support properly contains it
  };
  std::vector<Entry> redundant;                       // sorted by row label
  std::vector<std::vector<std::string>> duplicates;   // groups of equal supports
};

RedundancyReport redundant_rows(const Relation& r);

/// The relation with the named rows removed (labels must exist).
Relation drop_rows(const Relation& r, const std::vector<std::string>& rows);

}  // namespace dowker

#endif  // DOWKER_REDUNDANCY_HPP
