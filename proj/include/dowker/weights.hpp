#ifndef DOWKER_WEIGHTS_HPP
#define DOWKER_WEIGHTS_HPP

#include <functional>
#include <map>
#include <variant>

#include "dowker/simplicial_complex.hpp"

namespace dowker {

enum class WeightKind { total, differential, unchecked };

/**
 * A nonnegative integer weight on every simplex of a complex, plus the empty
 * simplex.  `total` weights are validated order-reversing at construction
 * (sigma subset of tau implies value(sigma) >= value(tau), empty simplex
 * included); `differential`/`unchecked` only require nonnegativity.
 */
class WeightFunction {
 public:
  WeightFunction() = default;
  WeightFunction(SimplicialComplex complex, std::map<Simplex, long long> values,
                 WeightKind kind);

  const SimplicialComplex& complex() const { return complex_; }
  const std::map<Simplex, long long>& values() const { return values_; }
  WeightKind kind() const { return kind_; }

  long long at(const Simplex& s) const;  // throws std::out_of_range off-domain
  long long sum() const;                 // over the whole domain, empty simplex included

 private:
  SimplicialComplex complex_;
  std::map<Simplex, long long> values_;
  WeightKind kind_ = WeightKind::unchecked;
};

/// t(sigma) = |Y_sigma|, the number of columns witnessing sigma.
/// t of the empty simplex is the total number of columns.
WeightFunction total_weight(const Relation& r);

/// d(sigma) = number of columns whose support is exactly sigma.
/// d of the empty simplex counts the all-zero columns.
WeightFunction differential_weight(const Relation& r);

/// Order-reversal check; cover pairs suffice by transitivity, plus the empty
/// simplex against each vertex.  Works for any kind.
bool is_filtration(const WeightFunction& w);

/// Failure value for reconstruct_from_total: the first simplex driven
/// negative, with the full intermediate weight snapshot at that point.
struct NotRealizable {
  Simplex offending;
  std::map<Simplex, long long> snapshot;
};

using TotalReconstruction = std::variant<Relation, NotRealizable>;

/**
 * Emit d(sigma) indicator columns per simplex (in canonical order), then
 * d(empty) all-zero columns.  When d is the differential weight of some
 * relation this inverts it up to a column bijection; the result's Dowker
 * complex equals k exactly when d is positive on k's maximal simplices.
 * Row labels are k's vertex labels; column labels are generated y1..yn.
 * Throws std::invalid_argument when d lives on a different complex.
 */
Relation reconstruct_from_differential(const SimplicialComplex& k,
                                       const WeightFunction& d);

/**
 * Inverse of total_weight by iterative peeling: repeatedly pick a simplex
 * with nonzero weight all of whose strict cofaces have weight zero, emit
 * that many indicator columns, and subtract from all its subsets (empty
 * simplex included).  Leftover weight on the empty simplex becomes all-zero
 * columns.  Returns NotRealizable the moment any intermediate weight goes
 * negative.  The default picks the canonically least admissible simplex;
 * any admissible choice yields the same column multiset.
 */
TotalReconstruction reconstruct_from_total(const SimplicialComplex& k,
                                           const WeightFunction& t);

/// Test hook: `choose` picks an index into the (canonically ordered) list of
/// currently admissible simplices.  Used to verify tie-break independence.
TotalReconstruction reconstruct_from_total(
    const SimplicialComplex& k, const WeightFunction& t,
    const std::function<std::size_t(const std::vector<Simplex>&)>& choose);

}  // namespace dowker

#endif  // DOWKER_WEIGHTS_HPP
