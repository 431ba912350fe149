#ifndef DOWKER_DUALITY_HPP
#define DOWKER_DUALITY_HPP

#include <map>
#include <string>
#include <vector>

#include "dowker/simplicial_complex.hpp"

namespace dowker {

/**
 * A cosheaf of simplicial complexes on a face poset, with all extension maps
 * inclusions of subcomplexes.  Costalks share one ambient vertex-label table
 * (so unions and inclusions are literal).  The costalk at a coface is
 * required to be a subcomplex of the costalk at each of its faces; empty
 * costalks are first-class values.
 */
class ComplexCosheaf {
 public:
  ComplexCosheaf() = default;

  static ComplexCosheaf make(FacePoset base, std::map<Simplex, SimplicialComplex> costalks,
                             std::vector<std::string> element_labels);

  const FacePoset& base() const { return base_; }
  const SimplicialComplex& costalk(const Simplex& s) const;
  const std::vector<std::string>& element_labels() const { return element_labels_; }

  /// The inclusion costalk(coface) -> costalk(face), as a simplicial map.
  SimplicialMap extension(const Simplex& face, const Simplex& coface) const;

  bool operator==(const ComplexCosheaf& other) const;  // label-respecting

 private:
  FacePoset base_;
  std::map<Simplex, SimplicialComplex> costalks_;
  std::vector<std::string> element_labels_;
};

/// Representation cosheaf valued in complexes: the costalk at sigma is the
/// complete simplex on Y_sigma.
ComplexCosheaf coshv_rep(const Relation& r);

/// Cosections over an arbitrary collection of base simplices: the plain
/// union of their costalks (u need not be closed under faces).  Throws
/// std::invalid_argument when u contains a non-simplex of the base.
SimplicialComplex cosections_over(const ComplexCosheaf& c, const std::vector<Simplex>& u);

/// Cosections over everything: the union of all costalks.
SimplicialComplex global_cosection_complex(const ComplexCosheaf& c);

/// The dual cosheaf: base is the global cosection complex, and the costalk
/// at alpha collects the base simplices whose costalk contains alpha (a
/// subcomplex of the original base complex).  Dual of a representation
/// cosheaf is the representation cosheaf of the transpose.
ComplexCosheaf dual(const ComplexCosheaf& c);

/**
 * Certificate for the cosheaf form of Dowker duality on a relation:
 * dual(coshv_rep(r)) versus coshv_rep(transpose(r)), computed by the two
 * independent routes and compared costalk by costalk.
 */
struct DualityCertificate {
  bool ok = false;
  bool base_matched = false;
  struct Row {
    std::string simplex;       // costalk index in the dual base
    std::string left, right;   // maximal simplices of both costalks
    bool matched = false;
  };
  std::vector<Row> rows;
  std::string detail;  // first mismatch, empty when ok
};

DualityCertificate check_dowker_duality(const Relation& r);

/**
 * A morphism of complex-valued cosheaves: a simplicial map of base
 * complexes plus one simplicial map per base simplex, commuting with the
 * inclusion extensions.  Validated at construction.
 */
class ComplexCosheafMorphism {
 public:
  ComplexCosheafMorphism() = default;

  static ComplexCosheafMorphism make(ComplexCosheaf source, ComplexCosheaf target,
                                     SimplicialMap base_map,
                                     std::map<Simplex, SimplicialMap> components);

  static ComplexCosheafMorphism identity(const ComplexCosheaf& c);

  const ComplexCosheaf& source() const { return source_; }
  const ComplexCosheaf& target() const { return target_; }
  const SimplicialMap& base_map() const { return base_map_; }
  const SimplicialMap& component(const Simplex& s) const;

  bool operator==(const ComplexCosheafMorphism& other) const;

 private:
  ComplexCosheaf source_, target_;
  SimplicialMap base_map_;
  std::map<Simplex, SimplicialMap> comp_;
};

/// Induced morphism coshv_rep(src) -> coshv_rep(tgt): base D(f), components
/// the restrictions of g (complete simplices collapse onto complete ones).
ComplexCosheafMorphism induced_complex_cosheaf_morphism(const RelMorphism& m);

ComplexCosheafMorphism compose(const ComplexCosheafMorphism& outer,
                               const ComplexCosheafMorphism& inner);

/// The dual image of a morphism: base map the glued map of global cosection
/// complexes, component at alpha the restriction of the original base map.
ComplexCosheafMorphism dual_morphism(const ComplexCosheafMorphism& m);

}  // namespace dowker

#endif  // DOWKER_DUALITY_HPP
