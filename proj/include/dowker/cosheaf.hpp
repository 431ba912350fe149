#ifndef DOWKER_COSHEAF_HPP
#define DOWKER_COSHEAF_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dowker/linalg.hpp"
#include "dowker/simplicial_complex.hpp"

namespace dowker {

/**
 * A cosheaf of finite sets on the face poset of a complex.  Each simplex
 * carries a costalk (a sorted list of element ids, with a shared id->name
 * table used for display and label-respecting comparison); extension maps
 * point from cofaces down to faces.  Extensions are stored on Hasse covers
 * only; longer ones are composed on demand along a canonical cover chain.
 */
class SetCosheaf {
 public:
  SetCosheaf() = default;

  /// Validates: costalks exactly on the poset elements, one extension per
  /// cover, each extension total on the coface costalk with values in the
  /// face costalk.  Path-independence of composites is not assumed here;
  /// verify_composition() checks it exhaustively.
  static SetCosheaf make(
      FacePoset base, std::map<Simplex, std::vector<int>> costalks,
      std::map<std::pair<Simplex, Simplex>, std::map<int, int>> cover_extensions,
      std::vector<std::string> element_names);

  const FacePoset& base() const { return base_; }
  const std::vector<int>& costalk(const Simplex& s) const;
  const std::vector<std::string>& element_names() const { return names_; }
  std::string element_name(int e) const { return names_.at(e); }

  /// Extension map for any pair face <= coface, composed along covers.
  /// Identity when face == coface.  Throws std::invalid_argument unless the
  /// pair is comparable in the base.
  std::map<int, int> extension(const Simplex& face, const Simplex& coface) const;

  bool extensions_are_inclusions() const;

  /// ext(a,c) == ext(a,b) . ext(b,c) for every chain a <= b <= c.
  bool verify_composition() const;

  bool operator==(const SetCosheaf& other) const;  // label-respecting

 private:
  FacePoset base_;
  std::map<Simplex, std::vector<int>> costalks_;
  std::map<std::pair<Simplex, Simplex>, std::map<int, int>> ext_;
  std::vector<std::string> names_;
};

/// The representation cosheaf of a relation: costalk(sigma) = Y_sigma, all
/// extensions the set inclusions Y_tau into Y_sigma for sigma <= tau.
SetCosheaf coshv_rep0(const Relation& r);

/**
 * Global cosections: the (simplex, element) pairs of all costalks, glued by
 * the zig-zag closure of the extension maps.  Classes and their members are
 * canonically sorted, so the numbering is deterministic.
 */
struct CosectionSet {
  std::vector<std::vector<std::pair<Simplex, int>>> classes;

  int count() const { return static_cast<int>(classes.size()); }
  /// Index of the class containing (s,e); throws std::out_of_range.
  int class_of(const Simplex& s, int e) const;
};

CosectionSet global_cosections(const SetCosheaf& c);

/**
 * A morphism of set cosheaves over an order-preserving base map: one
 * component per source simplex, commuting with extensions.  Validated at
 * construction.
 */
class SetCosheafMorphism {
 public:
  SetCosheafMorphism() = default;

  static SetCosheafMorphism make(SetCosheaf source, SetCosheaf target,
                                 std::map<Simplex, Simplex> base_map,
                                 std::map<Simplex, std::map<int, int>> components);

  static SetCosheafMorphism identity(const SetCosheaf& c);

  const SetCosheaf& source() const { return source_; }
  const SetCosheaf& target() const { return target_; }
  const Simplex& base(const Simplex& s) const;
  const std::map<int, int>& component(const Simplex& s) const;

  bool operator==(const SetCosheafMorphism& other) const;

 private:
  SetCosheaf source_, target_;
  std::map<Simplex, Simplex> base_;
  std::map<Simplex, std::map<int, int>> comp_;
};

/// The cosheaf morphism induced by a relation morphism: base D(f), component
/// at sigma the restriction of g to Y_sigma.
SetCosheafMorphism induced_cosheaf_morphism0(const RelMorphism& m);

SetCosheafMorphism compose(const SetCosheafMorphism& outer,
                           const SetCosheafMorphism& inner);

/// The map induced on global cosections (class index -> class index);
/// checks well-definedness on every class member and throws std::logic_error
/// on violation (cannot happen for valid morphisms).
std::vector<int> cosection_map(const SetCosheafMorphism& m, const CosectionSet& src,
                               const CosectionSet& tgt);
std::vector<int> cosection_map(const SetCosheafMorphism& m);

/**
 * Faithfulness probe: for morphisms m, m2 between the same pair of relations
 * with positive source, returns true iff equal induced cosheaf morphisms
 * imply m == m2 (always true on positive relations; the point of the probe).
 * Throws std::invalid_argument unless the source is positive and the
 * endpoints agree.
 */
bool faithfulness_witness(const RelMorphism& m, const RelMorphism& m2);

/**
 * A sheaf of free integer modules on a face poset: each stalk is spanned by
 * a sorted list of named basis elements, and every restriction (pointing
 * from faces up to cofaces) is the projection induced by basis inclusion.
 */
class ModuleSheaf {
 public:
  ModuleSheaf() = default;

  /// Requires stalk bases exactly on the poset elements and, for each cover,
  /// the coface basis a subset of the face basis.
  static ModuleSheaf make(FacePoset base, std::map<Simplex, std::vector<int>> stalk_bases,
                          std::vector<std::string> element_names);

  const FacePoset& base() const { return base_; }
  const std::vector<int>& stalk_basis(const Simplex& s) const;
  int stalk_rank(const Simplex& s) const;
  const std::vector<std::string>& element_names() const { return names_; }

  /// Projection matrix stalk(face) -> stalk(coface), face <= coface.
  IntMatrix restriction(const Simplex& face, const Simplex& coface) const;

  bool operator==(const ModuleSheaf& other) const;  // label-respecting

 private:
  FacePoset base_;
  std::map<Simplex, std::vector<int>> bases_;
  std::vector<std::string> names_;
};

/// The representation sheaf of a relation: stalk(sigma) = span of Y_sigma.
ModuleSheaf shv_rep0(const Relation& r);

/// A basis of the space of global sections (families s_sigma compatible with
/// every restriction), solved exactly; coordinates are integers.
struct SectionBasis {
  int dimension = 0;
  std::vector<std::map<Simplex, std::vector<long long>>> sections;
};

SectionBasis sheaf_global_sections(const ModuleSheaf& s);

/**
 * A morphism of module sheaves over a base map pointing the other way
 * (contravariant): `lower` lives on the source poset, `upper` on the target
 * poset, and each component maps stalk_upper(base(sigma)) -> stalk_lower(sigma).
 */
class ModuleSheafMorphism {
 public:
  ModuleSheafMorphism() = default;

  static ModuleSheafMorphism make(ModuleSheaf lower, ModuleSheaf upper,
                                  std::map<Simplex, Simplex> base_map,
                                  std::map<Simplex, IntMatrix> components);

  static ModuleSheafMorphism identity(const ModuleSheaf& s);

  const ModuleSheaf& lower() const { return lower_; }
  const ModuleSheaf& upper() const { return upper_; }
  const Simplex& base(const Simplex& s) const;
  const IntMatrix& component(const Simplex& s) const;

  bool operator==(const ModuleSheafMorphism& other) const;

 private:
  ModuleSheaf lower_, upper_;
  std::map<Simplex, Simplex> base_;
  std::map<Simplex, IntMatrix> comp_;
};

/// The sheaf morphism induced by a relation morphism m : r1 -> r2; it points
/// from the sheaf of r2 back into the sheaf of r1.  Component columns send a
/// basis element z of the upper stalk to the sum of its g-preimages in the
/// lower stalk.
ModuleSheafMorphism induced_sheaf_morphism0(const RelMorphism& m);

/// Composite corresponding to composing the underlying relation morphisms:
/// outer comes from the later morphism, inner from the earlier one.
ModuleSheafMorphism compose(const ModuleSheafMorphism& outer,
                            const ModuleSheafMorphism& inner);

}  // namespace dowker

#endif  // DOWKER_COSHEAF_HPP
