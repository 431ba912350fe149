#ifndef DOWKER_SIMPLICIAL_COMPLEX_HPP
#define DOWKER_SIMPLICIAL_COMPLEX_HPP

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "dowker/relation.hpp"

namespace dowker {

using Vertex = int;

/**
 * A simplex: a finite set of vertex ids, stored sorted and duplicate-free.
 * The empty simplex is a legal value (weights and y_sigma accept it) but is
 * never a member of a SimplicialComplex.
 */
class Simplex {
 public:
  Simplex() = default;
  explicit Simplex(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return verts_; }
  std::size_t size() const { return verts_.size(); }
  bool empty() const { return verts_.empty(); }
  bool contains(Vertex v) const;
  bool subset_of(const Simplex& other) const;

  /// All subsets obtained by dropping one vertex (the facets).
  std::vector<Simplex> facets() const;
  /// All nonempty subsets, this simplex included.
  std::vector<Simplex> nonempty_subsets() const;

  Simplex with(Vertex v) const;     // add a vertex
  Simplex without(Vertex v) const;  // drop a vertex

  auto operator<=>(const Simplex&) const = default;

 private:
  std::vector<Vertex> verts_;
};

/**
 * A finite abstract simplicial complex over a labeled vertex pool.  Stores
 * the full (downward-closed) set of nonempty simplices plus the antichain of
 * maximal ones.  `labels` is the ambient id->label table; ids without any
 * simplex (e.g. all-zero rows of a relation) simply never occur.
 */
class SimplicialComplex {
 public:
  SimplicialComplex() = default;  // the empty complex

  /// Downward closure of `generators`.  Duplicate / dominated generators are
  /// fine.  Throws std::invalid_argument on vertex ids outside the label
  /// table and std::length_error on generators too large to enumerate.
  static SimplicialComplex generated_by(std::vector<std::string> labels,
                                        const std::vector<Simplex>& generators);

  /// Wrap an explicit simplex set; throws std::invalid_argument unless the
  /// set is downward closed (and free of the empty simplex).
  static SimplicialComplex from_simplex_set(std::vector<std::string> labels,
                                            std::set<Simplex> simplices);

  const std::set<Simplex>& simplices() const { return simplices_; }
  const std::vector<Simplex>& maximal_simplices() const { return maximal_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
  bool has_vertex(Vertex v) const;
  std::size_t size() const { return simplices_.size(); }
  /// Max simplex cardinality minus one; the empty complex has dimension -1.
  int dimension() const;

  const std::string& label(Vertex v) const { return labels_.at(v); }
  Vertex vertex_id(const std::string& label) const;  // throws std::out_of_range

  /// Canonical display name: vertex labels sorted lexicographically, joined
  /// by commas; the empty simplex renders as "()".
  std::string name(const Simplex& s) const;
  /// Labels of s, sorted lexicographically.
  std::vector<std::string> label_set(const Simplex& s) const;

  /// All simplices in canonical order: decreasing cardinality, then
  /// lexicographic on the sorted label sequence.
  std::vector<Simplex> canonical_order() const;
  bool canonical_less(const Simplex& a, const Simplex& b) const;

  /// Label-respecting equality: same vertex label set and the same simplices
  /// viewed as label sets.  Vertex ids need not agree.
  bool operator==(const SimplicialComplex& other) const;

 private:
  std::vector<std::string> labels_;
  std::set<Simplex> simplices_;
  std::vector<Simplex> maximal_;   // canonical order
  std::vector<Vertex> vertices_;   // ascending ids actually used
  void finish();                   // recompute maximal_/vertices_, validate ids
};

/// Union of two complexes sharing one ambient label table.
SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b);

/// Re-express a simplex of `from` in the vertex ids of `to`, matching by
/// label.  Throws std::out_of_range when a label is missing in `to`.
Simplex translate_simplex(const SimplicialComplex& from, const SimplicialComplex& to,
                          const Simplex& s);

struct CoverRelation {
  Simplex face, coface;  // |coface| == |face| + 1
  bool operator==(const CoverRelation&) const = default;
};

/**
 * The face poset of a complex, with its Hasse diagram (cover relations).
 * Elements are the nonempty simplices ordered by inclusion.
 */
class FacePoset {
 public:
  FacePoset() = default;
  static FacePoset of(const SimplicialComplex& k);

  const SimplicialComplex& complex() const { return complex_; }
  const std::vector<Simplex>& elements() const { return elements_; }  // canonical order
  const std::vector<CoverRelation>& covers() const { return covers_; }

  bool leq(const Simplex& a, const Simplex& b) const;  // both members, a subset of b

  bool operator==(const FacePoset& other) const;  // label-respecting

 private:
  SimplicialComplex complex_;
  std::vector<Simplex> elements_;
  std::vector<CoverRelation> covers_;
};

/**
 * A simplicial map: a vertex function carrying simplices to simplices.
 * Validated at construction; `vertex_map` is indexed by source vertex id
 * (entries for unused ids are ignored).
 */
class SimplicialMap {
 public:
  SimplicialMap() = default;

  /// Throws std::invalid_argument if some simplex image is not a simplex of
  /// the target (or a vertex image is out of range).
  static SimplicialMap make(SimplicialComplex source, SimplicialComplex target,
                            std::vector<Vertex> vertex_map);
  static SimplicialMap identity(const SimplicialComplex& k);

  const SimplicialComplex& source() const { return source_; }
  const SimplicialComplex& target() const { return target_; }

  Vertex apply(Vertex v) const { return vertex_map_.at(v); }
  Simplex apply(const Simplex& s) const;  // image, duplicates collapsed
  const std::vector<Vertex>& vertex_map() const { return vertex_map_; }

  /// Equality on used vertices (plus equal endpoints, label-respecting).
  bool operator==(const SimplicialMap& other) const;

 private:
  SimplicialComplex source_, target_;
  std::vector<Vertex> vertex_map_;
};

/// Composition outer . inner; endpoints must match (label-respecting).
SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner);

/// ---- The Dowker construction -------------------------------------------

/// D(X,Y,R): simplices are the nonempty sets of rows witnessed by a common
/// column.  Vertices are the rows with nonempty support; all-zero rows are
/// silently absent (see empty_rows for the diagnostic).
SimplicialComplex dowker_complex(const Relation& r);

/// Y_sigma: the sorted column ids related to every vertex of s.  s ranges
/// over arbitrary subsets of the rows (the empty simplex gives all of Y and
/// s need not be a simplex of dowker_complex(r)).  Throws std::out_of_range
/// on ids outside the row range.
std::vector<int> y_sigma(const Relation& r, const Simplex& s);

FacePoset face_poset(const SimplicialComplex& k);

/// The map D(f) induced on Dowker complexes by a relation morphism.
SimplicialMap induced_simplicial_map(const RelMorphism& m);

/// Face-poset representation computed directly from the relation, without
/// going through dowker_complex/face_poset.  Provides the independent route
/// for the PosRep = Face . D factorization test.
FacePoset pos_rep(const Relation& r);

}  // namespace dowker

#endif  // DOWKER_SIMPLICIAL_COMPLEX_HPP
