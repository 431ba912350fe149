#ifndef DOWKER_RELATION_HPP
#define DOWKER_RELATION_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dowker {

/**
 * A finite binary relation between two labeled finite sets, stored as a
 * dense boolean matrix.  Rows are the X side, columns the Y side.
 * Instances are immutable after construction; labels are unique per side.
 */
class Relation {
 public:
  Relation() = default;  // the empty 0x0 relation

  /// Throws std::invalid_argument on ragged rows, label/dimension
  /// mismatches, duplicate labels, or entries other than 0/1.
  Relation(std::vector<std::string> x_labels, std::vector<std::string> y_labels,
           const std::vector<std::vector<int>>& matrix);

  int row_count() const { return nx_; }
  int col_count() const { return ny_; }

  bool at(int x, int y) const {
    return bits_.at(static_cast<std::size_t>(x) * ny_ + y) != 0;
  }

  const std::vector<std::string>& x_labels() const { return x_labels_; }
  const std::vector<std::string>& y_labels() const { return y_labels_; }
  const std::string& x_label(int x) const { return x_labels_.at(x); }
  const std::string& y_label(int y) const { return y_labels_.at(y); }

  /// Label lookup; throws std::out_of_range for unknown labels.
  int x_id(const std::string& label) const;
  int y_id(const std::string& label) const;

  std::vector<int> row_support(int x) const;  // sorted column ids
  std::vector<int> col_support(int y) const;  // sorted row ids

  std::vector<std::vector<int>> matrix() const;  // dense copy, for export

  bool operator==(const Relation& other) const;

 private:
  int nx_ = 0, ny_ = 0;
  std::vector<std::string> x_labels_, y_labels_;
  std::vector<std::uint8_t> bits_;  // row-major, nx_*ny_
  std::map<std::string, int> x_index_, y_index_;
};

/// The transposed relation (X and Y swapped).  An involution.
Relation transpose(const Relation& r);

/// True iff every row and every column contains at least one 1.
/// (Membership in the subcategory of relations where the induced cosheaf
/// functor is faithful.)
bool is_positive(const Relation& r);

/// Rows with empty support, by label.  Such rows never appear as vertices of
/// the Dowker complex; callers use this as a diagnostic channel.
std::vector<std::string> empty_rows(const Relation& r);

/// True when some bijection of the columns of `a` onto the columns of `b`
/// matches every column's support (rows are matched by label).  Equivalent
/// to multiset equality of column supports, which is how "unique up to a
/// bijection on Y" is checked for reconstruction round trips.
bool same_up_to_column_bijection(const Relation& a, const Relation& b);

/**
 * Thrown when a candidate morphism fails to preserve the relation.  Each
 * witness is a related pair (x,y) of the source whose image (f(x),g(y)) is
 * not related in the target; all violating pairs are reported, in row-major
 * order of the source matrix.
 */
class MorphismError : public std::runtime_error {
 public:
  MorphismError(const std::string& what,
                std::vector<std::pair<std::string, std::string>> witnesses)
      : std::runtime_error(what), witnesses_(std::move(witnesses)) {}
  const std::vector<std::pair<std::string, std::string>>& witnesses() const {
    return witnesses_;
  }

 private:
  std::vector<std::pair<std::string, std::string>> witnesses_;
};

/**
 * A morphism of relations: a pair of functions f : X -> X', g : Y -> Y'
 * such that x R y implies f(x) R' g(y).  Validated eagerly at construction
 * (see make_morphism); instances are always valid.
 */
class RelMorphism {
 public:
  const Relation& source() const { return src_; }
  const Relation& target() const { return tgt_; }

  int f(int x) const { return f_.at(x); }
  int g(int y) const { return g_.at(y); }
  const std::vector<int>& f_map() const { return f_; }
  const std::vector<int>& g_map() const { return g_; }

  bool operator==(const RelMorphism& other) const;

 private:
  friend RelMorphism make_morphism(const Relation&, const Relation&,
                                   const std::vector<int>&,
                                   const std::vector<int>&);
  RelMorphism(Relation src, Relation tgt, std::vector<int> f, std::vector<int> g)
      : src_(std::move(src)), tgt_(std::move(tgt)), f_(std::move(f)), g_(std::move(g)) {}

  Relation src_, tgt_;
  std::vector<int> f_, g_;  // by id: f_[x] in target X, g_[y] in target Y
};

/// Build a validated morphism from id-level maps.  Throws
/// std::invalid_argument on arity/range errors and MorphismError (with the
/// full witness list) when preservation fails.
RelMorphism make_morphism(const Relation& src, const Relation& tgt,
                          const std::vector<int>& f, const std::vector<int>& g);

/// Same, from label-level maps (every source label must be mapped).
RelMorphism make_morphism(const Relation& src, const Relation& tgt,
                          const std::map<std::string, std::string>& f,
                          const std::map<std::string, std::string>& g);

RelMorphism identity_morphism(const Relation& r);

/// Composition outer . inner; throws std::invalid_argument unless
/// inner.target == outer.source.  The composite is revalidated eagerly.
RelMorphism compose(const RelMorphism& outer, const RelMorphism& inner);

/// The transposed morphism (g,f) between the transposed relations.
RelMorphism transpose(const RelMorphism& m);

}  // namespace dowker

#endif  // DOWKER_RELATION_HPP
