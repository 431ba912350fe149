#ifndef DOWKER_IO_HPP
#define DOWKER_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "dowker/cosheaf.hpp"
#include "dowker/duality.hpp"
#include "dowker/redundancy.hpp"
#include "dowker/weights.hpp"

namespace dowker {

using ordered_json = nlohmann::ordered_json;

/// Any syntactic failure while reading one of the file formats.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Plain-text relation format: a header line "nx ny", then nx rows of ny
/// space-separated 0/1 entries.  Lines "#x: ..." and "#y: ..." carry labels
/// (defaults x1..xn / y1..yn); other "#" lines are comments.
Relation parse_relation_text(const std::string& text);
std::string format_relation_text(const Relation& r);

/// Structured format: {"x_labels": [...], "y_labels": [...], "matrix": [[0/1...]]}.
/// serialize . parse is the identity on canonical output (bit-exact).
Relation relation_from_json(const ordered_json& j);
ordered_json relation_to_json(const Relation& r);
std::string serialize_relation_json(const Relation& r);

/// Autodetect: JSON when the first non-space byte is '{', plain text otherwise.
Relation parse_relation(const std::string& text);

/// Canonical simplex key used in files: label-sorted, comma-joined, "" for
/// the empty simplex (the display form renders it "()").
std::string simplex_key(const SimplicialComplex& k, const Simplex& s);
Simplex simplex_from_key(const SimplicialComplex& k, const std::string& key);

ordered_json complex_to_json(const SimplicialComplex& k);

/// Weight bundle: {"maximal_simplices": [[labels]...], "total": {key: int},
/// "differential": {key: int}} with either weight map optional.  Loaded
/// weights come back as kind `unchecked` (files are not trusted to satisfy
/// the kind invariants); missing simplex keys default to 0.
struct WeightBundle {
  SimplicialComplex complex;
  std::optional<WeightFunction> total;
  std::optional<WeightFunction> differential;
};

WeightBundle weights_from_json(const ordered_json& j);
WeightBundle parse_weights(const std::string& text);
ordered_json weights_to_json(const SimplicialComplex& k,
                             const std::optional<WeightFunction>& total,
                             const std::optional<WeightFunction>& differential);

/// Morphism file: {"f": {label: label}, "g": {label: label}}.
struct MorphismMaps {
  std::map<std::string, std::string> f, g;
};
MorphismMaps parse_morphism(const std::string& text);

ordered_json set_cosheaf_to_json(const SetCosheaf& c);
ordered_json complex_cosheaf_to_json(const ComplexCosheaf& c);
ordered_json cosections_to_json(const SetCosheaf& c, const CosectionSet& cs);
ordered_json certificate_to_json(const DualityCertificate& cert);
ordered_json redundancy_report_to_json(const RedundancyReport& rep);

}  // namespace dowker

#endif  // DOWKER_IO_HPP
