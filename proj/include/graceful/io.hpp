#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "graceful/constructive.hpp"
#include "graceful/labelling.hpp"
#include "graceful/search.hpp"
#include "graceful/tree_model.hpp"

namespace graceful::io {

using nlohmann::json;

/// Malformed input document (as opposed to a labelling that fails verification).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parsed tree document. `rooted` is set for {"kind":"rst"} input.
struct TreeInput {
  std::optional<RootedSymmetricTree> rooted;
  GeneralTree general;
  /// "rst:2,3,4" or "general:n=7"
  std::string id;
};

TreeInput from_rooted(RootedSymmetricTree t);
TreeInput from_general(GeneralTree t);

/// {"kind":"rst","degrees":[...]}
json tree_to_json(const RootedSymmetricTree& t);
/// {"kind":"general","n":N,"edges":[[u,v],...]}
json tree_to_json(const GeneralTree& t);
TreeInput tree_from_json(const json& doc);

/// "2,3,4" -> degrees. Throws SchemaError.
DaughterDegreeSequence parse_degrees(const std::string& text);

/// {"labels":[...]}
json labelling_to_json(const Labelling& f);
Labelling labelling_from_json(const json& doc);

json trace_to_json(const ConstructionTrace& trace);

json report_to_json(const RotatabilityReport& report, bool with_witnesses);

/// One row per orbit; header from report_csv_header().
std::string report_csv_header();
std::string report_to_csv(const RotatabilityReport& report);

/// Per-vertex and per-edge text added to the DOT output.
struct DotAnnotations {
  std::vector<std::string> vertex_labels;
  std::vector<std::string> edge_labels;
};

/// Vertex labels f(v) and edge labels |f(u)-f(v)|.
DotAnnotations annotate(const GeneralTree& t, const Labelling& f);

std::string to_dot(const GeneralTree& t, const std::optional<DotAnnotations>& annotations = std::nullopt,
                   const std::string& name = "tree");

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace graceful::io
