#include "graceful/io.hpp"

#include <fstream>
#include <sstream>

namespace graceful::io {

TreeInput from_rooted(RootedSymmetricTree t) {
  TreeInput in{std::nullopt, t.general(), "rst:" + t.sequence().to_string()};
  in.rooted.emplace(std::move(t));
  return in;
}

TreeInput from_general(GeneralTree t) {
  std::string id = "general:n=" + std::to_string(t.size());
  return TreeInput{std::nullopt, std::move(t), std::move(id)};
}

json tree_to_json(const RootedSymmetricTree& t) {
  return json{{"kind", "rst"}, {"degrees", t.sequence().degrees()}};
}

json tree_to_json(const GeneralTree& t) {
  json edges = json::array();
  for (const auto& [u, v] : t.edges()) edges.push_back({u, v});
  return json{{"kind", "general"}, {"n", t.size()}, {"edges", std::move(edges)}};
}

TreeInput tree_from_json(const json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("kind")) throw SchemaError("tree document needs a \"kind\" field");
    const auto kind = doc.at("kind").get<std::string>();
    if (kind == "rst") {
      return from_rooted(RootedSymmetricTree(DaughterDegreeSequence(doc.at("degrees").get<std::vector<std::int64_t>>())));
    }
    if (kind == "general") {
      std::vector<Edge> edges;
      for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw SchemaError("each edge must be a pair [u, v]");
        edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
      }
      return from_general(GeneralTree(doc.at("n").get<Vertex>(), std::move(edges)));
    }
    throw SchemaError("unknown tree kind \"" + kind + "\"");
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed tree document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("invalid tree: ") + e.what());
  }
}

DaughterDegreeSequence parse_degrees(const std::string& text) {
  std::vector<std::int64_t> degrees;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      degrees.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw SchemaError("bad daughter degree \"" + item + "\" in \"" + text + "\"");
    }
  }
  try {
    return DaughterDegreeSequence(std::move(degrees));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

json labelling_to_json(const Labelling& f) { return json{{"labels", f.labels()}}; }

Labelling labelling_from_json(const json& doc) {
  try {
    return Labelling(doc.at("labels").get<std::vector<Label>>());
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed labelling document: ") + e.what());
  }
}

json trace_to_json(const ConstructionTrace& trace) {
  json steps = json::array();
  for (const auto& step : trace.steps) {
    json s{{"op", to_string(step.kind)}, {"note", step.note}};
    switch (step.kind) {
      case StepKind::kBroom:
        s["levels"] = step.value;
        break;
      case StepKind::kShift:
      case StepKind::kReflect:
        s["value"] = step.value;
        break;
      case StepKind::kRemap:
        s["from"] = step.from;
        s["to"] = step.to;
        break;
      case StepKind::kStar:
        s["centre"] = step.value;
        if (step.to >= 0) s["zero_leaf"] = step.to;
        break;
      case StepKind::kTranspositions: {
        json swaps = json::array();
        for (const auto& [a, b] : step.swaps) swaps.push_back({a, b});
        s["swaps"] = std::move(swaps);
        break;
      }
      default:
        break;
    }
    steps.push_back(std::move(s));
  }
  return json{{"method", to_string(trace.method)}, {"steps", std::move(steps)}};
}

json report_to_json(const RotatabilityReport& report, bool with_witnesses) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json entry{{"representative", e.representative},
               {"members", e.members},
               {"verdict", to_string(e.verdict)},
               {"source", to_string(e.source)},
               {"method", e.method},
               {"nodes", e.nodes}};
    if (with_witnesses && e.witness) entry["witness"] = e.witness->labels();
    entries.push_back(std::move(entry));
  }
  return json{{"tree", report.tree_id},
              {"n", report.n},
              {"zero_rotatable", report.all_yes()},
              {"orbits", std::move(entries)}};
}

std::string report_csv_header() { return "tree,n,orbit,representative,size,verdict,source,method,nodes"; }

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

std::string report_to_csv(const RotatabilityReport& report) {
  std::ostringstream out;
  const std::string tree = csv_field(report.tree_id);
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const auto& e = report.entries[i];
    out << tree << ',' << report.n << ',' << i << ',' << e.representative << ',' << e.members.size()
        << ',' << to_string(e.verdict) << ',' << to_string(e.source) << ',' << e.method << ',' << e.nodes << '\n';
  }
  return out.str();
}

DotAnnotations annotate(const GeneralTree& t, const Labelling& f) {
  DotAnnotations a;
  for (Label b : f.labels()) a.vertex_labels.push_back(std::to_string(b));
  for (Label d : edge_labels(t, f)) a.edge_labels.push_back(std::to_string(d));
  return a;
}

std::string to_dot(const GeneralTree& t, const std::optional<DotAnnotations>& annotations, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < t.size(); ++v) {
    out << "  " << v;
    if (annotations && static_cast<std::size_t>(v) < annotations->vertex_labels.size()) {
      out << " [label=\"" << annotations->vertex_labels[v] << "\"]";
    }
    out << ";\n";
  }
  for (std::size_t i = 0; i < t.edges().size(); ++i) {
    out << "  " << t.edges()[i].first << " -- " << t.edges()[i].second;
    if (annotations && i < annotations->edge_labels.size()) {
      out << " [label=\"" << annotations->edge_labels[i] << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace graceful::io
