#include "modpic/family_io.hpp"

#include <sstream>

#include "modpic/errors.hpp"

namespace modpic {

using nlohmann::ordered_json;

ordered_json to_json(const TestFamily& f) {
  ordered_json doc;
  doc["g"] = f.ambient().g;
  doc["n"] = f.ambient().n;
  doc["components"] = ordered_json::array();
  for (const auto& c : f.tree.components)
    doc["components"].push_back({{"genus", c.genus}, {"marks", c.marks.marks()}});
  doc["edges"] = ordered_json::array();
  for (const auto& [a, b] : f.tree.edges) doc["edges"].push_back({a, b});
  doc["base"] = f.base;
  if (f.moving.kind == MovingPoint::Kind::Mark)
    doc["moving"] = {{"mark", f.moving.index}};
  else
    doc["moving"] = {{"edge", f.moving.index}};
  if (!f.label.empty()) doc["label"] = f.label;
  return doc;
}

namespace {

int get_int(const ordered_json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string("'") + what + "' must be an integer");
  return j.get<int>();
}

}  // namespace

TestFamily family_from_json(const ordered_json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("family document must be an object");
    for (const auto& [key, _] : doc.items()) {
      if (key != "g" && key != "n" && key != "components" && key != "edges" && key != "base" &&
          key != "moving" && key != "label")
        throw ParseError("unknown field '" + key + "'");
    }
    for (const char* key : {"g", "n", "components", "edges", "base", "moving"})
      if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    TestFamily f;
    f.tree.ambient = {get_int(doc.at("g"), "g"), get_int(doc.at("n"), "n")};
    if (!doc.at("components").is_array()) throw ParseError("'components' must be an array");
    for (const auto& c : doc.at("components")) {
      if (!c.is_object() || !c.contains("genus") || !c.contains("marks") ||
          !c.at("marks").is_array())
        throw ParseError("component needs 'genus' and a 'marks' array");
      std::vector<int> marks;
      for (const auto& m : c.at("marks")) {
        int v = get_int(m, "marks");
        if (v < 1 || v > kMaxMarks) throw ParseError("mark label out of range");
        marks.push_back(v);
      }
      MarkSet set(marks);
      if (set.size() != static_cast<int>(marks.size())) throw ParseError("repeated mark");
      f.tree.components.push_back({get_int(c.at("genus"), "genus"), set});
    }
    if (!doc.at("edges").is_array()) throw ParseError("'edges' must be an array");
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair");
      f.tree.edges.emplace_back(get_int(e[0], "edges"), get_int(e[1], "edges"));
    }
    f.base = get_int(doc.at("base"), "base");
    const auto& mv = doc.at("moving");
    if (mv.is_object() && mv.size() == 1 && mv.contains("mark"))
      f.moving = MovingPoint::mark(get_int(mv.at("mark"), "mark"));
    else if (mv.is_object() && mv.size() == 1 && mv.contains("edge"))
      f.moving = MovingPoint::node(get_int(mv.at("edge"), "edge"));
    else
      throw ParseError("'moving' must be {\"mark\":k} or {\"edge\":e}");
    if (doc.contains("label")) {
      if (!doc.at("label").is_string()) throw ParseError("'label' must be a string");
      f.label = doc.at("label").get<std::string>();
    }
    f.validate();
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

TestFamily parse_family(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return family_from_json(doc);
}

std::string matrix_csv(const RationalMatrix& m, const std::vector<std::string>& row_labels,
                       const std::vector<std::string>& col_labels) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "family";
  for (const auto& c : col_labels) os << ',' << quote(c);
  os << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << quote(r < row_labels.size() ? row_labels[r] : std::to_string(r));
    for (std::size_t c = 0; c < m.cols(); ++c) os << ',' << to_string(m(r, c));
    os << '\n';
  }
  return os.str();
}

ordered_json matrix_json(const RationalMatrix& m, const std::vector<std::string>& row_labels,
                         const std::vector<std::string>& col_labels) {
  ordered_json doc;
  doc["rows"] = row_labels;
  doc["cols"] = col_labels;
  doc["entries"] = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    doc["entries"].push_back(row);
  }
  return doc;
}

}  // namespace modpic
