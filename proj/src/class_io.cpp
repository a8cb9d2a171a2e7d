#include "modpic/class_io.hpp"

#include <charconv>

#include "modpic/errors.hpp"

namespace modpic {

using nlohmann::ordered_json;

std::string element_key(const BasisElement& b) {
  switch (b.kind) {
    case Kind::Lambda:
      return "lambda";
    case Kind::DeltaIrr:
      return "delta0";
    case Kind::Omega:
      return "omega:" + std::to_string(b.mark);
    case Kind::Psi:
      return "psi:" + std::to_string(b.mark);
    case Kind::Boundary:
      return "delta:" + std::to_string(b.boundary.i) + ":" + to_string(b.boundary.S);
  }
  return {};
}

namespace {

int parse_int(std::string_view s, std::string_view key) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
    throw ParseError("bad integer in key '" + std::string(key) + "'");
  return v;
}

MarkSet parse_mark_list(std::string_view s, std::string_view key) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw ParseError("bad mark set in key '" + std::string(key) + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<int> marks;
  while (!s.empty()) {
    auto comma = s.find(',');
    int m = parse_int(s.substr(0, comma), key);
    if (m < 1 || m > kMaxMarks || (!marks.empty() && m <= marks.back()))
      throw ParseError("marks must be ascending labels in key '" + std::string(key) + "'");
    marks.push_back(m);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
    if (s.empty()) throw ParseError("trailing comma in key '" + std::string(key) + "'");
  }
  return MarkSet(marks);
}

}  // namespace

BasisElement parse_element_key(std::string_view key) {
  if (key == "lambda") return BasisElement::lambda();
  if (key == "delta0") return BasisElement::delta_irr();
  if (key.starts_with("omega:")) return BasisElement::omega(parse_int(key.substr(6), key));
  if (key.starts_with("psi:")) return BasisElement::psi(parse_int(key.substr(4), key));
  if (key.starts_with("delta:")) {
    auto rest = key.substr(6);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw ParseError("bad boundary key '" + std::string(key) + "'");
    int i = parse_int(rest.substr(0, colon), key);
    return BasisElement::delta({i, parse_mark_list(rest.substr(colon + 1), key)});
  }
  throw ParseError("unknown key '" + std::string(key) + "'");
}

ordered_json to_json(const DivisorClass& d) {
  ordered_json doc;
  doc["g"] = d.space().g;
  doc["n"] = d.space().n;
  ordered_json coeffs = ordered_json::object();
  for (const auto& [b, c] : d.terms()) coeffs[element_key(b)] = to_string(c);
  doc["coeffs"] = std::move(coeffs);
  return doc;
}

DivisorClass class_from_json(const ordered_json& doc) {
  if (!doc.is_object()) throw ParseError("class document must be a JSON object");
  for (const auto& [k, v] : doc.items())
    if (k != "g" && k != "n" && k != "coeffs") throw ParseError("unknown field '" + k + "'");
  if (!doc.contains("g") || !doc["g"].is_number_integer() || !doc.contains("n") ||
      !doc["n"].is_number_integer())
    throw ParseError("class document needs integer fields \"g\" and \"n\"");
  if (!doc.contains("coeffs") || !doc["coeffs"].is_object())
    throw ParseError("class document needs an object \"coeffs\"");
  SpaceId sp{doc["g"].get<int>(), doc["n"].get<int>()};
  try {
    DivisorClass d(sp);
    for (const auto& [k, v] : doc["coeffs"].items()) {
      if (!v.is_string()) throw ParseError("coefficient of '" + k + "' must be a string");
      d.add(parse_element_key(k), parse_rational(v.get<std::string>()));
    }
    return d;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string serialize(const DivisorClass& d) { return to_json(d).dump(); }

DivisorClass parse_class(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return class_from_json(doc);
}

DivisorClass parse_class(std::string_view text, SpaceId expected) {
  DivisorClass d = parse_class(text);
  if (d.space() != expected)
    throw ParseError("document is on " + to_string(d.space()) + ", expected " +
                     to_string(expected));
  return d;
}

}  // namespace modpic
