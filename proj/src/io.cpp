#include "divvol/io.hpp"

#include <fstream>
#include <sstream>

namespace divvol {

using nlohmann::json;

namespace {

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + ": missing field '" + key + "'");
  return *it;
}

RationalVector vector_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array");
  RationalVector out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

long integer_field(const json& obj, const char* key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_number_integer()) throw ParseError(path + "." + key + ": expected an integer");
  return v.get<long>();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(j.get<unsigned long long>())
                                  : Rational(j.get<long long>());
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  throw ParseError(path + ": expected an integer or a \"p/q\" string");
}

json rational_to_json(const Rational& r) {
  if (denominator(r) == 1 && abs(r) < Rational(1LL << 52)) {
    return numerator(r).convert_to<long long>();
  }
  return to_string(r);
}

SurfaceLattice parse_variety(std::string_view text) {
  const json doc = parse_document(text);
  const std::string root = "$";
  const json& name = field(doc, "name", root);
  if (!name.is_string()) throw ParseError("$.name: expected a string");
  const long rank = integer_field(doc, "rank", root);
  if (rank < 1) throw ParseError("$.rank: must be positive");
  const auto r = static_cast<std::size_t>(rank);

  const json& gram_j = field(doc, "gram", root);
  if (!gram_j.is_array() || gram_j.size() != r) {
    throw ParseError("$.gram: expected " + std::to_string(r) + " rows");
  }
  Matrix gram(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::string row_path = "$.gram[" + std::to_string(i) + "]";
    const auto row = vector_from_json(gram_j[i], row_path);
    if (row.size() != r) throw ParseError(row_path + ": expected " + std::to_string(r) + " entries");
    for (std::size_t k = 0; k < r; ++k) gram(i, k) = row[k];
  }

  const auto ample = vector_from_json(field(doc, "ample", root), "$.ample");
  if (ample.size() != r) throw ParseError("$.ample: expected " + std::to_string(r) + " entries");

  std::vector<Curve> curves;
  const json& curves_j = field(doc, "curves", root);
  if (!curves_j.is_array()) throw ParseError("$.curves: expected an array");
  for (std::size_t i = 0; i < curves_j.size(); ++i) {
    const std::string path = "$.curves[" + std::to_string(i) + "]";
    const json& cname = field(curves_j[i], "name", path);
    if (!cname.is_string()) throw ParseError(path + ".name: expected a string");
    auto cls = vector_from_json(field(curves_j[i], "class", path), path + ".class");
    if (cls.size() != r) throw ParseError(path + ".class: expected " + std::to_string(r) + " entries");
    curves.push_back({cname.get<std::string>(), DivisorClass(std::move(cls))});
  }
  return SurfaceLattice(name.get<std::string>(), std::move(gram), std::move(curves),
                        DivisorClass(ample));
}

SurfaceLattice load_variety(const std::string& path) { return parse_variety(read_file(path)); }

json variety_to_json(const SurfaceLattice& lattice) {
  auto vec = [](const DivisorClass& a) {
    json out = json::array();
    for (const auto& c : a.coords) out.push_back(rational_to_json(c));
    return out;
  };
  json gram = json::array();
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < lattice.rank(); ++k) row.push_back(rational_to_json(lattice.gram()(i, k)));
    gram.push_back(std::move(row));
  }
  json curves = json::array();
  for (const auto& c : lattice.curves()) curves.push_back({{"name", c.name}, {"class", vec(c.cls)}});
  return {{"name", lattice.name()},
          {"rank", lattice.rank()},
          {"gram", std::move(gram)},
          {"ample", vec(lattice.ample())},
          {"curves", std::move(curves)}};
}

NefIntersectionTable parse_table(std::string_view text) {
  const json doc = parse_document(text);
  const long n = integer_field(doc, "n", "$");
  auto s = vector_from_json(field(doc, "s", "$"), "$.s");
  try {
    return NefIntersectionTable(static_cast<int>(n), std::move(s));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("$: ") + e.what());
  }
}

NefIntersectionTable load_table(const std::string& path) { return parse_table(read_file(path)); }

DivisorClass parse_class(std::string_view text) {
  RationalVector coords;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                     : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    coords.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return DivisorClass(std::move(coords));
}

}  // namespace divvol
