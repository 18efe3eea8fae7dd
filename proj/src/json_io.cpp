#include "grunsky/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "grunsky/errors.hpp"

namespace grunsky {

namespace {

void dump_number(double v, std::ostream& os) {
  if (!std::isfinite(v)) {
    os << "null";
    return;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  os << buf;
  // %.17g never prints a decimal point for integral values; keep them
  // recognizable as floats is unnecessary for JSON, so leave as-is.
}

void dump(const Json& j, std::ostream& os, int indent, int depth) {
  const std::string pad(static_cast<size_t>(indent) * static_cast<size_t>(depth), ' ');
  const std::string pad_in(static_cast<size_t>(indent) * static_cast<size_t>(depth + 1),
                           ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        os << pad_in << Json(it.key()).dump() << ": ";
        dump(it.value(), os, indent, depth + 1);
        if (i + 1 < j.size()) os << ",";
        os << "\n";
      }
      os << pad << "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (size_t i = 0; i < j.size(); ++i) {
        os << pad_in;
        dump(j[i], os, indent, depth + 1);
        if (i + 1 < j.size()) os << ",";
        os << "\n";
      }
      os << pad << "]";
      return;
    }
    case nlohmann::json::value_t::number_float:
      dump_number(j.get<double>(), os);
      return;
    default:
      os << j.dump();
      return;
  }
}

}  // namespace

void write_json_17(const Json& value, std::ostream& os, int indent) {
  dump(value, os, indent, 0);
  os << "\n";
}

std::string dump_json_17(const Json& value, int indent) {
  std::ostringstream os;
  write_json_17(value, os, indent);
  return os.str();
}

Json complex_to_json(Complex value) { return Json::array({value.real(), value.imag()}); }

Complex complex_from_json(const Json& value, const char* field) {
  if (!value.is_array() || value.size() != 2 || !value[0].is_number() ||
      !value[1].is_number()) {
    throw ValidationError(detail::str(
        "complex_from_json: field '", field, "' must be a [re, im] pair"));
  }
  return {value[0].get<double>(), value[1].get<double>()};
}

Json laurent_map_to_json(const LaurentMap& map) {
  Json j;
  j["b0"] = complex_to_json(map.b0);
  Json tail = Json::array();
  for (const Complex& b : map.tail) tail.push_back(complex_to_json(b));
  j["tail"] = std::move(tail);
  return j;
}

LaurentMap laurent_map_from_json(const Json& value) {
  if (!value.is_object() || !value.contains("b0") || !value.contains("tail")) {
    throw ValidationError("coefficient file must be an object with fields b0 and tail");
  }
  LaurentMap map;
  map.b0 = complex_from_json(value.at("b0"), "b0");
  if (!value.at("tail").is_array()) {
    throw ValidationError("coefficient file: field 'tail' must be an array");
  }
  for (const auto& entry : value.at("tail")) {
    map.tail.push_back(complex_from_json(entry, "tail"));
  }
  return map;
}

LaurentMap read_laurent_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError(detail::str("cannot open coefficient file '", path, "'"));
  }
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(detail::str("coefficient file '", path, "': ", e.what()));
  }
  return laurent_map_from_json(j);
}

void write_laurent_map(const LaurentMap& map, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError(detail::str("cannot write '", path, "'"));
  write_json_17(laurent_map_to_json(map), out);
}

}  // namespace grunsky
