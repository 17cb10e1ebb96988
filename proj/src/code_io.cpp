#include "rotor/code_io.hpp"

#include <fstream>
#include <sstream>

namespace rotor {

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Int& x = m(i, j);
      if (!x.fits_slong_p()) throw CodeFormatError("matrix entry does not fit in 64 bits");
      row.push_back(x.get_si());
    }
    rows.push_back(row);
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j, std::size_t cols_hint) {
  if (!j.is_array()) throw CodeFormatError("matrix must be an array of rows");
  IntMatrix m(0, cols_hint);
  for (const auto& row : j) {
    if (!row.is_array()) throw CodeFormatError("matrix row must be an array");
    if (row.size() != cols_hint) throw CodeFormatError("matrix row has " + std::to_string(row.size()) +
                                                       " entries, expected n = " + std::to_string(cols_hint));
    IntVector v;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw CodeFormatError("matrix entries must be integers");
      v.emplace_back(x.get<long>());
    }
    m.append_row(v);
  }
  return m;
}

Json code_to_json(const RotorCode& code) {
  Json j;
  j["schema"] = kCodeSchema;
  j["name"] = code.name;
  j["n"] = code.n();
  j["hx"] = matrix_to_json(code.hx());
  j["hz"] = matrix_to_json(code.hz());
  Json meta = Json::object();
  for (const auto& [k, v] : code.meta) meta[k] = v;  // std::map keeps keys sorted
  j["meta"] = meta;
  return j;
}

RotorCode code_from_json(const Json& j) {
  if (!j.is_object()) throw CodeFormatError("code file must be a JSON object");
  for (const char* key : {"name", "n", "hx", "hz"})
    if (!j.contains(key)) throw CodeFormatError(std::string("missing field \"") + key + "\"");
  if (!j["name"].is_string()) throw CodeFormatError("\"name\" must be a string");
  if (!j["n"].is_number_integer() || j["n"].get<long>() < 0) throw CodeFormatError("\"n\" must be a nonnegative integer");
  if (j.contains("schema") && j["schema"] != kCodeSchema) throw CodeFormatError("unsupported schema");
  const auto n = static_cast<std::size_t>(j["n"].get<long>());
  IntMatrix hx = matrix_from_json(j["hx"], n);
  IntMatrix hz = matrix_from_json(j["hz"], n);
  std::map<std::string, std::string> meta;
  if (j.contains("meta")) {
    if (!j["meta"].is_object()) throw CodeFormatError("\"meta\" must be an object");
    for (const auto& [k, v] : j["meta"].items()) meta[k] = v.is_string() ? v.get<std::string>() : v.dump();
  }
  return make_code(j["name"].get<std::string>(), std::move(hx), std::move(hz), std::move(meta));
}

namespace {
void write_matrix(std::ostringstream& os, const IntMatrix& m) {
  if (m.rows() == 0) {
    os << "[]";
    return;
  }
  os << "[\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "    [";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
    os << "]" << (i + 1 < m.rows() ? "," : "") << "\n";
  }
  os << "  ]";
}
}  // namespace

std::string canonical_code_text(const RotorCode& code) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"schema\": " << Json(kCodeSchema).dump() << ",\n";
  os << "  \"name\": " << Json(code.name).dump() << ",\n";
  os << "  \"n\": " << code.n() << ",\n";
  os << "  \"hx\": ";
  write_matrix(os, code.hx());
  os << ",\n  \"hz\": ";
  write_matrix(os, code.hz());
  os << ",\n  \"meta\": {";
  bool first = true;
  for (const auto& [k, v] : code.meta) {
    os << (first ? "\n" : ",\n") << "    " << Json(k).dump() << ": " << Json(v).dump();
    first = false;
  }
  os << (first ? "}" : "\n  }") << "\n}\n";
  return os.str();
}

RotorCode parse_code_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw CodeFormatError(std::string("malformed JSON: ") + e.what());
  } catch (const Json::type_error& e) {
    throw CodeFormatError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return code_from_json(j);
  } catch (const Json::exception& e) {
    throw CodeFormatError(std::string("invalid code file: ") + e.what());
  }
}

RotorCode read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CodeFormatError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_code_text(ss.str());
}

void write_code_file(const std::string& path, const RotorCode& code) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << canonical_code_text(code);
}

std::string parameter_string(const RotorCode& code, const std::string& dx, const std::string& dz) {
  return "[[" + std::to_string(code.n()) + "," + describe_group(code.homology.free_rank, code.homology.torsion) + ",(" +
         dx + "," + dz + ")]]";
}

Json tagged(const Json& value, const std::string& method) {
  Json j;
  j["value"] = value;
  j["method"] = method;
  return j;
}

}  // namespace rotor
