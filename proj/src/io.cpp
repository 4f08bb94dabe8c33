#include "uext/io.hpp"

#include <array>
#include <fstream>
#include <set>

#include "uext/caps.hpp"
#include "uext/errors.hpp"

namespace uext {

namespace {

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileFormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FileFormatError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileFormatError("cannot write " + path);
  out << text;
  if (!out) throw FileFormatError("write failed: " + path);
}

int int_field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw FileFormatError(path + ": missing or non-integer \"" + key + "\"");
  return j[key].get<int>();
}

Rational value_field(const Json& e, const std::string& path) {
  if (!e.contains("value"))
    throw FileFormatError(path + ": entry without \"value\"");
  const Json& v = e["value"];
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const Error& err) {
      throw FileFormatError(path + ": " + err.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw FileFormatError(path + ": \"value\" must be a rational string");
}

void check_format(const Json& j, const std::string& expect, const std::string& path) {
  if (!j.contains("format") || !j["format"].is_string() ||
      j["format"].get<std::string>() != expect)
    throw FileFormatError(path + ": \"format\" must be \"" + expect + "\"");
}

RawTensor raw_from_json(const Json& j, const std::string& path) {
  check_format(j, "uext-tensor-v1", path);
  RawTensor raw;
  raw.n = int_field(j, "n", path);
  if (raw.n < 1) throw FileFormatError(path + ": n must be positive");
  int cap = dimension_cap(64);
  if (raw.n > cap)
    throw CapExceeded(path + ": n exceeds the dimension cap " + std::to_string(cap));

  if (!j.contains("labeling") || !j["labeling"].is_string())
    throw FileFormatError(path + ": missing \"labeling\"");
  std::string lab = j["labeling"].get<std::string>();
  if (lab == "solvable")
    raw.labeling = Labeling::solvable;
  else if (lab == "semisimple")
    raw.labeling = Labeling::semisimple;
  else
    throw FileFormatError(path + ": labeling must be solvable or semisimple");

  if (!j.contains("entries") || !j["entries"].is_array())
    throw FileFormatError(path + ": missing \"entries\" array");
  int shift = raw.labeling == Labeling::semisimple ? 1 : 0;
  int lo = 1 - shift, hi = raw.n - shift;
  for (const Json& e : j["entries"]) {
    if (!e.is_object()) throw FileFormatError(path + ": entries must be objects");
    RawEntry entry;
    entry.i = int_field(e, "i", path);
    entry.j = int_field(e, "j", path);
    entry.k = int_field(e, "k", path);
    for (int t : {entry.i, entry.j, entry.k})
      if (t < lo || t > hi)
        throw FileFormatError(path + ": index " + std::to_string(t) +
                              " outside " + std::to_string(lo) + ".." +
                              std::to_string(hi));
    entry.i += shift;
    entry.j += shift;
    entry.k += shift;
    entry.value = value_field(e, path);
    raw.entries.push_back(std::move(entry));
  }
  return raw;
}

} // namespace

RawTensor load_raw_tensor(const std::string& path) {
  return raw_from_json(parse_file(path), path);
}

ExtensionTensor load_tensor(const std::string& path) {
  RawTensor raw = load_raw_tensor(path);
  try {
    return symmetrize_strict(raw);
  } catch (const Error& e) {
    throw FileFormatError(path + ": " + e.what());
  }
}

Json tensor_json(const ExtensionTensor& w) {
  Json j;
  j["format"] = "uext-tensor-v1";
  j["n"] = w.n();
  j["labeling"] = w.labeling() == Labeling::semisimple ? "semisimple" : "solvable";
  int shift = w.labeling() == Labeling::semisimple ? 1 : 0;
  Json entries = Json::array();
  for (const auto& [key, v] : w.entries()) {
    Json e;
    e["i"] = key[0] - shift;
    e["j"] = key[1] - shift;
    e["k"] = key[2] - shift;
    e["value"] = v.str();
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

std::string tensor_to_string(const ExtensionTensor& w) {
  return tensor_json(w).dump(2) + "\n";
}

void save_tensor(const ExtensionTensor& w, const std::string& path) {
  write_file(path, tensor_to_string(w));
}

MonoidTable load_monoid(const std::string& path) {
  Json j = parse_file(path);
  check_format(j, "uext-monoid-v1", path);
  MonoidTable t;
  t.n = int_field(j, "n", path);
  if (t.n < 0) throw FileFormatError(path + ": n must be nonnegative");
  int cap = dimension_cap(64);
  if (t.n > cap)
    throw CapExceeded(path + ": n exceeds the dimension cap " + std::to_string(cap));

  if (!j.contains("kind") || !j["kind"].is_string())
    throw FileFormatError(path + ": missing \"kind\"");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "E")
    t.kind = MonoidTable::Kind::E;
  else if (kind == "SE")
    t.kind = MonoidTable::Kind::SE;
  else
    throw FileFormatError(path + ": kind must be E or SE");

  if (!j.contains("table") || !j["table"].is_array() ||
      static_cast<int>(j["table"].size()) != t.n + 1)
    throw FileFormatError(path + ": \"table\" must be a " + std::to_string(t.n + 1) +
                          "-row array");
  for (const Json& row : j["table"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != t.n + 1)
      throw FileFormatError(path + ": every table row needs " +
                            std::to_string(t.n + 1) + " values");
    std::vector<int> r;
    for (const Json& v : row) {
      if (!v.is_number_integer())
        throw FileFormatError(path + ": table values must be integers");
      int x = v.get<int>();
      if (x < 0 || x > t.n)
        throw FileFormatError(path + ": table value " + std::to_string(x) +
                              " outside 0.." + std::to_string(t.n));
      r.push_back(x);
    }
    t.f.push_back(std::move(r));
  }
  return t;
}

Json monoid_json(const MonoidTable& t) {
  Json j;
  j["format"] = "uext-monoid-v1";
  j["kind"] = t.kind == MonoidTable::Kind::E ? "E" : "SE";
  j["n"] = t.n;
  j["table"] = t.f;
  return j;
}

std::string monoid_to_string(const MonoidTable& t) {
  return monoid_json(t).dump(2) + "\n";
}

void save_monoid(const MonoidTable& t, const std::string& path) {
  write_file(path, monoid_to_string(t));
}

LieAlgebra load_lie(const std::string& path) {
  Json j = parse_file(path);
  check_format(j, "uext-lie-v1", path);
  int dim = int_field(j, "dim", path);
  if (dim < 1) throw FileFormatError(path + ": dim must be positive");
  int cap = dimension_cap(64);
  if (dim > cap)
    throw CapExceeded(path + ": dim exceeds the dimension cap " + std::to_string(cap));
  LieAlgebra g(dim, path);
  if (!j.contains("c") || !j["c"].is_array())
    throw FileFormatError(path + ": missing \"c\" array");
  std::set<std::array<int, 3>> seen;
  for (const Json& e : j["c"]) {
    if (!e.is_object()) throw FileFormatError(path + ": \"c\" entries must be objects");
    int i = int_field(e, "i", path);
    int jj = int_field(e, "j", path);
    int k = int_field(e, "k", path);
    if (i >= jj)
      throw FileFormatError(path + ": structure constants are stored with i < j");
    if (i < 1 || jj > dim || k < 1 || k > dim)
      throw FileFormatError(path + ": structure constant index out of range");
    Rational v = value_field(e, path);
    if (!seen.insert({i, jj, k}).second)
      throw FileFormatError(path + ": duplicate structure constant (" +
                            std::to_string(i) + "," + std::to_string(jj) + "," +
                            std::to_string(k) + ")");
    g.set_bracket(i, jj, k, v);
  }
  g.check_jacobi();
  return g;
}

Matrix load_matrix(const std::string& path) {
  Json j = parse_file(path);
  if (!j.is_array() || j.empty())
    throw FileFormatError(path + ": expected a nonempty 2D array");
  std::vector<Vector> rows;
  size_t width = 0;
  for (const Json& row : j) {
    if (!row.is_array()) throw FileFormatError(path + ": expected a 2D array");
    if (rows.empty())
      width = row.size();
    else if (row.size() != width)
      throw FileFormatError(path + ": ragged rows");
    Vector r;
    for (const Json& v : row) {
      Json wrapped;
      wrapped["value"] = v;
      r.push_back(value_field(wrapped, path));
    }
    rows.push_back(std::move(r));
  }
  if (width == 0) throw FileFormatError(path + ": empty rows");
  return Matrix::from_rows(rows);
}

Json matrix_json(const Matrix& m) {
  Json j = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    j.push_back(std::move(row));
  }
  return j;
}

Json h2_json(const H2Report& r) {
  Json j;
  j["dim_Z2"] = r.dim_Z2;
  j["dim_B2"] = r.dim_B2;
  j["dim_H2"] = r.dim_H2;
  Json reps = Json::array();
  for (const auto& m : r.representatives) reps.push_back(matrix_json(m));
  j["representatives"] = std::move(reps);
  Json cobs = Json::array();
  for (const auto& m : r.coboundary_basis) cobs.push_back(matrix_json(m));
  j["coboundary_basis"] = std::move(cobs);
  return j;
}

Json validation_json(const ValidationReport& r) {
  Json j;
  j["valid"] = r.valid();
  j["symmetric"] = r.symmetric;
  j["commuting"] = r.commuting;
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    Json e;
    e["kind"] = v.kind == Violation::Kind::symmetry ? "symmetry" : "commutation";
    e["indices"] = v.idx;
    e["lhs"] = v.lhs.str();
    e["rhs"] = v.rhs.str();
    vs.push_back(std::move(e));
  }
  j["violations"] = std::move(vs);
  return j;
}

Json split_json(const SplitReport& r) {
  Json j;
  j["complete"] = r.complete;
  Json blocks = Json::array();
  for (const auto& b : r.blocks) {
    Json e;
    e["dim"] = b.dim;
    e["tensor"] = tensor_json(b.tensor);
    blocks.push_back(std::move(e));
  }
  j["blocks"] = std::move(blocks);
  j["change"] = matrix_json(r.change.mat());
  return j;
}

} // namespace uext
