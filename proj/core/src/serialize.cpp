#include "nspair/serialize.hpp"

#include <fstream>
#include <sstream>

namespace nspair {

namespace {

constexpr long long kJsonSafe = (1ll << 53);

Json::number_integer_t to_ll(const Int& v) { return static_cast<long long>(v); }

long long count_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() && !j.is_number_unsigned())
    throw StructureError(std::string(what) + " must be an integer");
  return j.get<long long>();
}

std::optional<long long> opt_count_from_json(const Json& j, const char* what) {
  if (j.is_null()) return std::nullopt;
  return count_from_json(j, what);
}

Json opt_count_to_json(const std::optional<long long>& v) {
  if (!v) return nullptr;
  return *v;
}

Json tri_to_json(TriState t) { return to_string(t); }

TriState tri_from_json(const Json& j, const char* what) {
  if (!j.is_string()) throw StructureError(std::string(what) + " must be a tri-state string");
  const std::string s = j.get<std::string>();
  if (s == "true") return TriState::Yes;
  if (s == "false") return TriState::No;
  if (s == "unknown") return TriState::Unknown;
  throw StructureError(std::string(what) + " must be \"true\", \"false\" or \"unknown\"");
}

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw StructureError(std::string("missing field \"") + name + "\"");
  return *it;
}

}  // namespace

Json int_to_json(const Int& v) {
  if (v < kJsonSafe && v > -kJsonSafe) return Json(to_ll(v));
  return Json(to_string(v));
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Int(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.empty()) throw StructureError("empty integer string");
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size()) throw StructureError("malformed integer string");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw StructureError("malformed integer string: " + s);
    }
    return Int(s);
  }
  throw StructureError("expected an integer (number or decimal string)");
}

Json to_json(const LinkingMatrix& m) {
  Json j;
  j["symmetry_sign"] = m.symmetry_sign;
  j["size"] = m.entries.rows();
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.entries.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.entries.cols(); ++c) row.push_back(int_to_json(m.entries.at(i, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

LinkingMatrix linking_matrix_from_json(const Json& j) {
  if (!j.is_object()) throw StructureError("matrix file must be a JSON object");
  LinkingMatrix m;
  const Json& sign = field(j, "symmetry_sign");
  if (!sign.is_number_integer()) throw StructureError("symmetry_sign must be 1 or -1");
  m.symmetry_sign = sign.get<int>();
  const long long size = count_from_json(field(j, "size"), "size");
  if (size < 0) throw StructureError("size must be non-negative");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(size))
    throw StructureError("entries must be a size x size array");
  IntMatrix a(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Json& row = entries[i];
    if (!row.is_array() || row.size() != a.cols())
      throw StructureError("entries must be a size x size array");
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) = int_from_json(row[c]);
  }
  m.entries = std::move(a);
  validate(m);
  return m;
}

Json to_json(const FiberDescriptor& f) {
  Json j;
  j["dim"] = f.dim;
  if (f.betti) {
    j["betti"] = *f.betti;
  } else {
    j["betti"] = nullptr;
  }
  j["boundary_components"] = opt_count_to_json(f.boundary_components);
  if (f.bouquet) {
    Json arr = Json::array();
    for (const BouquetTerm& t : *f.bouquet) {
      Json item;
      item["sphere_dim"] = t.sphere_dim;
      item["count"] = opt_count_to_json(t.count);
      arr.push_back(std::move(item));
    }
    j["bouquet"] = std::move(arr);
  } else {
    j["bouquet"] = nullptr;
  }
  j["torsion_free_middle"] = tri_to_json(f.torsion_free_middle);
  j["simply_connected"] = tri_to_json(f.simply_connected);
  return j;
}

FiberDescriptor fiber_from_json(const Json& j) {
  if (!j.is_object()) throw StructureError("fiber must be a JSON object");
  FiberDescriptor f;
  f.dim = static_cast<int>(count_from_json(field(j, "dim"), "fiber dim"));
  const Json& betti = field(j, "betti");
  if (!betti.is_null()) {
    if (!betti.is_array()) throw StructureError("betti must be an array or null");
    std::vector<long long> b;
    for (const Json& v : betti) b.push_back(count_from_json(v, "betti entry"));
    f.betti = std::move(b);
  }
  f.boundary_components =
      opt_count_from_json(field(j, "boundary_components"), "boundary_components");
  const Json& bouquet = field(j, "bouquet");
  if (!bouquet.is_null()) {
    if (!bouquet.is_array()) throw StructureError("bouquet must be an array or null");
    std::vector<BouquetTerm> terms;
    for (const Json& item : bouquet) {
      BouquetTerm t;
      t.sphere_dim = static_cast<int>(count_from_json(field(item, "sphere_dim"), "sphere_dim"));
      t.count = opt_count_from_json(field(item, "count"), "bouquet count");
      terms.push_back(t);
    }
    f.bouquet = std::move(terms);
  }
  f.torsion_free_middle = tri_from_json(field(j, "torsion_free_middle"), "torsion_free_middle");
  f.simply_connected = tri_from_json(field(j, "simply_connected"), "simply_connected");
  return f;
}

Json to_json(const NSInvariantRecord& r) {
  Json j;
  j["n"] = r.n;
  j["p"] = r.p;
  j["link_components"] = opt_count_to_json(r.link_components);
  j["fiber"] = to_json(r.fiber);
  j["degree"] = opt_count_to_json(r.degree);
  j["trivial"] = tri_to_json(r.trivial);
  j["provenance"] = r.provenance;
  return j;
}

NSInvariantRecord record_from_json(const Json& j) {
  if (!j.is_object()) throw StructureError("record file must be a JSON object");
  NSInvariantRecord r;
  r.n = static_cast<int>(count_from_json(field(j, "n"), "n"));
  r.p = static_cast<int>(count_from_json(field(j, "p"), "p"));
  r.link_components = opt_count_from_json(field(j, "link_components"), "link_components");
  r.fiber = fiber_from_json(field(j, "fiber"));
  r.degree = opt_count_from_json(field(j, "degree"), "degree");
  r.trivial = tri_from_json(field(j, "trivial"), "trivial");
  const Json& prov = field(j, "provenance");
  if (!prov.is_array()) throw StructureError("provenance must be an array of strings");
  for (const Json& s : prov) {
    if (!s.is_string()) throw StructureError("provenance must be an array of strings");
    r.provenance.push_back(s.get<std::string>());
  }
  validate(r);
  return r;
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["k"] = r.k;
  j["symmetry_sign"] = r.symmetry_sign;
  j["det_A"] = int_to_json(r.det_A);
  j["pfaffian_A"] = r.pfaffian_A ? int_to_json(*r.pfaffian_A) : Json(nullptr);
  j["det_R"] = r.det_R ? int_to_json(*r.det_R) : Json(nullptr);
  Json factors = Json::array();
  for (const Int& d : r.h2_invariant_factors) factors.push_back(int_to_json(d));
  j["h2_invariant_factors"] = std::move(factors);
  j["is_ns_pair"] = r.is_ns_pair;
  j["link_components"] = r.link_components;
  j["fiber"] = r.fiber ? to_json(*r.fiber) : Json(nullptr);
  return j;
}

ClassificationReport classification_from_json(const Json& j) {
  if (!j.is_object()) throw StructureError("classification must be a JSON object");
  ClassificationReport r;
  r.k = static_cast<std::size_t>(count_from_json(field(j, "k"), "k"));
  r.symmetry_sign = static_cast<int>(count_from_json(field(j, "symmetry_sign"), "symmetry_sign"));
  r.det_A = int_from_json(field(j, "det_A"));
  const Json& pf = field(j, "pfaffian_A");
  if (!pf.is_null()) r.pfaffian_A = int_from_json(pf);
  const Json& dr = field(j, "det_R");
  if (!dr.is_null()) r.det_R = int_from_json(dr);
  const Json& factors = field(j, "h2_invariant_factors");
  if (!factors.is_array()) throw StructureError("h2_invariant_factors must be an array");
  for (const Json& d : factors) r.h2_invariant_factors.push_back(int_from_json(d));
  r.is_ns_pair = field(j, "is_ns_pair").get<bool>();
  r.link_components =
      static_cast<std::size_t>(count_from_json(field(j, "link_components"), "link_components"));
  const Json& fiber = field(j, "fiber");
  if (!fiber.is_null()) r.fiber = fiber_from_json(fiber);
  return r;
}

Json to_json(const DegreeResult& r) {
  Json j;
  j["degree"] = r.degree;
  j["local_algebra_dim"] = r.local_algebra_dim;
  j["method"] = to_string(r.method);
  j["certificate"] = r.certificate;
  return j;
}

DegreeResult degree_result_from_json(const Json& j) {
  if (!j.is_object()) throw StructureError("degree result must be a JSON object");
  DegreeResult r;
  r.degree = count_from_json(field(j, "degree"), "degree");
  r.local_algebra_dim =
      static_cast<std::size_t>(count_from_json(field(j, "local_algebra_dim"), "local_algebra_dim"));
  const std::string method = field(j, "method").get<std::string>();
  if (method == "ELK")
    r.method = DegreeMethod::Elk;
  else if (method == "winding")
    r.method = DegreeMethod::Winding;
  else
    throw StructureError("method must be \"ELK\" or \"winding\"");
  r.certificate = field(j, "certificate").get<std::string>();
  return r;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path, 0);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("JSON parse error in ") + path + ": " + e.what(), e.byte);
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open file for writing: " + path, 0);
  out << dump_json(j);
  if (!out) throw ParseError("failed writing file: " + path, 0);
}

LinkingMatrix load_linking_matrix(const std::string& path) {
  return linking_matrix_from_json(load_json_file(path));
}

NSInvariantRecord load_record(const std::string& path) {
  return record_from_json(load_json_file(path));
}

void save_record(const std::string& path, const NSInvariantRecord& r) {
  save_json_file(path, to_json(r));
}

}  // namespace nspair
