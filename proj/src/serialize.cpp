#include "imprim/serialize.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace imprim {

namespace {

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    fail("ParseError", "complex entries must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

void append_double(std::string& out, double v) {
  if (!std::isfinite(v)) fail("IoError", "non-finite number in report");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

void dump_rec(const Json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<size_t>(indent) * depth, ' ');
  const std::string pad_in(static_cast<size_t>(indent) * (depth + 1), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in + Json(it.key()).dump() + ": ";
        dump_rec(it.value(), out, indent, depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad_in;
        dump_rec(j[i], out, indent, depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
      append_double(out, j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    fail("ParseError", "matrix must be an array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j[i].size()) != cols)
      fail("ParseError", "ragged matrix row");
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = complex_from_json(j[i][c]);
  }
  return m;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) fail("ParseError", "vector must be an array");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = complex_from_json(j[i]);
  return v;
}

Json group_to_json(const FiniteGroup& g) {
  Json cayley = Json::array();
  for (int a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    cayley.push_back(std::move(row));
  }
  return Json{{"name", g.name()}, {"order", g.order()}, {"cayley", cayley}};
}

GroupPtr group_from_json(const Json& j) {
  if (j.is_string()) return catalog(j.get<std::string>());
  if (!j.is_object() || !j.contains("cayley"))
    fail("ParseError", "group must be a catalog name or an inline table");
  std::vector<std::vector<int>> table;
  for (const auto& row : j.at("cayley")) {
    table.emplace_back();
    for (const auto& v : row) table.back().push_back(v.get<int>());
  }
  const std::string name = j.value("name", std::string("group"));
  if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
    fail("ParseError", "declared order differs from the table size");
  return FiniteGroup::from_cayley(table, name);
}

Json subgroup_to_json(const Subgroup& h) { return Json{{"elements", h.elements}}; }

Subgroup subgroup_from_json(const Json& j, const GroupPtr& parent) {
  if (!j.is_object() || !j.contains("elements"))
    fail("ParseError", "subgroup must carry an element list");
  std::vector<int> elements = j.at("elements").get<std::vector<int>>();
  return subgroup_from_generators(parent, elements);
}

Json rep_to_json(const UnitaryRep& rep) {
  Json mats = Json::array();
  for (const auto& m : rep.mats) mats.push_back(matrix_to_json(m));
  return Json{{"group", group_to_json(*rep.group)}, {"dim", rep.dim},
              {"matrices", mats}};
}

UnitaryRep rep_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("matrices"))
    fail("ParseError", "representation must carry matrices");
  UnitaryRep rep;
  rep.group = group_from_json(j.at("group"));
  rep.dim = j.at("dim").get<int>();
  for (const auto& m : j.at("matrices")) rep.mats.push_back(matrix_from_json(m));
  if (static_cast<int>(rep.mats.size()) != rep.group->order())
    fail("ParseError", "matrix count does not match the group order");
  return rep;
}

Json theta_to_json(const ThetaWeight& theta) {
  return Json{{"subgroup", subgroup_to_json(theta.sub)}, {"values", theta.values}};
}

ThetaWeight theta_from_json(const Json& j, const Subgroup& sub) {
  ThetaWeight theta;
  theta.sub = sub;
  theta.values = j.at("values").get<std::vector<double>>();
  validate_theta(theta);
  return theta;
}

Json povm_to_json(const Povm& e) {
  Json atoms = Json::array();
  for (const auto& atom : e.atoms) atoms.push_back(matrix_to_json(atom));
  return Json{{"rep", rep_to_json(e.pi)},
              {"coset_space",
               Json{{"group", group_to_json(*e.space.parent)},
                    {"subgroup", subgroup_to_json(e.space.subgroup)}}},
              {"atoms", atoms}};
}

Povm povm_from_json(const Json& j) {
  Povm e;
  e.pi = rep_from_json(j.at("rep"));
  const GroupPtr g = group_from_json(j.at("coset_space").at("group"));
  const Subgroup h = subgroup_from_json(j.at("coset_space").at("subgroup"), g);
  e.space = coset_space(g, h);
  for (const auto& atom : j.at("atoms")) e.atoms.push_back(matrix_from_json(atom));
  return e;
}

Json admissible_to_json(const AdmissibleMap& a) {
  return Json{{"A", matrix_to_json(a.a)},
              {"sigma", rep_to_json(a.sigma)},
              {"subgroup", subgroup_to_json(a.sub)},
              {"theta", a.theta.values}};
}

AdmissibleMap admissible_from_json(const Json& j, const UnitaryRep& pi) {
  AdmissibleMap a;
  a.pi = pi;
  a.a = matrix_from_json(j.at("A"));
  a.sub = subgroup_from_json(j.at("subgroup"), pi.group);
  a.sigma = rep_from_json(j.at("sigma"));
  a.theta.sub = a.sub;
  a.theta.values = j.at("theta").get<std::vector<double>>();
  validate_theta(a.theta);
  return a;
}

std::string canonical_dump(const Json& j, int indent) {
  std::string out;
  dump_rec(j, out, indent, 0);
  out += "\n";
  return out;
}

std::string json_digest(const Json& j) {
  const std::string s = canonical_dump(j, 0);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
  return buf;
}

bool Report::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Json Report::to_json() const {
  Json checks_json = Json::array();
  for (const auto& c : checks)
    checks_json.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"data", c.data}});
  Json out{{"command", command},
           {"inputs", inputs},
           {"inputs_digest", json_digest(inputs)},
           {"checks", checks_json},
           {"pass", pass()},
           {"seed", seed},
           {"tolerance", tolerance},
           {"prng", Prng::kVersion},
           {"tool_version", kToolVersion}};
  if (extra.is_object())
    for (auto it = extra.begin(); it != extra.end(); ++it) out[it.key()] = it.value();
  return out;
}

std::string Report::to_text(double wall_ms) const {
  std::ostringstream os;
  os << command << " (" << kToolVersion << ", seed " << seed << ", tol "
     << tolerance << ")\n";
  for (const auto& c : checks)
    os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "\n";
  os << (pass() ? "PASS" : "FAIL") << " overall";
  if (wall_ms >= 0) os << " in " << wall_ms << " ms";
  os << "\n";
  return os.str();
}

void save_report(const Report& report, const std::string& path,
                 const std::string& format, double wall_ms) {
  std::string body;
  if (format == "json")
    body = canonical_dump(report.to_json());
  else if (format == "text")
    body = report.to_text(wall_ms);
  else
    fail("UnknownCommand", "unknown report format: " + format);

  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("IoError", "cannot open " + path + " for writing");
  out << body;
  if (!out) fail("IoError", "failed writing " + path);
}

}  // namespace imprim
