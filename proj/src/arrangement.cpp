#include "milnor/arrangement.hpp"

#include "milnor/error.hpp"

#include <json.hpp>

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace milnor {

namespace {

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(\s*([+-]?[0-9]+)(?:\s*/\s*([0-9]+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw ParseError("not a rational number: '" + text + "'");
  BigInt num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str());
  BigInt den(1);
  if (m[2].matched) den = BigInt(m[2].str());
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(num) / Rational(den);
}

}  // namespace

Hyperplane canonical_hyperplane(const RatVector& normal) {
  auto [primitive, scale] = primitive_integer(normal);
  if (scale == 0) throw PreconditionError("zero normal vector");
  return {std::move(primitive)};
}

CentralArrangement::CentralArrangement(const RatMatrix& normals, std::string name)
    : name_(std::move(name)) {
  if (normals.rows() == 0) throw PreconditionError("arrangement has no hyperplanes");
  if (normals.cols() == 0) throw PreconditionError("ambient dimension must be at least 1");
  normals_.resize(normals.rows(), normals.cols());
  std::set<std::vector<BigInt>> seen;
  for (Index i = 0; i < normals.rows(); ++i) {
    if (normals.row(i).isZero()) throw PreconditionError("hyperplane " + std::to_string(i) + " has zero normal");
    Hyperplane h = canonical_hyperplane(normals.row(i).transpose());
    std::vector<BigInt> key(h.normal.data(), h.normal.data() + h.normal.size());
    if (!seen.insert(key).second) {
      throw PreconditionError("hyperplane " + std::to_string(i) +
                              " duplicates an earlier one (equation is not reduced)");
    }
    normals_.row(i) = h.normal.transpose();
  }
}

CentralArrangement::CentralArrangement(const std::vector<RatVector>& normals, std::string name)
    : CentralArrangement(
          [&] {
            if (normals.empty()) throw PreconditionError("arrangement has no hyperplanes");
            RatMatrix m(static_cast<Index>(normals.size()), normals.front().size());
            for (std::size_t i = 0; i < normals.size(); ++i) {
              if (normals[i].size() != m.cols()) throw PreconditionError("normals have unequal lengths");
              m.row(static_cast<Index>(i)) = normals[i].transpose();
            }
            return m;
          }(),
          std::move(name)) {}

Index CentralArrangement::rank() const { return milnor::rank(normals_); }

CentralArrangement CentralArrangement::restrict_to(const std::vector<Index>& members) const {
  RatMatrix m(static_cast<Index>(members.size()), ambient_dim());
  for (std::size_t i = 0; i < members.size(); ++i) {
    m.row(static_cast<Index>(i)) = normals_.row(members[i]).cast<Rational>();
  }
  return CentralArrangement(m);
}

CentralArrangement parse_arrangement(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("arrangement document must be an object");
  if (!doc.contains("hyperplanes")) throw ParseError("missing field 'hyperplanes'");
  const auto& rows = doc["hyperplanes"];
  if (!rows.is_array()) throw ParseError("'hyperplanes' must be a list");
  if (rows.empty()) throw PreconditionError("arrangement has no hyperplanes");
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  const std::size_t width = rows.front().is_array() ? rows.front().size() : 0;
  RatMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(width));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.is_array()) throw ParseError("hyperplane " + std::to_string(i) + " is not a list");
    if (row.size() != width) throw ParseError("ragged hyperplane rows: row " + std::to_string(i));
    for (std::size_t j = 0; j < width; ++j) {
      const auto& entry = row[j];
      Rational value;
      if (entry.is_string()) {
        value = parse_rational(entry.get<std::string>());
      } else if (entry.is_number_integer()) {
        value = Rational(entry.get<long long>());
      } else {
        throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") must be an integer or a fraction string");
      }
      m(static_cast<Index>(i), static_cast<Index>(j)) = value;
    }
  }
  return CentralArrangement(m, name);
}

CentralArrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_arrangement(buf.str());
}

std::string serialize_arrangement(const CentralArrangement& a) {
  nlohmann::json doc;
  if (!a.name().empty()) doc["name"] = a.name();
  auto rows = nlohmann::json::array();
  for (Index i = 0; i < a.size(); ++i) {
    auto row = nlohmann::json::array();
    for (Index j = 0; j < a.ambient_dim(); ++j) row.push_back(a.normals()(i, j).str());
    rows.push_back(std::move(row));
  }
  doc["hyperplanes"] = std::move(rows);
  return doc.dump();
}

bool is_essential(const CentralArrangement& a) { return a.rank() == a.ambient_dim(); }

CentralArrangement essentialize(const CentralArrangement& a) {
  // Columns are the normals; column j of the reduced matrix holds the
  // coordinates of normal j in the basis of pivot normals.
  const Echelon e = row_reduce(a.normals().transpose());
  const RatMatrix coords = e.reduced.topRows(e.rank()).transpose();
  return CentralArrangement(coords, a.name());
}

CentralArrangement change_coordinates(const CentralArrangement& a, const IntMatrix& m) {
  if (m.rows() != a.ambient_dim() || m.cols() != a.ambient_dim()) {
    throw PreconditionError("coordinate change has the wrong shape");
  }
  if (determinant(m) == 0) throw PreconditionError("coordinate change is singular");
  const IntMatrix transformed = a.normals() * m;
  return CentralArrangement(RatMatrix(transformed.cast<Rational>()), a.name());
}

CentralArrangement product(const CentralArrangement& a, const CentralArrangement& b) {
  RatMatrix m = RatMatrix::Zero(a.size() + b.size(), a.ambient_dim() + b.ambient_dim());
  m.topLeftCorner(a.size(), a.ambient_dim()) = a.normals().cast<Rational>();
  m.bottomRightCorner(b.size(), b.ambient_dim()) = b.normals().cast<Rational>();
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + "x" + b.name();
  return CentralArrangement(m, name);
}

CentralArrangement generic_arrangement(int n) {
  if (n < 1) throw PreconditionError("generic arrangement needs n >= 1");
  RatMatrix m = RatMatrix::Zero(n + 2, n + 1);
  m.topRows(n + 1) = RatMatrix::Identity(n + 1, n + 1);
  m.row(n + 1).setConstant(Rational(1));
  return CentralArrangement(m, "G" + std::to_string(n));
}

CentralArrangement boolean_arrangement(int n) {
  if (n < 1) throw PreconditionError("boolean arrangement needs n >= 1");
  return CentralArrangement(RatMatrix(RatMatrix::Identity(n, n)), "B" + std::to_string(n));
}

CentralArrangement product_of_generic(int u, int v) {
  if (u < 0 || v < 0 || u + v == 0) throw PreconditionError("need u, v >= 0 with u + v > 0");
  std::vector<CentralArrangement> parts;
  for (int i = 0; i < u; ++i) parts.push_back(generic_arrangement(2));
  for (int i = 0; i < v; ++i) parts.push_back(generic_arrangement(4));
  CentralArrangement acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = product(acc, parts[i]);
  return CentralArrangement(RatMatrix(acc.normals().cast<Rational>()),
                            "A" + std::to_string(u) + std::to_string(v));
}

CentralArrangement resolve_arrangement(const std::string& name) {
  if (name.empty() || name[0] != '@') return load_arrangement(name);
  static const std::regex boolean_re(R"(@boolean:([0-9]+))");
  static const std::regex generic_re(R"(@g:([0-9]+))");
  static const std::regex auv_re(R"(@auv:([0-9]+),([0-9]+))");
  std::smatch m;
  if (name == "@g2") return generic_arrangement(2);
  if (name == "@g4") return generic_arrangement(4);
  if (name == "@a11") return product_of_generic(1, 1);
  if (std::regex_match(name, m, boolean_re)) return boolean_arrangement(std::stoi(m[1]));
  if (std::regex_match(name, m, generic_re)) return generic_arrangement(std::stoi(m[1]));
  if (std::regex_match(name, m, auv_re)) return product_of_generic(std::stoi(m[1]), std::stoi(m[2]));
  throw ParseError("unknown built-in arrangement '" + name + "'");
}

bool operator==(const CentralArrangement& a, const CentralArrangement& b) {
  return a.ambient_dim() == b.ambient_dim() && a.size() == b.size() && a.normals() == b.normals();
}

}  // namespace milnor
