#include "hermlat/io.hpp"

#include <cctype>
#include <sstream>

namespace hermlat {

using nlohmann::json;

namespace {

Int json_int(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

json int_json(const Int& v) {
  try {
    return to_i64(v);
  } catch (const std::overflow_error&) {
    return v.str();
  }
}

}  // namespace

json to_json(const AlgInt& x) { return json::array({int_json(x.a), int_json(x.b)}); }

json to_json(const AlgMatrix& x) {
  json out = json::array();
  for (std::size_t i = 0; i < x.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < x.cols(); ++j) row.push_back(to_json(x(i, j)));
    out.push_back(row);
  }
  return out;
}

json to_json(const HermLattice& lattice) {
  return {{"m", lattice.field().m()}, {"pseudo", lattice.pseudo()}, {"gram", to_json(lattice.gram())}};
}

json to_json(const Witness& witness) { return {{"rows", to_json(witness.rows)}}; }

AlgInt algint_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw Error(ErrorCode::ParseError, "AlgInt must be [a, b]");
    return AlgInt(json_int(j[0]), json_int(j[1]));
  }
  if (j.is_number_integer()) return AlgInt(json_int(j));
  if (j.is_string()) return parse_algint(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "cannot read algebraic integer from " + j.dump());
}

AlgMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  AlgMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw Error(ErrorCode::ShapeMismatch, "matrix rows must have equal length");
    for (std::size_t k = 0; k < cols; ++k) out(i, k) = algint_from_json(j[i][k]);
  }
  return out;
}

HermLattice lattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("gram"))
    throw Error(ErrorCode::ParseError, "lattice JSON needs \"m\" and \"gram\"");
  Field field = Field::make(j.at("m").get<std::int64_t>());
  HermLattice lattice = HermLattice::make(field, matrix_from_json(j.at("gram")));
  if (j.contains("pseudo") && j.at("pseudo").get<bool>() != lattice.pseudo())
    throw Error(ErrorCode::ParseError, "\"pseudo\" flag disagrees with the Gram matrix rank");
  return lattice;
}

Witness witness_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows")) throw Error(ErrorCode::ParseError, "witness JSON needs \"rows\"");
  return Witness{matrix_from_json(j.at("rows"))};
}

AlgInt parse_algint(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty algebraic integer");
  AlgInt out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw Error(ErrorCode::ParseError, "malformed term in \"" + text + "\"");
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string digits = s.substr(start, pos - start);
    bool has_w = false;
    if (pos < s.size() && s[pos] == '*') ++pos;
    if (pos < s.size() && (s[pos] == 'w' || s[pos] == 'W')) {
      has_w = true;
      ++pos;
    }
    if (digits.empty() && !has_w) throw Error(ErrorCode::ParseError, "malformed term in \"" + text + "\"");
    Int coeff = digits.empty() ? Int(1) : Int(digits);
    if (sign < 0) coeff = -coeff;
    if (has_w)
      out.b += coeff;
    else
      out.a += coeff;
  }
  return out;
}

HermLattice parse_lattice(const Field& field, const std::string& text) {
  std::string s = text;
  auto trim = [](std::string& v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.erase(v.begin());
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.pop_back();
  };
  trim(s);
  const std::string open_angle = "⟨", close_angle = "⟩";
  std::string inner;
  bool diagonal = false;
  if (s.size() >= 2 && s.front() == '<' && s.back() == '>') {
    inner = s.substr(1, s.size() - 2);
    diagonal = true;
  } else if (s.rfind(open_angle, 0) == 0 && s.size() >= open_angle.size() + close_angle.size() &&
             s.compare(s.size() - close_angle.size(), close_angle.size(), close_angle) == 0) {
    inner = s.substr(open_angle.size(), s.size() - open_angle.size() - close_angle.size());
    diagonal = true;
  }
  if (diagonal) {
    std::vector<Int> entries;
    std::stringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ',')) {
      trim(item);
      if (item.empty()) continue;
      AlgInt v = parse_algint(item);
      if (!v.is_rational()) throw Error(ErrorCode::ParseError, "diagonal entries must be integers");
      entries.push_back(v.a);
    }
    return HermLattice::diagonal(field, entries);
  }
  json j;
  try {
    j = json::parse(s);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("cannot parse lattice: ") + e.what());
  }
  if (j.is_object()) {
    HermLattice lattice = lattice_from_json(j);
    if (lattice.field() != field)
      throw Error(ErrorCode::FieldMismatch, "lattice JSON is over a different field");
    return lattice;
  }
  return HermLattice::make(field, matrix_from_json(j));
}

std::string format_gram(const AlgMatrix& gram) {
  bool diagonal = gram.square();
  for (std::size_t i = 0; i < gram.rows() && diagonal; ++i)
    for (std::size_t j = 0; j < gram.cols() && diagonal; ++j)
      if (i != j && !gram(i, j).is_zero()) diagonal = false;
  std::ostringstream os;
  if (diagonal) {
    os << '<';
    for (std::size_t i = 0; i < gram.rows(); ++i) os << (i ? "," : "") << gram(i, i);
    os << '>';
    return os.str();
  }
  os << '[';
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      if (j) os << ',';
      const AlgInt& x = gram(i, j);
      if (x.is_rational())
        os << x.a;
      else
        os << '"' << x << '"';
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace hermlat
