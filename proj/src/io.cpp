#include "jacobi_bc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace jbc::io {

using nlohmann::json;

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

std::string format_number(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

json parse_document(const std::string& text) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) throw ParseError("top-level value must be an object");
    return doc;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed structured text: ") + e.what());
  }
}

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  if (!it->is_array()) throw ParseError(std::string("field \"") + name + "\" must be a list");
  return *it;
}

Rational rational_entry(const json& v, const std::string& where) {
  if (v.is_number()) {
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ParseError(where + " is not finite");
    return Rational(x);
  }
  if (v.is_string()) {
    try {
      Rational q(v.get<std::string>());
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      throw ParseError(where + " is not a rational \"p/q\"");
    }
  }
  throw ParseError(where + " must be a number or a rational string");
}

double double_entry(const json& v, const std::string& where) {
  if (v.is_number()) {
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ParseError(where + " is not finite");
    return x;
  }
  return rational_entry(v, where).get_d();
}

std::vector<double> doubles(const json& doc, const char* name) {
  const json& arr = field(doc, name);
  std::vector<double> out;
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(double_entry(arr[i], std::string(name) + "[" + std::to_string(i) + "]"));
  return out;
}

template <class Seq, class F>
std::string list(const Seq& xs, F fmt) {
  std::string s = "[";
  bool first = true;
  for (const auto& x : xs) {
    if (!first) s += ", ";
    s += fmt(x);
    first = false;
  }
  return s + "]";
}

std::string numbers(const std::vector<double>& xs) {
  return list(xs, [](double x) { return format_number(x); });
}

std::string quoted(const std::string& s) { return json(s).dump(); }

}  // namespace

JacobiCoefficients parse_coefficients(const std::string& text) {
  const json doc = parse_document(text);
  JacobiCoefficients c{doubles(doc, "a"), doubles(doc, "b")};
  try {
    c.validate();
  } catch (const InvalidCoefficients& e) {
    throw ParseError(e.what());
  }
  return c;
}

ControlVector parse_control(const std::string& text) {
  ControlVector f{doubles(parse_document(text), "f")};
  if (f.values.empty()) throw ParseError("control \"f\" is empty");
  return f;
}

ResponseVector parse_response(const std::string& text) {
  ResponseVector r{doubles(parse_document(text), "r")};
  if (r.values.empty()) throw ParseError("response \"r\" is empty");
  return r;
}

Response<Rational> parse_response_exact(const std::string& text) {
  const json doc = parse_document(text);
  const json& arr = field(doc, "r");
  if (arr.empty()) throw ParseError("response \"r\" is empty");
  Response<Rational> r;
  for (std::size_t i = 0; i < arr.size(); ++i)
    r.values.push_back(rational_entry(arr[i], "r[" + std::to_string(i) + "]"));
  return r;
}

DiscreteMeasure parse_measure(const std::string& text) {
  const json doc = parse_document(text);
  const json& arr = field(doc, "atoms");
  DiscreteMeasure mu;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "atoms[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2)
      throw ParseError(where + " must be [point, mass]");
    mu.atoms.push_back({double_entry(arr[i][0], where + "[0]"),
                        double_entry(arr[i][1], where + "[1]")});
  }
  try {
    mu.validate();
  } catch (const InvalidData& e) {
    throw ParseError(e.what());
  }
  return mu;
}

std::string format_coefficients(const JacobiCoefficients& c) {
  return "{\n  \"a\": " + numbers(c.a) + ",\n  \"b\": " + numbers(c.b) + "\n}\n";
}

std::string format_coefficients(const Coefficients<Rational>& c) {
  auto rounded = [](const std::vector<Rational>& v) {
    std::vector<double> out;
    for (const Rational& q : v) out.push_back(q.get_d());
    return out;
  };
  auto exact = [](const std::vector<Rational>& v) {
    return list(v, [](const Rational& q) { return quoted(to_string(q)); });
  };
  return "{\n  \"a\": " + numbers(rounded(c.a)) + ",\n  \"b\": " +
         numbers(rounded(c.b)) + ",\n  \"a_exact\": " + exact(c.a) +
         ",\n  \"b_exact\": " + exact(c.b) + "\n}\n";
}

std::string format_response(const ResponseVector& r) {
  return "{\n  \"r\": " + numbers(r.values) + "\n}\n";
}

namespace {

std::string atoms_field(const DiscreteMeasure& mu) {
  return list(mu.atoms, [](const Atom& x) {
    return "[" + format_number(x.point) + ", " + format_number(x.mass) + "]";
  });
}

}  // namespace

std::string format_measure(const DiscreteMeasure& mu) {
  return "{\n  \"atoms\": " + atoms_field(mu) + "\n}\n";
}

std::string format_spectral_data(const SpectralData& sd) {
  return "{\n  \"a0\": " + format_number(sd.a0) +
         ",\n  \"lambdas\": " + numbers(sd.lambdas) +
         ",\n  \"rhos\": " + numbers(sd.rhos) +
         ",\n  \"atoms\": " + atoms_field(measure_from_spectral_data(sd)) + "\n}\n";
}

std::string format_matrix(const Matrix<double>& m) {
  std::string s = "{\n  \"matrix\": [";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<double> row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    s += (i ? ",\n    " : "\n    ") + numbers(row);
  }
  return s + (m.rows() ? "\n  ]\n}\n" : "]\n}\n");
}

std::string format_report(const CharacterizationReport& rep) {
  std::string s = "{\n  \"verdict\": ";
  s += rep.accepted() ? "\"accepted\"" : "\"rejected\"";
  s += ",\n  \"horizon\": " + std::to_string(rep.horizon);
  if (rep.failure) {
    s += ",\n  \"failure\": {\"condition\": " +
         quoted(to_string(rep.failure->condition)) +
         ", \"index\": " + std::to_string(rep.failure->index) +
         ", \"witness\": " + format_number(rep.failure->witness) + "}";
  }
  s += ",\n  \"smallest_relative_pivot\": " + format_number(rep.smallest_relative_pivot);
  s += ",\n  \"max_det_deviation\": " + format_number(rep.max_det_deviation);
  s += ",\n  \"max_response_mismatch\": " + format_number(rep.max_response_mismatch);
  if (rep.accepted() && !rep.a.empty()) {
    s += ",\n  \"a\": " + numbers(rep.a);
    s += ",\n  \"b\": " + numbers(rep.b);
  }
  if (!rep.warnings.empty())
    s += ",\n  \"warnings\": " + list(rep.warnings, quoted);
  return s + "\n}\n";
}

std::string wavefield_csv(const Wavefield<double>& u) {
  std::string s = "n,t,value\n";
  for (std::size_t t = 0; t <= u.t_max(); ++t)
    for (std::size_t n = 0; n <= u.n_max(); ++n)
      s += std::to_string(n) + "," + std::to_string(t) + "," +
           format_number(u(n, t)) + "\n";
  return s;
}

std::string matrix_csv(const Matrix<double>& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      s += (j ? "," : "") + format_number(m(i, j));
    s += "\n";
  }
  return s;
}

std::string diagnostics_csv(const std::vector<std::string>& columns,
                            const std::vector<std::vector<double>>& rows) {
  std::string s;
  for (std::size_t j = 0; j < columns.size(); ++j) s += (j ? "," : "") + columns[j];
  s += "\n";
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      // NaN marks "not defined at this k" (b_0); leave the cell empty.
      s += j ? "," : "";
      if (std::isfinite(row[j])) s += format_number(row[j]);
    }
    s += "\n";
  }
  return s;
}

}  // namespace jbc::io
