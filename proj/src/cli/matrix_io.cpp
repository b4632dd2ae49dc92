#include "specmat/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace specmat {

namespace {

using nlohmann::json;

double read_component(const json& v, std::size_t row, std::size_t col, const char* part) {
  if (!v.is_number()) {
    throw ParseError("row " + std::to_string(row) + ", column " + std::to_string(col) + ": " +
                     part + " part is not a number");
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    throw ParseError("row " + std::to_string(row) + ", column " + std::to_string(col) +
                     ": non-finite " + part + " part");
  }
  return x;
}

void append_complex(std::string& out, Complex z) {
  out += '[';
  out += format_real(z.real());
  out += ", ";
  out += format_real(z.imag());
  out += ']';
}

void append_entries(std::string& out, const Matrix& m) {
  const std::size_t n = m.size();
  out += "  \"entries\": [\n";
  for (std::size_t i = 0; i < n; ++i) {
    out += "    [";
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) out += ", ";
      append_complex(out, m(i, j));
    }
    out += i + 1 < n ? "],\n" : "]\n";
  }
  out += "  ]";
}

}  // namespace

Matrix parse_matrix_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("not a valid document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document must be an object with fields n and entries");
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
    throw ParseError("field n must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(doc["n"].get<long long>());
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw ParseError("field entries must be an array of rows");
  }
  const json& rows = doc["entries"];
  if (rows.size() != n) {
    throw ParseError("entries has " + std::to_string(rows.size()) + " rows, expected " +
                     std::to_string(n));
  }

  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array()) throw ParseError("row " + std::to_string(i) + " is not an array");
    if (row.size() != n) {
      throw ParseError("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                       " columns, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const json& z = row[j];
      if (!z.is_array() || z.size() != 2) {
        throw ParseError("row " + std::to_string(i) + ", column " + std::to_string(j) +
                         ": entry must be a [re, im] pair");
      }
      entries.emplace_back(read_component(z[0], i, j, "real"), read_component(z[1], i, j, "imaginary"));
    }
  }
  return Matrix(n, std::move(entries));
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_document(buf.str());
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

std::string write_matrix_document(const Matrix& m) {
  ResultDocument doc;
  doc.n = m.size();
  doc.matrix = m;
  return write_result_document(doc);
}

std::string write_result_document(const ResultDocument& doc) {
  std::string out = "{\n  \"n\": " + std::to_string(doc.n);
  if (doc.matrix) {
    out += ",\n";
    append_entries(out, *doc.matrix);
  }
  if (doc.coefficients) {
    out += ",\n  \"coefficients\": [";
    for (std::size_t l = 0; l < doc.coefficients->size(); ++l) {
      if (l > 0) out += ", ";
      append_complex(out, (*doc.coefficients)[l]);
    }
    out += ']';
  }
  if (doc.eigenvalues) {
    out += ",\n  \"eigenvalues\": [";
    const auto& nodes = doc.eigenvalues->nodes;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      out += k > 0 ? ",\n    " : "\n    ";
      out += "{\"value\": ";
      append_complex(out, nodes[k].value);
      out += ", \"multiplicity\": " + std::to_string(nodes[k].multiplicity) + "}";
    }
    out += "\n  ]";
  }
  if (doc.path) out += ",\n  \"path\": \"" + to_string(*doc.path) + "\"";
  if (doc.residual_max) out += ",\n  \"residual_max\": " + format_real(*doc.residual_max);
  if (doc.disagreement) out += ",\n  \"disagreement\": " + format_real(*doc.disagreement);
  out += "\n}\n";
  return out;
}

}  // namespace specmat
