#include "sandcoh/io.hpp"

#include "sandcoh/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sandcoh {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& source, const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Parse, source + ": " + where + ": " + what);
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::ostringstream msg;
    msg << source << ": byte " << e.byte << ": " << e.what();
    throw Error(ErrorKind::Parse, msg.str());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, path + ": cannot open file for writing");
  out << text;
}

Complex parse_complex(const json& node, const std::string& source, const std::string& where) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number())
    fail(source, where, "expected a [re, im] pair of numbers");
  return {node[0].get<double>(), node[1].get<double>()};
}

std::size_t parse_dim(const json& doc, const std::string& source) {
  if (!doc.is_object()) fail(source, "$", "expected a JSON object");
  if (!doc.contains("dim")) fail(source, "dim", "missing field");
  const json& d = doc["dim"];
  if (!d.is_number_integer() || d.get<long long>() < 1) fail(source, "dim", "expected a positive integer");
  return static_cast<std::size_t>(d.get<long long>());
}

ComplexMatrix parse_matrix(const json& node, std::size_t dim, const std::string& source,
                           const std::string& where) {
  if (!node.is_array() || node.size() != dim)
    fail(source, where, "expected an array of " + std::to_string(dim) + " rows");
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::string row_where = where + "[" + std::to_string(i) + "]";
    const json& row = node[i];
    if (!row.is_array() || row.size() != dim)
      fail(source, row_where, "expected an array of " + std::to_string(dim) + " entries");
    for (std::size_t j = 0; j < dim; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          parse_complex(row[j], source, row_where + "[" + std::to_string(j) + "]");
  }
  return m;
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename Fn>
auto with_context(const std::string& source, const std::string& where, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    throw Error(e.kind(), source + ": " + where + ": " + e.what());
  }
}

} // namespace

LoadedState parse_state(const std::string& text, const std::string& source) {
  const json doc = parse_json(text, source);
  const std::size_t dim = parse_dim(doc, source);
  const bool has_matrix = doc.contains("matrix");
  const bool has_vector = doc.contains("vector");
  if (has_matrix == has_vector) fail(source, "$", "expected exactly one of \"matrix\" or \"vector\"");

  if (has_vector) {
    const json& node = doc["vector"];
    if (!node.is_array() || node.size() != dim)
      fail(source, "vector", "expected an array of " + std::to_string(dim) + " entries");
    ComplexVector v(static_cast<Eigen::Index>(dim));
    for (std::size_t j = 0; j < dim; ++j)
      v[static_cast<Eigen::Index>(j)] = parse_complex(node[j], source, "vector[" + std::to_string(j) + "]");
    return with_context(source, "vector", [&] {
      PureState psi(std::move(v));
      return LoadedState{DensityMatrix::from_pure(psi), psi};
    });
  }
  ComplexMatrix m = parse_matrix(doc["matrix"], dim, source, "matrix");
  return with_context(source, "matrix", [&] { return LoadedState{DensityMatrix(std::move(m)), std::nullopt}; });
}

LoadedState load_state(const std::string& path) { return parse_state(read_file(path), path); }

std::string state_to_json(const DensityMatrix& rho) {
  json doc;
  doc["dim"] = rho.dim();
  doc["matrix"] = matrix_to_json(rho.mat());
  return doc.dump() + "\n";
}

std::string state_to_json(const PureState& psi) {
  json doc;
  doc["dim"] = psi.dim();
  json v = json::array();
  for (Eigen::Index j = 0; j < psi.amplitudes().size(); ++j) v.push_back(complex_to_json(psi.amplitudes()[j]));
  doc["vector"] = std::move(v);
  return doc.dump() + "\n";
}

void save_state(const std::string& path, const DensityMatrix& rho) { write_file(path, state_to_json(rho)); }
void save_state(const std::string& path, const PureState& psi) { write_file(path, state_to_json(psi)); }

KrausSet parse_channel(const std::string& text, const std::string& source) {
  const json doc = parse_json(text, source);
  const std::size_t dim = parse_dim(doc, source);
  if (!doc.contains("kraus") || !doc["kraus"].is_array() || doc["kraus"].empty())
    fail(source, "kraus", "expected a non-empty array of matrices");
  std::vector<ComplexMatrix> kraus;
  const json& list = doc["kraus"];
  for (std::size_t n = 0; n < list.size(); ++n)
    kraus.push_back(parse_matrix(list[n], dim, source, "kraus[" + std::to_string(n) + "]"));
  std::optional<bool> incoherent;
  if (doc.contains("incoherent")) {
    if (!doc["incoherent"].is_boolean()) fail(source, "incoherent", "expected a boolean");
    incoherent = doc["incoherent"].get<bool>();
  }
  return with_context(source, "kraus", [&] { return KrausSet(std::move(kraus), incoherent); });
}

KrausSet load_channel(const std::string& path) { return parse_channel(read_file(path), path); }

std::string channel_to_json(const KrausSet& channel) {
  json doc;
  doc["dim"] = channel.dim();
  json list = json::array();
  for (const auto& k : channel.operators()) list.push_back(matrix_to_json(k));
  doc["kraus"] = std::move(list);
  doc["incoherent"] = channel.incoherent();
  return doc.dump() + "\n";
}

std::string format_double(double x) {
  if (std::isnan(x)) return "NaN";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

} // namespace sandcoh
