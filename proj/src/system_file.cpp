#include "qcascade/system_file.hpp"

#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcascade/errors.hpp"

namespace qcascade {

namespace {

using nlohmann::json;

std::string number(double x) { return json(x).dump(); }

std::string complex_text(Complex z) {
  return "[" + number(z.real()) + ", " + number(z.imag()) + "]";
}

std::string matrix_text(const CMatrix& a, std::string_view indent) {
  if (a.rows() == 0) return "[]";
  std::string out = "[\n";
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    out += std::string(indent) + "  [";
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j > 0) out += ", ";
      out += complex_text(a(i, j));
    }
    out += i + 1 < a.rows() ? "],\n" : "]\n";
  }
  out += std::string(indent) + "]";
  return out;
}

std::string vector_text(const CVector& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += complex_text(v(i));
  }
  return out + "]";
}

std::string real_list_text(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += number(v[i]);
  }
  return out + "]";
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

double read_number(const json& node, const std::string& path) {
  if (!node.is_number()) fail(path, "expected a number");
  const double x = node.get<double>();
  if (!std::isfinite(x)) fail(path, "non-finite value");
  return x;
}

Complex read_complex(const json& node, const std::string& path) {
  if (!node.is_array() || node.size() != 2) fail(path, "expected [re, im]");
  return {read_number(node[0], path + "[0]"), read_number(node[1], path + "[1]")};
}

CMatrix read_matrix(const json& root, const std::string& key, Eigen::Index rows,
                    Eigen::Index cols) {
  if (!root.contains(key)) fail(key, "missing field");
  const json& node = root.at(key);
  if (!node.is_array()) fail(key, "expected an array of rows");
  if (static_cast<Eigen::Index>(node.size()) != rows) {
    fail(key, "dimension error: " + std::to_string(node.size()) + " rows, expected " +
                  std::to_string(rows));
  }
  CMatrix a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const std::string row_path = key + "[" + std::to_string(i) + "]";
    const json& row = node[static_cast<std::size_t>(i)];
    if (!row.is_array()) fail(row_path, "expected an array");
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      fail(row_path, "dimension error: " + std::to_string(row.size()) + " columns, expected " +
                         std::to_string(cols));
    }
    for (Eigen::Index j = 0; j < cols; ++j) {
      a(i, j) = read_complex(row[static_cast<std::size_t>(j)],
                             row_path + "[" + std::to_string(j) + "]");
    }
  }
  return a;
}

Eigen::Index read_count(const json& root, const std::string& key) {
  if (!root.contains(key)) fail(key, "missing field");
  const json& node = root.at(key);
  if (!node.is_number_integer() || node.get<long long>() < 0) {
    fail(key, "expected a nonnegative integer");
  }
  return static_cast<Eigen::Index>(node.get<long long>());
}

}  // namespace

std::string serialize_system(const SystemFile& file) {
  file.system.validate();
  const StateSpaceSystem& s = file.system;
  std::ostringstream out;
  out << "{\n";
  out << "  \"schema_version\": " << file.schema_version << ",\n";
  out << "  \"n\": " << s.n() << ",\n";
  out << "  \"m\": " << s.m() << ",\n";
  out << "  \"F\": " << matrix_text(s.F, "  ") << ",\n";
  out << "  \"G\": " << matrix_text(s.G, "  ") << ",\n";
  out << "  \"Hbar\": " << matrix_text(s.Hbar, "  ") << ",\n";
  out << "  \"J\": " << matrix_text(s.J, "  ");
  const std::pair<const char*, const std::optional<CMatrix>*> extras[] = {
      {"theta", &file.theta}, {"M", &file.M}, {"Lambda", &file.Lambda}, {"S", &file.S}};
  for (const auto& [name, value] : extras) {
    if (*value) {
      require_finite(**value, name);
      out << ",\n  \"" << name << "\": " << matrix_text(**value, "  ");
    }
  }
  out << "\n}\n";
  return out.str();
}

SystemFile parse_system(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed system file at byte " + std::to_string(e.byte) + ": " +
                     e.what());
  }
  if (!root.is_object()) fail("$", "expected a JSON object");

  SystemFile file;
  if (!root.contains("schema_version") || !root.at("schema_version").is_number_integer()) {
    fail("schema_version", "missing or not an integer");
  }
  file.schema_version = root.at("schema_version").get<int>();
  if (file.schema_version != kSystemSchemaVersion) {
    fail("schema_version", "unsupported version " + std::to_string(file.schema_version));
  }
  const Eigen::Index n = read_count(root, "n");
  const Eigen::Index m = read_count(root, "m");
  file.system.F = read_matrix(root, "F", n, n);
  file.system.G = read_matrix(root, "G", n, m);
  file.system.Hbar = read_matrix(root, "Hbar", m, n);
  file.system.J = read_matrix(root, "J", m, m);
  if (root.contains("theta")) file.theta = read_matrix(root, "theta", n, n);
  if (root.contains("M")) file.M = read_matrix(root, "M", n, n);
  if (root.contains("Lambda")) file.Lambda = read_matrix(root, "Lambda", m, n);
  if (root.contains("S")) file.S = read_matrix(root, "S", m, m);
  return file;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgument("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw InvalidArgument("failed writing " + path.string());
}

void save_system(const std::filesystem::path& path, const SystemFile& file) {
  write_text_file(path, serialize_system(file));
}

SystemFile load_system(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_system(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string serialize_cascade(const CascadeRealization& casc, const CMatrix& J,
                              const CascadeResiduals& residuals) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"schema_version\": " << kSystemSchemaVersion << ",\n";
  out << "  \"n\": " << casc.order() << ",\n";
  out << "  \"m\": " << J.rows() << ",\n";
  out << "  \"J\": " << matrix_text(J, "  ") << ",\n";
  out << "  \"stages\": [\n";
  for (std::size_t i = 0; i < casc.order(); ++i) {
    const CavityStage& stage = casc.stages[i];
    const CavityMirrorParams mirror = cavity_mirror_params(stage);
    out << "    {\n";
    out << "      \"p\": " << complex_text(stage.p) << ",\n";
    out << "      \"H\": " << vector_text(stage.H) << ",\n";
    out << "      \"alpha\": " << number(casc.alphas[i]) << ",\n";
    out << "      \"kappa\": " << real_list_text(mirror.kappas) << ",\n";
    out << "      \"theta\": " << real_list_text(mirror.thetas) << ",\n";
    out << "      \"gamma\": " << number(mirror.gamma) << ",\n";
    out << "      \"delta\": " << number(mirror.delta) << "\n";
    out << (i + 1 < casc.order() ? "    },\n" : "    }\n");
  }
  out << "  ],\n";
  out << "  \"T\": " << matrix_text(casc.T, "  ") << ",\n";
  out << "  \"residuals\": {\n";
  out << "    \"F\": " << number(residuals.f_residual) << ",\n";
  out << "    \"G\": " << number(residuals.g_residual) << ",\n";
  out << "    \"H\": " << number(residuals.h_residual) << ",\n";
  out << "    \"transfer\": " << number(residuals.transfer_mismatch) << "\n";
  out << "  }\n";
  out << "}\n";
  return out.str();
}

}  // namespace qcascade
