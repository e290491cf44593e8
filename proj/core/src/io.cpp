#include "entroverify/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "entroverify/error.hpp"

namespace entroverify {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

Matrix read_matrix(const json& re, const json& im, const char* what) {
  if (!re.is_array() || !im.is_array() || re.size() != im.size() || re.empty()) {
    throw ValidationError(std::string(what) + ": real and imaginary parts must be matching arrays");
  }
  const std::size_t rows = re.size();
  const std::size_t cols = re[0].size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!re[i].is_array() || !im[i].is_array() || re[i].size() != cols || im[i].size() != cols) {
      throw ValidationError(std::string(what) + ": ragged matrix rows");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (!re[i][j].is_number() || !im[i][j].is_number()) {
        throw ValidationError(std::string(what) + ": entries must be numbers");
      }
      m(i, j) = Complex(re[i][j].get<double>(), im[i][j].get<double>());
    }
  }
  return m;
}

std::string matrix_rows(const Matrix& m, bool imag) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += format_number(imag ? m(i, j).imag() : m(i, j).real());
    }
    out += "]";
  }
  return out + "]";
}

template <typename T>
T field(const json& j, const char* key, const char* what) {
  if (!j.contains(key)) throw ValidationError(std::string(what) + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ValidationError(std::string(what) + ": field '" + key + "' has the wrong type");
  }
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_number(double x) {
  if (std::isnan(x)) return "null";
  if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
  return format_number(x);
}

DensityOperator parse_state(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ValidationError("state: top level must be an object");
  if (!j.contains("matrix_real") || !j.contains("matrix_imag")) {
    throw ValidationError("state: missing matrix_real / matrix_imag");
  }
  const Matrix m = read_matrix(j["matrix_real"], j["matrix_imag"], "state");
  if (m.rows() != m.cols()) throw ValidationError("state: matrix must be square");
  std::vector<int> dims;
  if (j.contains("dims")) dims = field<std::vector<int>>(j, "dims", "state");
  return DensityOperator(HermitianOperator(m), dims);
}

std::string state_to_json(const DensityOperator& rho) {
  std::ostringstream os;
  os << "{\"dims\": [";
  for (std::size_t i = 0; i < rho.dims().size(); ++i) os << (i ? ", " : "") << rho.dims()[i];
  os << "], \"matrix_real\": " << matrix_rows(rho.matrix(), false)
     << ", \"matrix_imag\": " << matrix_rows(rho.matrix(), true) << "}";
  return os.str();
}

QuantumChannel parse_channel(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ValidationError("channel: top level must be an object");
  const int din = field<int>(j, "dimIn", "channel");
  const int dout = field<int>(j, "dimOut", "channel");
  if (!j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty()) {
    throw ValidationError("channel: 'kraus' must be a non-empty array");
  }
  std::vector<Matrix> kraus;
  for (const json& k : j["kraus"]) {
    if (!k.is_object() || !k.contains("real") || !k.contains("imag")) {
      throw ValidationError("channel: each Kraus operator needs 'real' and 'imag'");
    }
    Matrix m = read_matrix(k["real"], k["imag"], "channel");
    if (m.rows() != dout || m.cols() != din) {
      std::ostringstream os;
      os << "channel: Kraus operator is " << m.rows() << "x" << m.cols() << ", expected " << dout
         << "x" << din;
      throw ValidationError(os.str());
    }
    kraus.push_back(std::move(m));
  }
  return QuantumChannel(std::move(kraus), kChannelFileTol);
}

std::string channel_to_json(const QuantumChannel& n) {
  std::ostringstream os;
  os << "{\"dimIn\": " << n.dim_in() << ", \"dimOut\": " << n.dim_out() << ", \"kraus\": [";
  for (std::size_t i = 0; i < n.kraus().size(); ++i) {
    os << (i ? ", " : "") << "{\"real\": " << matrix_rows(n.kraus()[i], false)
       << ", \"imag\": " << matrix_rows(n.kraus()[i], true) << "}";
  }
  os << "]}";
  return os.str();
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("error while writing '" + path + "'");
}

DensityOperator load_state(const std::string& path) { return parse_state(read_text(path)); }
void save_state(const std::string& path, const DensityOperator& rho) {
  write_text(path, state_to_json(rho) + "\n");
}
QuantumChannel load_channel(const std::string& path) { return parse_channel(read_text(path)); }
void save_channel(const std::string& path, const QuantumChannel& n) {
  write_text(path, channel_to_json(n) + "\n");
}

}  // namespace entroverify
